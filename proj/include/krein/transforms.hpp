#pragma once

#include "krein/frames.hpp"

namespace krein {

// Result of pushing a family through the J-projection onto a regular
// subspace M. The projected vectors are kept in ambient coordinates; the
// frame check runs inside (M, [ , ]) after re-expressing them in the basis of
// M with the restricted Gram.
struct ProjectedFamilyReport {
  VectorFamily projected;    // ambient coordinates, P_M f_i
  Subspace subspace;         // M
  KreinSpace sub_space;      // (M, restricted Gram); dim 0 never occurs here
  VectorFamily sub_family;   // coordinates of the projected vectors in M
  JFrameReport sub_report;
  bool hypothesis_definite = false;  // M uniformly definite
  bool commuting_case = false;       // P_M J = J P_M
};

ProjectedFamilyReport project_family(const KreinSpace& space,
                                     const Subspace& m,
                                     const VectorFamily& family, double tol);
ProjectedFamilyReport project_family(const KreinSpace& space,
                                     const Subspace& m,
                                     const VectorFamily& family);

// Union of a family supported in M with a family supported in M^[perp],
// together with the hypothesis record for the common-bounds claim.
struct UnionReport {
  JFrameReport union_report;
  JFrameReport f_sub_report;  // f-family checked inside (M, [ , ])
  JFrameReport g_sub_report;  // g-family checked inside (M^[perp], [ , ])
  bool parts_are_frames = false;
  OptimalBounds f_bounds, g_bounds;  // per-part bounds (ambient = in-subspace)
  OptimalBounds common;              // enclosing bounds across the parts
  bool enclosure_verified = false;   // union's bounds inside `common`
  double enclosure_tol = 0.0;
};

UnionReport union_families(const KreinSpace& space, const Subspace& m,
                           const VectorFamily& f_family,
                           const VectorFamily& g_family, double tol);

}  // namespace krein

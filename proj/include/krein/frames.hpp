#pragma once

#include <optional>
#include <vector>

#include "krein/subspace.hpp"

namespace krein {

// Ordered finite family {f_i} with its synthesis matrix (vectors as columns).
struct VectorFamily {
  Matrix synthesis;  // dim x N

  int count() const { return static_cast<int>(synthesis.cols()); }
  Vector vec(int i) const { return synthesis.col(i); }

  static VectorFamily from_columns(Matrix m) { return VectorFamily{std::move(m)}; }
  static VectorFamily from_vectors(const std::vector<Vector>& v,
                                   Eigen::Index dim) {
    return VectorFamily{columns_to_matrix(v, dim)};
  }
};

// Sign partition of a family. An index lands in i_plus when [f,f] exceeds
// tol * ||f||_J^2, in i_minus when it is below the mirrored threshold, and in
// i_neutral otherwise. Vectors with negligible Euclidean norm (relative to
// the largest column) are recorded in zero_indices and never count as
// neutral offenders.
struct Classification {
  std::vector<int> i_plus, i_minus, i_neutral;
  std::vector<int> zero_indices;
  Matrix t_plus, t_minus;  // synthesis restricted to i_plus / i_minus
  Subspace m_plus, m_minus;

  bool has_nonzero_neutral() const;
};

enum class FailureReason {
  neutral_vector,
  plus_not_definite,
  minus_not_definite,
  plus_not_maximal,
  minus_not_maximal,
};

const char* failure_reason_name(FailureReason r);

struct PlusBounds {
  double a1 = 0.0, b1 = 0.0;  // 0 < A1 <= B1
};
struct MinusBounds {
  double a2 = 0.0, b2 = 0.0;  // B2 <= A2 < 0
};

struct OptimalBounds {
  std::optional<PlusBounds> plus;
  std::optional<MinusBounds> minus;
};

struct JFrameReport {
  bool is_j_frame = false;
  Classification classification;
  double plus_margin = 0.0, minus_margin = 0.0;
  bool plus_maximal = false, minus_maximal = false;
  OptimalBounds bounds;
  std::vector<FailureReason> failure_reasons;
};

// Frame bounds of the family in the associated Hilbert space carried by the
// supplied symmetry (the symmetry-dependent notion of frame bounds).
struct MetricFrameBounds {
  double lower = 0.0, upper = 0.0;
  bool spans_space = false;  // lower is 0 and meaningless when false
};

Classification classify_family(const KreinSpace& space,
                               const VectorFamily& family, double tol);
Classification classify_family(const KreinSpace& space,
                               const VectorFamily& family);

JFrameReport jframe_check(const KreinSpace& space, const VectorFamily& family,
                          double tol);
JFrameReport jframe_check(const KreinSpace& space, const VectorFamily& family);

// Attained extremes of the per-side Rayleigh ratio
//   sum_{i in I+-} |[f, f_i]|^2 / [f, f]
// over the definite spans: extreme eigenvalues of the symmetric-definite
// pencils (B* G T T* G B, +-B* G B). Sides with trivial span are absent;
// a nontrivial side that is not uniformly definite raises not_definite.
OptimalBounds optimal_bounds(const KreinSpace& space,
                             const VectorFamily& family, double tol);
OptimalBounds optimal_bounds(const KreinSpace& space,
                             const VectorFamily& family);

MetricFrameBounds j_metric_frame_bounds(const KreinSpace& space,
                                        const SymmetryReport& symmetry,
                                        const VectorFamily& family);

}  // namespace krein

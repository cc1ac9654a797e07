#pragma once

#include <vector>

#include "krein/kspace.hpp"

namespace krein {

enum class Definiteness {
  trivial,             // the zero subspace; uniformly positive and negative
  uniformly_positive,
  uniformly_negative,
  indefinite_regular,
  degenerate,
};

const char* definiteness_name(Definiteness d);

// A subspace is carried as a full-column-rank basis (pivot columns of the
// spanning set, descending pivot magnitude) together with the restricted Gram
// B* G B. Classification is through the generalized eigenvalues of the pencil
// (B* G B, B* B), which are basis-independent.
struct Subspace {
  Matrix basis;            // dim x k
  Matrix restricted_gram;  // k x k Hermitian
  Definiteness definiteness = Definiteness::trivial;
  double margin = 0.0;     // best epsilon with [x,x] >= eps ||x||^2 (or the
                           // mirrored bound); +inf for the trivial subspace
  bool is_regular = true;
  bool is_maximal_definite = false;

  int k() const { return static_cast<int>(basis.cols()); }
  bool is_uniformly_positive() const {
    return definiteness == Definiteness::trivial ||
           definiteness == Definiteness::uniformly_positive;
  }
  bool is_uniformly_negative() const {
    return definiteness == Definiteness::trivial ||
           definiteness == Definiteness::uniformly_negative;
  }
};

enum class OperatorRole { j_projection, j_metric_projection, general };

struct Operator {
  Matrix matrix;
  OperatorRole role = OperatorRole::general;
};

Subspace make_subspace(const KreinSpace& space, const Matrix& spanning,
                       double tol);
Subspace make_subspace(const KreinSpace& space,
                       const std::vector<Vector>& spanning, double tol);
Subspace make_subspace(const KreinSpace& space,
                       std::initializer_list<Vector> spanning, double tol);
Subspace make_subspace(const KreinSpace& space, const Matrix& spanning);
Subspace whole_space(const KreinSpace& space);

// M^[perp] = kernel of B* G.
Subspace j_complement(const KreinSpace& space, const Subspace& m);

// The J-selfadjoint projection onto M parallel to M^[perp]:
// P = B (B* G B)^{-1} B* G. Requires M regular.
Operator j_projection(const KreinSpace& space, const Subspace& m);

// Orthogonal projection onto M in the Hilbert space carried by the supplied
// fundamental symmetry: Q = B (B* GJ B)^{-1} B* GJ with GJ = j_gram.
Operator q_projection(const KreinSpace& space, const SymmetryReport& symmetry,
                      const Subspace& m);
Operator q_projection(const KreinSpace& space, const Subspace& m);

// Best epsilon such that sign*[x,x] >= eps ||x||^2 on M; 0 when M is not
// uniformly definite with the requested sign, +inf for the trivial subspace.
double definiteness_margin(const KreinSpace& space, const Subspace& m,
                           int sign);

// Defining identities of the role, checked to tolerance. For
// j_metric_projection the metric of the canonical symmetry is assumed unless
// j_gram is supplied.
bool operator_satisfies_role(const KreinSpace& space, const Operator& op,
                             double tol, const Matrix* j_gram = nullptr);

}  // namespace krein

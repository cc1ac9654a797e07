#pragma once

#include <optional>

#include "krein/errors.hpp"
#include "krein/linalg.hpp"

namespace krein {

enum class Field { real, cplx };

// Finite-dimensional Krein space, realized by a Hermitian invertible Gram
// matrix G. The indefinite form is [x, y] = y* G x (linear in the first slot,
// conjugate-linear in the second). The canonical fundamental symmetry is
// J = U sign(L) U* from the eigendecomposition G = U L U*, eigenvalues sorted
// descending.
struct KreinSpace {
  int dim = 0;
  Field field = Field::real;
  Matrix gram;              // Hermitian (symmetrized on construction)
  Matrix canonical_j;       // involution, J = J^[*], G J positive definite
  Matrix p_plus, p_minus;   // (I +- J)/2
  Matrix j_gram;            // G * canonical_j = U |L| U*, Hermitian PD
  Matrix canonical_basis;   // Phi with Phi* G Phi = diag(I_{n+}, -I_{n-})
  Matrix canonical_basis_inv;
  int n_plus = 0, n_minus = 0;
  double sigma_max = 0.0, sigma_min = 0.0;  // extreme |eigenvalues| of G
  double tol = kDefaultTol;

  // Scale below which a value of the form is numerically zero.
  double form_threshold() const { return tol * sigma_max; }
};

struct SymmetryReport {
  Matrix symmetry;
  bool is_involution = false;
  bool is_j_selfadjoint = false;   // G J' = J'* G
  bool is_positivizing = false;    // G J' positive definite
  Matrix j_gram;                   // populated iff valid()

  bool valid() const {
    return is_involution && is_j_selfadjoint && is_positivizing;
  }
};

KreinSpace make_krein_space(const Matrix& gram, double tol = kDefaultTol,
                            std::optional<Field> field = std::nullopt);
KreinSpace make_krein_space(const RealMatrix& gram, double tol = kDefaultTol);

// [x, y] = y* G x.
Scalar indefinite_inner(const KreinSpace& space, const Vector& x,
                        const Vector& y);

// [x, y]_{J'} = [x, J' y] for the space's canonical symmetry.
Scalar j_metric_inner(const KreinSpace& space, const Vector& x,
                      const Vector& y);

SymmetryReport validate_symmetry(const KreinSpace& space,
                                 const Matrix& candidate,
                                 double tol = kDefaultTol);

SymmetryReport canonical_symmetry(const KreinSpace& space);

// T^[*] = G^{-1} T* G, the adjoint with respect to [ , ].
Matrix j_adjoint(const KreinSpace& space, const Matrix& t);

}  // namespace krein

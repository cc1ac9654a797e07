#pragma once

#include <Eigen/Dense>
#include <complex>
#include <vector>

namespace krein {

using Scalar = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;
using RealMatrix = Eigen::MatrixXd;

inline constexpr double kDefaultTol = 1e-9;

double machine_eps();

// ||A - A*||_F / max(||A||_F, 1e-300); zero for the empty matrix.
double hermitian_defect(const Matrix& a);
Matrix hermitian_part(const Matrix& a);

struct HermitianEigen {
  RealVector values;  // descending
  Matrix vectors;     // columns match values
};
HermitianEigen eig_hermitian_descending(const Matrix& a);

// Eigenvalues of the symmetric-definite pencil A x = mu B x, B positive
// definite. Ascending. Both inputs are symmetrized first.
RealVector pencil_eigenvalues(const Matrix& a, const Matrix& b);

struct PivotedBasis {
  Matrix basis;                       // selected original columns, pivot order
  std::vector<Eigen::Index> pivots;   // indices into the input columns
};
// Rank-revealing column selection (column-pivoted QR, descending pivot
// magnitudes). Rank threshold: largest pivot times the larger of
// max(rows, cols) * eps and rel_tol, so derived data whose dependent columns
// carry solver noise still reduces cleanly.
PivotedBasis pivoted_column_basis(const Matrix& cols, double rel_tol = 0.0);

// Orthonormal basis of the right null space (SVD based).
Matrix nullspace(const Matrix& a);

// Orthonormal basis of the column span (SVD based).
Matrix orthonormal_span(const Matrix& a);

// Largest singular value; 0 for the empty matrix.
double spectral_norm(const Matrix& a);

// Column spans equal as subspaces of C^dim, up to relative tolerance.
bool same_span(const Matrix& a, const Matrix& b, double tol);

// True when x lies in the column span of `basis` up to relative tolerance.
bool in_span(const Matrix& basis, const Vector& x, double tol);

Matrix columns_to_matrix(const std::vector<Vector>& cols, Eigen::Index dim);

}  // namespace krein

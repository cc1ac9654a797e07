#include "krein/linalg.hpp"

#include <limits>

#include "krein/errors.hpp"

namespace krein {

double machine_eps() { return std::numeric_limits<double>::epsilon(); }

double hermitian_defect(const Matrix& a) {
  if (a.size() == 0) return 0.0;
  const double n = a.norm();
  return (a - a.adjoint()).norm() / std::max(n, 1e-300);
}

Matrix hermitian_part(const Matrix& a) { return 0.5 * (a + a.adjoint()); }

HermitianEigen eig_hermitian_descending(const Matrix& a) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(hermitian_part(a));
  if (es.info() != Eigen::Success)
    fail(Errc::bad_input, "hermitian eigendecomposition failed to converge");
  HermitianEigen out;
  out.values = es.eigenvalues().reverse();
  out.vectors = es.eigenvectors().rowwise().reverse();
  return out;
}

RealVector pencil_eigenvalues(const Matrix& a, const Matrix& b) {
  Eigen::GeneralizedSelfAdjointEigenSolver<Matrix> ges(
      hermitian_part(a), hermitian_part(b),
      Eigen::EigenvaluesOnly | Eigen::Ax_lBx);
  if (ges.info() != Eigen::Success)
    fail(Errc::bad_input, "generalized eigensolver failed to converge");
  return ges.eigenvalues();
}

PivotedBasis pivoted_column_basis(const Matrix& cols, double rel_tol) {
  PivotedBasis out;
  if (cols.cols() == 0 || cols.rows() == 0) {
    out.basis = Matrix(cols.rows(), 0);
    return out;
  }
  Eigen::ColPivHouseholderQR<Matrix> qr(cols);
  const auto diag = qr.matrixR().diagonal();
  const double top = diag.size() > 0 ? std::abs(diag(0)) : 0.0;
  const double thr =
      top * std::max(static_cast<double>(std::max(cols.rows(), cols.cols())) *
                         machine_eps(),
                     rel_tol);
  Eigen::Index rank = 0;
  for (Eigen::Index i = 0; i < diag.size(); ++i) {
    if (std::abs(diag(i)) > thr && std::abs(diag(i)) > 0.0) ++rank;
  }
  const auto& perm = qr.colsPermutation().indices();
  out.basis = Matrix(cols.rows(), rank);
  out.pivots.reserve(static_cast<size_t>(rank));
  for (Eigen::Index i = 0; i < rank; ++i) {
    out.pivots.push_back(perm(i));
    out.basis.col(i) = cols.col(perm(i));
  }
  return out;
}

Matrix nullspace(const Matrix& a) {
  if (a.cols() == 0) return Matrix(0, 0);
  if (a.rows() == 0) return Matrix::Identity(a.cols(), a.cols());
  Eigen::JacobiSVD<Matrix> svd(a, Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  const double thr = static_cast<double>(std::max(a.rows(), a.cols())) *
                     machine_eps() * (sv.size() ? sv(0) : 0.0);
  Eigen::Index rank = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i)
    if (sv(i) > thr) ++rank;
  return svd.matrixV().rightCols(a.cols() - rank);
}

Matrix orthonormal_span(const Matrix& a) {
  if (a.cols() == 0 || a.rows() == 0) return Matrix(a.rows(), 0);
  Eigen::JacobiSVD<Matrix> svd(a, Eigen::ComputeThinU);
  const auto& sv = svd.singularValues();
  const double thr = static_cast<double>(std::max(a.rows(), a.cols())) *
                     machine_eps() * (sv.size() ? sv(0) : 0.0);
  Eigen::Index rank = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i)
    if (sv(i) > thr) ++rank;
  return svd.matrixU().leftCols(rank);
}

double spectral_norm(const Matrix& a) {
  if (a.size() == 0) return 0.0;
  Eigen::JacobiSVD<Matrix> svd(a);
  return svd.singularValues()(0);
}

bool same_span(const Matrix& a, const Matrix& b, double tol) {
  const Matrix qa = orthonormal_span(a);
  const Matrix qb = orthonormal_span(b);
  if (qa.cols() != qb.cols()) return false;
  if (qa.cols() == 0) return true;
  const Matrix resid = qa - qb * (qb.adjoint() * qa);
  return resid.norm() <= tol * std::sqrt(static_cast<double>(qa.cols()));
}

bool in_span(const Matrix& basis, const Vector& x, double tol) {
  const double nx = x.norm();
  if (nx == 0.0) return true;
  const Matrix q = orthonormal_span(basis);
  if (q.cols() == 0) return false;
  const Vector resid = x - q * (q.adjoint() * x);
  return resid.norm() <= tol * nx;
}

Matrix columns_to_matrix(const std::vector<Vector>& cols, Eigen::Index dim) {
  Matrix m(dim, static_cast<Eigen::Index>(cols.size()));
  for (size_t i = 0; i < cols.size(); ++i) {
    if (cols[i].size() != dim)
      fail(Errc::dimension_mismatch, "vector length does not match dimension");
    m.col(static_cast<Eigen::Index>(i)) = cols[i];
  }
  return m;
}

}  // namespace krein

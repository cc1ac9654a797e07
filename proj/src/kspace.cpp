#include "krein/kspace.hpp"

#include <cmath>

namespace krein {

namespace {

bool matrix_is_real(const Matrix& m) {
  return m.imag().cwiseAbs().maxCoeff() == 0.0;
}

}  // namespace

KreinSpace make_krein_space(const Matrix& gram, double tol,
                            std::optional<Field> field) {
  if (gram.rows() != gram.cols())
    fail(Errc::not_square, "gram matrix must be square");
  if (gram.rows() == 0) fail(Errc::bad_input, "gram matrix must be nonempty");
  if (!(tol > 0.0)) fail(Errc::bad_input, "tolerance must be positive");
  if (hermitian_defect(gram) > tol)
    fail(Errc::non_hermitian, "gram matrix asymmetry exceeds tolerance");

  KreinSpace s;
  s.dim = static_cast<int>(gram.rows());
  s.tol = tol;
  s.gram = hermitian_part(gram);
  s.field = field.value_or(matrix_is_real(s.gram) ? Field::real : Field::cplx);

  const HermitianEigen eig = eig_hermitian_descending(s.gram);
  s.sigma_max = eig.values.cwiseAbs().maxCoeff();
  s.sigma_min = eig.values.cwiseAbs().minCoeff();
  const double rank_thr = s.dim * machine_eps() * s.sigma_max;
  if (s.sigma_max == 0.0 || s.sigma_min <= rank_thr)
    fail(Errc::degenerate, "gram matrix is singular to working precision");

  RealVector sign(s.dim), inv_sqrt(s.dim), sqrt_abs(s.dim);
  for (int i = 0; i < s.dim; ++i) {
    sign(i) = eig.values(i) > 0.0 ? 1.0 : -1.0;
    if (eig.values(i) > 0.0) ++s.n_plus;
    const double a = std::abs(eig.values(i));
    inv_sqrt(i) = 1.0 / std::sqrt(a);
    sqrt_abs(i) = std::sqrt(a);
  }
  s.n_minus = s.dim - s.n_plus;

  const Matrix& u = eig.vectors;
  s.canonical_j = hermitian_part(u * sign.asDiagonal() * u.adjoint());
  if (s.field == Field::real) s.canonical_j = s.canonical_j.real().cast<Scalar>();
  const Matrix id = Matrix::Identity(s.dim, s.dim);
  s.p_plus = 0.5 * (id + s.canonical_j);
  s.p_minus = 0.5 * (id - s.canonical_j);
  s.j_gram = hermitian_part(s.gram * s.canonical_j);
  s.canonical_basis = u * inv_sqrt.asDiagonal();
  s.canonical_basis_inv = sqrt_abs.asDiagonal() * u.adjoint();
  return s;
}

KreinSpace make_krein_space(const RealMatrix& gram, double tol) {
  return make_krein_space(gram.cast<Scalar>(), tol, Field::real);
}

Scalar indefinite_inner(const KreinSpace& space, const Vector& x,
                        const Vector& y) {
  if (x.size() != space.dim || y.size() != space.dim)
    fail(Errc::dimension_mismatch, "vector length does not match dimension");
  return y.dot(space.gram * x);
}

Scalar j_metric_inner(const KreinSpace& space, const Vector& x,
                      const Vector& y) {
  if (x.size() != space.dim || y.size() != space.dim)
    fail(Errc::dimension_mismatch, "vector length does not match dimension");
  return y.dot(space.j_gram * x);
}

SymmetryReport validate_symmetry(const KreinSpace& space,
                                 const Matrix& candidate, double tol) {
  if (candidate.rows() != space.dim || candidate.cols() != space.dim)
    fail(Errc::dimension_mismatch, "candidate symmetry has wrong shape");

  SymmetryReport rep;
  rep.symmetry = candidate;

  const Matrix id = Matrix::Identity(space.dim, space.dim);
  const double c2 = candidate.squaredNorm();
  rep.is_involution =
      (candidate * candidate - id).norm() <= tol * std::max(1.0, c2);

  const Matrix gj = space.gram * candidate;
  rep.is_j_selfadjoint = hermitian_defect(gj) <= tol;

  if (rep.is_j_selfadjoint) {
    const HermitianEigen eig = eig_hermitian_descending(gj);
    const double top = eig.values.cwiseAbs().maxCoeff();
    rep.is_positivizing = top > 0.0 && eig.values.minCoeff() > tol * top;
  }
  if (rep.valid()) rep.j_gram = hermitian_part(gj);
  return rep;
}

SymmetryReport canonical_symmetry(const KreinSpace& space) {
  SymmetryReport rep;
  rep.symmetry = space.canonical_j;
  rep.is_involution = rep.is_j_selfadjoint = rep.is_positivizing = true;
  rep.j_gram = space.j_gram;
  return rep;
}

Matrix j_adjoint(const KreinSpace& space, const Matrix& t) {
  if (t.rows() != space.dim || t.cols() != space.dim)
    fail(Errc::dimension_mismatch, "operator has wrong shape");
  Eigen::PartialPivLU<Matrix> lu(space.gram);
  return lu.solve(t.adjoint() * space.gram);
}

}  // namespace krein

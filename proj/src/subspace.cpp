#include "krein/subspace.hpp"

#include <cmath>
#include <limits>

namespace krein {

const char* definiteness_name(Definiteness d) {
  switch (d) {
    case Definiteness::trivial: return "trivial";
    case Definiteness::uniformly_positive: return "uniformly_positive";
    case Definiteness::uniformly_negative: return "uniformly_negative";
    case Definiteness::indefinite_regular: return "indefinite_regular";
    case Definiteness::degenerate: return "degenerate";
  }
  return "unknown";
}

namespace {

Subspace trivial_subspace(const KreinSpace& space) {
  Subspace s;
  s.basis = Matrix(space.dim, 0);
  s.restricted_gram = Matrix(0, 0);
  s.definiteness = Definiteness::trivial;
  s.margin = std::numeric_limits<double>::infinity();
  s.is_regular = true;
  s.is_maximal_definite = (space.n_plus == 0 || space.n_minus == 0);
  return s;
}

}  // namespace

Subspace make_subspace(const KreinSpace& space, const Matrix& spanning,
                       double tol) {
  if (spanning.cols() > 0 && spanning.rows() != space.dim)
    fail(Errc::dimension_mismatch, "spanning vectors have wrong length");
  if (spanning.cols() == 0) return trivial_subspace(space);

  PivotedBasis pb = pivoted_column_basis(spanning, tol);
  if (pb.basis.cols() == 0) return trivial_subspace(space);

  Subspace s;
  s.basis = pb.basis;
  s.restricted_gram = hermitian_part(s.basis.adjoint() * space.gram * s.basis);
  const Matrix euclid = hermitian_part(s.basis.adjoint() * s.basis);
  const RealVector mu = pencil_eigenvalues(s.restricted_gram, euclid);

  const double theta = tol * space.sigma_max;
  const double mu_min = mu(0), mu_max = mu(mu.size() - 1);
  bool near_zero = false;
  for (Eigen::Index i = 0; i < mu.size(); ++i)
    if (std::abs(mu(i)) <= theta) near_zero = true;

  s.is_regular = !near_zero;
  if (mu_min > theta) {
    s.definiteness = Definiteness::uniformly_positive;
    s.margin = mu_min;
    s.is_maximal_definite = (s.k() == space.n_plus);
  } else if (mu_max < -theta) {
    s.definiteness = Definiteness::uniformly_negative;
    s.margin = -mu_max;
    s.is_maximal_definite = (s.k() == space.n_minus);
  } else if (near_zero) {
    s.definiteness = Definiteness::degenerate;
  } else {
    s.definiteness = Definiteness::indefinite_regular;
  }
  return s;
}

Subspace make_subspace(const KreinSpace& space,
                       const std::vector<Vector>& spanning, double tol) {
  return make_subspace(space, columns_to_matrix(spanning, space.dim), tol);
}

Subspace make_subspace(const KreinSpace& space,
                       std::initializer_list<Vector> spanning, double tol) {
  return make_subspace(space, std::vector<Vector>(spanning), tol);
}

Subspace make_subspace(const KreinSpace& space, const Matrix& spanning) {
  return make_subspace(space, spanning, space.tol);
}

Subspace whole_space(const KreinSpace& space) {
  return make_subspace(space, Matrix::Identity(space.dim, space.dim));
}

Subspace j_complement(const KreinSpace& space, const Subspace& m) {
  if (m.k() == 0) return whole_space(space);
  const Matrix a = m.basis.adjoint() * space.gram;  // k x dim
  return make_subspace(space, nullspace(a));
}

Operator j_projection(const KreinSpace& space, const Subspace& m) {
  if (!m.is_regular)
    fail(Errc::not_regular, "no J-projection onto a non-regular subspace");
  Operator op;
  op.role = OperatorRole::j_projection;
  if (m.k() == 0) {
    op.matrix = Matrix::Zero(space.dim, space.dim);
    return op;
  }
  Eigen::PartialPivLU<Matrix> lu(m.restricted_gram);
  op.matrix = m.basis * lu.solve(m.basis.adjoint() * space.gram);
  return op;
}

Operator q_projection(const KreinSpace& space, const SymmetryReport& symmetry,
                      const Subspace& m) {
  if (!symmetry.valid())
    fail(Errc::invalid_symmetry, "not a valid fundamental symmetry");
  Operator op;
  op.role = OperatorRole::j_metric_projection;
  if (m.k() == 0) {
    op.matrix = Matrix::Zero(space.dim, space.dim);
    return op;
  }
  const Matrix rj =
      hermitian_part(m.basis.adjoint() * symmetry.j_gram * m.basis);
  Eigen::LLT<Matrix> llt(rj);
  if (llt.info() != Eigen::Success)
    fail(Errc::bad_input, "metric Gram of the basis is not positive definite");
  op.matrix = m.basis * llt.solve(m.basis.adjoint() * symmetry.j_gram);
  return op;
}

Operator q_projection(const KreinSpace& space, const Subspace& m) {
  return q_projection(space, canonical_symmetry(space), m);
}

double definiteness_margin(const KreinSpace& space, const Subspace& m,
                           int sign) {
  if (m.k() == 0) return std::numeric_limits<double>::infinity();
  const Matrix form =
      sign >= 0 ? m.restricted_gram : Matrix(-m.restricted_gram);
  const Matrix euclid = hermitian_part(m.basis.adjoint() * m.basis);
  const RealVector mu = pencil_eigenvalues(form, euclid);
  const double theta = space.tol * space.sigma_max;
  return mu(0) > theta ? mu(0) : 0.0;
}

bool operator_satisfies_role(const KreinSpace& space, const Operator& op,
                             double tol, const Matrix* j_gram) {
  const Matrix& p = op.matrix;
  if (p.rows() != space.dim || p.cols() != space.dim) return false;
  const double scale = std::max(1.0, p.squaredNorm());
  const bool idempotent = (p * p - p).norm() <= tol * scale;
  switch (op.role) {
    case OperatorRole::j_projection:
      return idempotent && hermitian_defect(space.gram * p) <= tol;
    case OperatorRole::j_metric_projection: {
      const Matrix& gj = j_gram ? *j_gram : space.j_gram;
      return idempotent && hermitian_defect(gj * p) <= tol;
    }
    case OperatorRole::general:
      return true;
  }
  return false;
}

}  // namespace krein

#include "krein/oracle.hpp"

#include <algorithm>
#include <cmath>

#include "krein/transforms.hpp"

namespace krein {

namespace {

RealMatrix random_gaussian(int rows, int cols, Rng& rng, double scale = 1.0) {
  RealMatrix m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m(i, j) = scale * rng.normal();
  return m;
}

RealMatrix random_orthogonal(int n, Rng& rng) {
  if (n == 0) return RealMatrix(0, 0);
  const RealMatrix g = random_gaussian(n, n, rng);
  Eigen::HouseholderQR<RealMatrix> qr(g);
  RealMatrix q = qr.householderQ();
  const RealMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int i = 0; i < n; ++i)
    if (r(i, i) < 0.0) q.col(i) = -q.col(i);
  return q;
}

// sigma_max(C) <= rho.
RealMatrix random_contraction(int rows, int cols, double rho, Rng& rng) {
  if (rows == 0 || cols == 0) return RealMatrix(rows, cols);
  RealMatrix c = random_gaussian(rows, cols, rng);
  const double top = c.jacobiSvd().singularValues()(0);
  if (top > 0.0) c *= rho / top;
  return c;
}

Matrix to_field(const Matrix& m, Field field) {
  if (field == Field::real) return m.real().cast<Scalar>();
  return m;
}

// Columns spanning a uniformly definite subspace, in canonical coordinates:
// the graph of a strict contraction over a k-frame of the matching block.
// Columns are normalized to [b, b] = +-1 so downstream pencils stay well
// conditioned regardless of the ambient Gram's scale.
Matrix definite_canonical_columns(const KreinSpace& space, int k, int sign,
                                  Rng& rng) {
  const int np = space.n_plus, nm = space.n_minus;
  const double rho = rng.uniform(0.2, 0.6);
  RealMatrix can(np + nm, k);
  if (sign > 0) {
    const RealMatrix v = random_orthogonal(np, rng).leftCols(k);
    can << v, random_contraction(nm, np, rho, rng) * v;
  } else {
    const RealMatrix v = random_orthogonal(nm, rng).leftCols(k);
    can << random_contraction(np, nm, rho, rng) * v, v;
  }
  for (int j = 0; j < k; ++j) {
    const double plus = can.col(j).head(np).squaredNorm();
    const double minus = can.col(j).tail(nm).squaredNorm();
    can.col(j) /= std::sqrt(std::abs(plus - minus));
  }
  return to_field(space.canonical_basis * can.cast<Scalar>(), space.field);
}

double rel_diff(double a, double b) {
  const double denom = std::max(std::abs(a), std::abs(b));
  return denom > 0.0 ? std::abs(a - b) / denom : 0.0;
}

// Modified Gram-Schmidt in the metric sign*[x, y], which is an inner product
// on a uniformly definite span. Unit vectors of the result are unit for the
// form itself, so the sampled ratio becomes an undistorted Rayleigh
// quotient. Kept independent of the QR/SVD machinery of the library routes.
Matrix mgs_basis_in_form(const KreinSpace& space, const Matrix& cols,
                         int sign) {
  const auto form = [&](const Vector& x, const Vector& y) {
    return Scalar(sign, 0) * y.dot(space.gram * x);
  };
  Matrix basis(cols.rows(), cols.cols());
  Eigen::Index k = 0;
  for (Eigen::Index j = 0; j < cols.cols(); ++j) {
    Vector v = cols.col(j);
    const double initial = std::abs(std::real(form(v, v)));
    if (initial == 0.0) continue;
    for (Eigen::Index i = 0; i < k; ++i)
      v -= form(v, basis.col(i)) * basis.col(i);
    const double remaining = std::real(form(v, v));
    if (remaining < -1e-6 * initial)
      fail(Errc::not_definite, "sampling span is not uniformly definite");
    // Noise-level remainders are columns already inside the span.
    if (remaining > 1e-12 * initial) basis.col(k++) = v / std::sqrt(remaining);
  }
  return basis.leftCols(k);
}

Vector random_unit_coefficients(int k, Field field, Rng& rng) {
  Vector c(k);
  for (int i = 0; i < k; ++i) {
    if (field == Field::real)
      c(i) = Scalar(rng.normal(), 0.0);
    else
      c(i) = Scalar(rng.normal(), rng.normal());
  }
  const double n = c.norm();
  return n > 0.0 ? Vector(c / n) : Vector(Vector::Unit(k, 0));
}

}  // namespace

KreinSpace random_krein(const GenConfig& config) {
  if (config.dim < 1) fail(Errc::bad_input, "dimension must be positive");
  if (config.n_plus < 0 || config.n_minus < 0 ||
      config.n_plus + config.n_minus != config.dim)
    fail(Errc::bad_signature, "signature must satisfy n+ + n- = dim");
  if (!(config.scale > 0.0)) fail(Errc::bad_input, "scale must be positive");

  Rng rng(config.seed);
  RealVector d(config.dim);
  for (int i = 0; i < config.dim; ++i) d(i) = i < config.n_plus ? 1.0 : -1.0;

  for (int attempt = 0; attempt < 200; ++attempt) {
    const RealMatrix s =
        random_gaussian(config.dim, config.dim, rng, config.scale);
    const auto sv = s.jacobiSvd().singularValues();
    if (sv(sv.size() - 1) <= 0.0 || sv(0) / sv(sv.size() - 1) > 1e3) continue;
    const RealMatrix g = s.transpose() * d.asDiagonal() * s;
    return make_krein_space(g);
  }
  fail(Errc::retries_exhausted, "could not sample a well-conditioned Gram");
}

VectorFamily random_jframe(const KreinSpace& space, int family_size,
                           std::uint64_t seed) {
  const int np = space.n_plus, nm = space.n_minus;
  if (family_size < np + nm)
    fail(Errc::bad_input, "family size below n+ + n-");

  for (int attempt = 0; attempt < 100; ++attempt) {
    Rng rng = Rng(seed).fork(static_cast<std::uint64_t>(attempt));
    const Matrix bp = definite_canonical_columns(space, np, +1, rng);
    const Matrix bm = definite_canonical_columns(space, nm, -1, rng);

    Matrix cols(space.dim, family_size);
    if (np > 0) cols.leftCols(np) = bp;
    if (nm > 0) cols.middleCols(np, nm) = bm;
    for (int e = np + nm; e < family_size; ++e) {
      const bool plus_side =
          nm == 0 ||
          (np > 0 && rng.uniform() < static_cast<double>(np) / (np + nm));
      const Matrix& side = plus_side ? bp : bm;
      const int k = static_cast<int>(side.cols());
      const Vector coeff = random_unit_coefficients(k, space.field, rng);
      const double magnitude = rng.uniform(0.5, 2.0);
      cols.col(e) = side * coeff * Scalar(magnitude, 0.0);
    }

    for (int i = family_size - 1; i > 0; --i) {
      const int j = static_cast<int>(rng.below(static_cast<std::uint64_t>(i + 1)));
      cols.col(i).swap(cols.col(j));
    }

    VectorFamily fam{cols};
    if (jframe_check(space, fam).is_j_frame) return fam;
  }
  fail(Errc::retries_exhausted, "could not sample a J-frame");
}

Subspace random_subspace(const KreinSpace& space, int k, std::uint64_t seed,
                         bool require_regular) {
  if (k < 0 || k > space.dim) fail(Errc::bad_input, "bad subspace dimension");
  for (int attempt = 0; attempt < 100; ++attempt) {
    Rng rng = Rng(seed).fork(static_cast<std::uint64_t>(attempt));
    Matrix cols = random_gaussian(space.dim, k, rng).cast<Scalar>();
    if (space.field == Field::cplx)
      cols += Scalar(0, 1) * random_gaussian(space.dim, k, rng).cast<Scalar>();
    cols = orthonormal_span(cols);
    const Subspace m = make_subspace(space, cols);
    if (m.k() != k) continue;
    if (!require_regular) return m;
    // Demand a comfortably regular draw so downstream solves stay clean.
    if (!m.is_regular) continue;
    const RealVector mu = pencil_eigenvalues(
        m.restricted_gram, hermitian_part(m.basis.adjoint() * m.basis));
    if (mu.cwiseAbs().minCoeff() > 1e-6 * space.sigma_max) return m;
  }
  fail(Errc::retries_exhausted, "could not sample a regular subspace");
}

Subspace random_definite_subspace(const KreinSpace& space, int k, int sign,
                                  std::uint64_t seed) {
  const int cap = sign > 0 ? space.n_plus : space.n_minus;
  if (k < 1 || k > cap)
    fail(Errc::bad_input, "definite subspace dimension out of range");
  Rng rng(seed);
  const Matrix cols = definite_canonical_columns(space, k, sign, rng);
  Subspace m = make_subspace(space, cols);
  const bool ok = sign > 0
                      ? m.definiteness == Definiteness::uniformly_positive
                      : m.definiteness == Definiteness::uniformly_negative;
  if (!ok || m.k() != k)
    fail(Errc::retries_exhausted, "definite subspace construction failed");
  return m;
}

Subspace random_invariant_subspace(const KreinSpace& space, int k_plus,
                                   int k_minus, std::uint64_t seed) {
  if (k_plus < 0 || k_plus > space.n_plus || k_minus < 0 ||
      k_minus > space.n_minus || k_plus + k_minus == 0)
    fail(Errc::bad_input, "invariant subspace dimensions out of range");
  Rng rng(seed);
  const RealMatrix vp = random_orthogonal(space.n_plus, rng).leftCols(k_plus);
  const RealMatrix vm = random_orthogonal(space.n_minus, rng).leftCols(k_minus);
  RealMatrix can = RealMatrix::Zero(space.dim, k_plus + k_minus);
  can.topLeftCorner(space.n_plus, k_plus) = vp;
  can.bottomRightCorner(space.n_minus, k_minus) = vm;
  const Matrix cols =
      to_field(space.canonical_basis * can.cast<Scalar>(), space.field);
  return make_subspace(space, cols);
}

Matrix random_j_unitary(const KreinSpace& space, std::uint64_t seed) {
  Rng rng(seed);
  RealMatrix block = RealMatrix::Zero(space.dim, space.dim);
  block.topLeftCorner(space.n_plus, space.n_plus) =
      random_orthogonal(space.n_plus, rng);
  block.bottomRightCorner(space.n_minus, space.n_minus) =
      random_orthogonal(space.n_minus, rng);
  const Matrix u = space.canonical_basis * block.cast<Scalar>() *
                   space.canonical_basis_inv;
  return to_field(u, space.field);
}

Matrix in_span_vectors(const Subspace& m, int count, Rng& rng, Field field) {
  Matrix out(m.basis.rows(), count);
  for (int i = 0; i < count; ++i) {
    const Vector coeff = random_unit_coefficients(m.k(), field, rng);
    const double magnitude = rng.uniform(0.5, 2.0);
    out.col(i) = m.basis * coeff * Scalar(magnitude, 0.0);
  }
  return out;
}

SampledBounds sampled_bounds(const KreinSpace& space,
                             const VectorFamily& family, int samples,
                             std::uint64_t seed) {
  if (samples <= 0) fail(Errc::invalid_samples, "samples must be positive");
  if (family.count() == 0) fail(Errc::empty_side, "empty family");
  if (family.synthesis.rows() != space.dim)
    fail(Errc::dimension_mismatch, "family vectors have wrong length");

  // Sign classification by direct evaluation, mirroring the classifier rule.
  std::vector<int> plus, minus;
  double max_norm = 0.0;
  for (int i = 0; i < family.count(); ++i)
    max_norm = std::max(max_norm, family.synthesis.col(i).norm());
  for (int i = 0; i < family.count(); ++i) {
    const Vector f = family.synthesis.col(i);
    if (f.norm() <= space.tol * max_norm) continue;
    const double self = std::real(f.dot(space.gram * f));
    const double theta = space.tol * std::real(f.dot(space.j_gram * f));
    if (self > theta)
      plus.push_back(i);
    else if (self < -theta)
      minus.push_back(i);
  }

  Rng rng(seed);
  SampledBounds out;
  auto run_side = [&](const std::vector<int>& idx, int sign) {
    Matrix cols(space.dim, static_cast<Eigen::Index>(idx.size()));
    for (size_t j = 0; j < idx.size(); ++j) cols.col(j) = family.synthesis.col(idx[j]);
    const Matrix basis = mgs_basis_in_form(space, cols, sign);
    const int k = static_cast<int>(basis.cols());
    if (k == 0) return;
    double lo = 0.0, hi = 0.0;
    for (int s = 0; s < samples; ++s) {
      const Vector f = basis * random_unit_coefficients(k, space.field, rng);
      double num = 0.0;
      for (int i : idx) {
        const Scalar ip = family.synthesis.col(i).dot(space.gram * f);
        num += std::norm(ip);
      }
      const double den = std::real(f.dot(space.gram * f));
      const double ratio = num / den;
      if (s == 0) {
        lo = hi = ratio;
      } else {
        lo = std::min(lo, ratio);
        hi = std::max(hi, ratio);
      }
    }
    if (sign > 0)
      out.plus = PlusBounds{lo, hi};
    else
      out.minus = MinusBounds{hi, lo};  // A2 = largest (closest to 0), B2 = smallest
  };
  run_side(plus, +1);
  run_side(minus, -1);
  if (!out.plus && !out.minus)
    fail(Errc::empty_side, "family has no definite side to sample");
  return out;
}

ProjectionCounterexample projection_counterexample(std::uint64_t seed,
                                                   int budget) {
  if (budget <= 0)
    fail(Errc::search_budget_exhausted, "search budget exhausted");

  for (int attempt = 0; attempt < budget; ++attempt) {
    Rng rng = Rng(seed).fork(static_cast<std::uint64_t>(attempt));
    GenConfig cfg;
    cfg.dim = 4;
    cfg.n_plus = 2;
    cfg.n_minus = 2;
    cfg.family_size = 5;
    cfg.seed = rng.next_u64();
    const KreinSpace space = random_krein(cfg);
    const VectorFamily fam1 =
        random_jframe(space, cfg.family_size, rng.next_u64());
    const Matrix u = random_j_unitary(space, rng.next_u64());
    const VectorFamily fam2{u * fam1.synthesis};

    const OptimalBounds b1 = optimal_bounds(space, fam1);
    const OptimalBounds b2 = optimal_bounds(space, fam2);
    if (!b1.plus || !b2.plus || !b1.minus || !b2.minus) continue;
    const double match =
        std::max({rel_diff(b1.plus->a1, b2.plus->a1),
                  rel_diff(b1.plus->b1, b2.plus->b1),
                  rel_diff(b1.minus->a2, b2.minus->a2),
                  rel_diff(b1.minus->b2, b2.minus->b2)});
    if (match > 1e-8) continue;

    const int k = 1 + static_cast<int>(rng.below(
                          static_cast<std::uint64_t>(space.n_plus)));
    const Subspace m = random_definite_subspace(space, k, +1, rng.next_u64());
    const ProjectedFamilyReport r1 = project_family(space, m, fam1);
    const ProjectedFamilyReport r2 = project_family(space, m, fam2);
    if (!r1.sub_report.is_j_frame || !r2.sub_report.is_j_frame) continue;
    if (!r1.sub_report.bounds.plus || !r2.sub_report.bounds.plus) continue;
    const double diff =
        std::max(rel_diff(r1.sub_report.bounds.plus->a1,
                          r2.sub_report.bounds.plus->a1),
                 rel_diff(r1.sub_report.bounds.plus->b1,
                          r2.sub_report.bounds.plus->b1));
    if (diff < 0.10) continue;

    ProjectionCounterexample out;
    out.gram = space.gram;
    out.family1 = fam1.synthesis;
    out.family2 = fam2.synthesis;
    out.subspace_basis = m.basis;
    out.seed = seed;
    return out;
  }
  fail(Errc::search_budget_exhausted,
       "no counterexample found within the budget");
}

CounterexampleVerdict verify_projection_counterexample(
    const ProjectionCounterexample& fixture, double tol) {
  const KreinSpace space = make_krein_space(fixture.gram, tol);
  const VectorFamily fam1{fixture.family1};
  const VectorFamily fam2{fixture.family2};
  const Subspace m = make_subspace(space, fixture.subspace_basis);

  CounterexampleVerdict v;
  const OptimalBounds b1 = optimal_bounds(space, fam1);
  const OptimalBounds b2 = optimal_bounds(space, fam2);
  double match = 0.0;
  if (b1.plus && b2.plus)
    match = std::max({match, rel_diff(b1.plus->a1, b2.plus->a1),
                      rel_diff(b1.plus->b1, b2.plus->b1)});
  if (b1.minus && b2.minus)
    match = std::max({match, rel_diff(b1.minus->a2, b2.minus->a2),
                      rel_diff(b1.minus->b2, b2.minus->b2)});
  v.original_bounds_match = match <= 1e-7;

  const ProjectedFamilyReport r1 = project_family(space, m, fam1);
  const ProjectedFamilyReport r2 = project_family(space, m, fam2);
  if (r1.sub_report.bounds.plus && r2.sub_report.bounds.plus) {
    v.projected_rel_diff =
        std::max(rel_diff(r1.sub_report.bounds.plus->a1,
                          r2.sub_report.bounds.plus->a1),
                 rel_diff(r1.sub_report.bounds.plus->b1,
                          r2.sub_report.bounds.plus->b1));
  }
  v.ok = v.original_bounds_match && v.projected_rel_diff >= 0.10 &&
         r1.sub_report.is_j_frame && r2.sub_report.is_j_frame;
  return v;
}

}  // namespace krein

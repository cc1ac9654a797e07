#include "krein/frames.hpp"

#include <algorithm>
#include <cmath>

namespace krein {

const char* failure_reason_name(FailureReason r) {
  switch (r) {
    case FailureReason::neutral_vector: return "neutral_vector";
    case FailureReason::plus_not_definite: return "plus_not_definite";
    case FailureReason::minus_not_definite: return "minus_not_definite";
    case FailureReason::plus_not_maximal: return "plus_not_maximal";
    case FailureReason::minus_not_maximal: return "minus_not_maximal";
  }
  return "unknown";
}

bool Classification::has_nonzero_neutral() const {
  for (int i : i_neutral) {
    if (std::find(zero_indices.begin(), zero_indices.end(), i) ==
        zero_indices.end())
      return true;
  }
  return false;
}

namespace {

Matrix select_columns(const Matrix& m, const std::vector<int>& idx) {
  Matrix out(m.rows(), static_cast<Eigen::Index>(idx.size()));
  for (size_t j = 0; j < idx.size(); ++j) out.col(j) = m.col(idx[j]);
  return out;
}

// Extreme eigenvalues of (B* G T_side T_side* G B, sign * B* G B).
std::pair<double, double> side_pencil_extremes(const KreinSpace& space,
                                               const Subspace& span,
                                               const Matrix& t_side,
                                               int sign) {
  const Matrix x = span.basis.adjoint() * space.gram * t_side;  // k x N_side
  const Matrix c = x * x.adjoint();
  const Matrix n =
      sign >= 0 ? span.restricted_gram : Matrix(-span.restricted_gram);
  const RealVector mu = pencil_eigenvalues(c, n);
  return {mu(0), mu(mu.size() - 1)};
}

}  // namespace

Classification classify_family(const KreinSpace& space,
                               const VectorFamily& family, double tol) {
  if (family.count() > 0 && family.synthesis.rows() != space.dim)
    fail(Errc::dimension_mismatch, "family vectors have wrong length");

  Classification cls;
  const int n = family.count();
  double max_norm = 0.0;
  for (int i = 0; i < n; ++i)
    max_norm = std::max(max_norm, family.synthesis.col(i).norm());

  for (int i = 0; i < n; ++i) {
    const Vector f = family.synthesis.col(i);
    if (f.norm() <= tol * max_norm) {
      cls.i_neutral.push_back(i);
      cls.zero_indices.push_back(i);
      continue;
    }
    const double self = std::real(f.dot(space.gram * f));
    const double theta = tol * std::real(f.dot(space.j_gram * f));
    if (self > theta)
      cls.i_plus.push_back(i);
    else if (self < -theta)
      cls.i_minus.push_back(i);
    else
      cls.i_neutral.push_back(i);
  }

  cls.t_plus = select_columns(family.synthesis, cls.i_plus);
  cls.t_minus = select_columns(family.synthesis, cls.i_minus);
  cls.m_plus = make_subspace(space, cls.t_plus, tol);
  cls.m_minus = make_subspace(space, cls.t_minus, tol);
  return cls;
}

Classification classify_family(const KreinSpace& space,
                               const VectorFamily& family) {
  return classify_family(space, family, space.tol);
}

JFrameReport jframe_check(const KreinSpace& space, const VectorFamily& family,
                          double tol) {
  JFrameReport rep;
  rep.classification = classify_family(space, family, tol);
  const Classification& cls = rep.classification;

  const bool plus_definite = cls.m_plus.is_uniformly_positive();
  const bool minus_definite = cls.m_minus.is_uniformly_negative();
  rep.plus_maximal = plus_definite && cls.m_plus.k() == space.n_plus;
  rep.minus_maximal = minus_definite && cls.m_minus.k() == space.n_minus;
  rep.plus_margin =
      cls.m_plus.definiteness == Definiteness::uniformly_positive
          ? cls.m_plus.margin
          : 0.0;
  rep.minus_margin =
      cls.m_minus.definiteness == Definiteness::uniformly_negative
          ? cls.m_minus.margin
          : 0.0;

  if (cls.has_nonzero_neutral())
    rep.failure_reasons.push_back(FailureReason::neutral_vector);
  if (!plus_definite)
    rep.failure_reasons.push_back(FailureReason::plus_not_definite);
  else if (!rep.plus_maximal)
    rep.failure_reasons.push_back(FailureReason::plus_not_maximal);
  if (!minus_definite)
    rep.failure_reasons.push_back(FailureReason::minus_not_definite);
  else if (!rep.minus_maximal)
    rep.failure_reasons.push_back(FailureReason::minus_not_maximal);

  rep.is_j_frame = rep.failure_reasons.empty();

  if (plus_definite && cls.m_plus.k() > 0) {
    auto [lo, hi] = side_pencil_extremes(space, cls.m_plus, cls.t_plus, +1);
    rep.bounds.plus = PlusBounds{lo, hi};
  }
  if (minus_definite && cls.m_minus.k() > 0) {
    auto [lo, hi] = side_pencil_extremes(space, cls.m_minus, cls.t_minus, -1);
    rep.bounds.minus = MinusBounds{-lo, -hi};
  }
  return rep;
}

JFrameReport jframe_check(const KreinSpace& space,
                          const VectorFamily& family) {
  return jframe_check(space, family, space.tol);
}

OptimalBounds optimal_bounds(const KreinSpace& space,
                             const VectorFamily& family, double tol) {
  const Classification cls = classify_family(space, family, tol);
  OptimalBounds out;
  if (cls.m_plus.k() > 0) {
    if (cls.m_plus.definiteness != Definiteness::uniformly_positive)
      fail(Errc::not_definite,
           "positive-side span is not uniformly positive");
    auto [lo, hi] = side_pencil_extremes(space, cls.m_plus, cls.t_plus, +1);
    out.plus = PlusBounds{lo, hi};
  }
  if (cls.m_minus.k() > 0) {
    if (cls.m_minus.definiteness != Definiteness::uniformly_negative)
      fail(Errc::not_definite,
           "negative-side span is not uniformly negative");
    auto [lo, hi] = side_pencil_extremes(space, cls.m_minus, cls.t_minus, -1);
    out.minus = MinusBounds{-lo, -hi};
  }
  return out;
}

OptimalBounds optimal_bounds(const KreinSpace& space,
                             const VectorFamily& family) {
  return optimal_bounds(space, family, space.tol);
}

MetricFrameBounds j_metric_frame_bounds(const KreinSpace& space,
                                        const SymmetryReport& symmetry,
                                        const VectorFamily& family) {
  if (!symmetry.valid())
    fail(Errc::invalid_symmetry, "not a valid fundamental symmetry");
  if (family.count() > 0 && family.synthesis.rows() != space.dim)
    fail(Errc::dimension_mismatch, "family vectors have wrong length");

  MetricFrameBounds out;
  const Matrix gt = space.gram * family.synthesis;
  const Matrix c = gt * gt.adjoint();  // G T T* G
  const RealVector mu = pencil_eigenvalues(c, symmetry.j_gram);
  out.upper = mu(mu.size() - 1);

  out.spans_space =
      pivoted_column_basis(family.synthesis).basis.cols() == space.dim;
  out.lower = out.spans_space ? mu(0) : 0.0;
  return out;
}

}  // namespace krein

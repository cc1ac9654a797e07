#include "krein/transforms.hpp"

#include <cmath>

namespace krein {

namespace {

// Coordinates of P_M f_i in the basis of M: (B* G B)^{-1} B* G T.
Matrix subspace_coordinates(const KreinSpace& space, const Subspace& m,
                            const Matrix& synthesis) {
  Eigen::PartialPivLU<Matrix> lu(m.restricted_gram);
  return lu.solve(m.basis.adjoint() * space.gram * synthesis);
}

JFrameReport check_inside_subspace(const KreinSpace& space, const Subspace& m,
                                   const Matrix& coords, double tol,
                                   KreinSpace* sub_space_out) {
  KreinSpace sub =
      make_krein_space(m.restricted_gram, tol, space.field);
  JFrameReport rep = jframe_check(sub, VectorFamily{coords}, tol);
  if (sub_space_out) *sub_space_out = std::move(sub);
  return rep;
}

void merge_common(std::optional<PlusBounds>& common,
                  const std::optional<PlusBounds>& part) {
  if (!part) return;
  if (!common) {
    common = part;
  } else {
    common->a1 = std::min(common->a1, part->a1);
    common->b1 = std::max(common->b1, part->b1);
  }
}

void merge_common(std::optional<MinusBounds>& common,
                  const std::optional<MinusBounds>& part) {
  if (!part) return;
  if (!common) {
    common = part;
  } else {
    common->a2 = std::max(common->a2, part->a2);
    common->b2 = std::min(common->b2, part->b2);
  }
}

bool within(double value, double lo, double hi, double rel) {
  const double pad_lo = rel * std::abs(lo);
  const double pad_hi = rel * std::abs(hi);
  return value >= lo - pad_lo && value <= hi + pad_hi;
}

}  // namespace

ProjectedFamilyReport project_family(const KreinSpace& space,
                                     const Subspace& m,
                                     const VectorFamily& family, double tol) {
  if (!m.is_regular)
    fail(Errc::not_regular, "projection requires a regular subspace");
  if (family.count() > 0 && family.synthesis.rows() != space.dim)
    fail(Errc::dimension_mismatch, "family vectors have wrong length");
  if (m.k() == 0)
    fail(Errc::not_regular, "projection onto the trivial subspace is vacuous");

  ProjectedFamilyReport rep;
  rep.subspace = m;

  const Operator p = j_projection(space, m);
  rep.projected = VectorFamily{p.matrix * family.synthesis};
  rep.sub_family =
      VectorFamily{subspace_coordinates(space, m, family.synthesis)};
  rep.sub_report = check_inside_subspace(space, m, rep.sub_family.synthesis,
                                         tol, &rep.sub_space);

  rep.hypothesis_definite =
      m.definiteness == Definiteness::uniformly_positive ||
      m.definiteness == Definiteness::uniformly_negative;

  const Matrix comm =
      p.matrix * space.canonical_j - space.canonical_j * p.matrix;
  rep.commuting_case = comm.norm() <= tol * std::max(1.0, p.matrix.norm());
  return rep;
}

ProjectedFamilyReport project_family(const KreinSpace& space,
                                     const Subspace& m,
                                     const VectorFamily& family) {
  return project_family(space, m, family, space.tol);
}

UnionReport union_families(const KreinSpace& space, const Subspace& m,
                           const VectorFamily& f_family,
                           const VectorFamily& g_family, double tol) {
  if (!m.is_regular)
    fail(Errc::not_regular, "union splitting requires a regular subspace");
  const Subspace mc = j_complement(space, m);
  const Operator p = j_projection(space, m);

  const double p_scale = std::max(1.0, p.matrix.norm());
  for (int i = 0; i < f_family.count(); ++i) {
    const Vector f = f_family.vec(i);
    if ((f - p.matrix * f).norm() > tol * p_scale * std::max(1.0, f.norm()))
      fail(Errc::vector_outside_subspace,
           "f-family vector " + std::to_string(i + 1) + " is not in M");
  }
  for (int i = 0; i < g_family.count(); ++i) {
    const Vector g = g_family.vec(i);
    if ((p.matrix * g).norm() > tol * p_scale * std::max(1.0, g.norm()))
      fail(Errc::vector_outside_subspace,
           "g-family vector " + std::to_string(i + 1) +
               " is not in the complement of M");
  }

  UnionReport rep;
  Matrix all(space.dim, f_family.count() + g_family.count());
  all << f_family.synthesis, g_family.synthesis;
  rep.union_report = jframe_check(space, VectorFamily{all}, tol);

  if (m.k() > 0) {
    rep.f_sub_report = check_inside_subspace(
        space, m, subspace_coordinates(space, m, f_family.synthesis), tol,
        nullptr);
  } else {
    rep.f_sub_report.is_j_frame = f_family.count() == 0;
  }
  if (mc.k() > 0) {
    rep.g_sub_report = check_inside_subspace(
        space, mc, subspace_coordinates(space, mc, g_family.synthesis), tol,
        nullptr);
  } else {
    rep.g_sub_report.is_j_frame = g_family.count() == 0;
  }
  rep.parts_are_frames =
      rep.f_sub_report.is_j_frame && rep.g_sub_report.is_j_frame;

  // Bounds of a part computed in ambient coordinates coincide with the
  // bounds inside its subspace: all sums and forms live inside it.
  rep.f_bounds = rep.f_sub_report.bounds;
  rep.g_bounds = rep.g_sub_report.bounds;
  if (rep.parts_are_frames) {
    merge_common(rep.common.plus, rep.f_bounds.plus);
    merge_common(rep.common.plus, rep.g_bounds.plus);
    merge_common(rep.common.minus, rep.f_bounds.minus);
    merge_common(rep.common.minus, rep.g_bounds.minus);
  }

  rep.enclosure_tol = 1e-8;
  bool ok = rep.parts_are_frames && rep.union_report.is_j_frame;
  if (ok && rep.union_report.bounds.plus) {
    ok = rep.common.plus &&
         within(rep.union_report.bounds.plus->a1, rep.common.plus->a1,
                rep.common.plus->b1, rep.enclosure_tol) &&
         within(rep.union_report.bounds.plus->b1, rep.common.plus->a1,
                rep.common.plus->b1, rep.enclosure_tol);
  }
  if (ok && rep.union_report.bounds.minus) {
    ok = rep.common.minus &&
         within(rep.union_report.bounds.minus->a2, rep.common.minus->b2,
                rep.common.minus->a2, rep.enclosure_tol) &&
         within(rep.union_report.bounds.minus->b2, rep.common.minus->b2,
                rep.common.minus->a2, rep.enclosure_tol);
  }
  rep.enclosure_verified = ok;
  return rep;
}

}  // namespace krein

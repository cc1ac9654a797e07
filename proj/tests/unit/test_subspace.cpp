#include <doctest.h>

#include "helpers.hpp"
#include "krein/oracle.hpp"
#include "krein/subspace.hpp"

using namespace krein;
using namespace krein::test;

namespace {

const KreinSpace& space3() {
  static const KreinSpace s = make_krein_space(diag({1, -1, 1}));
  return s;
}

const KreinSpace& space2() {
  static const KreinSpace s = make_krein_space(diag({1, -1}));
  return s;
}

}  // namespace

TEST_CASE("basis reduction and classification of a positive plane") {
  std::vector<Vector> span = {vec({1, 1, -1001}), vec({10, -0.005, -5})};
  const Subspace m = make_subspace(space3(), span, 1e-9);
  CHECK(m.k() == 2);
  CHECK(m.definiteness == Definiteness::uniformly_positive);
  CHECK(m.is_maximal_definite);
  CHECK(m.is_regular);
  // Pivot order puts the large vector first, so the restricted Gram matches
  // the hand computation on the original columns.
  const Matrix expected =
      mat({{1002001.0, 5015.005}, {5015.005, 124.999975}});
  CHECK(approx_matrix(m.restricted_gram, expected, 1e-12));
}

TEST_CASE("a neutral line is degenerate and not regular") {
  const Subspace m = make_subspace(space3(), {vec({1, 1, 0})}, 1e-9);
  CHECK(m.k() == 1);
  CHECK(m.definiteness == Definiteness::degenerate);
  CHECK_FALSE(m.is_regular);
}

TEST_CASE("the whole space is indefinite regular") {
  const Subspace m =
      make_subspace(space2(), {vec({1, 0}), vec({0, 1})}, 1e-9);
  CHECK(m.definiteness == Definiteness::indefinite_regular);
  CHECK(m.is_regular);
  CHECK(approx_matrix(m.restricted_gram, diag({1, -1}), 1e-12));
}

TEST_CASE("the trivial subspace is regular and both-signed") {
  const Subspace m = make_subspace(space3(), Matrix(3, 0), 1e-9);
  CHECK(m.k() == 0);
  CHECK(m.is_regular);
  CHECK(m.is_uniformly_positive());
  CHECK(m.is_uniformly_negative());
}

TEST_CASE("dependent spanning vectors are reduced") {
  std::vector<Vector> span = {vec({1, 0, 0}), vec({2, 0, 0}), vec({3, 0, 0})};
  CHECK(make_subspace(space3(), span, 1e-9).k() == 1);
}

TEST_CASE("orthogonal complement with respect to the form") {
  const Subspace m =
      make_subspace(space3(), {vec({1, 0, 0}), vec({0, 1, 0})}, 1e-9);
  const Subspace mc = j_complement(space3(), m);
  CHECK(mc.k() == 1);
  CHECK(in_span(mc.basis, vec({0, 0, 1}), 1e-9));

  const Subspace whole = j_complement(space3(), make_subspace(space3(), Matrix(3, 0), 1e-9));
  CHECK(whole.k() == 3);

  // The complement of a neutral line contains the line itself.
  const Subspace neutral = make_subspace(space3(), {vec({1, 1, 0})}, 1e-9);
  const Subspace nc = j_complement(space3(), neutral);
  CHECK(nc.k() == 2);
  CHECK(in_span(nc.basis, vec({1, 1, 0}), 1e-9));
}

TEST_CASE("projection parallel to the complement") {
  const Subspace m =
      make_subspace(space3(), {vec({1, 0, 0}), vec({0, 1, 0})}, 1e-9);
  const Operator p = j_projection(space3(), m);
  CHECK(approx_matrix(p.matrix, mat({{1, 0, 0}, {0, 1, 0}, {0, 0, 0}}),
                      1e-12));
  CHECK(operator_satisfies_role(space3(), p, 1e-9));

  const Operator id = j_projection(space3(), whole_space(space3()));
  CHECK(approx_matrix(id.matrix, Matrix::Identity(3, 3), 1e-12));

  const Subspace neutral = make_subspace(space3(), {vec({1, 1, 0})}, 1e-9);
  CHECK_THROWS_WITH_AS(j_projection(space3(), neutral),
                       doctest::Contains("not_regular"), KreinError);
}

TEST_CASE("metric projection onto coordinate and skew lines") {
  const Operator q1 = q_projection(
      space2(), make_subspace(space2(), {vec({1, 0})}, 1e-9));
  CHECK(approx_matrix(q1.matrix, diag({1, 0}), 1e-12));

  const Operator q2 = q_projection(
      space3(), make_subspace(space3(), {vec({1, 1, 0})}, 1e-9));
  CHECK(approx_matrix(q2.matrix,
                      mat({{0.5, 0.5, 0}, {0.5, 0.5, 0}, {0, 0, 0}}), 1e-12));
  CHECK(operator_satisfies_role(space3(), q2, 1e-9));

  const Operator qid = q_projection(space3(), whole_space(space3()));
  CHECK(approx_matrix(qid.matrix, Matrix::Identity(3, 3), 1e-12));
}

TEST_CASE("uniform definiteness margins") {
  CHECK(definiteness_margin(space2(),
                            make_subspace(space2(), {vec({1, 0})}, 1e-9),
                            +1) == doctest::Approx(1.0));
  CHECK(definiteness_margin(space3(),
                            make_subspace(space3(), {vec({1, 1, 0})}, 1e-9),
                            +1) == 0.0);
  CHECK(definiteness_margin(space2(),
                            make_subspace(space2(), {vec({2, 1})}, 1e-9),
                            +1) == doctest::Approx(0.6));
}

TEST_CASE("projection identities over random regular subspaces") {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    GenConfig cfg;
    cfg.dim = 5;
    cfg.n_plus = 3;
    cfg.n_minus = 2;
    cfg.seed = seed;
    const KreinSpace s = random_krein(cfg);
    const int k = 1 + static_cast<int>(seed % 4);
    const Subspace m = random_subspace(s, k, seed * 31 + 7);
    const Subspace mc = j_complement(s, m);
    CHECK(m.k() + mc.k() == s.dim);

    const Operator p = j_projection(s, m);
    CHECK(operator_satisfies_role(s, p, 1e-8));
    CHECK(approx_matrix(j_adjoint(s, p.matrix), p.matrix, 1e-7));

    // I - P projects onto the complement.
    const Operator pc = j_projection(s, mc);
    CHECK(approx_matrix(Matrix(Matrix::Identity(s.dim, s.dim) - p.matrix),
                        pc.matrix, 1e-7));

    // P fixes M pointwise and kills the complement.
    CHECK((p.matrix * m.basis - m.basis).norm() <= 1e-7 * m.basis.norm());
    CHECK((p.matrix * mc.basis).norm() <= 1e-7 * mc.basis.norm());

    // Regular: trivial intersection with the complement.
    Matrix joint(s.dim, m.k() + mc.k());
    joint << m.basis, mc.basis;
    CHECK(pivoted_column_basis(joint).basis.cols() == s.dim);

    // The orthogonal and oblique projections interleave on the range.
    const Operator q = q_projection(s, m);
    CHECK(operator_satisfies_role(s, q, 1e-8));
    CHECK(approx_matrix(Matrix(p.matrix * q.matrix), q.matrix, 1e-7));
    CHECK(approx_matrix(Matrix(q.matrix * p.matrix), p.matrix, 1e-7));
  }
}

TEST_CASE("projection products on symmetry-invariant subspaces") {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    GenConfig cfg;
    cfg.dim = 6;
    cfg.n_plus = 3;
    cfg.n_minus = 3;
    cfg.seed = seed * 13;
    const KreinSpace s = random_krein(cfg);
    const Subspace m = random_invariant_subspace(s, 2, 1, seed);
    const Subspace jm = make_subspace(s, Matrix(s.canonical_j * m.basis));
    const Operator qm = q_projection(s, m);
    const Operator qjm = q_projection(s, jm);
    const Operator pm = j_projection(s, m);
    // J M = M here, so the metric projection is the J-projection and the
    // product collapses to it.
    CHECK(approx_matrix(Matrix(qjm.matrix * qm.matrix), pm.matrix, 1e-7));
    CHECK(approx_matrix(qm.matrix, pm.matrix, 1e-7));
  }
}

TEST_CASE("projection products differ on generic subspaces") {
  // The product of the two metric projections has its range inside J M, so
  // it can only reproduce the J-projection when J M = M. On a skew line it
  // is not even idempotent.
  const KreinSpace& s = space2();
  const Subspace m = make_subspace(s, {vec({2, 1})}, 1e-9);
  const Subspace jm = make_subspace(
      s, Matrix(s.canonical_j * m.basis));
  const Matrix qm = q_projection(s, m).matrix;
  const Matrix qjm = q_projection(s, jm).matrix;
  const Matrix pm = j_projection(s, m).matrix;

  const Matrix prod = qjm * qm;
  CHECK((prod - pm).norm() > 0.1);
  CHECK((prod * prod - prod).norm() > 0.01);
  // What does hold: the product is selfadjoint for the indefinite form.
  CHECK(approx_matrix(j_adjoint(s, prod), prod, 1e-9));
  // And the oblique/orthogonal compositions with matching ranges collapse.
  CHECK(approx_matrix(Matrix(pm * qm), qm, 1e-9));
  CHECK(approx_matrix(Matrix(qm * pm), pm, 1e-9));
}

TEST_CASE("definite subspaces are regular exactly when their margin is positive") {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    GenConfig cfg;
    cfg.dim = 4;
    cfg.n_plus = 2;
    cfg.n_minus = 2;
    cfg.seed = seed * 101;
    const KreinSpace s = random_krein(cfg);
    const Subspace m = random_subspace(s, 2, seed, /*require_regular=*/false);
    if (m.k() == 0) continue;
    const bool definite = m.definiteness == Definiteness::uniformly_positive ||
                          m.definiteness == Definiteness::uniformly_negative;
    if (definite) {
      CHECK(m.margin > 0.0);
      CHECK(m.is_regular);
    }
    if (m.definiteness == Definiteness::degenerate) CHECK_FALSE(m.is_regular);
  }
}

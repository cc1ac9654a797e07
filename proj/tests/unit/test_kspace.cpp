#include <doctest.h>

#include "helpers.hpp"
#include "krein/kspace.hpp"
#include "krein/rng.hpp"

using namespace krein;
using namespace krein::test;

TEST_CASE("construction from a diagonal indefinite Gram") {
  const KreinSpace s = make_krein_space(diag({1, -1, 1}));
  CHECK(s.n_plus == 2);
  CHECK(s.n_minus == 1);
  CHECK(approx_matrix(s.canonical_j, diag({1, -1, 1}), 1e-12));
  CHECK(approx_matrix(s.p_plus, diag({1, 0, 1}), 1e-12));
  CHECK(approx_matrix(s.p_minus, diag({0, 1, 0}), 1e-12));
  CHECK(s.field == Field::real);
}

TEST_CASE("a positive definite Gram gives a Hilbert space") {
  const KreinSpace s = make_krein_space(diag({1, 1}));
  CHECK(s.n_plus == 2);
  CHECK(s.n_minus == 0);
  CHECK(approx_matrix(s.canonical_j, Matrix::Identity(2, 2), 1e-12));
}

TEST_CASE("the flip Gram is its own canonical symmetry") {
  const Matrix g = mat({{0, 1}, {1, 0}});
  const KreinSpace s = make_krein_space(g);
  CHECK(s.n_plus == 1);
  CHECK(s.n_minus == 1);
  CHECK(approx_matrix(s.canonical_j, g, 1e-12));
  CHECK(approx_matrix(s.j_gram, Matrix::Identity(2, 2), 1e-12));
}

TEST_CASE("construction rejects bad Grams") {
  CHECK_THROWS_WITH_AS(make_krein_space(Matrix(Matrix::Zero(2, 3))),
                       doctest::Contains("not_square"), KreinError);
  CHECK_THROWS_WITH_AS(make_krein_space(mat({{0, 1}, {0, 0}})),
                       doctest::Contains("non_hermitian"), KreinError);
  CHECK_THROWS_WITH_AS(make_krein_space(diag({1, 0})),
                       doctest::Contains("degenerate"), KreinError);
  CHECK_THROWS_WITH_AS(make_krein_space(diag({1, 1e-17})),
                       doctest::Contains("degenerate"), KreinError);
}

TEST_CASE("indefinite inner product values") {
  const KreinSpace s = make_krein_space(diag({1, -1, 1}));
  const Vector x = vec({1, 1, -1001});
  CHECK(approx(indefinite_inner(s, x, x).real(), 1002001.0, 1e-12));
  CHECK(indefinite_inner(s, vec({1, 0, 0}), vec({0, 1, 0})) == Scalar(0, 0));
  const Vector y = vec({10, -0.005, -5});
  CHECK(approx(indefinite_inner(s, y, x).real(), 5015.005, 1e-12));
  CHECK_THROWS_AS(indefinite_inner(s, vec({1, 0}), x), KreinError);
}

TEST_CASE("inner product is conjugate symmetric and first-slot linear") {
  Matrix g(2, 2);
  g << Scalar(2, 0), Scalar(0, 1), Scalar(0, -1), Scalar(2, 0);
  const KreinSpace s = make_krein_space(g);
  CHECK(s.field == Field::cplx);
  Rng rng(7);
  for (int t = 0; t < 20; ++t) {
    Vector x(2), y(2), z(2);
    for (int i = 0; i < 2; ++i) {
      x(i) = Scalar(rng.normal(), rng.normal());
      y(i) = Scalar(rng.normal(), rng.normal());
      z(i) = Scalar(rng.normal(), rng.normal());
    }
    const Scalar a(rng.normal(), rng.normal());
    const Scalar xy = indefinite_inner(s, x, y);
    const Scalar yx = indefinite_inner(s, y, x);
    CHECK(std::abs(xy - std::conj(yx)) < 1e-12);
    const Scalar lin = indefinite_inner(s, Vector(a * x + z), y);
    CHECK(std::abs(lin - (a * xy + indefinite_inner(s, z, y))) < 1e-10);
    CHECK(std::abs(indefinite_inner(s, x, x).imag()) < 1e-12);
  }
}

TEST_CASE("an indefinite complex Gram splits correctly") {
  Matrix g(2, 2);
  g << Scalar(0, 0), Scalar(0, 1), Scalar(0, -1), Scalar(0, 0);
  const KreinSpace s = make_krein_space(g);
  CHECK(s.n_plus == 1);
  CHECK(s.n_minus == 1);
  CHECK(approx_matrix(s.j_gram, Matrix::Identity(2, 2), 1e-12));
}

TEST_CASE("the canonical symmetry validates and its metric is |G|") {
  const KreinSpace s = make_krein_space(diag({1, -1, 1}));
  const SymmetryReport rep = validate_symmetry(s, s.canonical_j);
  CHECK(rep.valid());
  CHECK(approx_matrix(rep.j_gram, diag({1, 1, 1}), 1e-12));
}

TEST_CASE("a second symmetry on the alternating four-dimensional space") {
  const double s3 = std::sqrt(3.0);
  const KreinSpace s = make_krein_space(diag({1, -1, 1, -1}));
  const Matrix j2 = mat({{2, -s3, 0, 0},
                         {s3, -2, 0, 0},
                         {0, 0, 1, 0},
                         {0, 0, 0, -1}});
  const SymmetryReport rep = validate_symmetry(s, j2);
  CHECK(rep.is_involution);
  CHECK(rep.is_j_selfadjoint);
  CHECK(rep.is_positivizing);
  REQUIRE(rep.valid());
  const HermitianEigen eig = eig_hermitian_descending(rep.j_gram);
  CHECK(approx(eig.values(0), 2 + s3));
  CHECK(approx(eig.values(1), 1.0));
  CHECK(approx(eig.values(2), 1.0));
  CHECK(approx(eig.values(3), 2 - s3));
}

TEST_CASE("negated symmetry fails only the positivity flag") {
  const KreinSpace s = make_krein_space(diag({1, -1, 1}));
  const SymmetryReport rep = validate_symmetry(s, Matrix(-s.canonical_j));
  CHECK(rep.is_involution);
  CHECK(rep.is_j_selfadjoint);
  CHECK_FALSE(rep.is_positivizing);
  CHECK_FALSE(rep.valid());
}

TEST_CASE("adjoint with respect to the indefinite form") {
  const KreinSpace s2 = make_krein_space(diag({1, -1}));
  CHECK(approx_matrix(j_adjoint(s2, Matrix::Identity(2, 2)),
                      Matrix::Identity(2, 2), 1e-12));
  CHECK(approx_matrix(j_adjoint(s2, mat({{0, 1}, {0, 0}})),
                      mat({{0, 0}, {-1, 0}}), 1e-12));
  CHECK(approx_matrix(j_adjoint(s2, s2.canonical_j), s2.canonical_j, 1e-12));
}

TEST_CASE("adjoint properties on a non-diagonal space") {
  Rng rng(11);
  const KreinSpace s =
      make_krein_space(mat({{2, 1, 0}, {1, -1, 0.5}, {0, 0.5, 1}}));

  for (int t = 0; t < 10; ++t) {
    Matrix a(3, 3), b(3, 3);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        a(i, j) = Scalar(rng.normal(), 0);
        b(i, j) = Scalar(rng.normal(), 0);
      }
    const Matrix as = j_adjoint(s, a);
    CHECK(approx_matrix(j_adjoint(s, as), a, 1e-9));
    CHECK(approx_matrix(j_adjoint(s, Matrix(a * b)),
                        Matrix(j_adjoint(s, b) * as), 1e-9));
    // Defining identity [T x, y] = [x, T^[*] y].
    Vector x(3), y(3);
    for (int i = 0; i < 3; ++i) {
      x(i) = Scalar(rng.normal(), 0);
      y(i) = Scalar(rng.normal(), 0);
    }
    const Scalar lhs = indefinite_inner(s, Vector(a * x), y);
    const Scalar rhs = indefinite_inner(s, x, Vector(as * y));
    CHECK(std::abs(lhs - rhs) < 1e-9 * (1.0 + std::abs(lhs)));
    // Route through the stated relation with the canonical symmetry.
    const Matrix via_j = s.canonical_j *
                         Matrix(s.j_gram.llt().solve(a.adjoint() * s.j_gram)) *
                         s.canonical_j;
    CHECK(approx_matrix(as, via_j, 1e-8));
  }
}

TEST_CASE("the metric inner product is positive definite") {
  const KreinSpace s = make_krein_space(mat({{0, 2}, {2, 0}}));
  Rng rng(3);
  for (int t = 0; t < 25; ++t) {
    Vector x(2), y(2);
    for (int i = 0; i < 2; ++i) {
      x(i) = Scalar(rng.normal(), 0);
      y(i) = Scalar(rng.normal(), 0);
    }
    // [x, Jy] agrees with the metric Gram route.
    const Scalar a = indefinite_inner(s, x, Vector(s.canonical_j * y));
    const Scalar b = j_metric_inner(s, x, y);
    CHECK(std::abs(a - b) < 1e-12);
    if (x.norm() > 1e-12) CHECK(j_metric_inner(s, x, x).real() > 0.0);
  }
}

#include <doctest.h>

#include "helpers.hpp"
#include "krein/io.hpp"

using namespace krein;
using namespace krein::test;

TEST_CASE("problem files parse with defaults") {
  const std::string text = R"({
    "gram": [[1, 0], [0, -1]],
    "vectors": [[1, 0], [0, 1]]
  })";
  const ProblemFile p = parse_problem(text, "test");
  CHECK(p.field == Field::real);
  CHECK(p.tol == kDefaultTol);
  CHECK(p.gram.rows() == 2);
  CHECK(p.vectors.cols() == 2);
  CHECK_FALSE(p.symmetry);
  CHECK_FALSE(p.split);
}

TEST_CASE("complex entries parse as pairs") {
  const std::string text = R"({
    "field": "complex",
    "gram": [[2, [0, 1]], [[0, -1], 2]],
    "vectors": [[1, [0, 1]]]
  })";
  const ProblemFile p = parse_problem(text, "test");
  CHECK(p.gram(0, 1) == Scalar(0, 1));
  CHECK(p.vectors(1, 0) == Scalar(0, 1));
}

TEST_CASE("real files refuse complex entries") {
  const std::string text = R"({
    "field": "real",
    "gram": [[1, [0, 1]], [[0, -1], 1]],
    "vectors": [[1, 0]]
  })";
  CHECK_THROWS_WITH_AS(parse_problem(text, "test"),
                       doctest::Contains("declared"), KreinError);
}

TEST_CASE("parse errors carry context") {
  CHECK_THROWS_WITH_AS(parse_problem("{", "test"),
                       doctest::Contains("test"), KreinError);
  CHECK_THROWS_WITH_AS(
      parse_problem(R"({"gram": [[1, 0], [0]], "vectors": [[1, 0]]})", "t"),
      doctest::Contains("ragged"), KreinError);
  CHECK_THROWS_WITH_AS(
      parse_problem(R"({"vectors": [[1, 0]]})", "t"),
      doctest::Contains("missing gram"), KreinError);
  CHECK_THROWS_WITH_AS(
      parse_problem(
          R"({"gram": [[1,0],[0,1]], "vectors": [[1,0]], "split": [[1],[3]]})",
          "t"),
      doctest::Contains("out of range"), KreinError);
}

TEST_CASE("split indices convert to zero-based") {
  const std::string text = R"({
    "gram": [[1, 0], [0, -1]],
    "vectors": [[1, 0], [0, 1], [2, 0]],
    "split": [[1, 2], [3]]
  })";
  const ProblemFile p = parse_problem(text, "test");
  REQUIRE(p.split);
  CHECK(p.split->m_indices == std::vector<int>{0, 1});
  CHECK(p.split->n_indices == std::vector<int>{2});
}

TEST_CASE("canonical writer emits stable bytes") {
  const auto build = [] {
    CanonicalWriter w;
    w.begin_object();
    w.key("flag");
    w.value(true);
    w.key("count");
    w.value(3);
    w.key("x");
    w.value(0.1);
    w.key("list");
    w.begin_array();
    w.value(1.0);
    w.value(false);
    w.null_value();
    w.end_array();
    w.key("nested");
    w.begin_object();
    w.key("s");
    w.value("a\"b");
    w.end_object();
    w.end_object();
    return w.str();
  };
  const std::string a = build();
  CHECK(a == build());
  CHECK(a ==
        "{\"flag\":true,\"count\":3,\"x\":0.10000000000000001,"
        "\"list\":[1,false,null],\"nested\":{\"s\":\"a\\\"b\"}}");
}

TEST_CASE("seventeen significant digits round-trip") {
  for (double d : {0.1, 1.0 / 3.0, 1002001.0, -0.005, 2e-9}) {
    const std::string s = format_double(d);
    CHECK(std::stod(s) == d);
  }
}

TEST_CASE("content digests match known vectors") {
  CHECK(content_digest("") == "cbf29ce484222325");
  CHECK(content_digest("a") == "af63dc4c8601ec8c");
  CHECK(content_digest("a") != content_digest("b"));
}

TEST_CASE("fixtures round-trip through their serialization") {
  const ProjectionCounterexample fx = projection_counterexample(1);
  const std::string text = fixture_to_json(fx);
  const ProjectionCounterexample back = fixture_from_json(text);
  CHECK(approx_matrix(back.gram, fx.gram, 1e-15));
  CHECK(approx_matrix(back.family1, fx.family1, 1e-15));
  CHECK(approx_matrix(back.family2, fx.family2, 1e-15));
  CHECK(approx_matrix(back.subspace_basis, fx.subspace_basis, 1e-15));
  CHECK(verify_projection_counterexample(back).ok);
  // Serialization is canonical, hence byte-stable.
  CHECK(fixture_to_json(back) == text);
}

#include <doctest.h>

#include <random>

#include "jetsections/error.hpp"
#include "jetsections/io.hpp"
#include "oracles.hpp"

using namespace jetsections;

TEST_CASE("text polynomials parse and render back") {
  const Polynomial p = parse_polynomial_text("2*x[1]^(1)^2 - x[1]*x[1]^(2)", std::nullopt);
  CHECK(p.space() == VarSpace::affine(1, 0));
  CHECK(p.to_string() == "2*x[1]^(1)^2 - x[1]*x[1]^(2)");
  CHECK(parse_polynomial_text(p.to_string(), 1) == p);
  const Polynomial q = parse_polynomial_text("-3/2 * X[0]^2*X[1]^(1) + 1", 1);
  CHECK(q.space() == VarSpace::homogeneous(1));
  CHECK(q.coefficient(Monomial({{{0, 0}, 2}, {{1, 1}, 1}})) == Scalar(-3, 2));
  CHECK(parse_polynomial_text("x[2]", std::nullopt).space() == VarSpace::affine(2, 0));
  CHECK(parse_polynomial_text("x[1] - x[1]", 1).is_zero());
  CHECK(parse_polynomial_text("x[1]", 1, 1).space() == VarSpace::affine(1, 1));
}

TEST_CASE("malformed text is rejected") {
  CHECK_THROWS_AS(parse_polynomial_text("x[1] +", 1), InvalidArgument);
  CHECK_THROWS_AS(parse_polynomial_text("x[1]*X[0]", 1), InvalidArgument);
  CHECK_THROWS_AS(parse_polynomial_text("y[1]", 1), InvalidArgument);
  CHECK_THROWS_AS(parse_polynomial_text("x[3]", 2), InvalidArgument);
  CHECK_THROWS_AS(parse_polynomial_text("x[0]", 2), InvalidArgument);
  CHECK_THROWS_AS(parse_polynomial_text("1/0", 1), InvalidArgument);
}

TEST_CASE("polynomial JSON round trips") {
  std::mt19937_64 rng(41);
  for (int i = 0; i < 30; ++i) {
    const VarSpace s = VarSpace::affine(1 + i % 3, i % 2);
    const Polynomial p = oracle::random_polynomial(rng, s, 5, 4);
    const std::string text = to_json(p).dump();
    CHECK(polynomial_from_json(Json::parse(text)) == p);
    CHECK(parse_polynomial(text, std::nullopt) == p);
    CHECK(to_json(polynomial_from_json(Json::parse(text))).dump() == text);
  }
  const Polynomial h = determinant(build_H(TupleBNPlus({SeqB({1, 2})})));
  CHECK(polynomial_from_json(to_json(h)) == h);
  const Json j = to_json(parse_polynomial_text("x[1]^(2)", 1));
  CHECK(j.dump() ==
        R"({"space":{"kind":"affine","chart":0,"N":1},"terms":[{"coeff":"1","mono":[[1,2,1]]}]})");
  CHECK_THROWS_AS(polynomial_from_json(Json::parse(R"({"terms":[]})")), InvalidArgument);
  CHECK_THROWS_AS(parse_polynomial("{oops", std::nullopt), InvalidArgument);
}

TEST_CASE("tuple JSON") {
  const TupleBNPlus t = parse_tuple("[[2,5],[1],[0]]");
  CHECK(t.to_string() == "[(2,5),(1),(0)]");
  CHECK(to_json(t).dump() == R"({"N":3,"blocks":[[2,5],[1],[0]]})");
  CHECK(tuple_from_json(to_json(t)) == t);
  CHECK_THROWS_AS(parse_tuple("[[0],[0]]"), InvalidArgument);
  CHECK_THROWS_AS(parse_tuple("[[1,1]]"), InvalidArgument);
  CHECK_THROWS_AS(parse_tuple("[1,2]"), InvalidArgument);
  CHECK_THROWS_AS(parse_tuple(R"({"N":2,"blocks":[[1]]})"), InvalidArgument);
}

TEST_CASE("section, term and matrix JSON") {
  const Polynomial p = parse_polynomial_text("x[1]^(1)", 1);
  const Json s = to_json(to_chart(p, 1));
  CHECK(s["chart"] == 1);
  CHECK(s["pole"] == 2);
  CHECK_FALSE(s.contains("denominator"));
  const Json m = to_json(build_delta0(parse_tuple("[[0,2]]")));
  CHECK(m["rows"][1][0].is_null());
  CHECK(m["rows"][1][1]["coeff"] == "2");
  CHECK(m["rows"][1][1]["order"] == 1);
  const Json t = to_json(smallest_rational_term(parse_tuple("[[1,2]]"), SmallestTermMode::Brute));
  CHECK(t["pole"] == 3);
  CHECK(t["mono"].dump() == "[[1,2,1]]");
}

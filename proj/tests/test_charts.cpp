#include <doctest.h>

#include <random>

#include "jetsections/charts.hpp"
#include "oracles.hpp"

using namespace jetsections;

namespace {
const VarSpace A1 = VarSpace::affine(1, 0);
const VarSpace B1 = VarSpace::affine(1, 1);
Polynomial v(const VarSpace& s, int order, int coord = 1) {
  return Polynomial::variable(s, {coord, order});
}
const Polynomial kExample = Scalar(2) * v(A1, 1) * v(A1, 1) - v(A1, 0) * v(A1, 2);

TupleBNPlus T(std::vector<std::vector<int>> blocks) {
  std::vector<SeqB> seqs;
  for (auto& b : blocks) seqs.emplace_back(std::move(b));
  return TupleBNPlus(std::move(seqs));
}
}  // namespace

TEST_CASE("derivatives of x = 1/y") {
  const RationalSection s0 = to_chart(v(A1, 0), 1);
  CHECK(s0.numerator() == Polynomial(B1, Scalar(1)));
  CHECK(s0.pole() == 1);
  const RationalSection s1 = to_chart(v(A1, 1), 1);
  CHECK(s1.numerator() == -v(B1, 1));
  CHECK(s1.pole() == 2);
  const RationalSection s2 = to_chart(v(A1, 2), 1);
  CHECK(s2.numerator() == Scalar(2) * v(B1, 1) * v(B1, 1) - v(B1, 2) * v(B1, 0));
  CHECK(s2.pole() == 3);
}

TEST_CASE("pole orders") {
  CHECK(pole_order(kExample, 1) == 3);
  CHECK(pole_order(v(A1, 1) * v(A1, 1), 1) == 4);
  CHECK(pole_order(Polynomial(A1, Scalar(1)), 1) == 0);
  CHECK(pole_order(Polynomial(A1), 1) == 0);
  CHECK_THROWS_AS(pole_order(v(B1, 0), 1), SpaceMismatch);
  CHECK_THROWS_AS(to_chart(kExample, 2), InvalidArgument);
}

TEST_CASE("global sections") {
  CHECK(is_global_section(kExample, 3));
  const GlobalSectionReport r = global_section_report(v(A1, 1) * v(A1, 1), 3);
  CHECK_FALSE(r.global);
  CHECK(r.poles == std::vector<int>{4});
  for (int n = 1; n <= 2; ++n) {
    for (const auto& t : oracle::brute_tuples(n, 4)) {
      const Polynomial det = determinant(build_delta0(t));
      const GlobalSectionReport rep = global_section_report(det, t.max_entry() + 1);
      CHECK(rep.global);
      for (int pole : rep.poles) CHECK(pole <= t.max_entry() + 1);
      CHECK(rep.poles.front() == t.max_entry() + 1);
    }
  }
}

TEST_CASE("twisted transport") {
  CHECK(twisted_transport(kExample, 1, 3) == v(B1, 2));
  CHECK(twisted_transport(Polynomial(A1, Scalar(1)), 1, 2) == v(B1, 0) * v(B1, 0));
  CHECK(twisted_transport(v(A1, 0), 1, 1) == Polynomial(B1, Scalar(1)));
  try {
    twisted_transport(v(A1, 1) * v(A1, 1), 1, 3);
    FAIL("expected PoleExceedsTwist");
  } catch (const PoleExceedsTwist& e) {
    CHECK(e.pole() == 4);
    CHECK(e.twist() == 3);
  }
}

TEST_CASE("chart images agree with power-series evaluation") {
  std::mt19937_64 rng(23);
  for (int n = 1; n <= 3; ++n) {
    const VarSpace s = VarSpace::affine(n, 0);
    for (int i = 0; i < 15; ++i) {
      const Polynomial p = oracle::random_polynomial(rng, s, 5, 4);
      for (int j = 1; j <= n; ++j) {
        const RationalSection image = to_chart(p, j);
        CHECK(image.denominator_coord() == j);
        CHECK(oracle::chart_image_agrees(p, image, rng));
      }
    }
  }
}

TEST_CASE("round trip through chart 1 and back") {
  std::mt19937_64 rng(29);
  for (int i = 0; i < 30; ++i) {
    const Polynomial p = oracle::random_polynomial(rng, A1, 6, 5);
    const RationalSection there = to_chart(p, 1);
    const Polynomial twisted = twisted_transport(p, 1, there.pole());
    CHECK(twisted_transport(twisted, 0, there.pole()) == p);
  }
  // chart 2 -> chart 1 -> chart 2 in the plane
  const VarSpace s2 = VarSpace::affine(2, 2);
  for (int i = 0; i < 10; ++i) {
    const Polynomial p = oracle::random_polynomial(rng, s2, 4, 3);
    const int d = change_chart(p, 1).pole();
    CHECK(twisted_transport(twisted_transport(p, 1, d), 2, d) == p);
  }
}

TEST_CASE("main3 identity across the sweep") {
  CHECK(verify_main3(TupleBNPlus::empty(1), 0) == 1);
  CHECK(verify_main3(TupleBNPlus::empty(2), 2) == 1);
  CHECK(verify_main3(T({{1, 2}}), 0) == 1);
  CHECK(verify_main3(T({{1, 2}}), 1) == 1);
  for (int n = 1; n <= 2; ++n) {
    for (const auto& t : oracle::brute_tuples(n, 4)) {
      for (int j = 0; j <= n; ++j) {
        const int s = verify_main3(t, j);
        CHECK((s == 1 || s == -1));
      }
    }
  }
  CHECK_THROWS_AS(verify_main3(T({{1, 2}}), 2), InvalidArgument);
}

TEST_CASE("rational sections must be reduced") {
  CHECK_THROWS_AS(RationalSection(v(B1, 0), 1, 1), InvalidArgument);
  CHECK_NOTHROW(RationalSection(v(B1, 0) + v(B1, 1), 1, 1));
  CHECK_THROWS_AS(RationalSection(v(B1, 1), 1, -1), InvalidArgument);
}

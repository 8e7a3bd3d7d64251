#include <doctest.h>

#include <random>

#include "jetsections/error.hpp"
#include "jetsections/jet_matrix.hpp"
#include "oracles.hpp"

using namespace jetsections;

namespace {
TupleBNPlus T(std::vector<std::vector<int>> blocks) {
  std::vector<SeqB> seqs;
  for (auto& b : blocks) seqs.emplace_back(std::move(b));
  return TupleBNPlus(std::move(seqs));
}
std::string det0(std::vector<std::vector<int>> blocks) {
  return determinant(build_delta0(T(std::move(blocks)))).to_string();
}
}  // namespace

TEST_CASE("column of type alpha") {
  const auto c = column(3, 1, 5);
  REQUIRE(c.size() == 5);
  CHECK(c[0]->var == JetVar{1, 3});
  CHECK(c[1]->coeff == Scalar(3));
  CHECK(c[2]->coeff == Scalar(3));
  CHECK(c[3]->var == JetVar{1, 0});
  CHECK_FALSE(c[4].has_value());
  CHECK_FALSE(column(0, 1, 2)[1].has_value());
}

TEST_CASE("golden determinants of weight 5") {
  CHECK(det0({{1, 2}}) == "2*x[1]^(1)^2 - x[1]*x[1]^(2)");
  CHECK(det0({{4}}) == "x[1]^(4)");
  CHECK(det0({{0, 4}}) == "4*x[1]*x[1]^(3)");
  CHECK(det0({{1, 3}}) == "3*x[1]^(1)*x[1]^(2) - x[1]*x[1]^(3)");
  CHECK(det0({{0, 1, 4}}) == "6*x[1]^2*x[1]^(2)");
  CHECK(det0({{0, 2, 3}}) == "6*x[1]*x[1]^(1)^2 - 3*x[1]^2*x[1]^(2)");
  CHECK(det0({{0, 1, 2, 4}}) == "4*x[1]^3*x[1]^(1)");
  CHECK(det0({{0, 1, 2, 3, 4}}) == "x[1]^5");
  CHECK(det0({{}}) == "1");
}

TEST_CASE("matrix shapes") {
  const TupleBNPlus t = T({{1, 3}, {0}});
  CHECK(build_delta0(t).size() == 3);
  CHECK(build_H(t).size() == 4);
  CHECK(build_H(t).space() == VarSpace::homogeneous(2));
  CHECK(build_delta_j(t, 0) == build_delta0(t));
  CHECK(build_delta_j(t, 1).size() == 2);
  CHECK(build_delta_j(t, 2).size() == 3);
  CHECK(build_H(TupleBNPlus::empty(2)).size() == 0);
  CHECK_THROWS_AS(build_delta_j(t, 3), InvalidArgument);
}

TEST_CASE("cofactor determinant agrees with the permutation sum") {
  for (int n = 1; n <= 2; ++n) {
    for (const auto& t : oracle::brute_tuples(n, 4)) {
      for (const JetMatrix& m : {build_delta0(t), build_H(t)}) {
        CHECK(determinant(m) == oracle::permutation_det(oracle::to_poly_matrix(m)));
      }
    }
  }
  std::mt19937_64 rng(17);
  const VarSpace s = VarSpace::affine(2, 0);
  for (int i = 0; i < 15; ++i) {
    PolyMatrix m(s, 4);
    for (int r = 0; r < 4; ++r) {
      for (int c = 0; c < 4; ++c) m.set(r, c, oracle::random_polynomial(rng, s, 2, 2));
    }
    CHECK(determinant(m) == oracle::permutation_det(m));
  }
}

TEST_CASE("the diagonal of Delta_0 is its smallest monomial") {
  for (int n = 1; n <= 2; ++n) {
    for (const auto& t : oracle::brute_tuples(n, 5)) {
      const JetMatrix m = build_delta0(t);
      const auto [mono, coeff] = minth_check(m);
      const auto [sm, sc] = smallest_monomial(determinant(m));
      CHECK(mono == sm);
      CHECK(coeff == sc);
      CHECK(mono == monomial_of(tau_plus(t)));
    }
  }
}

TEST_CASE("minth_check rejects a matrix that breaks the hypothesis") {
  const VarSpace s = VarSpace::affine(1, 0);
  // the top-right entry x is smaller than the diagonal entry x'
  JetMatrix bad(s, {{JetEntry{Scalar(1), {1, 1}}, JetEntry{Scalar(1), {1, 0}}},
                    {JetCell{}, JetEntry{Scalar(1), {1, 2}}}});
  CHECK_THROWS_WITH_AS(minth_check(bad), doctest::Contains("(1,2)"), InvalidArgument);
  JetMatrix zero_diag(s, {{JetCell{}}});
  CHECK_THROWS_AS(minth_check(zero_diag), InvalidArgument);
}

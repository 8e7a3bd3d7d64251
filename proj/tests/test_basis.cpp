#include <doctest.h>

#include <random>

#include "jetsections/basis.hpp"
#include "jetsections/parallel.hpp"
#include "oracles.hpp"

using namespace jetsections;

namespace {
const VarSpace A1 = VarSpace::affine(1, 0);
const VarSpace B1 = VarSpace::affine(1, 1);
TupleBNPlus T(std::vector<std::vector<int>> blocks) {
  std::vector<SeqB> seqs;
  for (auto& b : blocks) seqs.emplace_back(std::move(b));
  return TupleBNPlus(std::move(seqs));
}
RationalTerm term(Monomial m, int pole) { return {B1, std::move(m), pole, Scalar(1)}; }
Monomial y(int order, int e = 1) { return Monomial::of({1, order}, e); }
}  // namespace

TEST_CASE("rational term order") {
  const RationalTerm a = term(y(2), 3);
  const RationalTerm b = term(y(1, 2), 4);
  CHECK(rational_term_cmp(a, b) > 0);
  CHECK(rational_term_cmp(term(y(1), 2), term(y(2), 2)) < 0);
  CHECK(rational_term_cmp(a, a) == 0);
  RationalTerm other = a;
  other.space = VarSpace::affine(1, 0);
  CHECK_THROWS_AS(rational_term_cmp(a, other), SpaceMismatch);
}

TEST_CASE("smallest rational terms") {
  const RationalTerm t = smallest_rational_term(T({{1, 2}}), SmallestTermMode::Brute);
  CHECK(t.numerator == y(2));
  CHECK(t.pole == 3);
  CHECK((t.coeff == Scalar(1) || t.coeff == Scalar(-1)));
  const RationalTerm u = smallest_rational_term(T({{0, 4}}), SmallestTermMode::Brute);
  CHECK(u.numerator == y(1, 3));
  CHECK(u.pole == 5);
  for (auto mode : {SmallestTermMode::Brute, SmallestTermMode::ClosedForm}) {
    const RationalTerm e = smallest_rational_term(TupleBNPlus::empty(2), mode);
    CHECK(e.numerator.is_one());
    CHECK(e.pole == 0);
  }
}

TEST_CASE("closed form agrees with expansion") {
  for (int n = 1; n <= 3; ++n) {
    for (const auto& t : oracle::brute_tuples(n, 5)) {
      const RationalTerm b = smallest_rational_term(t, SmallestTermMode::Brute);
      const RationalTerm c = smallest_rational_term(t, SmallestTermMode::ClosedForm);
      CHECK_MESSAGE(b == c, t.to_string());
      if (t.all_empty()) continue;
      // factor counts: M - n_1 + 1 in total, n_j in coordinate j >= 2
      int total = 0;
      std::vector<int> per(static_cast<std::size_t>(n + 1), 0);
      for (const Factor& f : c.numerator.factors()) {
        total += f.exponent;
        per[static_cast<std::size_t>(f.var.coord)] += f.exponent;
      }
      CHECK(total == t.max_entry() - t.length(1) + 1);
      for (int j = 2; j <= n; ++j) CHECK(per[static_cast<std::size_t>(j)] == t.length(j));
      const bool first_block_max = t.length(1) > 0 && t.block(1).entries().back() == t.max_entry();
      // y_1^{(n_1 + 1)} shows up once block 1 is nonempty and misses the maximum
      if (!first_block_max && t.length(1) > 0) CHECK_MESSAGE(c.numerator.exponent_of({1, t.length(1) + 1}) > 0, t.to_string());
    }
  }
}

TEST_CASE("independence of smallest terms") {
  CHECK(independence_check(enumerate_degree(1, 3)).independent);
  CHECK(independence_check(enumerate_degree(2, 2)).independent);
  CHECK(independence_check({T({{1, 2}})}).independent);
  CHECK_THROWS_AS(independence_check({T({{1}}), T({{1}})}), InvalidArgument);
}

TEST_CASE("expansion in the determinant basis") {
  const Polynomial x = Polynomial::variable(A1, {1, 0});
  const Polynomial x1 = Polynomial::variable(A1, {1, 1});
  const Polynomial x2 = Polynomial::variable(A1, {1, 2});
  const auto c = expand_in_det_basis(Scalar(2) * x1 * x1 - x * x2);
  REQUIRE(c.size() == 1);
  CHECK(c.begin()->first == T({{1, 2}}));
  CHECK(c.begin()->second == Scalar(1));
  CHECK(expand_in_det_basis(Polynomial(A1)).empty());
  const auto d = expand_in_det_basis(x1 * x2);
  CHECK(d.count(T({{1, 3}})) == 1);
  CHECK(reconstruct(d, 1) == x1 * x2);
  CHECK_THROWS_AS(expand_in_det_basis(Polynomial::variable(B1, {1, 0})), SpaceMismatch);
}

TEST_CASE("expansion round trip on random polynomials") {
  std::mt19937_64 rng(31);
  for (int i = 0; i < 40; ++i) {
    const int n = 1 + i % 2;
    const Polynomial p = oracle::random_polynomial(rng, VarSpace::affine(n, 0), 6, 5);
    const auto coeffs = expand_in_det_basis(p);
    for (const auto& [t, c] : coeffs) CHECK_FALSE(c.is_zero());
    CHECK(reconstruct(coeffs, n) == p);
  }
}

TEST_CASE("h0 basis sizes and checks") {
  CHECK(h0_basis(1, 2, 1).elements.size() == 4);
  CHECK(h0_basis(2, 2, 1).elements.size() == 9);
  const H0Basis b = h0_basis(1, 1, 0);
  REQUIRE(b.elements.size() == 2);
  for (const auto& e : b.elements) {
    if (e.tuple.all_empty()) {
      CHECK(e.det == Polynomial(A1, Scalar(1)));
    } else {
      CHECK(e.det == Polynomial::variable(A1, {1, 0}));
      CHECK(e.poles == std::vector<int>{1});
    }
  }
  CHECK_THROWS_AS(h0_basis(1, 3, 1), InvalidArgument);
  CHECK_THROWS_AS(h0_basis(1, 0, 0), InvalidArgument);
}

TEST_CASE("differential homogeneity") {
  const VarSpace H1 = VarSpace::homogeneous(1);
  const TupleBNPlus t = T({{1, 2}});
  CHECK(diff_homogeneous_check(determinant(build_H(t)), 3, 20, 1));
  CHECK(diff_homogeneous_check(Polynomial::variable(H1, {0, 0}), 1, 20, 1));
  CHECK_FALSE(diff_homogeneous_check(Polynomial::variable(H1, {0, 1}), 1, 20, 1));
  const Polynomial mixed_degree =
      Polynomial::variable(H1, {0, 0}) + Polynomial::variable(H1, {0, 0}).pow(2);
  CHECK_THROWS_AS(diff_homogeneous_check(mixed_degree, 1, 5, 1), InvalidArgument);
  CHECK_THROWS_AS(diff_homogeneous_check(Polynomial::variable(A1, {1, 0}), 1, 5, 1),
                  SpaceMismatch);
  // the Wronskian-type X_0 X_1' - X_1 X_0' is homogeneous of degree 2
  const Polynomial w = Polynomial::variable(H1, {0, 0}) * Polynomial::variable(H1, {1, 1}) -
                       Polynomial::variable(H1, {1, 0}) * Polynomial::variable(H1, {0, 1});
  CHECK(diff_homogeneous_check(w, 2, 20, 9));
}

TEST_CASE("exact rank") {
  CHECK(exact_rank({}) == 0);
  CHECK(exact_rank({{Scalar(1), Scalar(2)}, {Scalar(2), Scalar(4)}}) == 1);
  CHECK(exact_rank({{Scalar(0), Scalar(1)}, {Scalar(1), Scalar(0)}}) == 2);
}

TEST_CASE("upper bound from pole cancellation") {
  CHECK(upper_bound_dimension(1, 0, 2) == 1);
  CHECK(upper_bound_dimension(1, 1, 3) == 2);
  CHECK(upper_bound_dimension(1, 2, 4) == 4);
  CHECK(upper_bound_dimension(1, 3, 5) == 8);
  CHECK(upper_bound_dimension(2, 1, 3) == 3);
}

TEST_CASE("parallel map keeps index order and shares caches safely") {
  const auto ts = enumerate_degree(2, 3);
  const auto poles = parallel_map(
      ts.size(),
      [&](std::size_t i) {
        return global_section_report(det_delta0(ts[i]), ts[i].max_entry() + 1).poles;
      },
      4);
  REQUIRE(poles.size() == ts.size());
  for (std::size_t i = 0; i < ts.size(); ++i) {
    CHECK(poles[i] == global_section_report(det_delta0(ts[i]), 3).poles);
  }
  CHECK_THROWS_AS(parallel_map(
                      8,
                      [](std::size_t i) {
                        if (i == 5) throw VerificationError("boom");
                        return i;
                      },
                      3),
                  VerificationError);
}

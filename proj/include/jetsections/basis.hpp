#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "jetsections/charts.hpp"

namespace jetsections {

/// coeff * numerator / x_{jj}^pole in chart j; the numerator carries no
/// x_{jj}^{(0)} factor.
struct RationalTerm {
  VarSpace space = VarSpace::affine(1, 1);
  Monomial numerator;
  int pole = 0;
  Scalar coeff{1};

  int chart() const { return space.chart(); }
  friend bool operator==(const RationalTerm&, const RationalTerm&) = default;
};

/// Larger pole means smaller; equal poles fall back to mono_cmp on the
/// numerators. Coefficients do not take part.
std::strong_ordering rational_term_cmp(const RationalTerm& a, const RationalTerm& b);

/// Every term of a reduced section, split by the power of its denominator.
std::vector<RationalTerm> rational_terms(const RationalSection& s);
RationalTerm smallest_rational_term(const RationalSection& s);

enum class SmallestTermMode { Brute, ClosedForm };

/// Smallest term of the chart-1 image of det Delta_0(t). Brute expands and
/// minimizes; ClosedForm reads the term off the tuple.
RationalTerm smallest_rational_term(const TupleBNPlus& t, SmallestTermMode mode);

/// det Delta_0(t), computed once per tuple and shared across threads.
const Polynomial& det_delta0(const TupleBNPlus& t);

struct IndependenceResult {
  bool independent = true;
  std::optional<std::pair<TupleBNPlus, TupleBNPlus>> collision;
};

/// Are the chart-1 smallest terms pairwise distinct? Throws on duplicates.
IndependenceResult independence_check(const std::vector<TupleBNPlus>& ts);

/// Coefficients c with p = sum c[t] * det Delta_0(t), found by peeling off the
/// smallest monomial one weight class at a time.
std::map<TupleBNPlus, Scalar> expand_in_det_basis(const Polynomial& p);
Polynomial reconstruct(const std::map<TupleBNPlus, Scalar>& coeffs, int n);

struct H0Element {
  TupleBNPlus tuple;
  Polynomial det;
  std::vector<int> poles;  // charts 1..N
  RationalTerm smallest;
};

struct H0Basis {
  int n = 0;
  int d = 0;
  int k = 0;
  std::vector<H0Element> elements;
};

/// Builds the determinant family for enumerate_degree(n, d) and verifies each
/// element (poles <= d, jet order <= k) and their independence. Throws
/// VerificationError on any failure.
H0Basis h0_basis(int n, int d, int k);

/// Randomized exact test of P(jets of QX) = Q^d P(jets of X) at T = 0.
bool diff_homogeneous_check(const Polynomial& p, int d, int trials, std::uint64_t seed);

/// Rank of a dense rational matrix.
std::size_t exact_rank(std::vector<std::vector<Scalar>> rows);

/// Dimension of the space of chart-0 polynomials of weight <= max_weight whose
/// images in every chart have pole <= d, by direct linear algebra on the pole
/// cancellation conditions.
std::size_t upper_bound_dimension(int n, int d, int max_weight);

}  // namespace jetsections

#include "jetsections/basis.hpp"

#include <algorithm>
#include <mutex>
#include <random>
#include <set>

#include "jetsections/parallel.hpp"

namespace jetsections {

std::strong_ordering rational_term_cmp(const RationalTerm& a, const RationalTerm& b) {
  require_same_space(a.space, b.space, "rational_term_cmp");
  if (a.pole != b.pole) return b.pole <=> a.pole;
  return mono_cmp(a.numerator, b.numerator);
}

std::vector<RationalTerm> rational_terms(const RationalSection& s) {
  std::vector<RationalTerm> out;
  const JetVar den = s.denominator();
  for (const auto& [m, c] : s.numerator().terms()) {
    const int e = std::min(m.exponent_of(den), s.pole());
    out.push_back({s.space(), m.without(den, e), s.pole() - e, c});
  }
  return out;
}

RationalTerm smallest_rational_term(const RationalSection& s) {
  const auto terms = rational_terms(s);
  if (terms.empty()) throw InvalidArgument("smallest_rational_term: zero section");
  return *std::min_element(terms.begin(), terms.end(), [](const auto& a, const auto& b) {
    return rational_term_cmp(a, b) < 0;
  });
}

const Polynomial& det_delta0(const TupleBNPlus& t) {
  static std::mutex mutex;
  static std::map<TupleBNPlus, Polynomial> cache;
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(t); it != cache.end()) return it->second;
  }
  Polynomial det = determinant(build_delta0(t));
  std::lock_guard lock(mutex);
  return cache.emplace(t, std::move(det)).first->second;
}

namespace {

// The closed-form numerator. Block j >= 2 entries shift down by their index
// and by s_{j+1}; the y_1 part records the gaps of block 1.
RationalTerm closed_form_term(const TupleBNPlus& t) {
  const int n = t.dimension();
  const VarSpace space = VarSpace::affine(n, 1);
  if (t.all_empty()) return {space, Monomial(), 0, Scalar(1)};

  const int top = t.max_entry();
  const auto& a1 = t.block(1).entries();
  const int n1 = t.length(1);
  const int s2 = t.partial_sum(2);
  std::vector<Factor> f;
  auto block_factors = [&](int j, int count, int shift) {
    const auto& a = t.block(j).entries();
    for (int i = 0; i < count; ++i) {
      f.push_back({{j, a[static_cast<std::size_t>(i)] - i - t.partial_sum(j + 1) + shift}, 1});
    }
  };

  if (n1 > 0 && a1.back() == top) {
    for (int j = 2; j <= n; ++j) block_factors(j, t.length(j), 0);
    for (int k = 1; k < n1; ++k) {
      f.push_back({{1, k}, a1[static_cast<std::size_t>(n1 - k)] -
                               a1[static_cast<std::size_t>(n1 - k - 1)] - 1});
    }
    f.push_back({{1, n1}, a1.front() - s2});
  } else {
    int tv = 2;
    while (t.length(tv) == 0 || t.block(tv).entries().back() != top) ++tv;
    f.push_back({{tv, 0}, 1});
    for (int j = tv + 1; j <= n; ++j) block_factors(j, t.length(j), 0);
    block_factors(tv, t.length(tv) - 1, 0);
    for (int j = 2; j < tv; ++j) block_factors(j, t.length(j), 1);
    if (n1 > 0) {
      f.push_back({{1, 1}, top - a1.back() - 1});
      for (int k = 2; k <= n1; ++k) {
        f.push_back({{1, k}, a1[static_cast<std::size_t>(n1 - k + 1)] -
                                 a1[static_cast<std::size_t>(n1 - k)] - 1});
      }
      f.push_back({{1, n1 + 1}, a1.front() - s2 + 1});
    } else {
      f.push_back({{1, 1}, top - s2 + 1});
    }
  }
  for (const Factor& x : f) {
    if (x.exponent < 0 || x.var.order < 0) {
      throw VerificationError("closed form: negative index for " + t.to_string());
    }
  }
  return {space, Monomial(std::move(f)), top + 1, Scalar(0)};
}

}  // namespace

RationalTerm smallest_rational_term(const TupleBNPlus& t, SmallestTermMode mode) {
  if (t.dimension() < 1) throw InvalidArgument("smallest_rational_term: N must be >= 1");
  if (mode == SmallestTermMode::Brute) return smallest_rational_term(to_chart(det_delta0(t), 1));
  RationalTerm term = closed_form_term(t);
  if (t.all_empty()) return term;
  // The closed form fixes the term; its coefficient is read from the image.
  const RationalSection image = to_chart(det_delta0(t), 1);
  const int e = image.pole() - term.pole;
  term.coeff = e < 0 ? Scalar(0)
                     : image.numerator().coefficient(term.numerator * Monomial::of({1, 0}, e));
  return term;
}

IndependenceResult independence_check(const std::vector<TupleBNPlus>& ts) {
  {
    std::set<TupleBNPlus> seen;
    for (const auto& t : ts) {
      if (!seen.insert(t).second) {
        throw InvalidArgument("independence_check: duplicate tuple " + t.to_string());
      }
    }
  }
  const auto terms = parallel_map(ts.size(), [&](std::size_t i) {
    return smallest_rational_term(ts[i], SmallestTermMode::Brute);
  });
  std::vector<std::size_t> order(ts.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return rational_term_cmp(terms[a], terms[b]) < 0;
  });
  IndependenceResult result;
  for (std::size_t i = 1; i < order.size(); ++i) {
    if (rational_term_cmp(terms[order[i - 1]], terms[order[i]]) == 0) {
      result.independent = false;
      result.collision = std::make_pair(ts[order[i - 1]], ts[order[i]]);
      break;
    }
  }
  return result;
}

std::map<TupleBNPlus, Scalar> expand_in_det_basis(const Polynomial& p) {
  if (p.space().kind() != SpaceKind::Affine || p.space().chart() != 0) {
    throw SpaceMismatch("expand_in_det_basis: expected a chart-0 polynomial, got " +
                        p.space().describe());
  }
  const int n = p.space().dimension();
  std::map<TupleBNPlus, Scalar> coeffs;
  for (auto [w, rest] : weight_decompose(p, Grading::Weight)) {
    while (!rest.is_zero()) {
      const auto [m, c] = smallest_monomial(rest);
      TupleBNPlus t = tau_plus_inv(tuple_of(m, n));
      const Polynomial& det = det_delta0(t);
      const auto [dm, dc] = smallest_monomial(det);
      if (!(dm == m)) {
        throw VerificationError("expand_in_det_basis: det of " + t.to_string() +
                                " does not start at " + render_monomial(m, p.space()));
      }
      const Scalar factor = c / dc;
      rest -= det * factor;
      coeffs[t] += factor;
    }
  }
  return coeffs;
}

Polynomial reconstruct(const std::map<TupleBNPlus, Scalar>& coeffs, int n) {
  Polynomial sum(VarSpace::affine(n, 0));
  for (const auto& [t, c] : coeffs) sum += det_delta0(t) * c;
  return sum;
}

H0Basis h0_basis(int n, int d, int k) {
  if (n < 1) throw InvalidArgument("h0_basis: N must be >= 1");
  if (d < 1) throw InvalidArgument("h0_basis: d must be >= 1");
  if (k < d - 1) throw InvalidArgument("h0_basis: need k >= d - 1");
  const auto tuples = enumerate_degree(n, d);
  H0Basis basis{n, d, k, {}};
  basis.elements = parallel_map(tuples.size(), [&](std::size_t i) {
    const TupleBNPlus& t = tuples[i];
    const Polynomial& det = det_delta0(t);
    H0Element e{t, det, {}, RationalTerm{}};
    for (int j = 1; j <= n; ++j) {
      const RationalSection image = to_chart(det, j);
      if (image.pole() > d) {
        throw VerificationError("h0_basis: " + t.to_string() + " has a pole of order " +
                                std::to_string(image.pole()) + " in chart " +
                                std::to_string(j));
      }
      e.poles.push_back(image.pole());
      if (j == 1) e.smallest = smallest_rational_term(image);
    }
    if (det.max_order() > k) {
      throw VerificationError("h0_basis: " + t.to_string() + " uses jets of order " +
                              std::to_string(det.max_order()) + " > k");
    }
    return e;
  });
  if (basis.elements.size() != tuples.size()) throw VerificationError("h0_basis: lost elements");
  std::vector<const H0Element*> sorted;
  for (const auto& e : basis.elements) sorted.push_back(&e);
  std::sort(sorted.begin(), sorted.end(), [](const H0Element* a, const H0Element* b) {
    return rational_term_cmp(a->smallest, b->smallest) < 0;
  });
  for (std::size_t i = 1; i < sorted.size(); ++i) {
    if (rational_term_cmp(sorted[i - 1]->smallest, sorted[i]->smallest) == 0) {
      throw VerificationError("h0_basis: " + sorted[i - 1]->tuple.to_string() + " and " +
                              sorted[i]->tuple.to_string() + " share a smallest term");
    }
  }
  return basis;
}

namespace {

Scalar evaluate(const Polynomial& p, const std::function<Scalar(const JetVar&)>& value) {
  Scalar sum(0);
  for (const auto& [m, c] : p.terms()) {
    Scalar term = c;
    for (const Factor& f : m.factors()) {
      const Scalar v = value(f.var);
      for (int e = 0; e < f.exponent; ++e) term *= v;
    }
    sum += term;
  }
  return sum;
}

}  // namespace

bool diff_homogeneous_check(const Polynomial& p, int d, int trials, std::uint64_t seed) {
  if (p.space().kind() != SpaceKind::Homogeneous) {
    throw SpaceMismatch("diff_homogeneous_check: expected a homogeneous polynomial, got " +
                        p.space().describe());
  }
  if (p.is_zero()) return true;
  if (p.homogeneous_degree() != d) {
    throw InvalidArgument("diff_homogeneous_check: polynomial is not homogeneous of degree " +
                          std::to_string(d));
  }
  const int n = p.space().dimension();
  const int len = std::max(0, p.max_order()) + 2;  // coefficients of T^0..T^{L+1}
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> num(1, 9);
  std::uniform_int_distribution<long> den(1, 9);
  std::bernoulli_distribution negative(0.5);
  auto draw = [&] {
    std::vector<Scalar> c;
    for (int i = 0; i < len; ++i) {
      c.emplace_back(negative(rng) ? -num(rng) : num(rng), den(rng));
    }
    return c;
  };
  std::vector<Scalar> fact;
  for (int l = 0; l < len; ++l) fact.push_back(factorial(l));

  for (int trial = 0; trial < trials; ++trial) {
    std::vector<std::vector<Scalar>> x;
    for (int i = 0; i <= n; ++i) x.push_back(draw());
    const std::vector<Scalar> q = draw();
    std::vector<std::vector<Scalar>> qx(x.size(), std::vector<Scalar>(len));
    for (std::size_t i = 0; i < x.size(); ++i) {
      for (int a = 0; a < len; ++a) {
        for (int b = 0; a + b < len; ++b) {
          qx[i][static_cast<std::size_t>(a + b)] +=
              q[static_cast<std::size_t>(a)] * x[i][static_cast<std::size_t>(b)];
        }
      }
    }
    // l-th jet at T = 0 is l! times the T^l coefficient.
    auto jets = [&](const std::vector<std::vector<Scalar>>& curve) {
      return [&](const JetVar& v) {
        return fact[static_cast<std::size_t>(v.order)] *
               curve[static_cast<std::size_t>(v.coord)][static_cast<std::size_t>(v.order)];
      };
    };
    Scalar scale(1);
    for (int e = 0; e < d; ++e) scale *= q[0];
    if (evaluate(p, jets(qx)) != scale * evaluate(p, jets(x))) return false;
  }
  return true;
}

std::size_t exact_rank(std::vector<std::vector<Scalar>> rows) {
  std::size_t rank = 0;
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][c].is_zero()) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    for (std::size_t r = rank + 1; r < rows.size(); ++r) {
      if (rows[r][c].is_zero()) continue;
      const Scalar f = rows[r][c] / rows[rank][c];
      for (std::size_t k = c; k < cols; ++k) rows[r][k] -= f * rows[rank][k];
    }
    ++rank;
  }
  return rank;
}

namespace {

void monomials_up_to(const std::vector<JetVar>& vars, std::size_t at, int budget,
                     std::vector<Factor>& current, std::vector<Monomial>& out) {
  if (at == vars.size()) {
    out.emplace_back(current);
    return;
  }
  const int w = vars[at].order + 1;
  for (int e = 0; e * w <= budget; ++e) {
    if (e > 0) current.push_back({vars[at], e});
    monomials_up_to(vars, at + 1, budget - e * w, current, out);
    if (e > 0) current.pop_back();
  }
}

}  // namespace

std::size_t upper_bound_dimension(int n, int d, int max_weight) {
  if (n < 1 || d < 0 || max_weight < 0) {
    throw InvalidArgument("upper_bound_dimension: bad parameters");
  }
  const VarSpace chart0 = VarSpace::affine(n, 0);
  std::vector<JetVar> vars;
  for (int c = 1; c <= n; ++c) {
    for (int l = 0; l < max_weight; ++l) vars.push_back({c, l});
  }
  std::vector<Monomial> columns;
  std::vector<Factor> scratch;
  monomials_up_to(vars, 0, max_weight, scratch, columns);

  // One row per (chart, numerator monomial) whose pole over x^{max_weight}
  // would exceed d.
  std::map<std::pair<int, Monomial>, std::vector<Scalar>, bool (*)(const std::pair<int, Monomial>&,
                                                                  const std::pair<int, Monomial>&)>
      rows([](const std::pair<int, Monomial>& a, const std::pair<int, Monomial>& b) {
        if (a.first != b.first) return a.first < b.first;
        return mono_cmp(a.second, b.second) < 0;
      });
  for (std::size_t col = 0; col < columns.size(); ++col) {
    const Polynomial m(chart0, columns[col]);
    for (int j = 1; j <= n; ++j) {
      const RationalSection image = to_chart(m, j);
      const JetVar den = image.denominator();
      const int lift = max_weight - image.pole();
      for (const auto& [mu, c] : image.numerator().terms()) {
        const int e = mu.exponent_of(den) + lift;
        if (max_weight - e <= d) continue;
        auto& row = rows[{j, mu * Monomial::of(den, lift)}];
        if (row.empty()) row.assign(columns.size(), Scalar(0));
        row[col] += c;
      }
    }
  }
  std::vector<std::vector<Scalar>> matrix;
  for (auto& [key, row] : rows) matrix.push_back(std::move(row));
  return columns.size() - exact_rank(std::move(matrix));
}

}  // namespace jetsections

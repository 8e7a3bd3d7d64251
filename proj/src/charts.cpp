#include "jetsections/charts.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <tuple>

namespace jetsections {

RationalSection::RationalSection(Polynomial numerator, int denominator_coord, int pole)
    : numerator_(std::move(numerator)), denominator_(denominator_coord), pole_(pole) {
  const VarSpace& s = numerator_.space();
  if (s.kind() != SpaceKind::Affine) {
    throw SpaceMismatch("RationalSection: numerator must live in an affine chart");
  }
  if (!s.valid_coord(denominator_)) {
    throw InvalidArgument("RationalSection: denominator coordinate outside " + s.describe());
  }
  if (pole_ < 0) throw InvalidArgument("RationalSection: negative pole");
  if (pole_ > 0) {
    const JetVar den{denominator_, 0};
    const bool divisible = std::all_of(
        numerator_.terms().begin(), numerator_.terms().end(),
        [&](const auto& term) { return term.first.exponent_of(den) > 0; });
    if (divisible) throw InvalidArgument("RationalSection: fraction is not reduced");
  }
}

namespace {

// Chart-`to` numerator P_l of D^l(u / v) = P_l / v^{l+1}, where u / v is
// coordinate c of chart `from`. Shared across calls and threads.
class ImageCache {
 public:
  Polynomial get(int n, int from, int to, int coord, int order) {
    const Key key{n, from, to, coord, order};
    {
      std::lock_guard lock(mutex_);
      if (auto it = cache_.find(key); it != cache_.end()) return it->second;
    }
    Polynomial p = compute(n, from, to, coord, order);
    std::lock_guard lock(mutex_);
    return cache_.emplace(key, std::move(p)).first->second;
  }

 private:
  using Key = std::tuple<int, int, int, int, int>;

  Polynomial compute(int n, int from, int to, int coord, int order) {
    const VarSpace space = VarSpace::affine(n, to);
    const int den = from == 0 ? to : from;
    if (order == 0) {
      // coordinate `coord` of chart `from` is X_h / X_from
      const int h = coord == from ? 0 : coord;
      if (h == to) return Polynomial(space, Scalar(1));
      return Polynomial::variable(space, {h == 0 ? to : h, 0});
    }
    const Polynomial prev = get(n, from, to, coord, order - 1);
    const Polynomial v = Polynomial::variable(space, {den, 0});
    const Polynomial dv = Polynomial::variable(space, {den, 1});
    return differentiate(prev) * v - prev * dv * Scalar(order);
  }

  std::mutex mutex_;
  std::map<Key, Polynomial> cache_;
};

ImageCache& image_cache() {
  static ImageCache cache;
  return cache;
}

void require_affine(const Polynomial& p, const char* what) {
  if (p.space().kind() != SpaceKind::Affine) {
    throw SpaceMismatch(std::string(what) + ": expected an affine polynomial, got " +
                        p.space().describe());
  }
}

}  // namespace

RationalSection change_chart(const Polynomial& p, int to) {
  require_affine(p, "change_chart");
  const int n = p.space().dimension();
  const int from = p.space().chart();
  if (to < 0 || to > n) {
    throw InvalidArgument("change_chart: chart " + std::to_string(to) + " outside [0, " +
                          std::to_string(n) + "]");
  }
  const VarSpace target = VarSpace::affine(n, to);
  if (from == to) return RationalSection(p, to == 0 ? 1 : to, 0);
  const int den = from == 0 ? to : from;
  if (p.is_zero()) return RationalSection(Polynomial(target), den, 0);

  int top = 0;
  for (const auto& [m, c] : p.terms()) top = std::max(top, weight(m));

  const Polynomial v = Polynomial::variable(target, {den, 0});
  Polynomial numerator(target);
  for (const auto& [m, c] : p.terms()) {
    Polynomial image(target, Scalar(1));
    for (const Factor& f : m.factors()) {
      image = image * image_cache().get(n, from, to, f.var.coord, f.var.order).pow(f.exponent);
    }
    image = image * Monomial::of({den, 0}, top - weight(m));
    numerator += image * c;
  }

  const JetVar dv{den, 0};
  int common = top;
  for (const auto& [m, c] : numerator.terms()) common = std::min(common, m.exponent_of(dv));
  if (numerator.is_zero()) return RationalSection(Polynomial(target), den, 0);
  if (common > 0) {
    Polynomial reduced(target);
    for (const auto& [m, c] : numerator.terms()) reduced.add_term(m.without(dv, common), c);
    numerator = std::move(reduced);
  }
  return RationalSection(std::move(numerator), den, top - common);
}

RationalSection to_chart(const Polynomial& p, int j) {
  require_affine(p, "to_chart");
  if (p.space().chart() != 0) {
    throw SpaceMismatch("to_chart: expected a chart-0 polynomial, got " + p.space().describe());
  }
  if (j < 1 || j > p.space().dimension()) {
    throw InvalidArgument("to_chart: chart " + std::to_string(j) + " outside [1, " +
                          std::to_string(p.space().dimension()) + "]");
  }
  return change_chart(p, j);
}

int pole_order(const Polynomial& p, int j) { return to_chart(p, j).pole(); }

GlobalSectionReport global_section_report(const Polynomial& p, int d) {
  GlobalSectionReport report;
  for (int j = 1; j <= p.space().dimension(); ++j) {
    report.poles.push_back(pole_order(p, j));
    if (report.poles.back() > d) report.global = false;
  }
  return report;
}

bool is_global_section(const Polynomial& p, int d) { return global_section_report(p, d).global; }

PoleExceedsTwist::PoleExceedsTwist(int pole, int twist, int chart)
    : VerificationError("pole of order " + std::to_string(pole) + " in chart " +
                        std::to_string(chart) + " exceeds twist " + std::to_string(twist)),
      pole_(pole),
      twist_(twist),
      chart_(chart) {}

Polynomial twisted_transport(const Polynomial& p, int to, int d) {
  if (d < 0) throw InvalidArgument("twisted_transport: negative twist");
  const RationalSection r = change_chart(p, to);
  if (r.pole() > d) throw PoleExceedsTwist(r.pole(), d, to);
  return r.numerator() * Monomial::of(r.denominator(), d - r.pole());
}

int verify_main3(const TupleBNPlus& t, int j) {
  const int n = t.dimension();
  if (j < 0 || j > n) {
    throw InvalidArgument("verify_main3: chart " + std::to_string(j) + " outside [0, " +
                          std::to_string(n) + "]");
  }
  const JetMatrix h = build_H(t);
  const VarSpace mixed = VarSpace::mixed(n, j);
  auto image = [&](const JetVar& v) {
    if (v.coord == j) return Polynomial::variable(mixed, {0, v.order});
    const int c = v.coord == 0 ? j : v.coord;
    Polynomial sum(mixed);
    for (int q = 0; q <= v.order; ++q) {
      sum.add_term(Monomial({{{c, q}, 1}, {{0, v.order - q}, 1}}), binom(v.order, q));
    }
    return sum;
  };
  PolyMatrix sub(mixed, h.size());
  for (int r = 0; r < h.size(); ++r) {
    for (int c = 0; c < h.size(); ++c) {
      const JetCell& cell = h.at(r, c);
      if (cell) sub.set(r, c, image(cell->var) * cell->coeff);
    }
  }
  const Polynomial lhs = determinant(sub);
  const Polynomial rhs = determinant(build_delta_j(t, j)).relabel(mixed) *
                         Monomial::of({0, 0}, t.max_entry() + 1);
  if (lhs == rhs) return 1;
  if (lhs == -rhs) return -1;
  throw VerificationError("verify_main3 failed for " + t.to_string() + " in chart " +
                          std::to_string(j) + ": residual " + (lhs - rhs).to_string());
}

}  // namespace jetsections

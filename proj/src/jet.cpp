#include "jetsections/jet.hpp"

#include <algorithm>

#include "jetsections/error.hpp"

namespace jetsections {

VarSpace VarSpace::affine(int n, int chart) {
  if (n < 1) throw InvalidArgument("VarSpace: dimension must be >= 1");
  if (chart < 0 || chart > n) {
    throw InvalidArgument("VarSpace: chart " + std::to_string(chart) + " outside [0, " +
                          std::to_string(n) + "]");
  }
  return {SpaceKind::Affine, n, chart};
}

VarSpace VarSpace::homogeneous(int n) {
  if (n < 1) throw InvalidArgument("VarSpace: dimension must be >= 1");
  return {SpaceKind::Homogeneous, n, -1};
}

VarSpace VarSpace::mixed(int n, int chart) {
  VarSpace s = affine(n, chart);
  s.kind_ = SpaceKind::Mixed;
  return s;
}

bool VarSpace::valid_coord(int coord) const { return coord >= min_coord() && coord <= n_; }

std::string VarSpace::describe() const {
  switch (kind_) {
    case SpaceKind::Affine:
      return "affine(N=" + std::to_string(n_) + ", chart=" + std::to_string(chart_) + ")";
    case SpaceKind::Homogeneous:
      return "homogeneous(N=" + std::to_string(n_) + ")";
    case SpaceKind::Mixed:
      return "mixed(N=" + std::to_string(n_) + ", chart=" + std::to_string(chart_) + ")";
  }
  return "?";
}

void require_same_space(const VarSpace& a, const VarSpace& b, const char* what) {
  if (!(a == b)) {
    throw SpaceMismatch(std::string(what) + ": " + a.describe() + " vs " + b.describe());
  }
}

std::strong_ordering var_cmp(const JetVar& a, const JetVar& b, const VarSpace& space) {
  for (const JetVar* v : {&a, &b}) {
    if (!space.valid_coord(v->coord) || v->order < 0) {
      throw SpaceMismatch("var_cmp: variable (" + std::to_string(v->coord) + ", " +
                          std::to_string(v->order) + ") not in " + space.describe());
    }
  }
  return var_order(a, b);
}

Monomial::Monomial(std::vector<Factor> factors) {
  std::sort(factors.begin(), factors.end(),
            [](const Factor& a, const Factor& b) { return var_order(a.var, b.var) > 0; });
  for (const Factor& f : factors) {
    if (f.exponent < 0) throw InvalidArgument("Monomial: negative exponent");
    if (f.var.order < 0) throw InvalidArgument("Monomial: negative derivative order");
    if (f.exponent == 0) continue;
    if (!factors_.empty() && factors_.back().var == f.var) {
      factors_.back().exponent += f.exponent;
    } else {
      factors_.push_back(f);
    }
  }
}

int Monomial::degree() const {
  int d = 0;
  for (const Factor& f : factors_) d += f.exponent;
  return d;
}

int Monomial::exponent_of(const JetVar& v) const {
  for (const Factor& f : factors_) {
    if (f.var == v) return f.exponent;
  }
  return 0;
}

int Monomial::max_order() const {
  int m = -1;
  for (const Factor& f : factors_) m = std::max(m, f.var.order);
  return m;
}

Monomial Monomial::without(const JetVar& v, int e) const {
  if (e == 0) return *this;
  Monomial out;
  bool found = false;
  for (const Factor& f : factors_) {
    if (f.var == v) {
      if (f.exponent < e) break;
      found = true;
      if (f.exponent > e) out.factors_.push_back({f.var, f.exponent - e});
    } else {
      out.factors_.push_back(f);
    }
  }
  if (!found) throw InvalidArgument("Monomial::without: not divisible");
  return out;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial out;
  out.factors_.reserve(a.factors_.size() + b.factors_.size());
  auto ia = a.factors_.begin();
  auto ib = b.factors_.begin();
  while (ia != a.factors_.end() || ib != b.factors_.end()) {
    if (ib == b.factors_.end() ||
        (ia != a.factors_.end() && var_order(ia->var, ib->var) > 0)) {
      out.factors_.push_back(*ia++);
    } else if (ia == a.factors_.end() || var_order(ia->var, ib->var) < 0) {
      out.factors_.push_back(*ib++);
    } else {
      out.factors_.push_back({ia->var, ia->exponent + ib->exponent});
      ++ia;
      ++ib;
    }
  }
  return out;
}

std::strong_ordering mono_cmp(const Monomial& a, const Monomial& b) {
  const auto& fa = a.factors();
  const auto& fb = b.factors();
  std::size_t i = 0;
  std::size_t j = 0;
  int left_a = fa.empty() ? 0 : fa[0].exponent;
  int left_b = fb.empty() ? 0 : fb[0].exponent;
  while (i < fa.size() && j < fb.size()) {
    auto c = var_order(fa[i].var, fb[j].var);
    if (c != 0) return c;
    const int step = std::min(left_a, left_b);
    left_a -= step;
    left_b -= step;
    if (left_a == 0 && ++i < fa.size()) left_a = fa[i].exponent;
    if (left_b == 0 && ++j < fb.size()) left_b = fb[j].exponent;
  }
  const bool a_done = i >= fa.size();
  const bool b_done = j >= fb.size();
  if (a_done && b_done) return std::strong_ordering::equal;
  return a_done ? std::strong_ordering::less : std::strong_ordering::greater;
}

int weight(const Monomial& m) {
  int w = 0;
  for (const Factor& f : m.factors()) w += f.exponent * (f.var.order + 1);
  return w;
}

int gg_weight(const Monomial& m) {
  int w = 0;
  for (const Factor& f : m.factors()) w += f.exponent * f.var.order;
  return w;
}

std::string render_var(const JetVar& v, const VarSpace& space) {
  std::string out;
  if (space.kind() == SpaceKind::Homogeneous) {
    out = "X[" + std::to_string(v.coord) + "]";
  } else if (space.kind() == SpaceKind::Mixed && v.coord == 0) {
    out = "X[" + std::to_string(space.chart()) + "]";
  } else {
    out = "x[" + std::to_string(v.coord) + "]";
  }
  if (v.order > 0) out += "^(" + std::to_string(v.order) + ")";
  return out;
}

std::string render_monomial(const Monomial& m, const VarSpace& space) {
  if (m.is_one()) return "1";
  std::string out;
  const auto& fs = m.factors();
  for (auto it = fs.rbegin(); it != fs.rend(); ++it) {
    if (!out.empty()) out += "*";
    out += render_var(it->var, space);
    if (it->exponent > 1) out += "^" + std::to_string(it->exponent);
  }
  return out;
}

}  // namespace jetsections

#include "jetsections/polynomial.hpp"

#include <algorithm>
#include <unordered_map>

#include "jetsections/error.hpp"

namespace jetsections {

namespace {

void check_monomial(const Monomial& m, const VarSpace& space) {
  for (const Factor& f : m.factors()) {
    if (!space.valid_coord(f.var.coord)) {
      throw SpaceMismatch("coordinate " + std::to_string(f.var.coord) + " not in " +
                          space.describe());
    }
  }
}

}  // namespace

Polynomial::Polynomial(VarSpace space, const Scalar& constant) : space_(space) {
  if (!constant.is_zero()) terms_.emplace(Monomial(), constant);
}

Polynomial::Polynomial(VarSpace space, const Monomial& m, const Scalar& coeff) : space_(space) {
  check_monomial(m, space_);
  if (!coeff.is_zero()) terms_.emplace(m, coeff);
}

Polynomial Polynomial::variable(VarSpace space, JetVar v, const Scalar& coeff) {
  return Polynomial(space, Monomial::of(v), coeff);
}

Scalar Polynomial::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Scalar(0) : it->second;
}

void Polynomial::add_term(const Monomial& m, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (inserted) {
    check_monomial(m, space_);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
  require_same_space(space_, rhs.space_, "polynomial addition");
  for (const auto& [m, c] : rhs.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
  require_same_space(space_, rhs.space_, "polynomial subtraction");
  for (const auto& [m, c] : rhs.terms_) add_term(m, -c);
  return *this;
}

Polynomial& Polynomial::operator*=(const Scalar& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, coeff] : terms_) coeff *= c;
  return *this;
}

Polynomial Polynomial::operator-() const {
  Polynomial out = *this;
  for (auto& [m, coeff] : out.terms_) coeff = -coeff;
  return out;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  require_same_space(a.space_, b.space_, "polynomial multiplication");
  Polynomial out(a.space_);
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      auto [it, inserted] = out.terms_.try_emplace(ma * mb, ca * cb);
      if (!inserted) {
        it->second += ca * cb;
        if (it->second.is_zero()) out.terms_.erase(it);
      }
    }
  }
  return out;
}

Polynomial operator*(const Polynomial& a, const Monomial& m) {
  check_monomial(m, a.space_);
  Polynomial out(a.space_);
  for (const auto& [ma, ca] : a.terms_) out.terms_.emplace_hint(out.terms_.end(), ma * m, ca);
  return out;
}

Polynomial Polynomial::pow(int e) const {
  if (e < 0) throw InvalidArgument("Polynomial::pow: negative exponent");
  Polynomial result(space_, Scalar(1));
  Polynomial base = *this;
  while (e > 0) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return result;
}

Polynomial Polynomial::relabel(VarSpace target) const {
  Polynomial out(target);
  for (const auto& [m, c] : terms_) {
    check_monomial(m, target);
    out.terms_.emplace_hint(out.terms_.end(), m, c);
  }
  return out;
}

int Polynomial::max_order() const {
  int m = -1;
  for (const auto& [mono, c] : terms_) m = std::max(m, mono.max_order());
  return m;
}

int Polynomial::homogeneous_degree() const {
  if (terms_.empty()) return 0;
  const int d = terms_.begin()->first.degree();
  for (const auto& [m, c] : terms_) {
    if (m.degree() != d) return -1;
  }
  return d;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    Scalar mag = c.sign() < 0 ? -c : c;
    if (first) {
      if (c.sign() < 0) out += "-";
    } else {
      out += c.sign() < 0 ? " - " : " + ";
    }
    first = false;
    if (m.is_one()) {
      out += mag.to_string();
    } else {
      if (!mag.is_one()) out += mag.to_string() + "*";
      out += render_monomial(m, space_);
    }
  }
  return out;
}

Polynomial differentiate(const Polynomial& p) {
  Polynomial out(p.space());
  for (const auto& [m, c] : p.terms()) {
    for (const Factor& f : m.factors()) {
      Monomial rest = m.without(f.var, 1);
      out.add_term(rest * Monomial::of(f.var.derivative()), c * Scalar(f.exponent));
    }
  }
  return out;
}

std::pair<Monomial, Scalar> smallest_monomial(const Polynomial& p) {
  if (p.is_zero()) throw InvalidArgument("smallest_monomial: zero polynomial");
  return *p.terms().begin();
}

std::map<int, Polynomial> weight_decompose(const Polynomial& p, Grading mode) {
  std::map<int, Polynomial> out;
  for (const auto& [m, c] : p.terms()) {
    const int w = mode == Grading::Weight ? weight(m) : gg_weight(m);
    out.try_emplace(w, p.space()).first->second.add_term(m, c);
  }
  return out;
}

Polynomial substitute(const Polynomial& p, const VarSpace& target,
                      const std::function<Polynomial(const JetVar&)>& image) {
  std::unordered_map<JetVar, std::vector<Polynomial>, JetVarHash> powers;
  auto power_of = [&](const JetVar& v, int e) -> const Polynomial& {
    auto& table = powers[v];
    if (table.empty()) {
      table.emplace_back(target, Scalar(1));
      Polynomial img = image(v);
      require_same_space(img.space(), target, "substitute");
      table.push_back(std::move(img));
    }
    while (static_cast<int>(table.size()) <= e) table.push_back(table.back() * table[1]);
    return table[e];
  };
  Polynomial out(target);
  for (const auto& [m, c] : p.terms()) {
    Polynomial term(target, c);
    for (const Factor& f : m.factors()) term = term * power_of(f.var, f.exponent);
    out += term;
  }
  return out;
}

}  // namespace jetsections

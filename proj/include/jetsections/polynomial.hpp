#pragma once

#include <functional>
#include <map>
#include <string>
#include <utility>

#include "jetsections/jet.hpp"
#include "jetsections/scalar.hpp"

namespace jetsections {

/// Sparse polynomial in jet variables with exact rational coefficients.
/// Terms are kept in increasing monomial order and never hold a zero
/// coefficient, so begin() is always the smallest monomial.
class Polynomial {
 public:
  using TermMap = std::map<Monomial, Scalar, MonoLess>;

  explicit Polynomial(VarSpace space) : space_(space) {}
  Polynomial(VarSpace space, const Scalar& constant);
  Polynomial(VarSpace space, const Monomial& m, const Scalar& coeff = Scalar(1));
  static Polynomial variable(VarSpace space, JetVar v, const Scalar& coeff = Scalar(1));

  const VarSpace& space() const { return space_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  Scalar coefficient(const Monomial& m) const;

  /// Adds c * m in place.
  void add_term(const Monomial& m, const Scalar& c);

  Polynomial& operator+=(const Polynomial& rhs);
  Polynomial& operator-=(const Polynomial& rhs);
  Polynomial& operator*=(const Scalar& c);
  Polynomial operator-() const;

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const Scalar& c) { return a *= c; }
  friend Polynomial operator*(const Scalar& c, Polynomial a) { return a *= c; }
  friend Polynomial operator*(const Polynomial& a, const Monomial& m);

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.space_ == b.space_ && a.terms_ == b.terms_;
  }

  Polynomial pow(int e) const;

  /// Same terms, reinterpreted in another space (coordinates must be valid there).
  Polynomial relabel(VarSpace target) const;

  /// Largest derivative order present; -1 for constants and zero.
  int max_order() const;
  /// Total degree if every term has the same degree, else -1 (zero -> 0).
  int homogeneous_degree() const;

  std::string to_string() const;

 private:
  VarSpace space_;
  TermMap terms_;
};

/// Formal total derivative: D(chi^{(l)}) = chi^{(l+1)}, extended by Leibniz.
Polynomial differentiate(const Polynomial& p);

/// The smallest monomial of p and its coefficient. Throws on zero.
std::pair<Monomial, Scalar> smallest_monomial(const Polynomial& p);

enum class Grading { Weight, GGWeight };

/// Splits p into homogeneous components of the chosen grading.
std::map<int, Polynomial> weight_decompose(const Polynomial& p, Grading mode);

/// Replaces every variable v of p by image(v), a polynomial in `target`.
/// Images are computed once per distinct variable.
Polynomial substitute(const Polynomial& p, const VarSpace& target,
                      const std::function<Polynomial(const JetVar&)>& image);

}  // namespace jetsections

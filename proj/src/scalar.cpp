#include "jetsections/scalar.hpp"

#include <cctype>

#include "jetsections/error.hpp"

namespace jetsections {

Scalar::Scalar(long num, long den) {
  if (den == 0) throw InvalidArgument("Scalar: zero denominator");
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

Scalar::Scalar(mpq_class value) : value_(std::move(value)) { value_.canonicalize(); }

Scalar Scalar::parse(std::string_view text) {
  std::string s(text);
  std::size_t slash = s.find('/');
  auto digits_ok = [](std::string_view part, bool allow_sign) {
    if (part.empty()) return false;
    std::size_t i = 0;
    if (allow_sign && (part[0] == '-' || part[0] == '+')) i = 1;
    if (i == part.size()) return false;
    for (; i < part.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(part[i]))) return false;
    }
    return true;
  };
  std::string_view num = std::string_view(s).substr(0, slash);
  std::string_view den = slash == std::string::npos ? std::string_view("1")
                                                    : std::string_view(s).substr(slash + 1);
  if (!digits_ok(num, true) || !digits_ok(den, false)) {
    throw InvalidArgument("Scalar: cannot parse '" + s + "'");
  }
  std::string num_s(num);
  if (num_s[0] == '+') num_s.erase(0, 1);
  mpz_class n(num_s, 10);
  mpz_class d(std::string(den), 10);
  if (d == 0) throw InvalidArgument("Scalar: zero denominator in '" + s + "'");
  mpq_class q(n, d);
  q.canonicalize();
  return Scalar(std::move(q));
}

std::string Scalar::to_string() const { return value_.get_str(10); }

Scalar& Scalar::operator+=(const Scalar& rhs) {
  value_ += rhs.value_;
  return *this;
}
Scalar& Scalar::operator-=(const Scalar& rhs) {
  value_ -= rhs.value_;
  return *this;
}
Scalar& Scalar::operator*=(const Scalar& rhs) {
  value_ *= rhs.value_;
  return *this;
}
Scalar& Scalar::operator/=(const Scalar& rhs) {
  if (rhs.is_zero()) throw InvalidArgument("Scalar: division by zero");
  value_ /= rhs.value_;
  return *this;
}

Scalar binom(long n, long k) {
  if (k <= -1 || n + 1 <= k) return Scalar(0);
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return Scalar(mpq_class(r));
}

Scalar factorial(long n) {
  if (n < 0) throw InvalidArgument("factorial of a negative integer");
  mpz_class r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return Scalar(mpq_class(r));
}

}  // namespace jetsections

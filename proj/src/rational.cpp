#include "ncalc/rational.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>

namespace ncalc {

Rational::Rational(long num, long den) : v_(num, den) {
  if (den == 0) throw std::invalid_argument("Rational: zero denominator");
  v_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::invalid_argument("Rational: division by zero");
  v_ /= o.v_;
  return *this;
}

std::optional<Rational> Rational::parse(std::string_view s) {
  // Strict format: -?digits(/digits)?, denominator nonzero.
  auto all_digits = [](std::string_view t) {
    if (t.empty()) return false;
    for (char c : t)
      if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
  };

  std::string_view num = s, den;
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    num = s.substr(0, slash);
    den = s.substr(slash + 1);
  }
  bool neg = false;
  if (!num.empty() && (num.front() == '-' || num.front() == '+')) {
    neg = num.front() == '-';
    num.remove_prefix(1);
  }
  if (!all_digits(num)) return std::nullopt;
  mpz_class n(std::string(num), 10);
  if (neg) n = -n;

  mpz_class d(1);
  if (!den.empty() || s.find('/') != std::string_view::npos) {
    if (!all_digits(den)) return std::nullopt;
    d = mpz_class(std::string(den), 10);
    if (d == 0) return std::nullopt;
  }
  mpq_class q(n, d);
  q.canonicalize();
  return Rational(std::move(q));
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace ncalc

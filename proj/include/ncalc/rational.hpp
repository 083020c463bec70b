#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <utility>

namespace ncalc {

/// Exact rational scalar, always in canonical form: gcd(|num|, den) = 1 and
/// den > 0. Arbitrary precision, backed by GMP.
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(long n) : v_(n, 1) {}  // NOLINT: implicit by design, scalars appear everywhere
  Rational(long num, long den);

  /// Accepts "p" or "p/q" with optional leading '-' (no whitespace, q > 0 after
  /// sign normalization is enforced by canonicalization; "p/0" is rejected).
  static std::optional<Rational> parse(std::string_view s);

  std::string str() const { return v_.get_str(); }

  bool is_zero() const { return mpq_sgn(v_.get_mpq_t()) == 0; }
  bool is_one() const { return mpq_cmp_si(v_.get_mpq_t(), 1, 1) == 0; }
  int sign() const { return mpq_sgn(v_.get_mpq_t()); }

  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o);

  /// this += a * b without materializing a temporary Rational at the call site.
  void add_mul(const Rational& a, const Rational& b) { v_ += a.v_ * b.v_; }
  void sub_mul(const Rational& a, const Rational& b) { v_ -= a.v_ * b.v_; }

  friend Rational operator+(Rational a, const Rational& b) { a += b; return a; }
  friend Rational operator-(Rational a, const Rational& b) { a -= b; return a; }
  friend Rational operator*(Rational a, const Rational& b) { a *= b; return a; }
  friend Rational operator/(Rational a, const Rational& b) { a /= b; return a; }
  friend Rational operator-(const Rational& a) { Rational r; r.v_ = -a.v_; return r; }

  friend bool operator==(const Rational& a, const Rational& b) { return mpq_equal(a.v_.get_mpq_t(), b.v_.get_mpq_t()) != 0; }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b) { return mpq_cmp(a.v_.get_mpq_t(), b.v_.get_mpq_t()) < 0; }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r);

 private:
  explicit Rational(mpq_class v) : v_(std::move(v)) {}
  mpq_class v_;
};

}  // namespace ncalc

#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

namespace reclab {

using Int = long long;

/// Arbitrary-precision rational, always stored in lowest terms with a
/// positive denominator. Arithmetic is exact; dividing by zero throws
/// std::domain_error instead of invoking GMP's SIGFPE behaviour.
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(Int n) : v_(static_cast<long>(n)) {}  // NOLINT(google-explicit-constructor)
  Rational(int n) : v_(n) {}                     // NOLINT(google-explicit-constructor)

  Rational(Int num, Int den) {
    if (den == 0) throw std::domain_error("Rational: zero denominator");
    v_ = mpq_class(static_cast<long>(num), static_cast<long>(den));
    v_.canonicalize();
  }

  explicit Rational(const mpz_class& num, const mpz_class& den = 1) {
    if (den == 0) throw std::domain_error("Rational: zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
  }

  explicit Rational(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

  /// Parses "p/q" or "p" (decimal, optional leading sign). Throws
  /// std::invalid_argument on malformed input or a zero denominator.
  static Rational from_string(std::string_view s);

  const mpq_class& raw() const { return v_; }
  mpz_class numerator() const { return v_.get_num(); }
  mpz_class denominator() const { return v_.get_den(); }

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const { return sgn(v_); }

  /// Largest integer <= *this.
  mpz_class floor() const {
    mpz_class q;
    mpz_fdiv_q(q.get_mpz_t(), v_.get_num_mpz_t(), v_.get_den_mpz_t());
    return q;
  }

  /// Integer power with the 0^0 = 1 convention. Throws for 0^negative.
  Rational pow(long e) const;

  Rational operator-() const { return Rational(mpq_class(-v_)); }

  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("Rational: division by zero");
    v_ /= o.v_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { a += b; return a; }
  friend Rational operator-(Rational a, const Rational& b) { a -= b; return a; }
  friend Rational operator*(Rational a, const Rational& b) { a *= b; return a; }
  friend Rational operator/(Rational a, const Rational& b) { a /= b; return a; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return mpq_equal(a.v_.get_mpq_t(), b.v_.get_mpq_t()) != 0;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    int c = mpq_cmp(a.v_.get_mpq_t(), b.v_.get_mpq_t());
    return c <=> 0;
  }

  /// Lowest-terms decimal form: "p/q", or "p" when q = 1.
  std::string str() const;

 private:
  mpq_class v_;
};

Rational abs(const Rational& r);

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace reclab

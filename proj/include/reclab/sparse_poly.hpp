#pragma once

#include <map>
#include <string>

#include "reclab/rational.hpp"

namespace reclab {

/// Sparse exact polynomial in q with nonnegative integer exponents.
/// No zero coefficients are ever stored, so operator== is term-wise.
class SparsePoly {
 public:
  SparsePoly() = default;

  static SparsePoly monomial(Int exponent, const Rational& coeff);
  /// q^m - 1.
  static SparsePoly power_minus_one(Int m);

  void add_term(Int exponent, const Rational& coeff);

  SparsePoly& operator+=(const SparsePoly& o);
  SparsePoly& operator-=(const SparsePoly& o);
  friend SparsePoly operator+(SparsePoly a, const SparsePoly& b) { a += b; return a; }
  friend SparsePoly operator-(SparsePoly a, const SparsePoly& b) { a -= b; return a; }
  SparsePoly operator*(const SparsePoly& o) const;
  SparsePoly operator*(const Rational& c) const;

  friend bool operator==(const SparsePoly& a, const SparsePoly& b) { return a.terms_ == b.terms_; }

  bool is_zero() const { return terms_.empty(); }
  size_t term_count() const { return terms_.size(); }
  Rational coeff(Int exponent) const;
  const std::map<Int, Rational>& terms() const { return terms_; }

  /// JSON object {"exponent":"coefficient"} with decimal string keys, in
  /// increasing exponent order.
  std::string to_json() const;

 private:
  std::map<Int, Rational> terms_;
};

}  // namespace reclab

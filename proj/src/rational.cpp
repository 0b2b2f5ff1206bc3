#include "reclab/rational.hpp"

#include <cctype>
#include <ostream>

namespace reclab {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

Rational Rational::from_string(std::string_view s) {
  std::string_view num = s, den;
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    num = s.substr(0, slash);
    den = s.substr(slash + 1);
  }
  std::string_view digits = num;
  bool negative = false;
  if (!digits.empty() && (digits[0] == '+' || digits[0] == '-')) {
    negative = digits[0] == '-';
    digits.remove_prefix(1);
  }
  if (!all_digits(digits)) throw std::invalid_argument("malformed rational: '" + std::string(s) + "'");
  mpz_class n(std::string(digits), 10);
  if (negative) n = -n;
  mpz_class d(1);
  if (den.data() != nullptr) {
    if (!all_digits(den)) throw std::invalid_argument("malformed rational: '" + std::string(s) + "'");
    d = mpz_class(std::string(den), 10);
    if (d == 0) throw std::invalid_argument("malformed rational (zero denominator): '" + std::string(s) + "'");
  }
  return Rational(n, d);
}

Rational Rational::pow(long e) const {
  if (e == 0) return Rational(1);
  if (is_zero()) {
    if (e < 0) throw std::domain_error("Rational: 0 raised to a negative power");
    return Rational(0);
  }
  mpz_class n, d;
  unsigned long ue = static_cast<unsigned long>(e < 0 ? -e : e);
  mpz_pow_ui(n.get_mpz_t(), v_.get_num_mpz_t(), ue);
  mpz_pow_ui(d.get_mpz_t(), v_.get_den_mpz_t(), ue);
  return e > 0 ? Rational(n, d) : Rational(d, n);
}

std::string Rational::str() const {
  std::string out = v_.get_num().get_str();
  if (v_.get_den() != 1) {
    out += '/';
    out += v_.get_den().get_str();
  }
  return out;
}

Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace reclab

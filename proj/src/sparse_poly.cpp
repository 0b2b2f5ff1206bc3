#include "reclab/sparse_poly.hpp"

#include <stdexcept>

namespace reclab {

SparsePoly SparsePoly::monomial(Int exponent, const Rational& coeff) {
  SparsePoly p;
  p.add_term(exponent, coeff);
  return p;
}

SparsePoly SparsePoly::power_minus_one(Int m) {
  SparsePoly p;
  p.add_term(m, Rational(1));
  p.add_term(0, Rational(-1));
  return p;
}

void SparsePoly::add_term(Int exponent, const Rational& coeff) {
  if (exponent < 0) throw std::invalid_argument("SparsePoly: negative exponent");
  if (coeff.is_zero()) return;
  auto [it, inserted] = terms_.emplace(exponent, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

SparsePoly& SparsePoly::operator+=(const SparsePoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

SparsePoly& SparsePoly::operator-=(const SparsePoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

SparsePoly SparsePoly::operator*(const SparsePoly& o) const {
  SparsePoly out;
  for (const auto& [e1, c1] : terms_)
    for (const auto& [e2, c2] : o.terms_) out.add_term(e1 + e2, c1 * c2);
  return out;
}

SparsePoly SparsePoly::operator*(const Rational& c) const {
  SparsePoly out;
  if (c.is_zero()) return out;
  for (const auto& [e, v] : terms_) out.terms_.emplace(e, v * c);
  return out;
}

Rational SparsePoly::coeff(Int exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? Rational(0) : it->second;
}

std::string SparsePoly::to_json() const {
  std::string out = "{";
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (!first) out += ',';
    first = false;
    out += '"';
    out += std::to_string(e);
    out += "\":\"";
    out += c.str();
    out += '"';
  }
  return out + "}";
}

}  // namespace reclab

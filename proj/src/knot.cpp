#include "reclab/knot.hpp"

#include <numeric>
#include <stdexcept>

namespace reclab {

TorusKnotQuery::TorusKnotQuery(Int a_, Int b_) : a(a_), b(b_) {
  if (a < 2 || b < 2) throw std::invalid_argument("TorusKnotQuery: a, b must be >= 2");
  if (std::gcd(a, b) != 1) throw std::invalid_argument("TorusKnotQuery: gcd(a,b) must be 1");
}

Rational signature_integral(const TorusKnotQuery& q, SignatureMethod method) {
  if (method == SignatureMethod::closed9) {
    const Rational ra(q.a), rb(q.b);
    return Rational(-1, 3) * (ra - Rational(1) / ra) * (rb - Rational(1) / rb);
  }
  Rational acc(0);
  for (Int i = 1; i < q.b; ++i)
    for (Int j = 1; j < q.a; ++j)
      acc += Rational(2) * abs(Rational(j, q.a) + Rational(i, q.b) - Rational(1)) - Rational(1);
  return acc;
}

Rational lattice_fraction_sum(const TorusKnotQuery& q, FractionSumMethod method) {
  const Int a = q.a, b = q.b;
  if (method == FractionSumMethod::brute) {
    Rational acc(0);
    for (Int i = 1; i < b; ++i)
      for (Int j = 1; j < a; ++j)
        if (i * a + j * b < a * b) acc += Rational(j, a) + Rational(i, b);
    return acc;
  }
  const Int g = (a - 1) * (b - 1);
  return Rational(g, 3) + Rational(g * (a + b + 1), 12 * a * b);
}

std::array<Rational, 3> signature_integral_derivation_check(const TorusKnotQuery& q) {
  return {signature_integral(q, SignatureMethod::sum15),
          Rational((q.a - 1) * (q.b - 1)) -
              Rational(4) * lattice_fraction_sum(q, FractionSumMethod::brute),
          signature_integral(q, SignatureMethod::closed9)};
}

}  // namespace reclab

#include "reclab/spectra.hpp"

#include <numeric>
#include <stdexcept>

namespace reclab {

namespace {

mpz_class binom(unsigned long n, unsigned long k) {
  mpz_class b;
  mpz_bin_uiui(b.get_mpz_t(), n, k);
  return b;
}

void require_coprime(Int a, Int b, const char* who) {
  if (a < 1 || b < 1) throw std::invalid_argument(std::string(who) + ": a, b must be positive");
  if (std::gcd(a, b) != 1) throw std::invalid_argument(std::string(who) + ": gcd(a,b) must be 1");
}

}  // namespace

Rational spectral_power_sum(const SpectralQuery& q, EvalMethod method) {
  require_coprime(q.a, q.b, "spectral_power_sum");
  if (q.n < 0) throw std::invalid_argument("spectral_power_sum: n must be nonnegative");
  const Int a = q.a, b = q.b, ab = a * b;
  const int n = q.n;

  if (method == EvalMethod::brute) {
    const Rational shift = q.x / Rational(ab);
    Rational acc(0);
    for (Int i = 1; i < b; ++i)
      for (Int j = 1; j < a; ++j)
        acc += (shift + Rational(j, a) + Rational(i, b)).pow(n);
    return acc;
  }

  const Rational x = q.x, ra(a), rb(b), rab(ab);
  Rational v = x.pow(n) / rab.pow(n);
  v -= (bernoulli_poly(n + 1, x / ra + rb) - bernoulli_poly(n + 1, x / ra)) /
       (rb.pow(n) * Rational(n + 1));
  v -= (bernoulli_poly(n + 1, x / rb + ra) - bernoulli_poly(n + 1, x / rb)) /
       (ra.pow(n) * Rational(n + 1));
  v += (bernoulli_poly(n + 1, x + rab) - bernoulli_poly(n + 1, x)) /
       (rab.pow(n) * Rational(n + 1));
  NumericalSemigroup S(a, b);
  Rational tail(0);
  for (int i = 0; i <= n; ++i)
    tail += Rational(binom(n, i)) * ((x + rab).pow(n - i) - x.pow(n - i)) * sylvester_sum(S, i);
  return v + tail / rab.pow(n);
}

Rational spectral_power_sum_at_zero(Int a, Int b, int n, Form form) {
  require_coprime(a, b, "spectral_power_sum_at_zero");
  if (n < 1) throw std::invalid_argument("spectral_power_sum_at_zero: n must be positive");
  const Rational ra(a), rb(b), rab(a * b);
  NumericalSemigroup S(a, b);
  const int top = form == Form::corrected ? n - 1 : n;
  Rational v(0);
  for (int i = 0; i <= top; ++i)
    v += Rational(binom(n, i)) * sylvester_sum(S, i) / rab.pow(i);
  Rational tail = bernoulli_poly(n + 1, rab) / rab.pow(n) - bernoulli_poly(n + 1, ra) / ra.pow(n) -
                  bernoulli_poly(n + 1, rb) / rb.pow(n) -
                  bernoulli_number(n + 1) *
                      (Rational(1) / rab.pow(n) - Rational(1) / ra.pow(n) - Rational(1) / rb.pow(n));
  return v + tail / Rational(n + 1);
}

Rational lattice_power_sum(Int a, Int b, int n, const Rational& x, EvalMethod method) {
  require_coprime(a, b, "lattice_power_sum");
  if (n < 2) throw std::invalid_argument("lattice_power_sum: n must be >= 2");
  const Int ab = a * b;

  if (method == EvalMethod::brute) {
    Rational acc(0);
    for (Int i = 0; i < b; ++i)
      for (Int j = 0; j < a; ++j)
        if (i * a + j * b < ab) acc += (x + Rational(i * a + j * b)).pow(n - 2);
    return acc;
  }

  const Rational ra(a), rb(b), rab(ab);
  Rational v = bernoulli_poly(n - 1, x + rab) / Rational(n - 1);
  Rational s(0);
  for (int k = 0; k <= n; ++k)
    s += Rational(binom(n, k)) * ra.pow(n - k) * rb.pow(k) *
         (bernoulli_poly(n - k, rb) - bernoulli_number(n - k)) * bernoulli_poly(k, x / rb);
  return v - s / (Rational(n) * Rational(n - 1) * rab);
}

Residual spectral_split_residual(Int a, Int b, int n, const Rational& x) {
  require_coprime(a, b, "spectral_split_residual");
  if (n < 0) throw std::invalid_argument("spectral_split_residual: n must be nonnegative");
  const Int ab = a * b;
  Residual r;
  r.lhs = Rational(ab).pow(n) * spectral_power_sum({a, b, n, x}, EvalMethod::brute);
  r.rhs = Rational(0);
  for (Int i = 1; i < b; ++i)
    for (Int j = 1; j < a; ++j) {
      const Int v = i * a + j * b;
      if (v < ab) r.rhs += (x + Rational(v)).pow(n) + (x + Rational(2 * ab - v)).pow(n);
    }
  return r;
}

}  // namespace reclab

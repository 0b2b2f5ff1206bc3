#include "reclab/bernoulli.hpp"

#include <deque>
#include <stdexcept>

namespace reclab {

namespace {

mpz_class binom(unsigned long n, unsigned long k) {
  mpz_class b;
  mpz_bin_uiui(b.get_mpz_t(), n, k);
  return b;
}

mpz_class factorial(unsigned long n) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return f;
}

// Integer-normalized coefficient rows of B_n(x): B_n(x) = (1/den) * sum_i
// num[i] x^{n-i}. Lets bernoulli_poly run a pure-integer Horner loop, which
// matters in the naive Apostol sums (one poly evaluation per term).
struct CoeffRow {
  std::vector<mpz_class> num;
  mpz_class den;
};

class PolyCoeffCache {
 public:
  // Rows are immutable once created and live in a deque, so the returned
  // reference stays valid while other threads grow the cache.
  const CoeffRow& row(int n) {
    std::lock_guard<std::mutex> lock(mu_);
    while (static_cast<int>(rows_.size()) <= n) {
      int k = static_cast<int>(rows_.size());
      CoeffRow r;
      std::vector<Rational> coeffs(k + 1);
      mpz_class den(1);
      for (int i = 0; i <= k; ++i) {
        coeffs[i] = Rational(binom(k, i)) * bernoulli_number(i);
        mpz_class d = coeffs[i].denominator();
        mpz_class g;
        mpz_gcd(g.get_mpz_t(), den.get_mpz_t(), d.get_mpz_t());
        den = den / g * d;
      }
      r.den = den;
      r.num.resize(k + 1);
      for (int i = 0; i <= k; ++i)
        r.num[i] = coeffs[i].numerator() * (den / coeffs[i].denominator());
      rows_.push_back(std::move(r));
    }
    return rows_[static_cast<size_t>(n)];
  }

 private:
  std::mutex mu_;
  std::deque<CoeffRow> rows_;
};

PolyCoeffCache& poly_coeffs() {
  static PolyCoeffCache cache;
  return cache;
}

}  // namespace

Rational BernoulliCache::operator()(int n) {
  if (n < 0) throw std::invalid_argument("bernoulli_number: negative index");
  std::lock_guard<std::mutex> lock(mu_);
  if (values_.empty()) values_.push_back(Rational(1));
  while (static_cast<int>(values_.size()) <= n) {
    int m = static_cast<int>(values_.size());
    Rational acc(0);
    for (int k = 0; k < m; ++k) acc += Rational(binom(m + 1, k)) * values_[k];
    values_.push_back(-acc / Rational(m + 1));
  }
  return values_[n];
}

BernoulliCache& bernoulli_cache() {
  static BernoulliCache cache;
  return cache;
}

Rational bernoulli_number(int n) { return bernoulli_cache()(n); }

Rational bernoulli_poly(int n, const Rational& x) {
  if (n < 0) throw std::invalid_argument("bernoulli_poly: negative degree");
  const CoeffRow& r = poly_coeffs().row(n);
  const mpz_class p = x.numerator();
  const mpz_class q = x.denominator();
  mpz_class acc = r.num[0];
  mpz_class qq(1);
  for (int i = 1; i <= n; ++i) {
    qq *= q;
    acc = acc * p + r.num[i] * qq;
  }
  return Rational(acc, r.den * qq);
}

Rational periodic_bernoulli(int n, const Rational& x) {
  if (n < 1) throw std::invalid_argument("periodic_bernoulli: n must be positive");
  return bernoulli_poly(n, x - Rational(x.floor()));
}

Rational power_sum_closed(const Rational& x, Int m, int n) {
  if (m < 0) throw std::invalid_argument("power_sum_closed: negative term count");
  if (n < 0) throw std::invalid_argument("power_sum_closed: negative exponent");
  return (bernoulli_poly(n + 1, x + Rational(m)) - bernoulli_poly(n + 1, x)) / Rational(n + 1);
}

Rational weighted_bernoulli_sum(Int m, int n) {
  if (m < 1 || n < 1) throw std::invalid_argument("weighted_bernoulli_sum: m, n must be positive");
  Rational acc(0);
  for (Int k = 1; k < m; ++k) acc += Rational(k, m) * bernoulli_poly(n, Rational(k, m));
  return Rational(m).pow(n) * acc;
}

Rational weighted_bernoulli_sum_closed(Int m, int n) {
  if (m < 1 || n < 1) throw std::invalid_argument("weighted_bernoulli_sum_closed: m, n must be positive");
  const Rational rm(m);
  Rational acc(0);
  for (int i = 0; i <= n; ++i) {
    Rational term = Rational(binom(n, i)) * bernoulli_number(i) * rm.pow(i - 1);
    term *= (bernoulli_poly(n - i + 2, rm) - bernoulli_number(n - i + 2)) / Rational(n - i + 2);
    acc += term;
  }
  return acc;
}

Rational bernoulli_pair_convolution(const Rational& base, int n, Form form) {
  if (n < 1) throw std::invalid_argument("bernoulli_pair_convolution: n must be positive");
  const mpz_class nfac = factorial(n);
  Rational acc(0);
  for (int i = 0; i <= n + 1; ++i) {
    Rational term(nfac, factorial(i) * factorial(n - i + 1));
    term *= bernoulli_number(i) * bernoulli_number(n - i + 1) * base.pow(n - i + 1);
    if (form == Form::corrected && i % 2 == 1) term = -term;
    acc += term;
  }
  return acc;
}

Rational weighted_bernoulli_sum_published(Int m, int n, Form form) {
  return bernoulli_pair_convolution(Rational(m), n, form) +
         Rational(n, n + 1) * bernoulli_number(n + 1);
}

DistributionResidual distribution_residual(int n, Int a, const Rational& x) {
  if (n < 1) throw std::invalid_argument("distribution_residual: n must be positive");
  if (a < 1) throw std::invalid_argument("distribution_residual: a must be positive");
  DistributionResidual out;
  out.lhs = periodic_bernoulli(n, Rational(a) * x);
  Rational sum(0);
  for (Int k = 0; k < a; ++k) sum += periodic_bernoulli(n, x + Rational(k, a));
  out.rhs = Rational(a).pow(n - 1) * sum;
  return out;
}

}  // namespace reclab

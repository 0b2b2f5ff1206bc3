#include "reclab/semigroup.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <utility>

#include "reclab/bernoulli.hpp"

namespace reclab {

namespace {

mpz_class factorial(unsigned long n) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return f;
}

std::string int_array_json(const std::vector<Int>& v) {
  std::string out = "[";
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(v[i]);
  }
  return out + "]";
}

Int mod_inverse(Int x, Int m) {
  // extended Euclid; gcd(x, m) == 1 guaranteed by the caller
  Int t = 0, new_t = 1, r = m, new_r = x % m;
  while (new_r != 0) {
    Int q = r / new_r;
    t = std::exchange(new_t, t - q * new_t);
    r = std::exchange(new_r, r - q * new_r);
  }
  return t < 0 ? t + m : t;
}

// Gap power sums sum_{k in gaps} reduce(k)^j for j = 0..n, accumulated in one
// pass. reduce is either identity or k mod m.
std::vector<Rational> gap_power_sums(const std::vector<Int>& gap_elems, int n, Int mod = 0) {
  std::vector<mpz_class> sums(static_cast<size_t>(n) + 1, mpz_class(0));
  for (Int k : gap_elems) {
    Int v = mod > 0 ? k % mod : k;
    mpz_class p(1);
    for (int j = 0; j <= n; ++j) {
      sums[j] += p;
      p *= static_cast<long>(v);
    }
  }
  std::vector<Rational> out;
  out.reserve(sums.size());
  for (auto& s : sums) out.emplace_back(Rational(s));
  return out;
}

}  // namespace

std::string GapSet::to_json() const { return int_array_json(elements); }

std::string AperySet::to_json() const { return int_array_json(elements); }

NumericalSemigroup::NumericalSemigroup(Int a, Int b) : a_(a), b_(b) {
  if (a < 1 || b < 1) throw std::invalid_argument("NumericalSemigroup: generators must be >= 1");
  if (std::gcd(a, b) != 1) throw std::invalid_argument("NumericalSemigroup: gcd(a,b) must be 1");
  mod_ = a_;
  step_ = b_;
  inv_ = mod_ == 1 ? 0 : mod_inverse(step_ % mod_, mod_);
}

bool NumericalSemigroup::contains(Int k) const {
  if (k < 0) return false;
  if (mod_ == 1 || step_ == 1) return true;
  Int y = (k % mod_) * inv_ % mod_;
  return static_cast<__int128>(y) * step_ <= k;
}

GapSet NumericalSemigroup::gaps() const {
  GapSet out;
  if (a_ == 1 || b_ == 1) return out;
  out.elements.reserve(static_cast<size_t>((a_ - 1) * (b_ - 1) / 2));
  for (Int k = 1; k <= frobenius(); ++k)
    if (!contains(k)) out.elements.push_back(k);
  return out;
}

AperySet NumericalSemigroup::apery_set(Int m) const {
  if (m < 1) throw std::invalid_argument("apery_set: m must be positive");
  if (!contains(m)) throw std::invalid_argument("apery_set: m is not an element of the semigroup");
  AperySet out;
  out.m = m;
  out.elements.reserve(static_cast<size_t>(m));
  for (Int r = 0; r < m; ++r) {
    Int w = r;
    while (!contains(w)) w += m;  // terminates by w <= frobenius() + m
    out.elements.push_back(w);
  }
  std::sort(out.elements.begin(), out.elements.end());
  return out;
}

Int NumericalSemigroup::representation_count(Int k) const {
  if (k < 0) return 0;
  if (mod_ == 1) return k / step_ + 1;
  if (step_ == 1) return k / mod_ + 1;
  Int y = (k % mod_) * inv_ % mod_;
  if (static_cast<__int128>(y) * step_ > k) return 0;
  return (k - y * step_) / (mod_ * step_) + 1;
}

std::vector<Int> r_set_window(const NumericalSemigroup& S, int n) {
  if (n < 1) throw std::invalid_argument("r_set_window: n must be positive");
  AperySet ap = S.apery_set(S.a() * S.b());
  const Int shift = static_cast<Int>(n - 1) * S.a() * S.b();
  for (Int& e : ap.elements) e += shift;
  return std::move(ap.elements);
}

Rational sylvester_sum(const NumericalSemigroup& S, int m) {
  if (m < 0) throw std::invalid_argument("sylvester_sum: negative power");
  GapSet g = S.gaps();
  return gap_power_sums(g.elements, m).back();
}

Rational sylvester_sum_closed(Int a, Int b, int m) {
  if (a < 1 || b < 1 || std::gcd(a, b) != 1)
    throw std::invalid_argument("sylvester_sum_closed: need coprime positive generators");
  if (m < 1) throw std::invalid_argument("sylvester_sum_closed: m must be positive");
  const mpz_class mfac = factorial(m - 1);
  const Rational ra(a), rb(b);
  Rational acc(0);
  for (int i = 0; i <= m; ++i)
    for (int j = 0; j <= m - i; ++j) {
      Rational c(mfac, factorial(i) * factorial(j) * factorial(m - i - j + 1));
      acc += c * bernoulli_number(i) * bernoulli_number(j) * ra.pow(m - j) * rb.pow(m - i);
    }
  return acc - bernoulli_number(m) / Rational(m);
}

SparsePoly gen_poly_gaps(const NumericalSemigroup& S) {
  SparsePoly p;
  for (Int k : S.gaps().elements) p.add_term(k, Rational(1));
  return p;
}

SparsePoly gen_poly_apery(const NumericalSemigroup& S, Int m) {
  SparsePoly p;
  for (Int k : S.apery_set(m).elements) p.add_term(k, Rational(1));
  return p;
}

Residual gassert_shor_residual(const NumericalSemigroup& S, Int m, FunctionTable& f,
                               const std::vector<Int>& gap_elems) {
  Residual r{Rational(0), Rational(0)};
  for (Int k : gap_elems) r.lhs += f.at(k + m) - f.at(k);
  for (Int k : S.apery_set(m).elements) r.rhs += f.at(k);
  for (Int k = 0; k < m; ++k) r.rhs -= f.at(k);
  return r;
}

Residual tuenter_residual(const NumericalSemigroup& S, FunctionTable& f,
                          const std::vector<Int>& gap_elems) {
  Residual r{Rational(0), Rational(0)};
  const Int a = S.a(), b = S.b();
  for (Int k : gap_elems) r.lhs += f.at(k + b) - f.at(k);
  for (Int k = 0; k < b; ++k) r.rhs += f.at(a * k) - f.at(k);
  return r;
}

Residual mordell_residual(const NumericalSemigroup& S, FunctionTable& f,
                          const std::vector<Int>& gap_elems) {
  Residual r{Rational(0), Rational(0)};
  const Int a = S.a(), b = S.b(), ab = a * b;
  for (Int k : gap_elems) r.lhs += f.at(k + ab) - f.at(k);
  for (Int i = 0; i < b; ++i)
    for (Int j = 0; j < a; ++j) r.rhs += f.at(i * a + j * b);
  for (Int k = 0; k < ab; ++k) r.rhs -= f.at(k);
  return r;
}

Residual mordell_split_residual(const NumericalSemigroup& S, FunctionTable& f) {
  Residual r{Rational(0), Rational(0)};
  const Int a = S.a(), b = S.b(), ab = a * b;
  for (Int i = 1; i < b; ++i)
    for (Int j = 1; j < a; ++j) {
      const Int v = i * a + j * b;
      r.lhs += f.at(v);
      if (v < ab) r.rhs += f.at(v) + f.at(2 * ab - v);
    }
  return r;
}

Residual identity_residual(const NumericalSemigroup& S, SemigroupIdentity id,
                           const FunctionSpec& f, std::optional<Int> m) {
  FunctionTable table(f);
  if (id == SemigroupIdentity::mordell_split) return mordell_split_residual(S, table);
  const std::vector<Int> gap_elems = S.gaps().elements;
  switch (id) {
    case SemigroupIdentity::gassert_shor:
      if (!m) throw std::invalid_argument("identity_residual: gassert_shor requires m");
      return gassert_shor_residual(S, *m, table, gap_elems);
    case SemigroupIdentity::tuenter:
      return tuenter_residual(S, table, gap_elems);
    case SemigroupIdentity::mordell:
      return mordell_residual(S, table, gap_elems);
    default:
      throw std::logic_error("identity_residual: unreachable");
  }
}

}  // namespace reclab

#include "reclab/dedekind.hpp"

#include <numeric>
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

void require_coprime(Int a, Int b, const char* who) {
  if (a < 1 || b < 1) throw std::invalid_argument(std::string(who) + ": a, b must be positive");
  if (std::gcd(a, b) != 1) throw std::invalid_argument(std::string(who) + ": gcd(a,b) must be 1");
}

void require_odd(int n, const char* who) {
  if (n < 1) throw std::invalid_argument(std::string(who) + ": n must be positive");
  if (n % 2 == 0) throw std::invalid_argument(std::string(who) + ": n must be odd");
}

// sum over gaps of reduce(k)^j for j = 0..n; reduce = id or mod m
std::vector<Rational> gap_sums(const std::vector<Int>& gap_elems, int n, Int mod) {
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

FastEval fast_rec(Int a, Int b, int n) {
  a %= b;
  if (b == 1) return {Rational(0), 0};
  if (a == 1) return {weighted_bernoulli_sum_closed(b, n) / Rational(b).pow(n), 0};
  FastEval sub = fast_rec(b % a, a, n);
  Rational value = (reciprocity_rhs(a, b, n, RhsVariant::eq1) -
                    Rational(b) * Rational(a).pow(n) * sub.value) /
                   (Rational(a) * Rational(b).pow(n));
  return {std::move(value), sub.depth + 1};
}

}  // namespace

std::string to_string(RhsVariant v) {
  switch (v) {
    case RhsVariant::eq1: return "eq1";
    case RhsVariant::prop3: return "prop3";
    case RhsVariant::prop4: return "prop4";
  }
  return "?";
}

std::optional<RhsVariant> rhs_variant_from_string(std::string_view s) {
  if (s == "eq1") return RhsVariant::eq1;
  if (s == "prop3") return RhsVariant::prop3;
  if (s == "prop4") return RhsVariant::prop4;
  return std::nullopt;
}

Rational apostol_sum_naive(Int a, Int b, int n) {
  require_coprime(a, b, "apostol_sum_naive");
  if (n < 1) throw std::invalid_argument("apostol_sum_naive: n must be positive");
  Rational acc(0);
  for (Int k = 1; k < b; ++k)
    acc += Rational(k, b) * periodic_bernoulli(n, Rational(k * a, b));
  return acc;
}

Rational reciprocity_lhs(Int a, Int b, int n) {
  return Rational(a) * Rational(b).pow(n) * apostol_sum_naive(a, b, n) +
         Rational(b) * Rational(a).pow(n) * apostol_sum_naive(b, a, n);
}

Rational reciprocity_rhs(Int a, Int b, int n, RhsVariant v, Form form) {
  require_coprime(a, b, "reciprocity_rhs");
  require_odd(n, "reciprocity_rhs");
  const Rational ra(a), rb(b), rab(a * b);

  if (v == RhsVariant::eq1) {
    const mpz_class nfac = factorial(n);
    Rational acc(0);
    for (int k = 0; k <= n + 1; ++k) {
      Rational term(nfac, factorial(k) * factorial(n - k + 1));
      term *= bernoulli_number(k) * bernoulli_number(n + 1 - k) * ra.pow(k) * rb.pow(n - k + 1);
      acc += (k % 2 == 1) ? -term : term;
    }
    return acc + Rational(n, n + 1) * bernoulli_number(n + 1);
  }

  const std::vector<Int> gap_elems = NumericalSemigroup(a, b).gaps().elements;

  if (v == RhsVariant::prop3) {
    const auto sylv = gap_sums(gap_elems, n, 0);
    Rational acc(0);
    for (int i = 0; i <= n; ++i)
      acc += Rational(binom(n, i)) * rab.pow(i) * bernoulli_number(i) * sylv[n - i];
    return acc + bernoulli_pair_convolution(rab, n, form) +
           Rational(n, n + 1) * bernoulli_number(n + 1);
  }

  // prop4: the printed first sum uses plain gap powers; the corrected one
  // reduces each gap mod b (resp. mod a) because B~_n(k/b) = B_n((k mod b)/b).
  const auto sums_b = gap_sums(gap_elems, n, form == Form::corrected ? b : 0);
  const auto sums_a = gap_sums(gap_elems, n, form == Form::corrected ? a : 0);
  Rational acc(0);
  for (int i = 0; i <= n; ++i)
    acc += Rational(binom(n, i)) * bernoulli_number(i) *
           (rb.pow(i) * sums_b[n - i] + ra.pow(i) * sums_a[n - i]);
  return acc + bernoulli_pair_convolution(ra, n, form) + bernoulli_pair_convolution(rb, n, form) +
         Rational(2 * n, n + 1) * bernoulli_number(n + 1);
}

FastEval apostol_sum_fast_stats(Int a, Int b, int n) {
  require_coprime(a, b, "apostol_sum_fast");
  require_odd(n, "apostol_sum_fast");
  return fast_rec(a, b, n);
}

Rational apostol_sum_fast(Int a, Int b, int n) { return apostol_sum_fast_stats(a, b, n).value; }

int descent_steps(Int a, Int b) {
  require_coprime(a, b, "descent_steps");
  a %= b;
  int steps = 0;
  while (b != 1 && a != 1) {
    Int r = b % a;
    b = a;
    a = r;
    ++steps;
  }
  return steps;
}

std::string ReciprocityReport::to_json() const {
  std::string out = "{\"a\":" + std::to_string(a) + ",\"b\":" + std::to_string(b) +
                    ",\"n\":" + std::to_string(n) + ",\"variant\":\"" + to_string(variant) +
                    "\",\"lhs\":\"" + lhs.str() + "\",\"rhs\":\"" + rhs.str() + "\",\"equal\":";
  out += equal ? "true}" : "false}";
  return out;
}

ReciprocityReport check_reciprocity(Int a, Int b, int n, RhsVariant v, bool fast_lhs) {
  ReciprocityReport rep;
  rep.a = a;
  rep.b = b;
  rep.n = n;
  rep.variant = v;
  if (fast_lhs) {
    rep.lhs = Rational(a) * Rational(b).pow(n) * apostol_sum_fast(a, b, n) +
              Rational(b) * Rational(a).pow(n) * apostol_sum_fast(b, a, n);
  } else {
    rep.lhs = reciprocity_lhs(a, b, n);
  }
  rep.rhs = reciprocity_rhs(a, b, n, v);
  rep.equal = rep.lhs == rep.rhs;
  return rep;
}

MordellCheck mordell_reciprocity_check(const NumericalSemigroup& S, const FunctionSpec& f,
                                       const ReplicationData& rep) {
  if (f.integer_only())
    throw std::invalid_argument("mordell_reciprocity_check: f must be defined at rational points");
  const Int a = S.a(), b = S.b(), ab = a * b;

  // grid[i][j] = f(i/b + j/a)
  std::vector<std::vector<Rational>> grid(static_cast<size_t>(b));
  for (Int i = 0; i < b; ++i) {
    grid[static_cast<size_t>(i)].reserve(static_cast<size_t>(a));
    for (Int j = 0; j < a; ++j)
      grid[static_cast<size_t>(i)].push_back(f.eval(Rational(i, b) + Rational(j, a)));
  }

  std::vector<Rational> f_ia(static_cast<size_t>(b));  // f(i a / b)
  std::vector<Rational> f_jb(static_cast<size_t>(a));  // f(j b / a)
  for (Int i = 0; i < b; ++i) f_ia[static_cast<size_t>(i)] = f.eval(Rational(i * a, b));
  for (Int j = 0; j < a; ++j) f_jb[static_cast<size_t>(j)] = f.eval(Rational(j * b, a));

  MordellCheck out;
  out.hypotheses_hold = true;
  for (Int i = 0; i < b && out.hypotheses_hold; ++i) {
    Rational row(0);
    for (Int j = 0; j < a; ++j) row += grid[static_cast<size_t>(i)][static_cast<size_t>(j)];
    if (f_ia[static_cast<size_t>(i)] != rep.alpha_a * row + rep.beta_a) out.hypotheses_hold = false;
  }
  for (Int j = 0; j < a && out.hypotheses_hold; ++j) {
    Rational col(0);
    for (Int i = 0; i < b; ++i) col += grid[static_cast<size_t>(i)][static_cast<size_t>(j)];
    if (f_jb[static_cast<size_t>(j)] != rep.alpha_b * col + rep.beta_b) out.hypotheses_hold = false;
  }

  out.lhs = Rational(0);
  for (Int i = 0; i < b; ++i) out.lhs += rep.alpha_b * Rational(i, b) * f_ia[static_cast<size_t>(i)];
  for (Int j = 0; j < a; ++j) out.lhs += rep.alpha_a * Rational(j, a) * f_jb[static_cast<size_t>(j)];

  const Rational aa_bb = rep.alpha_a * rep.alpha_b;
  Rational gap_part(0);
  for (Int k : S.gaps().elements) {
    const Rational t(k, ab);
    gap_part += (t + Rational(1)) * f.eval(t + Rational(1)) - t * f.eval(t);
  }
  Rational lattice_part(0);
  for (Int k = 0; k < ab; ++k) {
    const Rational t(k, ab);
    lattice_part += t * f.eval(t);
  }
  out.rhs = aa_bb * (gap_part + lattice_part) + rep.alpha_b * rep.beta_a * Rational(b - 1, 2) +
            rep.alpha_a * rep.beta_b * Rational(a - 1, 2);
  return out;
}

TuenterCheck tuenter_reciprocity_check(const NumericalSemigroup& S, const FunctionSpec& h,
                                       const Rational& g_ab, const Rational& g_ba) {
  if (h.integer_only())
    throw std::invalid_argument("tuenter_reciprocity_check: h must be defined at rational points");
  const Int a = S.a(), b = S.b();

  TuenterCheck out;
  out.lhs = Rational(0);
  for (Int k = 0; k < b; ++k) {
    const Rational t(k * a, b);
    out.lhs += g_ab * t * h.eval(t);
  }
  for (Int k = 0; k < a; ++k) {
    const Rational t(k * b, a);
    out.lhs += g_ba * t * h.eval(t);
  }

  out.rhs = Rational(0);
  for (Int k = 0; k < b; ++k) {
    const Rational t(k, b);
    out.rhs += g_ab * t * h.eval(t);
  }
  for (Int k = 0; k < a; ++k) {
    const Rational t(k, a);
    out.rhs += g_ba * t * h.eval(t);
  }
  for (Int k : S.gaps().elements) {
    const Rational tb(k, b), ta(k, a);
    out.rhs += g_ab * ((tb + Rational(1)) * h.eval(tb + Rational(1)) - tb * h.eval(tb));
    out.rhs += g_ba * ((ta + Rational(1)) * h.eval(ta + Rational(1)) - ta * h.eval(ta));
  }
  return out;
}

}  // namespace reclab

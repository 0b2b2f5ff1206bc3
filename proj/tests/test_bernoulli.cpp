#include "doctest.h"

#include <thread>
#include <vector>

#include "oracles.hpp"
#include "reclab/bernoulli.hpp"

using namespace reclab;

namespace {
mpz_class binom_t(unsigned long n, unsigned long k) {
  mpz_class b;
  mpz_bin_uiui(b.get_mpz_t(), n, k);
  return b;
}
}  // namespace

TEST_CASE("Bernoulli numbers: base values and the defining recurrence") {
  CHECK(bernoulli_number(0) == Rational(1));
  CHECK(bernoulli_number(1) == Rational(-1, 2));
  CHECK(bernoulli_number(12) == Rational(-691, 2730));
  for (int n = 1; n <= 20; ++n) {
    Rational acc(0);
    for (int k = 0; k <= n; ++k) acc += Rational(binom_t(n + 1, k)) * bernoulli_number(k);
    CHECK(acc == Rational(0));
  }
  for (int k = 1; k <= 9; ++k) CHECK(bernoulli_number(2 * k + 1) == Rational(0));
}

TEST_CASE("Bernoulli cache is safe under concurrent access") {
  std::vector<std::thread> threads;
  std::vector<Rational> results(4);
  for (int t = 0; t < 4; ++t)
    threads.emplace_back([&, t] { results[static_cast<size_t>(t)] = bernoulli_number(40); });
  for (auto& t : threads) t.join();
  for (const auto& r : results) CHECK(r == bernoulli_number(40));
}

TEST_CASE("Bernoulli polynomials") {
  CHECK(bernoulli_poly(1, Rational(1, 2)) == Rational(0));
  CHECK(bernoulli_poly(0, Rational(7, 3)) == Rational(1));
  CHECK(bernoulli_poly(3, Rational(3)) == Rational(15));
  // forward difference B_n(x+1) - B_n(x) = n x^{n-1}
  const std::vector<Rational> xs = {Rational(0), Rational(1, 2), Rational(-2, 3),
                                    Rational(7),  Rational(5, 7), Rational(-3)};
  for (int n = 1; n <= 10; ++n)
    for (const auto& x : xs)
      CHECK(bernoulli_poly(n, x + Rational(1)) - bernoulli_poly(n, x) ==
            Rational(n) * x.pow(n - 1));
}

TEST_CASE("periodic Bernoulli functions") {
  CHECK(periodic_bernoulli(1, Rational(1, 3)) == Rational(-1, 6));
  CHECK(periodic_bernoulli(3, Rational(4, 3)) == Rational(1, 27));
  CHECK(periodic_bernoulli(2, Rational(-1)) == Rational(1, 6));
  const std::vector<Rational> xs = {Rational(1, 7), Rational(-9, 4), Rational(22, 5), Rational(0)};
  for (int n = 1; n <= 7; ++n)
    for (const auto& x : xs)
      CHECK(periodic_bernoulli(n, x + Rational(1)) == periodic_bernoulli(n, x));
  CHECK_THROWS_AS(periodic_bernoulli(0, Rational(1, 2)), std::invalid_argument);
}

TEST_CASE("closed power sums match direct summation") {
  CHECK(power_sum_closed(Rational(0), 3, 2) == Rational(5));
  CHECK(power_sum_closed(Rational(2), 1, 3) == Rational(8));
  CHECK(power_sum_closed(Rational(1, 2), 0, 4) == Rational(0));
  const std::vector<Rational> xs = {Rational(0), Rational(1, 2), Rational(-2, 3), Rational(7)};
  for (int n = 0; n <= 8; ++n)
    for (Int m = 0; m <= 30; ++m)
      for (const auto& x : xs)
        CHECK(power_sum_closed(x, m, n) == oracles::power_sum_brute(x, m, n));
}

TEST_CASE("weighted Bernoulli sum: closed form equals the defining sum for all n") {
  CHECK(weighted_bernoulli_sum_closed(3, 1) == Rational(1, 6));
  CHECK(weighted_bernoulli_sum_closed(1, 5) == Rational(0));
  CHECK(weighted_bernoulli_sum_closed(2, 3) == Rational(0));
  for (int n = 1; n <= 8; ++n)
    for (Int m = 1; m <= 30; ++m) {
      CHECK(weighted_bernoulli_sum(m, n) == oracles::weighted_sum_brute(m, n));
      CHECK(weighted_bernoulli_sum_closed(m, n) == oracles::weighted_sum_brute(m, n));
    }
}

TEST_CASE("published weighted-sum form: right for odd n once the sign is fixed") {
  // printed form at (m,n) = (3,1): 5/3 against the defining sum's 1/6
  CHECK(weighted_bernoulli_sum_published(3, 1, Form::printed) == Rational(5, 3));
  CHECK(weighted_bernoulli_sum_published(3, 1, Form::corrected) == Rational(1, 6));
  for (int n = 1; n <= 9; n += 2)
    for (Int m = 1; m <= 20; ++m)
      CHECK(weighted_bernoulli_sum_published(m, n) == weighted_bernoulli_sum(m, n));
  // the sign-fixed published shape still misses for even n
  CHECK(weighted_bernoulli_sum_published(2, 2) == Rational(1, 6));
  CHECK(weighted_bernoulli_sum(2, 2) == Rational(-1, 6));
}

TEST_CASE("distribution relation holds with the k = 0 start") {
  auto r = distribution_residual(2, 2, Rational(1, 3));
  CHECK(r.lhs == Rational(-1, 18));
  CHECK(r.rhs == Rational(-1, 18));
  r = distribution_residual(1, 1, Rational(5, 7));
  CHECK(r.lhs == periodic_bernoulli(1, Rational(5, 7)));
  CHECK(r.equal());
  r = distribution_residual(3, 3, Rational(0));
  CHECK(r.lhs == Rational(0));
  CHECK(r.rhs == Rational(0));

  const std::vector<Rational> xs = {Rational(0), Rational(1, 5), Rational(3, 7), Rational(-4, 3)};
  for (int n = 1; n <= 6; ++n)
    for (Int a = 1; a <= 8; ++a)
      for (const auto& x : xs) CHECK(distribution_residual(n, a, x).equal());

  // starting the replication sum at k = 1 breaks it
  Rational printed(0);
  for (Int k = 1; k < 2; ++k)
    printed += periodic_bernoulli(2, Rational(1, 3) + Rational(k, 2));
  printed = printed * Rational(2);
  CHECK(printed == Rational(1, 18));
  CHECK(printed != distribution_residual(2, 2, Rational(1, 3)).lhs);
}

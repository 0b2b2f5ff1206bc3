#include "doctest.h"

#include <numeric>

#include "reclab/spectra.hpp"

using namespace reclab;

namespace {

std::vector<std::pair<Int, Int>> coprime_upto(Int hi) {
  std::vector<std::pair<Int, Int>> out;
  for (Int a = 1; a <= hi; ++a)
    for (Int b = a; b <= hi; ++b)
      if ((a != b || a == 1) && std::gcd(a, b) == 1) out.emplace_back(a, b);
  return out;
}

const std::vector<Rational> kShifts = {Rational(0), Rational(1, 2), Rational(-2, 3), Rational(7),
                                       Rational(6)};

}  // namespace

TEST_CASE("spectral power sums: spot values") {
  CHECK(spectral_power_sum({2, 3, 1, Rational(0)}, EvalMethod::brute) == Rational(2));
  CHECK(spectral_power_sum({2, 3, 1, Rational(6)}, EvalMethod::brute) == Rational(4));
  CHECK(spectral_power_sum({2, 3, 0, Rational(7, 3)}, EvalMethod::brute) == Rational(2));
  CHECK(spectral_power_sum({2, 3, 1, Rational(0)}, EvalMethod::closed) == Rational(2));
  CHECK(spectral_power_sum({2, 3, 1, Rational(6)}, EvalMethod::closed) == Rational(4));
  CHECK(spectral_power_sum({3, 5, 1, Rational(0)}, EvalMethod::brute) == Rational(8));
  CHECK(spectral_power_sum({1, 4, 3, Rational(1, 2)}, EvalMethod::brute) == Rational(0));
  CHECK(spectral_power_sum({1, 4, 3, Rational(1, 2)}, EvalMethod::closed) == Rational(0));
  CHECK_THROWS_AS(spectral_power_sum({2, 4, 1, Rational(0)}, EvalMethod::brute),
                  std::invalid_argument);
}

TEST_CASE("spectral power sums: brute equals closed, symmetric in (a,b)") {
  for (auto [a, b] : coprime_upto(9))
    for (int n = 0; n <= 5; ++n)
      for (const auto& x : kShifts) {
        const Rational brute = spectral_power_sum({a, b, n, x}, EvalMethod::brute);
        CHECK(brute == spectral_power_sum({a, b, n, x}, EvalMethod::closed));
        CHECK(brute == spectral_power_sum({b, a, n, x}, EvalMethod::brute));
      }
}

TEST_CASE("x = 0 specialization: corrected vs printed") {
  CHECK(spectral_power_sum_at_zero(2, 3, 1) == Rational(2));
  CHECK(spectral_power_sum_at_zero(2, 3, 1, Form::printed) == Rational(13, 6));
  CHECK(spectral_power_sum_at_zero(3, 5, 1) == Rational(8));
  CHECK(spectral_power_sum_at_zero(1, 7, 4) == Rational(0));
  for (auto [a, b] : coprime_upto(9))
    for (int n = 1; n <= 5; ++n)
      CHECK(spectral_power_sum_at_zero(a, b, n) ==
            spectral_power_sum({a, b, n, Rational(0)}, EvalMethod::brute));
}

TEST_CASE("lattice power sums") {
  CHECK(lattice_power_sum(2, 3, 3, Rational(0), EvalMethod::brute) == Rational(14));
  CHECK(lattice_power_sum(2, 3, 3, Rational(1), EvalMethod::brute) == Rational(19));
  CHECK(lattice_power_sum(2, 3, 2, Rational(0), EvalMethod::brute) == Rational(5));
  CHECK(lattice_power_sum(2, 3, 3, Rational(0), EvalMethod::closed) == Rational(14));
  CHECK_THROWS_AS(lattice_power_sum(2, 3, 1, Rational(0), EvalMethod::brute),
                  std::invalid_argument);
  // closed form holds in both generator orders
  for (auto [a, b] : coprime_upto(9))
    for (int n = 2; n <= 7; ++n)
      for (const auto& x : kShifts) {
        CHECK(lattice_power_sum(a, b, n, x, EvalMethod::brute) ==
              lattice_power_sum(a, b, n, x, EvalMethod::closed));
        CHECK(lattice_power_sum(b, a, n, x, EvalMethod::brute) ==
              lattice_power_sum(b, a, n, x, EvalMethod::closed));
      }
}

TEST_CASE("spectral split residual") {
  auto r = spectral_split_residual(3, 5, 1, Rational(0));
  CHECK(r.lhs == Rational(120));
  CHECK(r.rhs == Rational(120));
  r = spectral_split_residual(4, 7, 0, Rational(1, 2));
  CHECK(r.lhs == Rational(18));  // (a-1)(b-1) counting form
  CHECK(r.rhs == Rational(18));
  r = spectral_split_residual(2, 3, 2, Rational(0));
  CHECK(r.lhs == Rational(36) * (Rational(25, 36) + Rational(49, 36)));
  CHECK(r.rhs == Rational(74));
  for (auto [a, b] : coprime_upto(20))
    for (int n = 0; n <= 6; ++n)
      for (const auto& x : kShifts) CHECK(spectral_split_residual(a, b, n, x).equal());
}

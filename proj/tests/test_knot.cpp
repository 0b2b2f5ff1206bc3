#include "doctest.h"

#include <numeric>

#include "reclab/knot.hpp"

using namespace reclab;

TEST_CASE("query validation") {
  CHECK_THROWS_AS(TorusKnotQuery(1, 5), std::invalid_argument);
  CHECK_THROWS_AS(TorusKnotQuery(2, 2), std::invalid_argument);
  CHECK_THROWS_AS(TorusKnotQuery(4, 6), std::invalid_argument);
  CHECK_NOTHROW(TorusKnotQuery(2, 3));
}

TEST_CASE("signature integral: spot values and symmetry") {
  TorusKnotQuery q23(2, 3);
  CHECK(signature_integral(q23, SignatureMethod::sum15) == Rational(-4, 3));
  CHECK(signature_integral(q23, SignatureMethod::closed9) == Rational(-4, 3));
  TorusKnotQuery q35(3, 5);
  CHECK(signature_integral(q35, SignatureMethod::sum15) == Rational(-64, 15));
  CHECK(signature_integral(q35, SignatureMethod::closed9) == Rational(-64, 15));
  TorusKnotQuery q53(5, 3);
  CHECK(signature_integral(q53, SignatureMethod::sum15) ==
        signature_integral(q35, SignatureMethod::sum15));
}

TEST_CASE("lattice fraction sums") {
  TorusKnotQuery q23(2, 3);
  CHECK(lattice_fraction_sum(q23, FractionSumMethod::brute) == Rational(5, 6));
  CHECK(lattice_fraction_sum(q23, FractionSumMethod::closed) == Rational(5, 6));
  TorusKnotQuery q35(3, 5);
  CHECK(lattice_fraction_sum(q35, FractionSumMethod::brute) == Rational(46, 15));
  CHECK(lattice_fraction_sum(q35, FractionSumMethod::closed) == Rational(46, 15));
}

TEST_CASE("derivation chain") {
  auto steps = signature_integral_derivation_check(TorusKnotQuery(2, 3));
  CHECK(steps[0] == Rational(-4, 3));
  CHECK(steps[1] == Rational(-4, 3));
  CHECK(steps[2] == Rational(-4, 3));
  steps = signature_integral_derivation_check(TorusKnotQuery(3, 5));
  CHECK(steps[0] == Rational(-64, 15));
  CHECK(steps[1] == Rational(8) - Rational(4) * Rational(46, 15));
  CHECK(steps[2] == Rational(-64, 15));
}

TEST_CASE("sweep: methods agree, term counts, negativity") {
  for (Int a = 2; a <= 25; ++a)
    for (Int b = a + 1; b <= 25; ++b) {
      if (std::gcd(a, b) != 1) continue;
      TorusKnotQuery q(a, b);
      const Rational sig = signature_integral(q, SignatureMethod::sum15);
      CHECK(sig == signature_integral(q, SignatureMethod::closed9));
      CHECK(sig < Rational(0));
      CHECK(lattice_fraction_sum(q, FractionSumMethod::brute) ==
            lattice_fraction_sum(q, FractionSumMethod::closed));
      Int below = 0;
      for (Int i = 1; i < b; ++i)
        for (Int j = 1; j < a; ++j)
          if (i * a + j * b < a * b) ++below;
      CHECK(below == (a - 1) * (b - 1) / 2);
      auto steps = signature_integral_derivation_check(q);
      CHECK(steps[0] == steps[1]);
      CHECK(steps[1] == steps[2]);
    }
}

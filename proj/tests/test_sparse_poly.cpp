#include "doctest.h"

#include "reclab/sparse_poly.hpp"

using namespace reclab;

TEST_CASE("terms cancel exactly and zeros are never stored") {
  SparsePoly p = SparsePoly::monomial(3, Rational(1)) + SparsePoly::monomial(0, Rational(1));
  SparsePoly q = p - SparsePoly::monomial(3, Rational(1));
  CHECK(q == SparsePoly::monomial(0, Rational(1)));
  CHECK(q.term_count() == 1);
  q -= SparsePoly::monomial(0, Rational(1));
  CHECK(q.is_zero());
  SparsePoly r;
  r.add_term(5, Rational(0));
  CHECK(r.is_zero());
  CHECK_THROWS_AS(r.add_term(-1, Rational(1)), std::invalid_argument);
}

TEST_CASE("multiplication") {
  SparsePoly a = SparsePoly::power_minus_one(2);   // q^2 - 1
  SparsePoly b = SparsePoly::monomial(2, Rational(1)) + SparsePoly::monomial(0, Rational(1));
  CHECK(a * b == SparsePoly::power_minus_one(4));  // (q^2-1)(q^2+1) = q^4 - 1
  CHECK((a * Rational(0)).is_zero());
  CHECK(a * Rational(1, 2) == SparsePoly::monomial(2, Rational(1, 2)) +
                                  SparsePoly::monomial(0, Rational(-1, 2)));
}

TEST_CASE("coefficient lookup and JSON form") {
  SparsePoly p = SparsePoly::power_minus_one(2);
  CHECK(p.coeff(2) == Rational(1));
  CHECK(p.coeff(0) == Rational(-1));
  CHECK(p.coeff(1) == Rational(0));
  CHECK(p.to_json() == R"({"0":"-1","2":"1"})");
  CHECK(SparsePoly().to_json() == "{}");
}

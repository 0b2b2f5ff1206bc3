#include "doctest.h"

#include "reclab/bernoulli.hpp"
#include "reclab/function_spec.hpp"
#include "reclab/verify.hpp"

using namespace reclab;

TEST_CASE("polynomial evaluation") {
  auto f = FunctionSpec::poly({Rational(1, 2), Rational(0), Rational(3)});
  CHECK(f.eval(Rational(2)) == Rational(25, 2));
  CHECK(f.eval(Rational(1, 3)) == Rational(5, 6));
  CHECK(f.eval(Rational(0)) == Rational(1, 2));
  CHECK(!f.integer_only());
  auto zero = FunctionSpec::poly({});
  CHECK(zero.eval(Rational(9)) == Rational(0));
}

TEST_CASE("q-power evaluation is integer-only") {
  auto f = FunctionSpec::qpow(Rational(2));
  CHECK(f.eval(static_cast<Int>(10)) == Rational(1024));
  CHECK(f.eval(Rational(-2)) == Rational(1, 4));
  CHECK(f.integer_only());
  CHECK_THROWS_AS(f.eval(Rational(1, 2)), std::domain_error);
  CHECK(FunctionSpec::qpow(Rational(-1)).eval(static_cast<Int>(5)) == Rational(-1));
  CHECK(FunctionSpec::qpow(Rational(1, 2)).eval(static_cast<Int>(3)) == Rational(1, 8));
  CHECK_THROWS_AS(FunctionSpec::qpow(Rational(0)), std::invalid_argument);
}

TEST_CASE("periodic Bernoulli spec matches the module function") {
  auto f = FunctionSpec::periodic_bernoulli(3, Rational(1, 5));
  for (Int t = -4; t <= 12; ++t)
    CHECK(f.eval(Rational(t)) == periodic_bernoulli(3, Rational(t, 5)));
  CHECK_THROWS_AS(FunctionSpec::periodic_bernoulli(0, Rational(1)), std::invalid_argument);
}

TEST_CASE("JSON serialization follows the wire format") {
  auto f = FunctionSpec::poly({Rational(1, 2), Rational(0), Rational(3)});
  CHECK(f.to_json() == R"({"kind":"poly","coeffs":["1/2","0","3"]})");
  CHECK(FunctionSpec::qpow(Rational(2)).to_json() == R"({"kind":"qpow","q":"2"})");
  CHECK(FunctionSpec::periodic_bernoulli(3, Rational(1, 5)).to_json() ==
        R"({"kind":"pbern","n":3,"scale":"1/5"})");

  for (const auto& g : verify_corpus()) {
    auto round = FunctionSpec::from_json(g.to_json());
    for (Int t = 0; t <= 8; ++t) CHECK(round.eval(t) == g.eval(t));
    CHECK(round.describe() == g.describe());
  }
  CHECK_THROWS_AS(FunctionSpec::from_json(R"({"kind":"sine"})"), std::invalid_argument);
}

TEST_CASE("FunctionTable agrees with direct evaluation") {
  for (const auto& f : verify_corpus()) {
    FunctionTable table(f);
    for (Int k = 0; k <= 60; ++k) CHECK(table.at(k) == f.eval(k));
    // revisit cached entries
    for (Int k = 60; k >= 0; k -= 7) CHECK(table.at(k) == f.eval(k));
    CHECK_THROWS_AS(table.at(-1), std::invalid_argument);
  }
}

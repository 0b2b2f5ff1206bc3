#pragma once

#include <array>

#include "reclab/rational.hpp"

namespace reclab {

/// An (a,b) torus knot, a, b >= 2 coprime (smaller parameters give the
/// unknot and empty sums).
struct TorusKnotQuery {
  TorusKnotQuery(Int a, Int b);
  Int a, b;
};

enum class SignatureMethod { sum15, closed9 };

/// Integral over the unit circle of the knot signature function, either as
/// the explicit double sum sum_{i<b, j<a} (2|j/a + i/b - 1| - 1) or as the
/// closed form -(1/3)(a - 1/a)(b - 1/b). The two agree for every valid query.
Rational signature_integral(const TorusKnotQuery& q, SignatureMethod method);

enum class FractionSumMethod { brute, closed };

/// sum of j/a + i/b over the below-diagonal lattice points (ia + jb < ab),
/// closed form (a-1)(b-1)/3 + (a-1)(b-1)(a+b+1)/(12ab).
Rational lattice_fraction_sum(const TorusKnotQuery& q, FractionSumMethod method);

/// The three-step derivation chain
///   [ sum15, (a-1)(b-1) - 4 * fraction sum, closed9 ]
/// whose entries all coincide.
std::array<Rational, 3> signature_integral_derivation_check(const TorusKnotQuery& q);

}  // namespace reclab

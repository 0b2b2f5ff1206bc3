#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "reclab/bernoulli.hpp"
#include "reclab/function_spec.hpp"
#include "reclab/semigroup.hpp"

namespace reclab {

enum class RhsVariant { eq1, prop3, prop4 };

std::string to_string(RhsVariant v);
std::optional<RhsVariant> rhs_variant_from_string(std::string_view s);

/// Apostol sum s_n(a,b) = sum_{k=1}^{b-1} (k/b) B~_n(k a / b) by direct
/// summation. Requires gcd(a,b) = 1; depends on a only through a mod b.
Rational apostol_sum_naive(Int a, Int b, int n);

/// a b^n s_n(a,b) + b a^n s_n(b,a) from the defining sums.
Rational reciprocity_lhs(Int a, Int b, int n);

/// Right-hand side of the reciprocity theorem, n odd:
///   eq1    — the alternating double-Bernoulli convolution form, as printed;
///   prop3  — Mordell route, Sylvester sums over the gap set;
///   prop4  — Tuenter route, gap power sums reduced mod a and mod b.
/// Form::printed reproduces the uncorrected second sums (and, for prop4, the
/// unreduced first sum); those are pinned failing in the regression tests.
Rational reciprocity_rhs(Int a, Int b, int n, RhsVariant v, Form form = Form::corrected);

struct FastEval {
  Rational value;
  int depth = 0;  // reciprocity descents performed
};

/// Evaluates s_n(a,b) by Euclidean descent: reduce a mod b, then
/// s_n(a,b) = (rhs_eq1(a,b,n) - b a^n s_n(b mod a, a)) / (a b^n), with base
/// cases s_n(x,1) = 0 and s_n(1,m) = weighted_bernoulli_sum_closed(m,n)/m^n.
/// n must be odd.
FastEval apostol_sum_fast_stats(Int a, Int b, int n);
Rational apostol_sum_fast(Int a, Int b, int n);

/// Division steps the descent performs on (a,b); equals FastEval::depth.
int descent_steps(Int a, Int b);

struct ReciprocityReport {
  Int a = 0, b = 0;
  int n = 0;
  RhsVariant variant = RhsVariant::eq1;
  Rational lhs, rhs;
  bool equal = false;

  std::string to_json() const;
};

ReciprocityReport check_reciprocity(Int a, Int b, int n, RhsVariant v, bool fast_lhs = false);

struct MordellCheck {
  Rational lhs, rhs;
  bool hypotheses_hold = false;
  bool equal() const { return lhs == rhs; }
};

/// Generic Mordell-route reciprocity. hypotheses_hold reports whether f
/// satisfies both Kubert replication hypotheses at every required point;
/// when it does, lhs = rhs.
MordellCheck mordell_reciprocity_check(const NumericalSemigroup& S, const FunctionSpec& f,
                                       const ReplicationData& rep);

struct TuenterCheck {
  Rational lhs, rhs;
  bool equal() const { return lhs == rhs; }
};

/// Generic Tuenter-route identity; unconditional in h (two weighted
/// instances of the Tuenter formula).
TuenterCheck tuenter_reciprocity_check(const NumericalSemigroup& S, const FunctionSpec& h,
                                       const Rational& g_ab, const Rational& g_ba);

}  // namespace reclab

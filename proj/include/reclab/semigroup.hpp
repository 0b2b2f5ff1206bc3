#pragma once

#include <optional>
#include <string>
#include <vector>

#include "reclab/function_spec.hpp"
#include "reclab/rational.hpp"
#include "reclab/sparse_poly.hpp"

namespace reclab {

struct GapSet {
  std::vector<Int> elements;  // increasing
  std::string to_json() const;
};

struct AperySet {
  Int m = 0;
  std::vector<Int> elements;  // increasing
  std::string to_json() const;
};

/// The numerical semigroup generated by two coprime positive integers,
/// in the caller's order (operations that distinguish a from b honor it).
class NumericalSemigroup {
 public:
  NumericalSemigroup(Int a, Int b);

  Int a() const { return a_; }
  Int b() const { return b_; }

  /// Membership in O(1): k = xa + yb with x,y >= 0 iff the minimal y in
  /// k b^{-1} (mod a) already satisfies y b <= k.
  bool contains(Int k) const;

  /// ab - a - b; equals -1 when min(a,b) = 1 (no gaps).
  Int frobenius() const { return a_ * b_ - a_ - b_; }

  GapSet gaps() const;

  /// Minimal element of S in each residue class mod m. Requires m >= 1 and
  /// m in S, otherwise throws (the set is undefined).
  AperySet apery_set(Int m) const;

  /// #{(x,y) : x,y >= 0, xa + yb = k}, in O(1).
  Int representation_count(Int k) const;

 private:
  Int a_, b_;
  Int mod_;    // modulus used by the membership test
  Int step_;   // the other generator
  Int inv_;    // step_^{-1} mod mod_ (unused when mod_ == 1)
};

/// {k + (n-1)ab : k in Ap_ab(S)} — the elements with exactly n representations.
std::vector<Int> r_set_window(const NumericalSemigroup& S, int n);

/// Power sum over the gap set; sylvester_sum(S, 0) is the gap count.
Rational sylvester_sum(const NumericalSemigroup& S, int m);

/// Closed form for sylvester_sum(S, m-1), m >= 1.
Rational sylvester_sum_closed(Int a, Int b, int m);

SparsePoly gen_poly_gaps(const NumericalSemigroup& S);
SparsePoly gen_poly_apery(const NumericalSemigroup& S, Int m);

enum class SemigroupIdentity { gassert_shor, tuenter, mordell, mordell_split };

struct Residual {
  Rational lhs, rhs;
  bool equal() const { return lhs == rhs; }
};

// Side computations shared by the one-shot checker and the sweep engine.
// Callers supply the gap elements and a FunctionTable so that m-sweeps reuse
// both across calls.
Residual gassert_shor_residual(const NumericalSemigroup& S, Int m, FunctionTable& f,
                               const std::vector<Int>& gap_elems);
Residual tuenter_residual(const NumericalSemigroup& S, FunctionTable& f,
                          const std::vector<Int>& gap_elems);
Residual mordell_residual(const NumericalSemigroup& S, FunctionTable& f,
                          const std::vector<Int>& gap_elems);
Residual mordell_split_residual(const NumericalSemigroup& S, FunctionTable& f);

/// Both sides of the selected identity, evaluated exactly. m is required for
/// gassert_shor (and must lie in S) and ignored otherwise.
Residual identity_residual(const NumericalSemigroup& S, SemigroupIdentity id,
                           const FunctionSpec& f, std::optional<Int> m = std::nullopt);

}  // namespace reclab

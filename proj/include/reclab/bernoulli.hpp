#pragma once

#include <mutex>
#include <vector>

#include "reclab/rational.hpp"

namespace reclab {

/// Memoized Bernoulli numbers under the B_1 = -1/2 convention, filled via the
/// defining recurrence sum_{k=0}^{n} C(n+1,k) B_k = 0. Safe to share across
/// threads; the fill is append-only and observationally pure.
class BernoulliCache {
 public:
  Rational operator()(int n);

 private:
  std::mutex mu_;
  std::vector<Rational> values_;
};

/// Process-wide cache used by every operation below.
BernoulliCache& bernoulli_cache();

/// B_n with B_1 = -1/2.
Rational bernoulli_number(int n);

/// B_n(x) = sum_{i=0}^{n} C(n,i) B_i x^{n-i}.
Rational bernoulli_poly(int n, const Rational& x);

/// B~_n(x) = B_n(x - floor(x)); 1-periodic.
Rational periodic_bernoulli(int n, const Rational& x);

/// sum_{k=0}^{m-1} (x+k)^n = (B_{n+1}(x+m) - B_{n+1}(x)) / (n+1).
Rational power_sum_closed(const Rational& x, Int m, int n);

/// Defining sum m^n sum_{k=1}^{m-1} (k/m) B_n(k/m), evaluated term by term.
Rational weighted_bernoulli_sum(Int m, int n);

/// Closed form of weighted_bernoulli_sum, exact for every n >= 1:
/// sum_{i=0}^{n} C(n,i) B_i m^{i-1} (B_{n-i+2}(m) - B_{n-i+2}) / (n-i+2).
Rational weighted_bernoulli_sum_closed(Int m, int n);

/// Which reading of a closed form with a known typo to evaluate.
enum class Form { corrected, printed };

/// sum_{i=0}^{n+1} (+-1)^i n! base^{n-i+1} B_i B_{n-i+1} / (i! (n-i+1)!).
/// Form::corrected applies the alternating sign; Form::printed omits it.
Rational bernoulli_pair_convolution(const Rational& base, int n, Form form);

/// The published closed form of weighted_bernoulli_sum:
/// bernoulli_pair_convolution(m, n, form) + n B_{n+1} / (n+1).
/// With Form::corrected this equals the defining sum for odd n; it does NOT
/// for even n (see the regression tests), which is why
/// weighted_bernoulli_sum_closed uses a different route.
Rational weighted_bernoulli_sum_published(Int m, int n, Form form = Form::corrected);

struct DistributionResidual {
  Rational lhs;  // B~_n(a x)
  Rational rhs;  // a^{n-1} sum_{k=0}^{a-1} B~_n(x + k/a)
  bool equal() const { return lhs == rhs; }
};

/// Both sides of the Bernoulli distribution relation. The replication sum
/// starts at k = 0; starting at k = 1 breaks the identity.
DistributionResidual distribution_residual(int n, Int a, const Rational& x);

}  // namespace reclab

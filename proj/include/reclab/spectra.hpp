#pragma once

#include "reclab/bernoulli.hpp"
#include "reclab/rational.hpp"
#include "reclab/semigroup.hpp"

namespace reclab {

/// Power sum of the shifted spectrum points x/(ab) + j/a + i/b of the
/// two-variable Brieskorn singularity, 0 < j < a, 0 < i < b.
struct SpectralQuery {
  Int a = 0, b = 0;
  int n = 0;
  Rational x;
};

enum class EvalMethod { brute, closed };

Rational spectral_power_sum(const SpectralQuery& q, EvalMethod method);

/// x = 0 specialization, n >= 1. The printed form extends the binomial sum
/// one index too far (spurious S_{a,b}(n)/(ab)^n term); Form::corrected stops
/// at i = n-1 and matches the brute-force double sum.
Rational spectral_power_sum_at_zero(Int a, Int b, int n, Form form = Form::corrected);

/// sum over 0 <= i < b, 0 <= j < a, ia + jb < ab of (x + ia + jb)^{n-2},
/// n >= 2, by lattice enumeration or the closed form.
Rational lattice_power_sum(Int a, Int b, int n, const Rational& x, EvalMethod method);

/// (ab)^n * brute spectral sum against the split over the below-diagonal
/// lattice points; equal for every input.
Residual spectral_split_residual(Int a, Int b, int n, const Rational& x);

}  // namespace reclab

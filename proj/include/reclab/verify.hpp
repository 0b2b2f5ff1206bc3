#pragma once

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "reclab/function_spec.hpp"
#include "reclab/rational.hpp"

namespace reclab {

/// One identity instance checked by a sweep. Optional fields are present
/// only when the identity has that parameter.
struct VerifyCase {
  std::string identity;
  std::optional<Int> a, b, m;
  std::optional<int> n;
  std::optional<Rational> x;
  std::optional<std::string> fn;
  Rational lhs, rhs;
  bool equal = false;
};

struct VerifyOptions {
  std::optional<Int> a_max;
  std::optional<Int> b_max;  // for eq11/eq12 this bounds m
  std::optional<std::vector<int>> n_list;
  std::optional<std::vector<Rational>> x_list;
  int threads = 0;  // 0: RECIPROCITY_LAB_THREADS, else hardware concurrency
};

struct VerifyReport {
  std::string identity;
  long long cases_run = 0;
  std::vector<VerifyCase> failures;
  long long elapsed_ms = 0;
};

/// Called once per case, in deterministic (a, b, n, x) sweep order regardless
/// of how the work was scheduled.
using CaseSink = std::function<void(const VerifyCase&)>;

const std::vector<std::string>& known_identities();
bool is_known_identity(std::string_view id);

/// Runs the sweep for one identity. Throws std::invalid_argument for an
/// unknown identity id.
VerifyReport run_verify(const std::string& identity, const VerifyOptions& opts = {},
                        const CaseSink& sink = nullptr);

/// The fixed function corpus used by the gassert_shor/tuenter/mordell/
/// mordell_split sweeps: three polynomials of degree <= 6 with small rational
/// coefficients, q-powers with q in {2, 3, 1/2, -1}, and periodic Bernoulli
/// functions with n = 1..5.
const std::vector<FunctionSpec>& verify_corpus();

/// Worker count: explicit > RECIPROCITY_LAB_THREADS > hardware concurrency.
int worker_count(int requested = 0);

struct BenchRow {
  Int a = 0, b = 0;
  int n = 0;
  bool naive_run = false;  // naive is skipped when b > 10^4
  double t_naive_ms = 0.0;
  double t_fast_ms = 0.0;
  bool equal = true;
  Rational value;  // fast value
};

/// Times apostol_sum_naive against apostol_sum_fast; asserts value equality
/// whenever the naive path runs.
std::vector<BenchRow> run_bench(const std::vector<std::pair<Int, Int>>& pairs, int n);

}  // namespace reclab

#include "reclab/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <condition_variable>
#include <cstdlib>
#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <thread>

#include "reclab/bernoulli.hpp"
#include "reclab/dedekind.hpp"
#include "reclab/knot.hpp"
#include "reclab/semigroup.hpp"
#include "reclab/spectra.hpp"

namespace reclab {

namespace {

struct JobResult {
  std::vector<VerifyCase> cases;
  long long cases_run = 0;
  std::vector<VerifyCase> failures;
};

using Job = std::function<JobResult(bool keep_cases)>;

void push_case(JobResult& out, bool keep, VerifyCase&& c) {
  ++out.cases_run;
  if (!c.equal) out.failures.push_back(c);
  if (keep) out.cases.push_back(std::move(c));
}

// Workers pick jobs by atomic index; the caller drains finished results in
// job order so reports are deterministic no matter how work was scheduled.
void run_jobs(const std::vector<Job>& jobs, int threads, const CaseSink& sink,
              VerifyReport& report) {
  const bool keep = static_cast<bool>(sink);
  std::mutex mu;
  std::condition_variable cv;
  std::map<size_t, JobResult> done;
  std::atomic<size_t> next{0};
  std::atomic<bool> failed{false};
  std::exception_ptr error;

  auto worker = [&] {
    while (!failed.load(std::memory_order_relaxed)) {
      size_t i = next.fetch_add(1);
      if (i >= jobs.size()) break;
      JobResult r;
      try {
        r = jobs[i](keep);
      } catch (...) {
        failed.store(true);
        std::lock_guard<std::mutex> lk(mu);
        if (!error) error = std::current_exception();
        cv.notify_one();
        break;
      }
      {
        std::lock_guard<std::mutex> lk(mu);
        done.emplace(i, std::move(r));
      }
      cv.notify_one();
    }
  };

  std::vector<std::thread> pool;
  const int nw = std::clamp(threads, 1, static_cast<int>(std::max<size_t>(jobs.size(), 1)));
  pool.reserve(static_cast<size_t>(nw));
  for (int t = 0; t < nw; ++t) pool.emplace_back(worker);

  size_t drained = 0;
  {
    std::unique_lock<std::mutex> lk(mu);
    while (drained < jobs.size()) {
      cv.wait(lk, [&] { return error || done.count(drained) > 0; });
      if (error) break;
      JobResult r = std::move(done.at(drained));
      done.erase(drained);
      lk.unlock();
      if (sink)
        for (const auto& c : r.cases) sink(c);
      report.cases_run += r.cases_run;
      for (auto& f : r.failures) report.failures.push_back(std::move(f));
      lk.lock();
      ++drained;
    }
  }
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

// a-major lexicographic coprime pairs with a < b
std::vector<std::pair<Int, Int>> pairs_below(Int a_min, Int a_max, Int b_max) {
  std::vector<std::pair<Int, Int>> out;
  for (Int a = a_min; a <= a_max; ++a)
    for (Int b = a + 1; b <= b_max; ++b)
      if (std::gcd(a, b) == 1) out.emplace_back(a, b);
  return out;
}

// all ordered coprime pairs (a != b, plus (1,1)), lexicographic
std::vector<std::pair<Int, Int>> pairs_ordered(Int a_max, Int b_max) {
  std::vector<std::pair<Int, Int>> out;
  for (Int a = 1; a <= a_max; ++a)
    for (Int b = 1; b <= b_max; ++b)
      if ((a != b || a == 1) && std::gcd(a, b) == 1) out.emplace_back(a, b);
  return out;
}

// unordered pairs a <= b (gcd 1), lexicographic
std::vector<std::pair<Int, Int>> pairs_unordered(Int a_max, Int b_max) {
  std::vector<std::pair<Int, Int>> out;
  for (Int a = 1; a <= a_max; ++a)
    for (Int b = a; b <= b_max; ++b)
      if ((a != b || a == 1) && std::gcd(a, b) == 1) out.emplace_back(a, b);
  return out;
}

std::vector<int> n_range(int lo, int hi) {
  std::vector<int> out;
  for (int n = lo; n <= hi; ++n) out.push_back(n);
  return out;
}

std::vector<Rational> default_x_list() {
  return {Rational(0), Rational(1, 2), Rational(-2, 3), Rational(7)};
}

VerifyCase base_case(const std::string& id) {
  VerifyCase c;
  c.identity = id;
  return c;
}

// ---------- identity sweeps ----------

std::vector<Job> reciprocity_jobs(const std::string& id, RhsVariant variant,
                                  const VerifyOptions& opts) {
  const Int amax = opts.a_max.value_or(40), bmax = opts.b_max.value_or(40);
  const auto ns = opts.n_list.value_or(std::vector<int>{1, 3, 5, 7, 9});
  std::vector<Job> jobs;
  for (auto [a, b] : pairs_below(2, amax, bmax)) {
    jobs.push_back([=, ns = ns](bool keep) {
      JobResult out;
      for (int n : ns) {
        VerifyCase c = base_case(id);
        c.a = a;
        c.b = b;
        c.n = n;
        c.lhs = reciprocity_lhs(a, b, n);
        c.rhs = reciprocity_rhs(a, b, n, variant);
        c.equal = c.lhs == c.rhs;
        push_case(out, keep, std::move(c));
      }
      return out;
    });
  }
  return jobs;
}

std::vector<Job> gassert_jobs(const VerifyOptions& opts) {
  const Int amax = opts.a_max.value_or(25), bmax = opts.b_max.value_or(25);
  std::vector<Job> jobs;
  for (auto [a, b] : pairs_below(1, amax, bmax)) {
    jobs.push_back([=](bool keep) {
      JobResult out;
      NumericalSemigroup S(a, b);
      const std::vector<Int> gap_elems = S.gaps().elements;
      const auto& corpus = verify_corpus();
      std::vector<FunctionTable> tables;
      tables.reserve(corpus.size());
      for (const auto& f : corpus) tables.emplace_back(f);
      const Int two_ab = 2 * a * b;
      for (Int m = 1; m <= two_ab; ++m) {
        if (!S.contains(m)) continue;
        for (size_t fi = 0; fi < corpus.size(); ++fi) {
          Residual r = gassert_shor_residual(S, m, tables[fi], gap_elems);
          VerifyCase c = base_case("gassert_shor");
          c.a = a;
          c.b = b;
          c.m = m;
          c.fn = corpus[fi].describe();
          c.lhs = std::move(r.lhs);
          c.rhs = std::move(r.rhs);
          c.equal = c.lhs == c.rhs;
          push_case(out, keep, std::move(c));
        }
      }
      return out;
    });
  }
  return jobs;
}

std::vector<Job> single_shot_jobs(const std::string& id, const VerifyOptions& opts) {
  const Int amax = opts.a_max.value_or(25), bmax = opts.b_max.value_or(25);
  // tuenter distinguishes the generator order; mordell and the split do not
  const auto pairs = id == "tuenter" ? pairs_ordered(amax, bmax) : pairs_unordered(amax, bmax);
  std::vector<Job> jobs;
  for (auto [a, b] : pairs) {
    jobs.push_back([=](bool keep) {
      JobResult out;
      NumericalSemigroup S(a, b);
      const std::vector<Int> gap_elems = S.gaps().elements;
      for (const auto& f : verify_corpus()) {
        FunctionTable table(f);
        Residual r = id == "tuenter"    ? tuenter_residual(S, table, gap_elems)
                     : id == "mordell" ? mordell_residual(S, table, gap_elems)
                                       : mordell_split_residual(S, table);
        VerifyCase c = base_case(id);
        c.a = a;
        c.b = b;
        c.fn = f.describe();
        c.lhs = std::move(r.lhs);
        c.rhs = std::move(r.rhs);
        c.equal = c.lhs == c.rhs;
        push_case(out, keep, std::move(c));
      }
      return out;
    });
  }
  return jobs;
}

std::vector<Job> prop1_jobs(const VerifyOptions& opts) {
  const Int amax = opts.a_max.value_or(15), bmax = opts.b_max.value_or(15);
  std::vector<Job> jobs;
  for (auto [a, b] : pairs_unordered(amax, bmax)) {
    jobs.push_back([=](bool keep) {
      JobResult out;
      NumericalSemigroup S(a, b);
      const SparsePoly gaps_poly = gen_poly_gaps(S);
      const SparsePoly ref = gen_poly_apery(S, b);
      const SparsePoly q_minus_one = SparsePoly::power_minus_one(1);
      const Int two_ab = 2 * a * b;
      for (Int m = 1; m <= two_ab; ++m) {
        if (!S.contains(m)) continue;
        const SparsePoly pm = gen_poly_apery(S, m);
        {
          // Ap_m and Ap_b generating polynomials agree after clearing the
          // (q^m - 1) denominators
          SparsePoly diff = pm * SparsePoly::power_minus_one(b) -
                            ref * SparsePoly::power_minus_one(m);
          VerifyCase c = base_case("prop1_genfun");
          c.a = a;
          c.b = b;
          c.m = m;
          c.fn = "apery-cross";
          c.lhs = Rational(static_cast<Int>(diff.term_count()));
          c.rhs = Rational(0);
          c.equal = diff.is_zero();
          push_case(out, keep, std::move(c));
        }
        {
          SparsePoly lhs = SparsePoly::power_minus_one(m) *
                           (q_minus_one * gaps_poly + SparsePoly::monomial(0, Rational(1)));
          SparsePoly diff = lhs - q_minus_one * pm;
          VerifyCase c = base_case("prop1_genfun");
          c.a = a;
          c.b = b;
          c.m = m;
          c.fn = "gaps-link";
          c.lhs = Rational(static_cast<Int>(diff.term_count()));
          c.rhs = Rational(0);
          c.equal = diff.is_zero();
          push_case(out, keep, std::move(c));
        }
      }
      return out;
    });
  }
  return jobs;
}

std::vector<Job> prop2_jobs(const VerifyOptions& opts) {
  const Int amax = opts.a_max.value_or(15), bmax = opts.b_max.value_or(15);
  const auto ns = opts.n_list.value_or(std::vector<int>{1, 2, 3});
  std::vector<Job> jobs;
  for (auto [a, b] : pairs_unordered(amax, bmax)) {
    jobs.push_back([=, ns = ns](bool keep) {
      JobResult out;
      NumericalSemigroup S(a, b);
      for (int n : ns) {
        const std::vector<Int> window = r_set_window(S, n);
        Int violations = 0;
        for (Int e : window)
          if (S.representation_count(e) != n) ++violations;
        const Int top = window.empty() ? -1 : window.back();
        for (Int k = 0; k <= top; ++k)
          if (S.representation_count(k) == n &&
              !std::binary_search(window.begin(), window.end(), k))
            ++violations;
        VerifyCase c = base_case("prop2_rsets");
        c.a = a;
        c.b = b;
        c.n = n;
        c.lhs = Rational(violations);
        c.rhs = Rational(0);
        c.equal = violations == 0;
        push_case(out, keep, std::move(c));
      }
      return out;
    });
  }
  return jobs;
}

std::vector<Job> eq11_jobs(const VerifyOptions& opts) {
  const Int m_max = opts.b_max.value_or(30);
  const auto ns = opts.n_list.value_or(n_range(1, 8));
  std::vector<Job> jobs;
  for (Int m = 1; m <= m_max; ++m) {
    jobs.push_back([=, ns = ns](bool keep) {
      JobResult out;
      for (int n : ns) {
        VerifyCase c = base_case("eq11");
        c.m = m;
        c.n = n;
        c.lhs = weighted_bernoulli_sum(m, n);
        c.rhs = weighted_bernoulli_sum_closed(m, n);
        c.equal = c.lhs == c.rhs;
        push_case(out, keep, std::move(c));
      }
      return out;
    });
  }
  return jobs;
}

std::vector<Job> eq12_jobs(const VerifyOptions& opts) {
  const Int m_max = opts.b_max.value_or(30);
  const auto ns = opts.n_list.value_or(n_range(0, 8));
  const auto xs = opts.x_list.value_or(default_x_list());
  std::vector<Job> jobs;
  for (Int m = 0; m <= m_max; ++m) {
    jobs.push_back([=, ns = ns, xs = xs](bool keep) {
      JobResult out;
      for (int n : ns)
        for (const auto& x : xs) {
          Rational brute(0);
          for (Int k = 0; k < m; ++k) brute += (x + Rational(k)).pow(n);
          VerifyCase c = base_case("eq12");
          c.m = m;
          c.n = n;
          c.x = x;
          c.lhs = std::move(brute);
          c.rhs = power_sum_closed(x, m, n);
          c.equal = c.lhs == c.rhs;
          push_case(out, keep, std::move(c));
        }
      return out;
    });
  }
  return jobs;
}

std::vector<Job> eq14_jobs(const VerifyOptions& opts) {
  const Int amax = opts.a_max.value_or(20), bmax = opts.b_max.value_or(20);
  const auto ns = opts.n_list.value_or(n_range(2, 8));
  const auto xs = opts.x_list.value_or(default_x_list());
  std::vector<Job> jobs;
  for (auto [a, b] : pairs_ordered(amax, bmax)) {
    jobs.push_back([=, ns = ns, xs = xs](bool keep) {
      JobResult out;
      for (int n : ns)
        for (const auto& x : xs) {
          VerifyCase c = base_case("eq14");
          c.a = a;
          c.b = b;
          c.n = n;
          c.x = x;
          c.lhs = lattice_power_sum(a, b, n, x, EvalMethod::brute);
          c.rhs = lattice_power_sum(a, b, n, x, EvalMethod::closed);
          c.equal = c.lhs == c.rhs;
          push_case(out, keep, std::move(c));
        }
      return out;
    });
  }
  return jobs;
}

std::vector<Job> prop5_jobs(const VerifyOptions& opts, bool at_zero) {
  const Int amax = opts.a_max.value_or(20), bmax = opts.b_max.value_or(20);
  const auto ns = opts.n_list.value_or(at_zero ? n_range(1, 6) : n_range(0, 6));
  auto xs = opts.x_list.value_or(
      std::vector<Rational>{Rational(0), Rational(1, 2), Rational(-2, 3), Rational(6), Rational(7)});
  std::vector<Job> jobs;
  for (auto [a, b] : pairs_unordered(amax, bmax)) {
    jobs.push_back([=, ns = ns, xs = xs](bool keep) {
      JobResult out;
      for (int n : ns) {
        if (at_zero) {
          VerifyCase c = base_case("prop5_zero");
          c.a = a;
          c.b = b;
          c.n = n;
          c.lhs = spectral_power_sum({a, b, n, Rational(0)}, EvalMethod::brute);
          c.rhs = spectral_power_sum_at_zero(a, b, n);
          c.equal = c.lhs == c.rhs;
          push_case(out, keep, std::move(c));
          continue;
        }
        for (const auto& x : xs) {
          VerifyCase c = base_case("prop5");
          c.a = a;
          c.b = b;
          c.n = n;
          c.x = x;
          c.lhs = spectral_power_sum({a, b, n, x}, EvalMethod::brute);
          c.rhs = spectral_power_sum({a, b, n, x}, EvalMethod::closed);
          c.equal = c.lhs == c.rhs;
          push_case(out, keep, std::move(c));
        }
      }
      return out;
    });
  }
  return jobs;
}

std::vector<Job> knot_jobs(const std::string& id, const VerifyOptions& opts) {
  const Int amax = opts.a_max.value_or(50), bmax = opts.b_max.value_or(50);
  std::vector<Job> jobs;
  for (auto [a, b] : pairs_below(2, amax, bmax)) {
    jobs.push_back([=](bool keep) {
      JobResult out;
      TorusKnotQuery q(a, b);
      VerifyCase c = base_case(id);
      c.a = a;
      c.b = b;
      if (id == "eq9") {
        c.lhs = signature_integral(q, SignatureMethod::sum15);
        c.rhs = signature_integral(q, SignatureMethod::closed9);
      } else {
        c.lhs = lattice_fraction_sum(q, FractionSumMethod::brute);
        c.rhs = lattice_fraction_sum(q, FractionSumMethod::closed);
      }
      c.equal = c.lhs == c.rhs;
      push_case(out, keep, std::move(c));
      return out;
    });
  }
  return jobs;
}

// Fixed regression set: each case pins an uncorrected closed form against the
// brute-force oracle. "equal" means the documented discrepancy reproduced AND
// the corrected form matches the oracle.
std::vector<Job> errata_jobs() {
  std::vector<Job> jobs;
  jobs.push_back([](bool keep) {
    JobResult out;
    auto add = [&](const char* name, const Rational& printed, const char* frozen_printed,
                   const Rational& oracle, bool corrected_ok) {
      VerifyCase c = base_case("errata");
      c.fn = name;
      c.lhs = printed;
      c.rhs = oracle;
      c.equal = printed == Rational::from_string(frozen_printed) && printed != oracle && corrected_ok;
      push_case(out, keep, std::move(c));
    };

    {
      const Rational oracle = weighted_bernoulli_sum(3, 1);
      add("eq11_printed(3,1)", weighted_bernoulli_sum_published(3, 1, Form::printed), "5/3", oracle,
          weighted_bernoulli_sum_closed(3, 1) == oracle &&
              weighted_bernoulli_sum_published(3, 1, Form::corrected) == oracle);
    }
    {
      const Rational oracle = spectral_power_sum({2, 3, 1, Rational(0)}, EvalMethod::brute);
      add("prop5_zero_printed(2,3,1)", spectral_power_sum_at_zero(2, 3, 1, Form::printed), "13/6",
          oracle, spectral_power_sum_at_zero(2, 3, 1) == oracle);
    }
    {
      const Rational lhs = reciprocity_lhs(2, 3, 1);
      add("prop4_printed(2,3,1)", reciprocity_rhs(2, 3, 1, RhsVariant::prop4, Form::printed),
          "13/6", lhs, reciprocity_rhs(2, 3, 1, RhsVariant::prop4) == lhs);
      add("prop3_printed(2,3,1)", reciprocity_rhs(2, 3, 1, RhsVariant::prop3, Form::printed),
          "8/3", lhs, reciprocity_rhs(2, 3, 1, RhsVariant::prop3) == lhs);
    }
    {
      // sign-fixed but with unreduced gap powers: still wrong once a gap
      // exceeds min(a,b)
      const Int a = 3, b = 5;
      const int n = 1;
      NumericalSemigroup S(a, b);
      Rational first(0);
      for (int i = 0; i <= n; ++i)
        first += Rational(Rational(a).pow(i) + Rational(b).pow(i)) * bernoulli_number(i) *
                 sylvester_sum(S, n - i);
      const Rational half_fixed = first + bernoulli_pair_convolution(Rational(a), n, Form::corrected) +
                                  bernoulli_pair_convolution(Rational(b), n, Form::corrected) +
                                  Rational(2 * n, n + 1) * bernoulli_number(n + 1);
      const Rational lhs = reciprocity_lhs(a, b, n);
      add("prop4_unreduced_gaps(3,5,1)", half_fixed, "79/6", lhs,
          reciprocity_rhs(a, b, n, RhsVariant::prop4) == lhs);
    }
    {
      // replication sum started at k = 1 instead of k = 0
      const Rational x(1, 3);
      Rational printed = periodic_bernoulli(2, x + Rational(1, 2)) * Rational(2).pow(1);
      const Rational oracle = periodic_bernoulli(2, Rational(2) * x);
      add("distribution_k1(2,2,1/3)", printed, "1/18", oracle,
          distribution_residual(2, 2, x).equal());
    }
    return out;
  });
  return jobs;
}

}  // namespace

const std::vector<std::string>& known_identities() {
  static const std::vector<std::string> ids = {
      "eq1",     "prop3",        "prop4",   "prop1_genfun", "prop2_rsets", "gassert_shor",
      "tuenter", "mordell",      "mordell_split", "eq11",   "eq12",        "eq14",
      "prop5",   "prop5_zero",   "eq9",     "fraction_sum", "errata"};
  return ids;
}

bool is_known_identity(std::string_view id) {
  const auto& ids = known_identities();
  return std::find(ids.begin(), ids.end(), id) != ids.end();
}

const std::vector<FunctionSpec>& verify_corpus() {
  static const std::vector<FunctionSpec> corpus = [] {
    auto r = [](Int p, Int q) { return Rational(p, q); };
    std::vector<FunctionSpec> fs;
    fs.push_back(FunctionSpec::poly({r(1, 2), Rational(0), Rational(3)}));
    fs.push_back(FunctionSpec::poly({Rational(-2), r(7, 3), Rational(0), r(-1, 4), Rational(5)}));
    fs.push_back(FunctionSpec::poly(
        {r(3, 7), r(-1, 2), Rational(1), Rational(0), r(-5, 3), r(2, 9), Rational(11)}));
    fs.push_back(FunctionSpec::qpow(Rational(2)));
    fs.push_back(FunctionSpec::qpow(Rational(3)));
    fs.push_back(FunctionSpec::qpow(r(1, 2)));
    fs.push_back(FunctionSpec::qpow(Rational(-1)));
    fs.push_back(FunctionSpec::periodic_bernoulli(1, r(1, 2)));
    fs.push_back(FunctionSpec::periodic_bernoulli(2, r(1, 3)));
    fs.push_back(FunctionSpec::periodic_bernoulli(3, r(2, 5)));
    fs.push_back(FunctionSpec::periodic_bernoulli(4, r(5, 6)));
    fs.push_back(FunctionSpec::periodic_bernoulli(5, r(1, 7)));
    return fs;
  }();
  return corpus;
}

int worker_count(int requested) {
  if (requested > 0) return requested;
  int hw = static_cast<int>(std::thread::hardware_concurrency());
  if (hw < 1) hw = 1;
  if (const char* env = std::getenv("RECIPROCITY_LAB_THREADS")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != env && v > 0) return static_cast<int>(std::min<long>(v, hw));
  }
  return hw;
}

VerifyReport run_verify(const std::string& identity, const VerifyOptions& opts,
                        const CaseSink& sink) {
  if (!is_known_identity(identity))
    throw std::invalid_argument("unknown identity: " + identity);
  const auto t0 = std::chrono::steady_clock::now();
  VerifyReport report;
  report.identity = identity;

  std::vector<Job> jobs;
  if (identity == "eq1") jobs = reciprocity_jobs(identity, RhsVariant::eq1, opts);
  else if (identity == "prop3") jobs = reciprocity_jobs(identity, RhsVariant::prop3, opts);
  else if (identity == "prop4") jobs = reciprocity_jobs(identity, RhsVariant::prop4, opts);
  else if (identity == "gassert_shor") jobs = gassert_jobs(opts);
  else if (identity == "tuenter" || identity == "mordell" || identity == "mordell_split")
    jobs = single_shot_jobs(identity, opts);
  else if (identity == "prop1_genfun") jobs = prop1_jobs(opts);
  else if (identity == "prop2_rsets") jobs = prop2_jobs(opts);
  else if (identity == "eq11") jobs = eq11_jobs(opts);
  else if (identity == "eq12") jobs = eq12_jobs(opts);
  else if (identity == "eq14") jobs = eq14_jobs(opts);
  else if (identity == "prop5") jobs = prop5_jobs(opts, false);
  else if (identity == "prop5_zero") jobs = prop5_jobs(opts, true);
  else if (identity == "eq9" || identity == "fraction_sum") jobs = knot_jobs(identity, opts);
  else jobs = errata_jobs();

  run_jobs(jobs, worker_count(opts.threads), sink, report);
  report.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                          std::chrono::steady_clock::now() - t0)
                          .count();
  return report;
}

std::vector<BenchRow> run_bench(const std::vector<std::pair<Int, Int>>& pairs, int n) {
  if (n < 1 || n % 2 == 0) throw std::invalid_argument("run_bench: n must be odd");
  std::vector<BenchRow> rows;
  rows.reserve(pairs.size());
  for (auto [a, b] : pairs) {
    BenchRow row;
    row.a = a;
    row.b = b;
    row.n = n;
    const auto t0 = std::chrono::steady_clock::now();
    row.value = apostol_sum_fast(a, b, n);
    row.t_fast_ms = std::chrono::duration<double, std::milli>(
                        std::chrono::steady_clock::now() - t0)
                        .count();
    if (b <= 10000) {
      const auto t1 = std::chrono::steady_clock::now();
      const Rational naive = apostol_sum_naive(a, b, n);
      row.t_naive_ms = std::chrono::duration<double, std::milli>(
                           std::chrono::steady_clock::now() - t1)
                           .count();
      row.naive_run = true;
      row.equal = naive == row.value;
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace reclab

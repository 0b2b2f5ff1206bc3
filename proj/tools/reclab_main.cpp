// Command-line surface: single computations, identity-verification sweeps
// (JSON lines or CSV), the erratum regression set, and a naive-vs-fast
// benchmark. Exit codes: 0 all verified, 1 identity failure, 2 usage error.

#include <cstdio>
#include <iostream>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "reclab/bernoulli.hpp"
#include "reclab/dedekind.hpp"
#include "reclab/knot.hpp"
#include "reclab/semigroup.hpp"
#include "reclab/spectra.hpp"
#include "reclab/verify.hpp"

namespace {

using namespace reclab;

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::istringstream in(s);
  std::string tok;
  while (std::getline(in, tok, sep)) out.push_back(tok);
  return out;
}

std::vector<int> parse_int_list(const std::string& s) {
  std::vector<int> out;
  for (const auto& tok : split(s, ',')) {
    size_t pos = 0;
    int v = std::stoi(tok, &pos);
    if (pos != tok.size()) throw std::invalid_argument("malformed integer list entry '" + tok + "'");
    out.push_back(v);
  }
  return out;
}

std::vector<Rational> parse_rational_list(const std::string& s) {
  std::vector<Rational> out;
  for (const auto& tok : split(s, ',')) out.push_back(Rational::from_string(tok));
  return out;
}

std::vector<std::pair<Int, Int>> parse_pairs(const std::string& s) {
  std::vector<std::pair<Int, Int>> out;
  if (s.empty()) return out;
  for (const auto& tok : split(s, ',')) {
    auto parts = split(tok, ':');
    if (parts.size() != 2) throw std::invalid_argument("malformed pair '" + tok + "' (want a:b)");
    out.emplace_back(std::stoll(parts[0]), std::stoll(parts[1]));
  }
  return out;
}

void require_coprime_cli(Int a, Int b) {
  if (a < 1 || b < 1) throw std::invalid_argument("a and b must be positive");
  if (std::gcd(a, b) != 1) throw std::invalid_argument("gcd(a,b) must be 1");
}

std::string verify_case_json(const VerifyCase& c) {
  std::string out = "{\"identity\":\"" + c.identity + "\"";
  if (c.a) out += ",\"a\":" + std::to_string(*c.a);
  if (c.b) out += ",\"b\":" + std::to_string(*c.b);
  if (c.m) out += ",\"m\":" + std::to_string(*c.m);
  if (c.n) out += ",\"n\":" + std::to_string(*c.n);
  if (c.x) out += ",\"x\":\"" + c.x->str() + "\"";
  if (c.fn) out += ",\"f\":\"" + *c.fn + "\"";
  out += ",\"lhs\":\"" + c.lhs.str() + "\",\"rhs\":\"" + c.rhs.str() + "\",\"equal\":";
  out += c.equal ? "true}" : "false}";
  return out;
}

std::string verify_case_csv(const VerifyCase& c) {
  auto opt_int = [](const std::optional<Int>& v) { return v ? std::to_string(*v) : std::string(); };
  std::string out = c.identity;
  out += ',' + opt_int(c.a) + ',' + opt_int(c.b) + ',' + opt_int(c.m);
  out += ',' + (c.n ? std::to_string(*c.n) : std::string());
  out += ',' + (c.x ? c.x->str() : std::string());
  out += ',' + (c.fn ? *c.fn : std::string());
  out += ',' + c.lhs.str() + ',' + c.rhs.str() + ',';
  out += c.equal ? "true" : "false";
  return out;
}

int cmd_verify(const std::string& identity, const VerifyOptions& opts, const std::string& format) {
  if (!is_known_identity(identity)) {
    std::string known;
    for (const auto& id : known_identities()) known += (known.empty() ? "" : ", ") + id;
    throw std::invalid_argument("unknown identity '" + identity + "' (known: " + known + ")");
  }
  const bool csv = format == "csv";
  if (csv) std::cout << "identity,a,b,m,n,x,f,lhs,rhs,equal\n";
  CaseSink sink = [&](const VerifyCase& c) {
    std::cout << (csv ? verify_case_csv(c) : verify_case_json(c)) << '\n';
  };
  VerifyReport rep = run_verify(identity, opts, sink);
  if (csv) {
    std::cerr << "# identity=" << rep.identity << " cases_run=" << rep.cases_run
              << " failures=" << rep.failures.size() << " elapsed_ms=" << rep.elapsed_ms << '\n';
  } else {
    std::cout << "{\"identity\":\"" << rep.identity << "\",\"cases_run\":" << rep.cases_run
              << ",\"failures\":" << rep.failures.size() << ",\"elapsed_ms\":" << rep.elapsed_ms
              << "}\n";
  }
  return rep.failures.empty() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  std::ios::sync_with_stdio(false);
  CLI::App app{"reclab: exact verification lab for Dedekind-sum reciprocity, numerical semigroups, "
               "Brieskorn spectra and torus-knot signatures"};
  app.require_subcommand(1);
  std::string format = "json";
  app.add_option("--format", format, "output format")->check(CLI::IsMember({"json", "csv"}));

  // bernoulli <n>
  int bern_n = 0;
  auto* c_bern = app.add_subcommand("bernoulli", "print B_n as p/q");
  c_bern->add_option("n", bern_n, "index")->required()->check(CLI::NonNegativeNumber);

  // semigroup <a> <b> [action] [arg]
  Int sg_a = 0, sg_b = 0, sg_arg = -1;
  std::string sg_action = "gaps";
  auto* c_sg = app.add_subcommand("semigroup", "gap sets, Apery sets, Sylvester sums, "
                                               "generating polynomials of S_{a,b}");
  c_sg->add_option("a", sg_a)->required();
  c_sg->add_option("b", sg_b)->required();
  c_sg->add_option("action", sg_action,
                   "gaps (default) | frobenius | apery <m> | sylvester <m> | genpoly [m]");
  c_sg->add_option("arg", sg_arg, "m for apery/sylvester/genpoly");

  // dedekind <a> <b> --n <n> [--method ...] [--rhs ...]
  Int dd_a = 0, dd_b = 0;
  int dd_n = 1;
  std::string dd_method = "naive", dd_rhs = "eq1";
  auto* c_dd = app.add_subcommand("dedekind", "Apostol sum reciprocity report");
  c_dd->add_option("a", dd_a)->required();
  c_dd->add_option("b", dd_b)->required();
  c_dd->add_option("--n", dd_n, "odd power")->required();
  c_dd->add_option("--method", dd_method)->check(CLI::IsMember({"naive", "fast", "both"}));
  c_dd->add_option("--rhs", dd_rhs)->check(CLI::IsMember({"eq1", "prop3", "prop4"}));

  // spectra <a> <b> --n <n> [--x p/q] [--method ...]
  Int sp_a = 0, sp_b = 0;
  int sp_n = 0;
  std::string sp_x = "0", sp_method = "both";
  auto* c_sp = app.add_subcommand("spectra", "shifted spectral power sums");
  c_sp->add_option("a", sp_a)->required();
  c_sp->add_option("b", sp_b)->required();
  c_sp->add_option("--n", sp_n, "power")->required();
  c_sp->add_option("--x", sp_x, "shift, as p/q");
  c_sp->add_option("--method", sp_method)->check(CLI::IsMember({"brute", "closed", "both"}));

  // knot <a> <b> [--method ...]
  Int kn_a = 0, kn_b = 0;
  std::string kn_method = "both";
  auto* c_kn = app.add_subcommand("knot", "torus-knot signature integral");
  c_kn->add_option("a", kn_a)->required();
  c_kn->add_option("b", kn_b)->required();
  c_kn->add_option("--method", kn_method)->check(CLI::IsMember({"sum15", "closed9", "both"}));

  // verify <identity> [ranges]
  std::string vf_identity, vf_nlist, vf_xlist;
  Int vf_amax = 0, vf_bmax = 0;
  auto* c_vf = app.add_subcommand("verify", "sweep one identity, JSON lines per case");
  c_vf->add_option("identity", vf_identity)->required();
  c_vf->add_option("--a-max", vf_amax);
  c_vf->add_option("--b-max", vf_bmax);
  c_vf->add_option("--n-list", vf_nlist, "comma-separated");
  c_vf->add_option("--x-list", vf_xlist, "comma-separated p/q");

  // bench --pairs a:b,... --n <odd>
  std::string bn_pairs;
  int bn_n = 1;
  auto* c_bn = app.add_subcommand("bench", "time naive vs fast Apostol sums");
  c_bn->add_option("--pairs", bn_pairs, "comma-separated a:b pairs");
  c_bn->add_option("--n", bn_n, "odd power")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return 2;
  }

  const bool csv = format == "csv";
  try {
    if (c_bern->parsed()) {
      std::cout << bernoulli_number(bern_n).str() << '\n';
      return 0;
    }

    if (c_sg->parsed()) {
      require_coprime_cli(sg_a, sg_b);
      NumericalSemigroup S(sg_a, sg_b);
      if (sg_action == "gaps") {
        GapSet g = S.gaps();
        if (csv) {
          for (size_t i = 0; i < g.elements.size(); ++i)
            std::cout << (i ? "," : "") << g.elements[i];
          std::cout << '\n';
        } else {
          std::cout << g.to_json() << '\n';
        }
      } else if (sg_action == "frobenius") {
        std::cout << S.frobenius() << '\n';
      } else if (sg_action == "apery") {
        if (sg_arg < 0) throw std::invalid_argument("apery requires m");
        AperySet ap = S.apery_set(sg_arg);
        if (csv) {
          for (size_t i = 0; i < ap.elements.size(); ++i)
            std::cout << (i ? "," : "") << ap.elements[i];
          std::cout << '\n';
        } else {
          std::cout << ap.to_json() << '\n';
        }
      } else if (sg_action == "sylvester") {
        if (sg_arg < 0) throw std::invalid_argument("sylvester requires m");
        std::cout << sylvester_sum(S, static_cast<int>(sg_arg)).str() << '\n';
      } else if (sg_action == "genpoly") {
        SparsePoly p = sg_arg < 0 ? gen_poly_gaps(S) : gen_poly_apery(S, sg_arg);
        std::cout << p.to_json() << '\n';
      } else {
        throw std::invalid_argument("unknown semigroup action '" + sg_action + "'");
      }
      return 0;
    }

    if (c_dd->parsed()) {
      require_coprime_cli(dd_a, dd_b);
      if (dd_n < 1 || dd_n % 2 == 0) throw std::invalid_argument("--n must be a positive odd integer");
      const RhsVariant variant = *rhs_variant_from_string(dd_rhs);
      ReciprocityReport rep = check_reciprocity(dd_a, dd_b, dd_n, variant, dd_method == "fast");
      bool ok = rep.equal;
      if (dd_method == "both") {
        ok = ok && apostol_sum_fast(dd_a, dd_b, dd_n) == apostol_sum_naive(dd_a, dd_b, dd_n) &&
             apostol_sum_fast(dd_b, dd_a, dd_n) == apostol_sum_naive(dd_b, dd_a, dd_n);
        rep.equal = ok;
      }
      if (csv) {
        std::cout << "a,b,n,variant,lhs,rhs,equal\n"
                  << rep.a << ',' << rep.b << ',' << rep.n << ',' << to_string(rep.variant) << ','
                  << rep.lhs.str() << ',' << rep.rhs.str() << ',' << (rep.equal ? "true" : "false")
                  << '\n';
      } else {
        std::cout << rep.to_json() << '\n';
      }
      return ok ? 0 : 1;
    }

    if (c_sp->parsed()) {
      require_coprime_cli(sp_a, sp_b);
      if (sp_n < 0) throw std::invalid_argument("--n must be nonnegative");
      const Rational x = Rational::from_string(sp_x);
      std::vector<std::pair<std::string, Rational>> rows;
      if (sp_method != "closed")
        rows.emplace_back("brute", spectral_power_sum({sp_a, sp_b, sp_n, x}, EvalMethod::brute));
      if (sp_method != "brute")
        rows.emplace_back("closed", spectral_power_sum({sp_a, sp_b, sp_n, x}, EvalMethod::closed));
      const bool equal = rows.size() < 2 || rows[0].second == rows[1].second;
      if (csv) {
        std::cout << "a,b,n,x,method,value\n";
        for (const auto& [method, value] : rows)
          std::cout << sp_a << ',' << sp_b << ',' << sp_n << ',' << x.str() << ',' << method << ','
                    << value.str() << '\n';
      } else {
        std::string out = "{\"a\":" + std::to_string(sp_a) + ",\"b\":" + std::to_string(sp_b) +
                          ",\"n\":" + std::to_string(sp_n) + ",\"x\":\"" + x.str() + "\"";
        for (const auto& [method, value] : rows) out += ",\"" + method + "\":\"" + value.str() + "\"";
        if (rows.size() == 2) out += std::string(",\"equal\":") + (equal ? "true" : "false");
        std::cout << out << "}\n";
      }
      return equal ? 0 : 1;
    }

    if (c_kn->parsed()) {
      TorusKnotQuery q(kn_a, kn_b);
      std::vector<std::pair<std::string, Rational>> rows;
      if (kn_method != "closed9")
        rows.emplace_back("sum15", signature_integral(q, SignatureMethod::sum15));
      if (kn_method != "sum15")
        rows.emplace_back("closed9", signature_integral(q, SignatureMethod::closed9));
      const bool equal = rows.size() < 2 || rows[0].second == rows[1].second;
      if (csv) {
        std::cout << "a,b,method,value\n";
        for (const auto& [method, value] : rows)
          std::cout << kn_a << ',' << kn_b << ',' << method << ',' << value.str() << '\n';
      } else {
        std::string out = "{\"a\":" + std::to_string(kn_a) + ",\"b\":" + std::to_string(kn_b);
        for (const auto& [method, value] : rows) out += ",\"" + method + "\":\"" + value.str() + "\"";
        if (rows.size() == 2) out += std::string(",\"equal\":") + (equal ? "true" : "false");
        std::cout << out << "}\n";
      }
      return equal ? 0 : 1;
    }

    if (c_vf->parsed()) {
      VerifyOptions opts;
      if (vf_amax > 0) opts.a_max = vf_amax;
      if (vf_bmax > 0) opts.b_max = vf_bmax;
      if (!vf_nlist.empty()) opts.n_list = parse_int_list(vf_nlist);
      if (!vf_xlist.empty()) opts.x_list = parse_rational_list(vf_xlist);
      return cmd_verify(vf_identity, opts, format);
    }

    if (c_bn->parsed()) {
      const auto pairs = parse_pairs(bn_pairs);
      for (auto [a, b] : pairs) require_coprime_cli(a, b);
      const auto rows = run_bench(pairs, bn_n);
      bool all_equal = true;
      if (csv) std::cout << "a,b,n,t_naive_ms,t_fast_ms,equal\n";
      for (const auto& r : rows) {
        all_equal = all_equal && r.equal;
        if (csv) {
          std::cout << r.a << ',' << r.b << ',' << r.n << ',';
          if (r.naive_run) std::cout << r.t_naive_ms;
          std::cout << ',' << r.t_fast_ms << ',';
          std::cout << (r.naive_run ? (r.equal ? "true" : "false") : "") << '\n';
        } else {
          std::string out = "{\"a\":" + std::to_string(r.a) + ",\"b\":" + std::to_string(r.b) +
                            ",\"n\":" + std::to_string(r.n);
          if (r.naive_run) out += ",\"t_naive_ms\":" + std::to_string(r.t_naive_ms);
          out += ",\"t_fast_ms\":" + std::to_string(r.t_fast_ms);
          if (r.naive_run) out += std::string(",\"equal\":") + (r.equal ? "true" : "false");
          out += ",\"value\":\"" + r.value.str() + "\"";
          std::cout << out << "}\n";
        }
      }
      return all_equal ? 0 : 1;
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}

#include "reclab/function_spec.hpp"

#include "json.hpp"

#include <stdexcept>

#include "reclab/bernoulli.hpp"

namespace reclab {

using json = nlohmann::ordered_json;

FunctionSpec FunctionSpec::poly(std::vector<Rational> coeffs) {
  return FunctionSpec(PolySpec{std::move(coeffs)});
}

FunctionSpec FunctionSpec::qpow(const Rational& q) {
  if (q.is_zero()) throw std::invalid_argument("FunctionSpec::qpow: q must be nonzero");
  return FunctionSpec(QPowSpec{q});
}

FunctionSpec FunctionSpec::periodic_bernoulli(int n, const Rational& scale) {
  if (n < 1) throw std::invalid_argument("FunctionSpec::periodic_bernoulli: n must be positive");
  return FunctionSpec(PeriodicBernoulliSpec{n, scale});
}

Rational FunctionSpec::eval(const Rational& t) const {
  if (const auto* p = std::get_if<PolySpec>(&spec_)) {
    Rational acc(0);
    for (auto it = p->coeffs.rbegin(); it != p->coeffs.rend(); ++it) acc = acc * t + *it;
    return acc;
  }
  if (const auto* q = std::get_if<QPowSpec>(&spec_)) {
    if (!t.is_integer()) throw std::domain_error("QPow evaluated at non-integer argument");
    mpz_class e = t.numerator();
    if (!e.fits_slong_p()) throw std::domain_error("QPow exponent out of range");
    return q->q.pow(e.get_si());
  }
  const auto& pb = std::get<PeriodicBernoulliSpec>(spec_);
  return reclab::periodic_bernoulli(pb.n, pb.scale * t);
}

std::string FunctionSpec::describe() const {
  if (const auto* p = std::get_if<PolySpec>(&spec_)) {
    std::string out = "poly[";
    for (size_t i = 0; i < p->coeffs.size(); ++i) {
      if (i) out += ',';
      out += p->coeffs[i].str();
    }
    return out + "]";
  }
  if (const auto* q = std::get_if<QPowSpec>(&spec_)) return "qpow[" + q->q.str() + "]";
  const auto& pb = std::get<PeriodicBernoulliSpec>(spec_);
  return "pbern[" + std::to_string(pb.n) + "," + pb.scale.str() + "]";
}

std::string FunctionSpec::to_json() const {
  json j;
  if (const auto* p = std::get_if<PolySpec>(&spec_)) {
    j["kind"] = "poly";
    json coeffs = json::array();
    for (const auto& c : p->coeffs) coeffs.push_back(c.str());
    j["coeffs"] = coeffs;
  } else if (const auto* q = std::get_if<QPowSpec>(&spec_)) {
    j["kind"] = "qpow";
    j["q"] = q->q.str();
  } else {
    const auto& pb = std::get<PeriodicBernoulliSpec>(spec_);
    j["kind"] = "pbern";
    j["n"] = pb.n;
    j["scale"] = pb.scale.str();
  }
  return j.dump();
}

FunctionSpec FunctionSpec::from_json(std::string_view text) {
  json j = json::parse(text);
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "poly") {
    std::vector<Rational> coeffs;
    for (const auto& c : j.at("coeffs")) coeffs.push_back(Rational::from_string(c.get<std::string>()));
    return poly(std::move(coeffs));
  }
  if (kind == "qpow") return qpow(Rational::from_string(j.at("q").get<std::string>()));
  if (kind == "pbern")
    return periodic_bernoulli(j.at("n").get<int>(),
                              Rational::from_string(j.at("scale").get<std::string>()));
  throw std::invalid_argument("FunctionSpec: unknown kind '" + kind + "'");
}

FunctionTable::FunctionTable(const FunctionSpec& f) : f_(f) {
  if (const auto* p = std::get_if<PolySpec>(&f.spec())) {
    mpz_class den(1);
    for (const auto& c : p->coeffs) {
      mpz_class d = c.denominator(), g;
      mpz_gcd(g.get_mpz_t(), den.get_mpz_t(), d.get_mpz_t());
      den = den / g * d;
    }
    zden_ = den;
    zc_.reserve(p->coeffs.size());
    for (const auto& c : p->coeffs) zc_.push_back(c.numerator() * (den / c.denominator()));
  } else if (std::holds_alternative<QPowSpec>(f.spec())) {
    powers_.push_back(Rational(1));
  } else {
    const auto& pb = std::get<PeriodicBernoulliSpec>(f.spec());
    mpz_class d = pb.scale.denominator();
    period_ = d.fits_slong_p() ? d.get_si() : 0;
    if (period_ > 0) residue_.resize(static_cast<size_t>(period_));
  }
}

const Rational& FunctionTable::at(Int k) {
  if (k < 0) throw std::invalid_argument("FunctionTable::at: negative argument");
  if (const auto* q = std::get_if<QPowSpec>(&f_.spec())) {
    while (static_cast<Int>(powers_.size()) <= k) powers_.push_back(powers_.back() * q->q);
    return powers_[static_cast<size_t>(k)];
  }
  if (period_ > 0) {
    size_t r = static_cast<size_t>(k % period_);
    if (!residue_[r]) residue_[r] = f_.eval(Rational(static_cast<Int>(r)));
    return *residue_[r];
  }
  if (std::holds_alternative<PolySpec>(f_.spec())) {
    if (static_cast<Int>(memo_.size()) <= k) memo_.resize(static_cast<size_t>(k) + 1);
    auto& slot = memo_[static_cast<size_t>(k)];
    if (!slot) {
      if (zc_.empty()) {
        slot = Rational(0);
      } else {
        mpz_class acc = zc_.back();
        for (size_t i = zc_.size() - 1; i-- > 0;) acc = acc * static_cast<long>(k) + zc_[i];
        slot = Rational(acc, zden_);
      }
    }
    return *slot;
  }
  // periodic Bernoulli with a period too large to table
  if (static_cast<Int>(memo_.size()) <= k) memo_.resize(static_cast<size_t>(k) + 1);
  auto& slot = memo_[static_cast<size_t>(k)];
  if (!slot) slot = f_.eval(Rational(k));
  return *slot;
}

}  // namespace reclab

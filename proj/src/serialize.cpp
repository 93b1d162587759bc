#include "mgn/serialize.hpp"

#include "mgn/error.hpp"

namespace mgn::io {
namespace {

int index_key(const std::string& key, const char* what) {
  std::size_t used = 0;
  int value = 0;
  try {
    value = std::stoi(key, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != key.size() || value < 1) {
    throw SchemaError(std::string(what) + ": key \"" + key + "\" is not a positive integer");
  }
  return value;
}

const Json& field(const Json& j, const char* name) {
  if (!j.is_object() || !j.contains(name)) throw SchemaError(std::string("missing field \"") + name + "\"");
  return j.at(name);
}

long integer_value(const Json& j, const char* what) {
  if (!j.is_number_integer()) throw SchemaError(std::string(what) + " must be an integer");
  return j.get<long>();
}

std::map<int, long> exponent_map(const Json& j, const char* what) {
  if (!j.is_object()) throw SchemaError(std::string(what) + " must be an object");
  std::map<int, long> out;
  for (const auto& [key, value] : j.items()) out[index_key(key, what)] = integer_value(value, what);
  return out;
}

Json exponent_json(const std::map<int, long>& exponents) {
  Json out = Json::object();
  for (const auto& [j, k] : exponents) out[std::to_string(j)] = k;
  return out;
}

std::string braced(long v) {
  const auto s = std::to_string(v);
  return s.size() == 1 ? s : "{" + s + "}";
}

}  // namespace

Json to_json(const Rational& r) { return r.str(); }

Rational rational_from_json(const Json& j) {
  if (j.is_string()) return Rational::parse(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long>());
  throw SchemaError("expected an exact rational string \"num/den\"");
}

Json to_json(const PMonomial& m) {
  Json out = Json::object();
  for (const auto& [j, e] : m.exponents()) out[std::to_string(j)] = e;
  return out;
}

PMonomial monomial_from_json(const Json& j) {
  std::vector<PMonomial::Exponent> exps;
  for (const auto& [idx, e] : exponent_map(j, "monomial")) {
    if (e < 0) throw SchemaError("monomial exponents must be non-negative");
    exps.push_back({idx, static_cast<int>(e)});
  }
  return PMonomial::from_exponents(std::move(exps));
}

Json to_json(const PPolynomial& p) {
  Json out = Json::array();
  for (const auto& [m, c] : p.terms()) out.push_back({{"monomial", to_json(m)}, {"coefficient", to_json(c)}});
  return out;
}

PPolynomial ppolynomial_from_json(const Json& j) {
  if (!j.is_array()) throw SchemaError("polynomial must be an array of terms");
  PPolynomial p;
  for (const auto& term : j) p.add_term(monomial_from_json(field(term, "monomial")), rational_from_json(field(term, "coefficient")));
  return p;
}

Json to_json(const SchurExpansion& s) {
  Json out = Json::array();
  for (const auto& [lambda, m] : s) out.push_back({{"partition", lambda.parts()}, {"multiplicity", to_json(m)}});
  return out;
}

Json to_json(const TruncatedSeries& s) {
  Json out = Json::array();
  for (int n = 0; n <= s.order(); ++n) out.push_back({{"n", n}, {"coefficient", to_json(s[n])}});
  return out;
}

TruncatedSeries series_from_json(const Json& j) {
  if (!j.is_array() || j.empty()) throw SchemaError("series must be a non-empty array");
  TruncatedSeries s(static_cast<int>(j.size()) - 1);
  for (const auto& entry : j) {
    const long n = integer_value(field(entry, "n"), "n");
    if (n < 0 || n > s.order()) throw SchemaError("series index out of range");
    s[static_cast<int>(n)] = ppolynomial_from_json(field(entry, "coefficient"));
  }
  return s;
}

Json to_json(const moduli::Signature& sig) {
  return {{"genus", sig.genus},
          {"order", sig.ord},
          {"exponents", exponent_json(sig.exponents)},
          {"quotient_genus", sig.quotient_genus},
          {"branch_points", sig.branch_points},
          {"classes", sig.classes}};
}

Json to_json(const moduli::CoefficientRecord& rec) {
  return {{"signature", to_json(rec.signature)},
          {"coefficient", to_json(rec.coefficient)},
          {"breakdown",
           {{"chi_orb", to_json(rec.chi_orb)},
            {"monodromy_count", to_string(rec.monodromy_count)},
            {"n_value", to_string(rec.n_value)},
            {"denominator", to_string(rec.denominator)}}}};
}

confspace::GroupActionData group_action_from_json(const Json& j) {
  confspace::GroupActionData data;
  data.group_order = integer_value(field(j, "group_order"), "group_order");
  const auto& elements = field(j, "elements");
  if (!elements.is_array()) throw SchemaError("\"elements\" must be an array");
  for (const auto& e : elements) {
    confspace::GroupElementData element;
    const auto& label = field(e, "label");
    if (!label.is_string()) throw SchemaError("element label must be a string");
    element.label = label.get<std::string>();
    element.chi_by_orbit_length = exponent_map(field(e, "chi_by_orbit_length"), "chi_by_orbit_length");
    data.elements.push_back(std::move(element));
  }
  data.validate();
  return data;
}

Json to_json(const confspace::GroupActionData& data) {
  Json elements = Json::array();
  for (const auto& e : data.elements) {
    elements.push_back({{"label", e.label}, {"chi_by_orbit_length", exponent_json(e.chi_by_orbit_length)}});
  }
  return {{"group_order", data.group_order}, {"elements", elements}};
}

std::vector<confspace::Stratum> strata_from_json(const Json& j) {
  const auto& list = field(j, "strata");
  if (!list.is_array()) throw SchemaError("\"strata\" must be an array");
  std::vector<confspace::Stratum> out;
  for (const auto& s : list) {
    out.push_back({rational_from_json(field(s, "weight")), exponent_map(field(s, "exponents"), "exponents")});
  }
  return out;
}

Json strata_to_json(const std::vector<confspace::Stratum>& strata) {
  Json list = Json::array();
  for (const auto& s : strata) list.push_back({{"weight", to_json(s.weight)}, {"exponents", exponent_json(s.exponents)}});
  return {{"strata", list}};
}

std::string latex_factors(const std::map<int, long>& exponents) {
  std::string out;
  for (const auto& [j, k] : exponents) {
    if (k == 0) continue;
    out += "(1+p_" + braced(j) + "t";
    if (j != 1) out += "^" + braced(j);
    out += ")";
    if (k != 1) out += "^" + braced(k);
  }
  return out;
}

std::string latex_rational(const Rational& r) {
  const Rational mag = r.sign() < 0 ? -r : r;
  std::string body = mag.is_integer() ? mag.short_str()
                                      : "\\frac{" + to_string(mag.numerator()) + "}{" + to_string(mag.denominator()) + "}";
  return (r.sign() < 0 ? "-" : "") + body;
}

std::string latex_term(const Rational& weight, const std::map<int, long>& exponents, bool leading) {
  std::string sign = weight.sign() < 0 ? "-" : (leading ? "" : "+");
  const Rational mag = weight.sign() < 0 ? -weight : weight;
  const std::string factors = latex_factors(exponents);
  std::string coeff = latex_rational(mag);
  if (mag == Rational(1) && !factors.empty()) coeff.clear();
  return sign + coeff + factors;
}

std::string latex_polynomial(const PPolynomial& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (const auto& [m, c] : p.terms()) {
    const Rational mag = c.sign() < 0 ? -c : c;
    out += c.sign() < 0 ? "-" : (out.empty() ? "" : "+");
    std::string mono;
    for (const auto& [j, e] : m.exponents()) {
      mono += "p_" + braced(j);
      if (e != 1) mono += "^" + braced(e);
    }
    if (mono.empty() || mag != Rational(1)) out += latex_rational(mag);
    out += mono;
  }
  return out;
}

}  // namespace mgn::io

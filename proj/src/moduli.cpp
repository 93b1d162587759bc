#include "mgn/moduli.hpp"

#include <algorithm>
#include <functional>

#include "mgn/arith.hpp"
#include "mgn/cyclic.hpp"
#include "mgn/error.hpp"

namespace mgn::moduli {
namespace {

bool is_stable(int h, int s) {
  if (h < 0 || s < 0) return false;
  if (h == 0) return s >= 3;
  if (h == 1) return s >= 1;
  return true;
}

std::string exponents_str(const std::map<int, long>& exponents) {
  std::string out;
  for (const auto& [j, k] : exponents) {
    if (!out.empty()) out += " ";
    out += "k" + std::to_string(j) + "=" + std::to_string(k);
  }
  return out;
}

}  // namespace

Rational orb_chi_moduli(int h, int s) {
  if (!is_stable(h, s)) {
    throw UnstableError("(h, s) = (" + std::to_string(h) + ", " + std::to_string(s) +
                        ") is unstable: M_{h,s} needs s >= 3 for h = 0 and s >= 1 for h = 1");
  }
  if (h == 0) {
    Rational f(arith::factorial(s - 3));
    return (s - 3) % 2 == 0 ? f : -f;
  }
  Rational value = Rational(arith::factorial(2L * h - 3 + s)) * Rational(2L * h - 1) * arith::bernoulli(2 * h) /
                   Rational(arith::factorial(2L * h));
  return s % 2 == 0 ? value : -value;
}

Rational printed_orbifold_euler(int g, int s) {
  if (g < 2 || s < 0) throw DomainError("printed_orbifold_euler: needs g >= 2 and s >= 0");
  Rational value = Rational(2L * g - 1) * arith::bernoulli(2 * g) / Rational(arith::factorial(2L * g - 3));
  return s % 2 == 0 ? value : -value;
}

long Signature::k(int j) const {
  auto it = exponents.find(j);
  return it == exponents.end() ? 0 : it->second;
}

std::int64_t Signature::monodromy_gcd() const {
  std::int64_t g = ord;
  for (auto l : classes) g = arith::gcd(g, l);
  return g;
}

std::vector<long> Signature::key() const {
  std::vector<long> out;
  for (auto j : arith::divisors(ord)) out.push_back(k(static_cast<int>(j)));
  return out;
}

std::string Signature::str() const { return "ord=" + std::to_string(ord) + " " + exponents_str(exponents); }

std::strong_ordering operator<=>(const Signature& a, const Signature& b) {
  if (auto c = a.genus <=> b.genus; c != 0) return c;
  if (auto c = a.ord <=> b.ord; c != 0) return c;
  return a.key() <=> b.key();
}

Rational quotient_genus(const std::map<int, long>& exponents, const FormulaOptions& options) {
  long sum = 0;
  for (const auto& [j, k] : exponents) sum += k;
  return Rational(options.printed_quotient_genus ? 1 - sum : 2 - sum) / Rational(2);
}

Signature make_signature(int genus, int ord, std::map<int, long> exponents, const FormulaOptions& options) {
  if (genus < 2) throw DomainError("signature: genus must be at least 2");
  if (ord < 1) throw DomainError("signature: automorphism order must be positive");
  Signature sig;
  sig.genus = genus;
  sig.ord = ord;
  long euler = 0;
  for (const auto& [j, k] : exponents) {
    if (j < 1 || ord % j != 0) {
      throw DomainError("signature " + exponents_str(exponents) + ": orbit length " + std::to_string(j) +
                        " does not divide the order " + std::to_string(ord));
    }
    if (j < ord && k < 0) throw DomainError("signature " + exponents_str(exponents) + ": negative branch count");
    euler += j * k;
    if (k != 0 || j == ord) sig.exponents[j] = k;
    if (j < ord) {
      sig.branch_points += static_cast<int>(k);
      sig.classes.insert(sig.classes.end(), static_cast<std::size_t>(k), j);
    }
  }
  sig.exponents.try_emplace(ord, 0);
  if (euler != 2 - 2L * genus) {
    throw DomainError("signature " + sig.str() + ": sum_j j k_j = " + std::to_string(euler) + " but 2 - 2g = " +
                      std::to_string(2 - 2L * genus));
  }
  const Rational h = quotient_genus(sig.exponents, options);
  if (!h.is_integer() || h.sign() < 0) {
    throw DomainError("signature " + sig.str() + ": quotient genus h = " + h.short_str() +
                      " is not a non-negative integer");
  }
  sig.quotient_genus = static_cast<int>(h.to_integer().get_si());
  return sig;
}

bool CoefficientRecord::consistent() const {
  return coefficient == chi_orb * Rational(monodromy_count) * Rational(n_value) / Rational(denominator);
}

std::vector<Signature> enumerate_signatures(int genus, const FormulaOptions& options, int max_order) {
  if (genus < 2) throw DomainError("enumerate_signatures: genus must be at least 2");
  if (max_order <= 0) max_order = 4 * genus + 2;
  std::vector<Signature> out;

  for (int ord = 1; ord <= max_order; ++ord) {
    auto divs = arith::divisors(ord);
    divs.pop_back();  // proper divisors only
    // h >= 0 and every proper divisor being <= ord/2 give s <= 4 + (4g-4)/ord
    const int max_branch = 4 + (4 * genus - 4) / ord;
    std::vector<long> counts(divs.size(), 0);

    std::function<void(std::size_t, int)> rec = [&](std::size_t idx, int budget) {
      if (idx < divs.size()) {
        for (int k = 0; k <= budget; ++k) {
          counts[idx] = k;
          rec(idx + 1, budget - k);
        }
        counts[idx] = 0;
        return;
      }
      long euler = 0;
      int s = 0;
      std::map<int, long> exps;
      std::vector<std::int64_t> classes;
      for (std::size_t i = 0; i < divs.size(); ++i) {
        euler += divs[i] * counts[i];
        s += static_cast<int>(counts[i]);
        if (counts[i] > 0) exps[static_cast<int>(divs[i])] = counts[i];
        classes.insert(classes.end(), static_cast<std::size_t>(counts[i]), divs[i]);
      }
      const long rest = 2 - 2L * genus - euler;
      if (rest % ord != 0) return;
      const long k_ord = rest / ord;
      if (k_ord >= 0) return;
      exps[ord] = k_ord;
      const Rational h = quotient_genus(exps, options);
      if (!h.is_integer() || h.sign() < 0) return;
      const int hq = static_cast<int>(h.to_integer().get_si());
      if (!is_stable(hq, s)) return;
      if (cyclic::count_residue_tuples({ord, classes}) == 0) return;
      std::int64_t L = ord;
      for (auto l : classes) L = arith::gcd(L, l);
      if (cyclic::count_connected_monodromies(ord, hq, L, options) == 0) return;
      out.push_back(make_signature(genus, ord, std::move(exps), options));
    };
    rec(0, max_branch);
  }
  std::sort(out.begin(), out.end());
  return out;
}

CoefficientRecord signature_coefficient(const Signature& sig, const FormulaOptions& options) {
  CoefficientRecord rec;
  rec.signature = sig;
  rec.chi_orb = options.printed_orbifold_euler ? printed_orbifold_euler(sig.genus, sig.branch_points)
                                               : orb_chi_moduli(sig.quotient_genus, sig.branch_points);
  rec.monodromy_count = cyclic::count_connected_monodromies(sig.ord, sig.quotient_genus, sig.monodromy_gcd(), options);
  rec.n_value = cyclic::count_residue_tuples({sig.ord, sig.classes});
  rec.denominator = sig.ord;
  for (const auto& [j, k] : sig.exponents) {
    if (j < sig.ord) rec.denominator *= arith::factorial(k);
  }
  rec.coefficient = rec.chi_orb * Rational(rec.monodromy_count) * Rational(rec.n_value) / Rational(rec.denominator);
  return rec;
}

std::vector<CoefficientRecord> coefficient_table(int genus, const FormulaOptions& options) {
  std::vector<CoefficientRecord> out;
  for (const auto& sig : enumerate_signatures(genus, options)) out.push_back(signature_coefficient(sig, options));
  return out;
}

std::vector<confspace::Stratum> to_strata(const std::vector<CoefficientRecord>& records) {
  std::vector<confspace::Stratum> strata;
  strata.reserve(records.size());
  for (const auto& r : records) strata.push_back({r.coefficient, r.signature.exponents});
  return strata;
}

TruncatedSeries mgn_series(int genus, int order, const FormulaOptions& options) {
  return confspace::strata_combine(to_strata(coefficient_table(genus, options)), order);
}

std::vector<CoefficientRecord> genus2_reference_table() {
  struct Row {
    int ord;
    std::map<int, long> exponents;
    const char* chi_orb;
    long monodromy, n_value, denominator;
    const char* coefficient;
  };
  static const std::vector<Row> rows = {
      {1, {{1, -2}}, "-1/240", 1, 1, 1, "-1/240"},
      {2, {{1, 6}, {2, -4}}, "-6", 1, 1, 1440, "-1/240"},
      {5, {{1, 3}, {5, -1}}, "1", 1, 12, 30, "2/5"},
      {10, {{1, 1}, {2, 1}, {5, 1}, {10, -1}}, "1", 1, 4, 10, "2/5"},
      {6, {{1, 2}, {2, 1}, {6, -1}}, "1", 1, 2, 12, "1/6"},
      {3, {{1, 4}, {3, -2}}, "-1", 1, 6, 72, "-1/12"},
      {6, {{2, 2}, {3, 2}, {6, -2}}, "-1", 1, 2, 24, "-1/12"},
      {2, {{1, 2}, {2, -2}}, "1/12", 4, 1, 4, "1/12"},
      {8, {{1, 2}, {4, 1}, {8, -1}}, "1", 1, 4, 16, "1/4"},
      {4, {{1, 2}, {2, 2}, {4, -2}}, "-1", 1, 2, 16, "-1/8"},
  };
  std::vector<CoefficientRecord> out;
  for (const auto& r : rows) {
    CoefficientRecord rec;
    rec.signature = make_signature(2, r.ord, r.exponents);
    rec.chi_orb = Rational::parse(r.chi_orb);
    rec.monodromy_count = r.monodromy;
    rec.n_value = r.n_value;
    rec.denominator = r.denominator;
    rec.coefficient = Rational::parse(r.coefficient);
    out.push_back(std::move(rec));
  }
  return out;
}

ClosedForms general_g_closed_forms(int genus) {
  if (genus < 2) throw DomainError("general_g_closed_forms: genus must be at least 2");
  const long g = genus;
  ClosedForms forms;

  forms.identity.signature = make_signature(genus, 1, {{1, 2 - 2 * g}});
  forms.identity.chi_orb = orb_chi_moduli(genus, 0);
  forms.identity.monodromy_count = 1;
  forms.identity.n_value = 1;
  forms.identity.denominator = 1;
  forms.identity.coefficient = forms.identity.chi_orb;

  forms.hyperelliptic.signature = make_signature(genus, 2, {{1, 2 * g + 2}, {2, -2 * g}});
  forms.hyperelliptic.chi_orb = orb_chi_moduli(0, 2 * genus + 2);
  forms.hyperelliptic.monodromy_count = 1;
  forms.hyperelliptic.n_value = 1;
  forms.hyperelliptic.denominator = arith::factorial(2 * g + 2) * 2;
  forms.hyperelliptic.coefficient = Rational(-1) / Rational(4 * g * (2 * g + 1) * (2 * g + 2));

  const auto table = coefficient_table(genus);
  for (const auto* form : {&forms.identity, &forms.hyperelliptic}) {
    const bool found = std::any_of(table.begin(), table.end(), [&](const CoefficientRecord& r) {
      return r.signature == form->signature && r.coefficient == form->coefficient && r.chi_orb == form->chi_orb &&
             r.monodromy_count == form->monodromy_count && r.n_value == form->n_value &&
             r.denominator == form->denominator;
    });
    if (!found) {
      throw InvariantError("closed form " + form->signature.str() + " with coefficient " + form->coefficient.str() +
                           " is missing from the genus-" + std::to_string(genus) + " table");
    }
  }
  return forms;
}

}  // namespace mgn::moduli

#include "mgn/selftest.hpp"

#include <chrono>
#include <optional>
#include <sstream>

#include "mgn/arith.hpp"
#include "mgn/characters.hpp"
#include "mgn/cyclic.hpp"
#include "mgn/error.hpp"
#include "mgn/moduli.hpp"

namespace mgn::selftest {
namespace {

using Failure = std::optional<std::string>;

template <typename T>
std::string show(const T& v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

std::string show_list(const std::vector<std::int64_t>& xs) {
  std::string s;
  for (auto x : xs) s += (s.empty() ? "" : ",") + std::to_string(x);
  return s;
}

Failure check_orbifold_euler(const FormulaOptions&) {
  const std::vector<std::tuple<int, int, const char*>> table = {
      {0, 3, "1"}, {0, 4, "-1"}, {0, 6, "-6"}, {1, 2, "1/12"}, {2, 0, "-1/240"}};
  for (const auto& [h, s, expected] : table) {
    const auto got = moduli::orb_chi_moduli(h, s);
    if (got != Rational::parse(expected)) {
      return "chi_orb(M_{" + std::to_string(h) + "," + std::to_string(s) + "}) = " + got.str() + ", expected " + expected;
    }
  }
  for (int h = 0; h <= 5; ++h) {
    for (int s = 0; s < 10; ++s) {
      if ((h == 0 && s < 3) || (h == 1 && s < 1)) continue;
      const auto lhs = moduli::orb_chi_moduli(h, s + 1);
      const auto rhs = Rational(2 - 2 * h - s) * moduli::orb_chi_moduli(h, s);
      if (lhs != rhs) return "puncture recursion fails at (h, s) = (" + std::to_string(h) + ", " + std::to_string(s) + ")";
    }
  }
  return std::nullopt;
}

Failure check_reference_n_values(const FormulaOptions&) {
  struct Case {
    std::int64_t k;
    std::vector<std::int64_t> l;
    long expected;
  };
  const std::vector<Case> cases = {{5, {1, 1, 1}, 12},    {10, {1, 2, 5}, 4}, {6, {1, 1, 2}, 2},
                                   {3, {1, 1, 1, 1}, 6},  {6, {2, 2, 3, 3}, 2}, {2, {1, 1}, 1},
                                   {8, {1, 1, 4}, 4},     {4, {1, 1, 2, 2}, 2}};
  for (const auto& c : cases) {
    const cyclic::ResidueConstraint rc{c.k, c.l};
    const auto closed = cyclic::count_residue_tuples(rc);
    const auto brute = cyclic::count_residue_tuples_bruteforce(rc);
    if (closed != c.expected || brute != c.expected) {
      return "N(" + std::to_string(c.k) + "; " + show_list(c.l) + "): closed form " + to_string(closed) +
             ", enumeration " + to_string(brute) + ", expected " + std::to_string(c.expected);
    }
  }
  for (std::int64_t p : {2, 3, 5, 7}) {
    for (int s = 1; s <= 6; ++s) {
      const cyclic::ResidueConstraint rc{p, std::vector<std::int64_t>(static_cast<std::size_t>(s), 1)};
      if (cyclic::prime_power_tuple_count(p, s) != cyclic::count_residue_tuples(rc)) {
        return "N(" + std::to_string(p) + "; 1^" + std::to_string(s) + ") disagrees with the prime closed form";
      }
    }
  }
  return std::nullopt;
}

Failure check_character_sums(const FormulaOptions&) {
  for (std::int64_t k = 1; k <= 30; ++k) {
    for (auto l : arith::divisors(k)) {
      for (auto d : arith::divisors(k)) {
        const auto a = cyclic::c_sum(k, l, d);
        const auto b = cyclic::c_sum_bruteforce(k, l, d);
        if (a != b) {
          return "c(" + std::to_string(k) + "," + std::to_string(l) + "," + std::to_string(d) + ") = " +
                 std::to_string(a) + " but the direct sum is " + std::to_string(b);
        }
      }
    }
  }
  return std::nullopt;
}

Failure check_residue_sweep(const FormulaOptions&) {
  for (std::int64_t k = 1; k <= 30; ++k) {
    const auto divs = arith::divisors(k);
    std::vector<std::int64_t> ls;
    std::optional<std::string> failure;
    // multisets of divisors as non-decreasing index sequences
    auto rec = [&](auto&& self, std::size_t start, int size_left) -> void {
      if (failure) return;
      const cyclic::ResidueConstraint rc{k, ls};
      std::int64_t ks = 1;
      for (std::size_t i = 0; i < ls.size(); ++i) ks *= k;
      if (ks <= 1'000'000) {
        const auto a = cyclic::count_residue_tuples(rc);
        const auto b = cyclic::count_residue_tuples_bruteforce(rc);
        if (a != b) {
          failure = "N(" + std::to_string(k) + "; " + show_list(ls) + ") = " + to_string(a) + " but enumeration gives " +
                    to_string(b);
          return;
        }
      }
      if (size_left == 0) return;
      for (std::size_t i = start; i < divs.size(); ++i) {
        ls.push_back(divs[i]);
        self(self, i, size_left - 1);
        ls.pop_back();
      }
    };
    rec(rec, 0, 4);
    if (failure) return failure;
  }
  return std::nullopt;
}

Failure check_monodromy(const FormulaOptions& options) {
  auto compare = [&](std::int64_t ord, int h, std::int64_t L) -> Failure {
    const auto closed = cyclic::count_connected_monodromies(ord, h, L, options);
    const auto brute = cyclic::count_connected_monodromies_bruteforce(ord, h, L);
    if (closed != brute) {
      return "count_connected_monodromies(" + std::to_string(ord) + ", " + std::to_string(h) + ", " + std::to_string(L) +
             ") = " + to_string(closed) + " but enumeration gives " + to_string(brute);
    }
    return std::nullopt;
  };
  // named cases first so a failure points at a documented example
  for (const auto& [ord, h, L] : std::vector<std::tuple<std::int64_t, int, std::int64_t>>{
           {2, 1, 1}, {4, 1, 2}, {6, 1, 6}, {3, 2, 3}}) {
    if (auto f = compare(ord, h, L)) return f;
  }
  for (std::int64_t ord = 1; ord <= 8; ++ord) {
    for (int h = 0; h <= 2; ++h) {
      for (auto L : arith::divisors(ord)) {
        if (auto f = compare(ord, h, L)) return f;
      }
    }
  }
  return std::nullopt;
}

Failure check_genus2_table(const FormulaOptions& options) {
  const auto reference = moduli::genus2_reference_table();
  for (std::size_t i = 0; i < reference.size(); ++i) {
    const auto& ref = reference[i];
    const std::string where = "reference item " + std::to_string(i + 1) + " (" + ref.signature.str() + "): ";
    moduli::CoefficientRecord got;
    try {
      const auto sig = moduli::make_signature(2, ref.signature.ord, ref.signature.exponents, options);
      got = moduli::signature_coefficient(sig, options);
    } catch (const Error& e) {
      return where + e.what();
    }
    if (got.chi_orb != ref.chi_orb) return where + "chi_orb = " + got.chi_orb.str() + ", expected " + ref.chi_orb.str();
    if (got.monodromy_count != ref.monodromy_count) {
      return where + "monodromy count = " + to_string(got.monodromy_count) + ", expected " + to_string(ref.monodromy_count);
    }
    if (got.n_value != ref.n_value) return where + "N = " + to_string(got.n_value) + ", expected " + to_string(ref.n_value);
    if (got.denominator != ref.denominator) {
      return where + "denominator = " + to_string(got.denominator) + ", expected " + to_string(ref.denominator);
    }
    if (got.coefficient != ref.coefficient) {
      return where + "coefficient = " + got.coefficient.str() + ", expected " + ref.coefficient.str();
    }
  }
  const auto sigs = moduli::enumerate_signatures(2, options);
  if (sigs.size() != reference.size()) {
    return "enumerate_signatures(2) returned " + std::to_string(sigs.size()) + " signatures, expected " +
           std::to_string(reference.size());
  }
  for (const auto& ref : reference) {
    if (std::find(sigs.begin(), sigs.end(), ref.signature) == sigs.end()) {
      return "enumerate_signatures(2) is missing " + ref.signature.str();
    }
  }
  return std::nullopt;
}

Failure check_closed_forms(const FormulaOptions&) {
  try {
    for (int g = 2; g <= 4; ++g) moduli::general_g_closed_forms(g);
  } catch (const Error& e) {
    return std::string(e.what());
  }
  return std::nullopt;
}

Failure check_configuration_oracle(const FormulaOptions&) {
  for (const auto& [name, model] : standard_models()) {
    const auto series = confspace::equivariant_config_series(model.action_data(), 4);
    for (int n = 0; n <= 4; ++n) {
      const auto oracle = confspace::finite_model_oracle(model, n);
      if (series[n] != oracle) {
        return "model " + name + ", n = " + std::to_string(n) + ": series gives " + series[n].str() +
               ", orbit enumeration gives " + oracle.str();
      }
    }
  }
  return std::nullopt;
}

Failure check_falling_factorial(const FormulaOptions&) {
  try {
    for (long chi = -5; chi <= 5; ++chi) {
      for (int n = 0; n <= 8; ++n) confspace::falling_factorial_check(chi, n);
    }
  } catch (const Error& e) {
    return std::string(e.what());
  }
  return std::nullopt;
}

Failure check_characters(const FormulaOptions&) {
  for (int n = 0; n <= 8; ++n) {
    const auto parts = partitions_of(n);
    for (const auto& a : parts) {
      for (const auto& b : parts) {
        Rational row;
        BigInt col = 0;
        for (const auto& mu : parts) {
          row += Rational(mn_character(a, mu) * mn_character(b, mu)) / Rational(z_of(mu));
          col += mn_character(mu, a) * mn_character(mu, b);
        }
        if (row != Rational(a == b ? 1 : 0)) return "row orthogonality fails for " + a.str() + ", " + b.str();
        if (col != (a == b ? z_of(a) : BigInt(0))) return "column orthogonality fails for " + a.str() + ", " + b.str();
      }
    }
    for (const auto& lambda : parts) {
      const auto mu = Partition(std::vector<int>(static_cast<std::size_t>(n), 1));
      if (BigInt(mn_character(lambda, mu)) != hook_dimension(lambda)) {
        return "chi^" + lambda.str() + "(1^n) differs from the hook-length dimension";
      }
    }
  }
  return std::nullopt;
}

Failure check_genus2_series(const FormulaOptions& options) {
  const int order = 10;
  const auto series = moduli::mgn_series(2, order, options);
  if (series[0] != PPolynomial(Rational(1))) return "t^0 coefficient is " + series[0].str() + ", expected 1";
  const PPolynomial two_p1(PMonomial::variable(1), Rational(2));
  if (series[1] != two_p1) return "t^1 coefficient is " + series[1].str() + ", expected 2*p1";
  for (int n = 0; n <= order; ++n) {
    if (!series[n].is_homogeneous(n)) return "t^" + std::to_string(n) + " coefficient is not homogeneous";
    for (const auto& [lambda, m] : p_to_schur(series[n], n)) {
      if (!m.is_integer()) return "t^" + std::to_string(n) + ": Schur multiplicity of " + lambda.str() + " is " + m.str();
    }
    try {
      specialize_plain_euler(series[n], n);
      specialize_quotient_euler(series[n]);
    } catch (const Error& e) {
      return "t^" + std::to_string(n) + ": " + e.what();
    }
  }
  return std::nullopt;
}

}  // namespace

bool Report::passed() const { return first_failure() == nullptr; }

const CheckResult* Report::first_failure() const {
  for (const auto& c : checks) {
    if (!c.passed) return &c;
  }
  return nullptr;
}

std::vector<NamedModel> standard_models() {
  using confspace::FiniteModel;
  return {
      {"point/trivial", FiniteModel(1, {{0}})},
      {"3 points/trivial", FiniteModel(3, {{0, 1, 2}})},
      {"2 points/Z2 swap", FiniteModel::generated_by(2, {{1, 0}})},
      {"4 points/Z2 (01)", FiniteModel::generated_by(4, {{1, 0, 2, 3}})},
      {"4 points/Z2 (01)(23)", FiniteModel::generated_by(4, {{1, 0, 3, 2}})},
      {"3 points/Z3", FiniteModel::generated_by(3, {{1, 2, 0}})},
      {"5 points/Z3 (012)", FiniteModel::generated_by(5, {{1, 2, 0, 3, 4}})},
      {"3 points/S3", FiniteModel::generated_by(3, {{1, 0, 2}, {1, 2, 0}})},
      {"5 points/S3 natural+sign", FiniteModel::generated_by(5, {{1, 0, 2, 4, 3}, {1, 2, 0, 3, 4}})},
  };
}

Report run(const FormulaOptions& options, const std::function<void(const CheckResult&)>& progress) {
  const std::vector<std::pair<const char*, Failure (*)(const FormulaOptions&)>> checks = {
      {"orbifold Euler characteristics", check_orbifold_euler},
      {"reference N-values", check_reference_n_values},
      {"character sums vs cyclotomic reduction", check_character_sums},
      {"residue-tuple oracle sweep", check_residue_sweep},
      {"connected-monodromy oracle sweep", check_monodromy},
      {"genus-2 coefficient regression", check_genus2_table},
      {"identity and hyperelliptic closed forms", check_closed_forms},
      {"configuration series vs finite models", check_configuration_oracle},
      {"falling-factorial identity", check_falling_factorial},
      {"character orthogonality", check_characters},
      {"genus-2 series readouts", check_genus2_series},
  };
  Report report;
  for (const auto& [name, fn] : checks) {
    CheckResult result;
    result.name = name;
    const auto start = std::chrono::steady_clock::now();
    Failure failure;
    try {
      failure = fn(options);
    } catch (const Error& e) {
      failure = std::string("unexpected error: ") + e.what();
    }
    result.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (failure) {
      result.passed = false;
      result.detail = *failure;
    }
    if (progress) progress(result);
    report.checks.push_back(std::move(result));
  }
  return report;
}

}  // namespace mgn::selftest

#include "commands.hpp"

#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "mgn/characters.hpp"
#include "mgn/confspace.hpp"
#include "mgn/cyclic.hpp"
#include "mgn/moduli.hpp"

namespace mgn::cli {
namespace {

void check_max_points(int max_points, bool allow_large) {
  if (max_points < 0) throw UsageError("--max-points must be non-negative");
  if (max_points > kMaxPointsCap && !allow_large) {
    throw UsageError("--max-points above " + std::to_string(kMaxPointsCap) + " needs --allow-large");
  }
}

void check_genus(int genus) {
  if (genus < 2) {
    throw UsageError("genus must be at least 2: the formula sums over automorphisms, and only curves of genus >= 2 "
                     "have finite automorphism groups");
  }
}

std::string csv_quote(const std::string& s) {
  if (s.find_first_of(",\"") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string latex_partition(const Partition& lambda) {
  std::string s;
  for (int p : lambda.parts()) s += (s.empty() ? "" : ",") + std::to_string(p);
  return "s_{(" + s + ")}";
}

std::string latex_schur(const SchurExpansion& schur) {
  if (schur.empty()) return "0";
  std::string out;
  for (const auto& [lambda, m] : schur) {
    const Rational mag = m.sign() < 0 ? -m : m;
    out += m.sign() < 0 ? "-" : (out.empty() ? "" : "+");
    if (mag != Rational(1)) out += io::latex_rational(mag);
    out += latex_partition(lambda);
  }
  return out;
}

// Shared by mgn and confspace: fills payload["series"] and the text bodies.
void emit_series(OutputDocument& doc, const TruncatedSeries& series, Basis basis, const std::string& latex_lhs) {
  std::ostringstream csv, latex;
  if (basis == Basis::p) {
    doc.payload["basis"] = "p";
    doc.payload["series"] = io::to_json(series);
    csv << "n,monomial,coefficient\n";
    for (int n = 0; n <= series.order(); ++n) {
      for (const auto& [m, c] : series[n].terms()) csv << n << "," << m.str() << "," << c.str() << "\n";
      latex << latex_lhs << "_{" << n << "}=" << io::latex_polynomial(series[n]) << "\\\\\n";
    }
  } else {
    doc.payload["basis"] = "schur";
    io::Json rows = io::Json::array();
    csv << "n,partition,multiplicity\n";
    for (int n = 0; n <= series.order(); ++n) {
      const auto schur = p_to_schur(series[n], n);
      for (const auto& [lambda, m] : schur) {
        if (!m.is_integer()) {
          throw InvariantError("t^" + std::to_string(n) + ": non-integral Schur multiplicity " + m.str() + " for " +
                               lambda.str());
        }
        csv << n << "," << csv_quote(lambda.str()) << "," << m.str() << "\n";
      }
      rows.push_back({{"n", n},
                      {"schur", io::to_json(schur)},
                      {"plain_euler", io::to_json(specialize_plain_euler(series[n], n))},
                      {"quotient_euler", io::to_json(specialize_quotient_euler(series[n]))}});
      latex << latex_lhs << "_{" << n << "}=" << latex_schur(schur) << "\\\\\n";
    }
    doc.payload["series"] = rows;
  }
  doc.csv = csv.str();
  doc.latex = latex.str();
}

io::Json exponents_json(const std::map<int, long>& exponents) {
  io::Json out = io::Json::object();
  for (const auto& [j, k] : exponents) out[std::to_string(j)] = k;
  return out;
}

}  // namespace

Format parse_format(const std::string& name) {
  if (name == "json") return Format::json;
  if (name == "csv") return Format::csv;
  if (name == "latex") return Format::latex;
  throw UsageError("unknown format \"" + name + "\"");
}

Basis parse_basis(const std::string& name) {
  if (name == "p") return Basis::p;
  if (name == "schur") return Basis::schur;
  throw UsageError("unknown basis \"" + name + "\"");
}

std::string OutputDocument::render() const {
  switch (format) {
    case Format::csv:
      return csv;
    case Format::latex:
      return latex;
    case Format::json:
      break;
  }
  io::Json doc = {{"command", command}, {"arguments", arguments}, {"version", MGN_VERSION}, {"payload", payload}};
  return doc.dump(2) + "\n";
}

OutputDocument cmd_mgn(int genus, int max_points, Basis basis, Format format, bool allow_large) {
  check_genus(genus);
  check_max_points(max_points, allow_large);
  OutputDocument doc;
  doc.command = "mgn";
  doc.format = format;
  doc.arguments = {{"genus", genus}, {"max_points", max_points}, {"basis", basis == Basis::p ? "p" : "schur"}};
  doc.payload["genus"] = genus;
  const auto series = moduli::mgn_series(genus, max_points);
  emit_series(doc, series, basis, "\\chi^{S_n}(\\mathcal{M}_{" + std::to_string(genus) + ",n})");
  return doc;
}

OutputDocument cmd_coeffs(int genus, Format format) {
  check_genus(genus);
  OutputDocument doc;
  doc.command = "coeffs";
  doc.format = format;
  doc.arguments = {{"genus", genus}};
  const auto table = moduli::coefficient_table(genus);

  if (genus == 2) {
    auto reference = moduli::genus2_reference_table();
    std::sort(reference.begin(), reference.end(),
              [](const auto& a, const auto& b) { return a.signature < b.signature; });
    bool same = reference.size() == table.size();
    for (std::size_t i = 0; same && i < table.size(); ++i) {
      const auto& a = table[i];
      const auto& b = reference[i];
      same = a.signature == b.signature && a.coefficient == b.coefficient && a.chi_orb == b.chi_orb &&
             a.monodromy_count == b.monodromy_count && a.n_value == b.n_value && a.denominator == b.denominator;
    }
    if (!same) throw InvariantError("genus-2 coefficient table differs from the reference table");
    doc.payload["matches_reference"] = true;
  }

  io::Json records = io::Json::array();
  std::ostringstream csv, latex;
  csv << "order,exponents,quotient_genus,branch_points,chi_orb,monodromy_count,n_value,denominator,coefficient\n";
  latex << "\\sum_{n=0}^{\\infty}t^n\\chi^{S_n}(\\mathcal{M}_{" << genus << ",n})=\n";
  bool leading = true;
  for (const auto& rec : table) {
    records.push_back(io::to_json(rec));
    const auto& sig = rec.signature;
    std::string exps;
    for (const auto& [j, k] : sig.exponents) exps += (exps.empty() ? "" : " ") + ("k" + std::to_string(j) + "=" + std::to_string(k));
    csv << sig.ord << "," << exps << "," << sig.quotient_genus << "," << sig.branch_points << "," << rec.chi_orb.str()
        << "," << to_string(rec.monodromy_count) << "," << to_string(rec.n_value) << ","
        << to_string(rec.denominator) << "," << rec.coefficient.str() << "\n";
    latex << io::latex_term(rec.coefficient, sig.exponents, leading) << "\n";
    leading = false;
  }
  doc.payload["genus"] = genus;
  doc.payload["records"] = records;
  doc.csv = csv.str();
  doc.latex = latex.str();
  return doc;
}

OutputDocument cmd_nfun(std::int64_t k, const std::vector<std::int64_t>& classes, bool verify, Format format) {
  const cyclic::ResidueConstraint rc{k, classes};
  try {
    rc.validate();
  } catch (const DomainError& e) {
    throw UsageError(e.what());
  }
  OutputDocument doc;
  doc.command = "nfun";
  doc.format = format;
  doc.arguments = {{"k", k}, {"l", classes}, {"verify", verify}};
  const auto value = cyclic::count_residue_tuples(rc);
  doc.payload = {{"k", k}, {"l", classes}, {"value", to_string(value)}};
  std::string csv = "k,l,value";
  std::string row = std::to_string(k) + ",";
  std::string ls;
  for (auto l : classes) ls += (ls.empty() ? "" : " ") + std::to_string(l);
  row += ls + "," + to_string(value);
  if (verify) {
    const auto brute = cyclic::count_residue_tuples_bruteforce(rc);
    doc.payload["bruteforce"] = to_string(brute);
    doc.payload["agrees"] = brute == value;
    csv += ",bruteforce";
    row += "," + to_string(brute);
    if (brute != value) {
      throw InvariantError("N(" + std::to_string(k) + "; " + ls + "): closed form " + to_string(value) +
                           " disagrees with enumeration " + to_string(brute));
    }
  }
  doc.csv = csv + "\n" + row + "\n";
  std::string lcomma;
  for (auto l : classes) lcomma += "," + std::to_string(l);
  doc.latex = "N(" + std::to_string(k) + (classes.empty() ? "" : ";" + lcomma.substr(1)) + ")=" + to_string(value) + "\n";
  return doc;
}

OutputDocument cmd_orbchi(int h, int s, Format format) {
  Rational value;
  try {
    value = moduli::orb_chi_moduli(h, s);
  } catch (const UnstableError& e) {
    throw UsageError(e.what());
  }
  OutputDocument doc;
  doc.command = "orbchi";
  doc.format = format;
  doc.arguments = {{"h", h}, {"s", s}};
  doc.payload = {{"h", h}, {"s", s}, {"chi_orb", io::to_json(value)}};
  doc.csv = "h,s,chi_orb\n" + std::to_string(h) + "," + std::to_string(s) + "," + value.str() + "\n";
  doc.latex = "\\chi^{orb}(\\mathcal{M}_{" + std::to_string(h) + "," + std::to_string(s) + "})=" +
              io::latex_rational(value) + "\n";
  return doc;
}

OutputDocument cmd_confspace_json(const io::Json& input, int max_points, Basis basis, Format format, bool allow_large) {
  check_max_points(max_points, allow_large);
  OutputDocument doc;
  doc.command = "confspace";
  doc.format = format;
  doc.arguments = {{"max_points", max_points}, {"basis", basis == Basis::p ? "p" : "schur"}};
  TruncatedSeries series;
  try {
    if (input.is_object() && input.contains("strata")) {
      doc.payload["source"] = "strata";
      series = confspace::strata_combine(io::strata_from_json(input), max_points);
    } else {
      doc.payload["source"] = "group_action";
      series = confspace::equivariant_config_series(io::group_action_from_json(input), max_points);
    }
  } catch (const SchemaError& e) {
    throw UsageError(std::string("invalid input: ") + e.what());
  }
  emit_series(doc, series, basis, "\\chi^{S_n}(F(X,n)/G)");
  return doc;
}

OutputDocument cmd_confspace(const std::string& input_path, int max_points, Basis basis, Format format,
                             bool allow_large) {
  std::ifstream in(input_path);
  if (!in) throw UsageError("cannot open input file " + input_path);
  io::Json input;
  try {
    input = io::Json::parse(in);
  } catch (const io::Json::parse_error& e) {
    throw UsageError("input file " + input_path + " is not valid JSON: " + e.what());
  }
  auto doc = cmd_confspace_json(input, max_points, basis, format, allow_large);
  doc.arguments["input"] = input_path;
  return doc;
}

int cmd_selftest(const FormulaOptions& options, std::ostream& out) {
  const auto report = selftest::run(options, [&](const selftest::CheckResult& r) {
    out << (r.passed ? "PASS " : "FAIL ") << r.name << " (" << std::fixed << std::setprecision(2) << r.seconds
        << "s)\n";
  });
  if (const auto* failure = report.first_failure()) {
    out << "first divergence in \"" << failure->name << "\": " << failure->detail << "\n";
    return 2;
  }
  out << "all checks passed\n";
  return 0;
}

int exit_code_for(const std::exception& e) {
  if (dynamic_cast<const UsageError*>(&e) || dynamic_cast<const DomainError*>(&e) ||
      dynamic_cast<const SchemaError*>(&e)) {
    return 1;
  }
  return 2;
}

}  // namespace mgn::cli

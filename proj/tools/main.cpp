#include <iostream>

#include "CLI11.hpp"
#include "commands.hpp"

int main(int argc, char** argv) {
  using namespace mgn::cli;

  CLI::App app{"Equivariant Euler characteristics of M_{g,n}"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(MGN_VERSION));

  std::string format = "json";
  std::string basis = "p";
  int genus = 2;
  int max_points = kDefaultMaxPoints;
  bool allow_large = false;

  const std::vector<std::string> formats{"json", "csv", "latex"};
  const std::vector<std::string> bases{"p", "schur"};

  auto* mgn = app.add_subcommand("mgn", "Generating series sum_n t^n chi^{S_n}(M_{g,n})");
  mgn->add_option("--genus", genus, "Genus g >= 2")->required();
  mgn->add_option("--max-points", max_points, "Highest power of t")->capture_default_str();
  mgn->add_option("--basis", basis, "p or schur")->check(CLI::IsMember(bases))->capture_default_str();
  mgn->add_option("--format", format)->check(CLI::IsMember(formats))->capture_default_str();
  mgn->add_flag("--allow-large", allow_large, "Permit --max-points above 30");

  auto* coeffs = app.add_subcommand("coeffs", "Stratum coefficients with their breakdowns");
  coeffs->add_option("--genus", genus, "Genus g >= 2")->required();
  coeffs->add_option("--format", format)->check(CLI::IsMember(formats))->capture_default_str();

  std::int64_t modulus = 1;
  std::vector<std::int64_t> classes;
  bool verify = false;
  auto* nfun = app.add_subcommand("nfun", "N(k; l_1, ..., l_s): residue tuples with prescribed gcds summing to 0");
  nfun->add_option("k", modulus, "Modulus")->required();
  nfun->add_option("l", classes, "gcd-classes, each dividing k");
  nfun->add_flag("--verify", verify, "Also count by enumeration");
  nfun->add_option("--format", format)->check(CLI::IsMember(formats))->capture_default_str();

  int h = 0, s = 0;
  auto* orbchi = app.add_subcommand("orbchi", "Orbifold Euler characteristic of M_{h,s}");
  orbchi->add_option("genus", h, "Genus h")->required();
  orbchi->add_option("points", s, "Number of marked points s")->required();
  orbchi->add_option("--format", format)->check(CLI::IsMember(formats))->capture_default_str();

  std::string input;
  auto* confspace = app.add_subcommand("confspace", "Configuration-space series from group-action or strata JSON");
  confspace->add_option("--input", input, "JSON file")->required();
  confspace->add_option("--max-points", max_points)->capture_default_str();
  confspace->add_option("--basis", basis)->check(CLI::IsMember(bases))->capture_default_str();
  confspace->add_option("--format", format)->check(CLI::IsMember(formats))->capture_default_str();
  confspace->add_flag("--allow-large", allow_large, "Permit --max-points above 30");

  std::vector<std::string> printed;
  auto* selftest = app.add_subcommand("selftest", "Oracle-equivalence and regression checks");
  selftest->add_option("--printed-form", printed,
                       "Substitute a printed formula variant (monodromy, genus, orbchi); the run is expected to fail")
      ->check(CLI::IsMember(mgn::printed_form_names()));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 1;
  }

  try {
    OutputDocument doc;
    if (*mgn) {
      doc = cmd_mgn(genus, max_points, parse_basis(basis), parse_format(format), allow_large);
    } else if (*coeffs) {
      doc = cmd_coeffs(genus, parse_format(format));
    } else if (*nfun) {
      doc = cmd_nfun(modulus, classes, verify, parse_format(format));
    } else if (*orbchi) {
      doc = cmd_orbchi(h, s, parse_format(format));
    } else if (*confspace) {
      doc = cmd_confspace(input, max_points, parse_basis(basis), parse_format(format), allow_large);
    } else {
      mgn::FormulaOptions options;
      for (const auto& name : printed) mgn::enable_printed_form(options, name);
      return cmd_selftest(options, std::cout);
    }
    std::cout << doc.render();
    return 0;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e);
  }
}

#include <random>
#include <sstream>

#include "commands.hpp"
#include "doctest.h"
#include "mgn/moduli.hpp"
#include "mgn/serialize.hpp"

using namespace mgn;
using namespace mgn::cli;

#ifndef MGN_TEST_DATA
#define MGN_TEST_DATA "tests/data"
#endif

namespace {

std::string data_file(const std::string& name) { return std::string(MGN_TEST_DATA) + "/" + name; }

PPolynomial random_polynomial(std::mt19937& rng, int degree) {
  std::uniform_int_distribution<long> num(-9, 9), den(1, 7);
  PPolynomial f;
  for (const auto& mu : partitions_of(degree)) {
    if (rng() % 3 == 0) continue;
    f += PPolynomial(PMonomial::from_partition(mu), Rational(BigInt(num(rng)), BigInt(den(rng))));
  }
  return f;
}

}  // namespace

TEST_SUITE("serialize") {
  TEST_CASE("rationals are num/den strings") {
    CHECK(io::to_json(Rational(3)) == "3/1");
    CHECK(io::to_json(Rational(-1) / Rational(240)) == "-1/240");
    CHECK(io::rational_from_json("6/4") == Rational(3) / Rational(2));
    CHECK_THROWS_AS(io::rational_from_json(io::Json(0.5)), SchemaError);
  }

  TEST_CASE("polynomial and series round trip") {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 50; ++trial) {
      TruncatedSeries s(6);
      for (int n = 0; n <= 6; ++n) s[n] = random_polynomial(rng, n);
      const auto j = io::to_json(s);
      CHECK(io::series_from_json(j) == s);
      CHECK(io::to_json(io::series_from_json(j)).dump() == j.dump());
      for (int n = 0; n <= 6; ++n) CHECK(io::ppolynomial_from_json(io::to_json(s[n])) == s[n]);
    }
    const auto g2 = moduli::mgn_series(2, 8);
    CHECK(io::series_from_json(io::to_json(g2)) == g2);
  }

  TEST_CASE("monomial form") {
    CHECK(io::to_json(PMonomial::from_partition({3, 1, 1})).dump() == R"({"1":2,"3":1})");
    CHECK(io::monomial_from_json(io::Json::parse(R"({"2":1,"1":0})")) == PMonomial::variable(2));
    CHECK_THROWS_AS(io::monomial_from_json(io::Json::parse(R"({"x":1})")), SchemaError);
    CHECK_THROWS_AS(io::monomial_from_json(io::Json::parse(R"({"1":-1})")), SchemaError);
  }

  TEST_CASE("group action and strata round trip") {
    const auto data = io::group_action_from_json(io::Json::parse(R"({"group_order":2,"elements":[
      {"label":"e","chi_by_orbit_length":{"1":2}},{"label":"s","chi_by_orbit_length":{"2":2}}]})"));
    CHECK(data.group_order == 2);
    CHECK(io::group_action_from_json(io::to_json(data)).elements[1].chi_by_orbit_length == data.elements[1].chi_by_orbit_length);
    CHECK_THROWS_AS(io::group_action_from_json(io::Json::parse(R"({"group_order":2,"elements":[]})")), SchemaError);
    CHECK_THROWS_AS(io::group_action_from_json(io::Json::parse(R"({"elements":[]})")), SchemaError);

    const auto strata = moduli::to_strata(moduli::genus2_reference_table());
    const auto back = io::strata_from_json(io::strata_to_json(strata));
    REQUIRE(back.size() == strata.size());
    for (std::size_t i = 0; i < strata.size(); ++i) {
      CHECK(back[i].weight == strata[i].weight);
      CHECK(back[i].exponents == strata[i].exponents);
    }
  }

  TEST_CASE("latex terms") {
    CHECK(io::latex_term(Rational(-1) / Rational(240), {{1, -2}}, true) == R"(-\frac{1}{240}(1+p_1t)^{-2})");
    CHECK(io::latex_factors({{1, 1}, {2, 1}, {5, 1}, {10, -1}}) == "(1+p_1t)(1+p_2t^2)(1+p_5t^5)(1+p_{10}t^{10})^{-1}");
    CHECK(io::latex_term(Rational(2) / Rational(5), {{1, 3}, {5, -1}}, false) == R"(+\frac{2}{5}(1+p_1t)^3(1+p_5t^5)^{-1})");
    CHECK(io::latex_rational(Rational(-3)) == "-3");
  }
}

TEST_SUITE("cli") {
  TEST_CASE("mgn series") {
    const auto doc = cmd_mgn(2, 1, Basis::p, Format::json);
    const auto& series = doc.payload["series"];
    REQUIRE(series.size() == 2);
    CHECK(series[0]["coefficient"][0]["coefficient"] == "1/1");
    CHECK(series[1]["coefficient"][0]["monomial"].dump() == R"({"1":1})");
    CHECK(series[1]["coefficient"][0]["coefficient"] == "2/1");
    CHECK(cmd_mgn(2, 0, Basis::p, Format::json).payload["series"].size() == 1);
  }

  TEST_CASE("mgn schur basis is integral") {
    const auto doc = cmd_mgn(2, 3, Basis::schur, Format::json);
    const auto& rows = doc.payload["series"];
    REQUIRE(rows.size() == 4);
    for (const auto& row : rows) {
      for (const auto& entry : row["schur"]) CHECK(io::rational_from_json(entry["multiplicity"]).is_integer());
    }
    CHECK(rows[0]["plain_euler"] == "1/1");
    CHECK(rows[1]["plain_euler"] == "2/1");
    CHECK(doc.render().find("\"basis\": \"schur\"") != std::string::npos);
    CHECK(cmd_mgn(2, 3, Basis::schur, Format::csv).render().rfind("n,partition,multiplicity\n", 0) == 0);
  }

  TEST_CASE("mgn argument errors") {
    CHECK_THROWS_AS(cmd_mgn(1, 3, Basis::p, Format::json), UsageError);
    CHECK_THROWS_WITH_AS(cmd_mgn(0, 3, Basis::p, Format::json), doctest::Contains("finite automorphism"), UsageError);
    CHECK_THROWS_AS(cmd_mgn(2, -1, Basis::p, Format::json), UsageError);
    CHECK_THROWS_AS(cmd_mgn(2, 31, Basis::p, Format::json), UsageError);
    CHECK_THROWS_AS(parse_format("xml"), UsageError);
    CHECK_THROWS_AS(parse_basis("m"), UsageError);
  }

  TEST_CASE("output is byte-stable") {
    CHECK(cmd_mgn(3, 6, Basis::p, Format::json).render() == cmd_mgn(3, 6, Basis::p, Format::json).render());
    CHECK(cmd_coeffs(3, Format::latex).render() == cmd_coeffs(3, Format::latex).render());
  }

  TEST_CASE("coeffs") {
    const auto doc = cmd_coeffs(2, Format::json);
    CHECK(doc.payload["matches_reference"] == true);
    REQUIRE(doc.payload["records"].size() == 10);
    const auto latex = cmd_coeffs(2, Format::latex).render();
    CHECK(latex.find(R"(-\frac{1}{240}(1+p_1t)^{-2})") != std::string::npos);
    CHECK(latex.find(R"(-\frac{1}{240}(1+p_1t)^6(1+p_2t^2)^{-4})") != std::string::npos);

    const auto g3 = cmd_coeffs(3, Format::json);
    bool identity = false, hyperelliptic = false;
    for (const auto& r : g3.payload["records"]) {
      identity |= r["coefficient"] == "1/1008";
      hyperelliptic |= r["coefficient"] == "-1/672";
    }
    CHECK(identity);
    CHECK(hyperelliptic);
  }

  TEST_CASE("nfun") {
    CHECK(cmd_nfun(5, {1, 1, 1}, true, Format::json).payload["value"] == "12");
    CHECK(cmd_nfun(10, {1, 2, 5}, true, Format::json).payload["value"] == "4");
    const auto doc = cmd_nfun(6, {2, 2, 3, 3}, true, Format::json);
    CHECK(doc.payload["value"] == "2");
    CHECK(doc.payload["agrees"] == true);
    CHECK(cmd_nfun(6, {2, 2, 3, 3}, false, Format::csv).render() == "k,l,value\n6,2 2 3 3,2\n");
    CHECK_THROWS_AS(cmd_nfun(6, {4}, false, Format::json), UsageError);
  }

  TEST_CASE("orbchi") {
    CHECK(cmd_orbchi(0, 6, Format::json).payload["chi_orb"] == "-6/1");
    CHECK(cmd_orbchi(1, 2, Format::json).payload["chi_orb"] == "1/12");
    CHECK_THROWS_WITH_AS(cmd_orbchi(1, 0, Format::json), doctest::Contains("unstable"), UsageError);
  }

  TEST_CASE("confspace") {
    const auto swap = cmd_confspace(data_file("two_point_swap.json"), 2, Basis::p, Format::json);
    CHECK(io::series_from_json(swap.payload["series"])[2] ==
          PPolynomial(PMonomial::variable(1, 2), Rational(1) / Rational(2)) +
              PPolynomial(PMonomial::variable(2), Rational(1) / Rational(2)));

    const auto strata = cmd_confspace(data_file("genus2_strata.json"), 10, Basis::p, Format::json);
    CHECK(strata.payload["series"] == cmd_mgn(2, 10, Basis::p, Format::json).payload["series"]);
    CHECK(cmd_confspace(data_file("genus2_strata.json"), 6, Basis::schur, Format::csv).render() ==
          cmd_mgn(2, 6, Basis::schur, Format::csv).render());

    const auto empty = cmd_confspace(data_file("empty_strata.json"), 4, Basis::p, Format::json);
    CHECK(io::series_from_json(empty.payload["series"]) == TruncatedSeries(4));

    CHECK_THROWS_AS(cmd_confspace(data_file("missing.json"), 4, Basis::p, Format::json), UsageError);
    CHECK_THROWS_AS(cmd_confspace(data_file("bad_divisibility.json"), 4, Basis::p, Format::json), InvariantError);
    CHECK_THROWS_AS(cmd_confspace_json(io::Json::parse(R"({"strata":[{"weight":0.5,"exponents":{}}]})"), 4,
                                       Basis::p, Format::json),
                    UsageError);
  }

  TEST_CASE("exit codes") {
    CHECK(exit_code_for(UsageError("x")) == 1);
    CHECK(exit_code_for(DomainError("x")) == 1);
    CHECK(exit_code_for(SchemaError("x")) == 1);
    CHECK(exit_code_for(InvariantError("x")) == 2);
    CHECK(exit_code_for(BudgetError("x")) == 2);
  }

  TEST_CASE("selftest") {
    std::ostringstream ok;
    CHECK(cmd_selftest({}, ok) == 0);
    CHECK(ok.str().find("all checks passed") != std::string::npos);
    for (const auto& name : printed_form_names()) {
      CAPTURE(name);
      FormulaOptions options;
      enable_printed_form(options, name);
      std::ostringstream out;
      CHECK(cmd_selftest(options, out) == 2);
      CHECK(out.str().find("first divergence") != std::string::npos);
    }
  }
}

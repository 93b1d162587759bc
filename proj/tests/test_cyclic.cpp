#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

#include "doctest.h"
#include "mgn/arith.hpp"
#include "mgn/cyclic.hpp"
#include "mgn/error.hpp"

using namespace mgn;
using cyclic::ResidueConstraint;

namespace {

// Floating-point evaluation of sum_{(r,k)=l} zeta^r, zeta = exp(2 pi i / d).
// Test-only third route next to the closed form and the cyclotomic reduction.
long numeric_character_sum(long k, long l, long d) {
  double re = 0, im = 0;
  for (long r = 0; r < k; ++r) {
    if (std::gcd(r, k) != l) continue;
    const double angle = 2 * std::numbers::pi * static_cast<double>(r) / static_cast<double>(d);
    re += std::cos(angle);
    im += std::sin(angle);
  }
  REQUIRE(std::abs(im) < 1e-9);
  REQUIRE(std::abs(re - std::round(re)) < 1e-9);
  return std::lround(re);
}

}  // namespace

TEST_SUITE("cyclic") {
  TEST_CASE("c_sum examples") {
    CHECK(cyclic::c_sum(5, 1, 1) == 4);
    CHECK(cyclic::c_sum(5, 1, 5) == -1);
    for (std::int64_t k : {1, 6, 12, 30}) {
      for (auto d : arith::divisors(k)) CHECK(cyclic::c_sum(k, k, d) == 1);
    }
    CHECK(cyclic::c_sum(6, 2, 3) == numeric_character_sum(6, 2, 3));
    CHECK(cyclic::c_sum(6, 2, 3) == -1);
    CHECK(cyclic::c_sum(8, 4, 2) == numeric_character_sum(8, 4, 2));
    CHECK(cyclic::c_sum(8, 4, 2) == 1);
    CHECK_THROWS_AS(cyclic::c_sum(6, 4, 1), DomainError);
    CHECK_THROWS_AS(cyclic::c_sum(6, 1, 4), DomainError);
  }

  TEST_CASE("c_sum_bruteforce examples") {
    CHECK(cyclic::c_sum_bruteforce(5, 1, 1) == 4);
    CHECK(cyclic::c_sum_bruteforce(6, 2, 3) == -1);
    CHECK(cyclic::c_sum_bruteforce(8, 4, 2) == 1);
  }

  TEST_CASE("three routes agree for k <= 30") {
    for (std::int64_t k = 1; k <= 30; ++k) {
      for (auto l : arith::divisors(k)) {
        for (auto d : arith::divisors(k)) {
          const auto closed = cyclic::c_sum(k, l, d);
          REQUIRE(closed == cyclic::c_sum_bruteforce(k, l, d));
          REQUIRE(closed == numeric_character_sum(k, l, d));
        }
      }
    }
  }

  TEST_CASE("sum over a gcd-class of primitive k-th roots is mu(k/l)") {
    for (std::int64_t k = 1; k <= 50; ++k) {
      for (auto l : arith::divisors(k)) CHECK(cyclic::c_sum_bruteforce(k, l, k) == arith::mobius(k / l));
    }
  }

  TEST_CASE("cyclotomic polynomials") {
    CHECK(cyclic::cyclotomic_polynomial(1) == std::vector<std::int64_t>{-1, 1});
    CHECK(cyclic::cyclotomic_polynomial(4) == std::vector<std::int64_t>{1, 0, 1});
    CHECK(cyclic::cyclotomic_polynomial(6) == std::vector<std::int64_t>{1, -1, 1});
    for (std::int64_t d = 1; d <= 40; ++d) {
      CHECK(static_cast<std::int64_t>(cyclic::cyclotomic_polynomial(d).size()) == arith::euler_phi(d) + 1);
    }
  }

  TEST_CASE("reference residue tuple counts") {
    struct Case {
      ResidueConstraint rc;
      long expected;
    };
    const std::vector<Case> cases = {
        {{5, {1, 1, 1}}, 12}, {{10, {1, 2, 5}}, 4},    {{6, {1, 1, 2}}, 2}, {{3, {1, 1, 1, 1}}, 6},
        {{8, {1, 1, 4}}, 4},  {{4, {1, 1, 2, 2}}, 2}, {{2, {1, 1}}, 1},    {{6, {2, 2, 3, 3}}, 2},
    };
    for (const auto& c : cases) {
      CAPTURE(c.rc.modulus);
      CHECK(cyclic::count_residue_tuples(c.rc) == c.expected);
      CHECK(cyclic::count_residue_tuples_bruteforce(c.rc) == c.expected);
    }
  }

  TEST_CASE("empty and degenerate constraints") {
    for (std::int64_t k : {1, 2, 7, 12}) {
      CHECK(cyclic::count_residue_tuples({k, {}}) == 1);
      CHECK(cyclic::count_residue_tuples_bruteforce({k, {}}) == 1);
    }
    CHECK(cyclic::count_residue_tuples({4, {2}}) == 0);
    CHECK(cyclic::count_residue_tuples_bruteforce({4, {2}}) == 0);
    CHECK_THROWS_AS(cyclic::count_residue_tuples({6, {4}}), DomainError);
    CHECK_THROWS_AS(cyclic::count_residue_tuples_bruteforce({30, {1, 1, 1, 1, 1, 1}}, 1000), BudgetError);
  }

  TEST_CASE("closed form matches enumeration on every small multiset") {
    for (std::int64_t k = 1; k <= 30; ++k) {
      const auto divs = arith::divisors(k);
      std::vector<std::int64_t> ls;
      auto rec = [&](auto&& self, std::size_t start) -> void {
        std::int64_t ks = 1;
        for (std::size_t i = 0; i < ls.size(); ++i) ks *= k;
        if (ks <= 1'000'000) {
          REQUIRE(cyclic::count_residue_tuples({k, ls}) == cyclic::count_residue_tuples_bruteforce({k, ls}));
        }
        if (ls.size() == 4) return;
        for (std::size_t i = start; i < divs.size(); ++i) {
          ls.push_back(divs[i]);
          self(self, i);
          ls.pop_back();
        }
      };
      rec(rec, 0);
    }
  }

  TEST_CASE("count is symmetric in the class multiset") {
    std::vector<std::int64_t> ls{1, 2, 3, 6, 2};
    const auto base = cyclic::count_residue_tuples({12, ls});
    std::sort(ls.begin(), ls.end());
    do {
      CHECK(cyclic::count_residue_tuples({12, ls}) == base);
    } while (std::next_permutation(ls.begin(), ls.end()));
  }

  TEST_CASE("prime closed form and its recurrence") {
    CHECK(cyclic::prime_power_tuple_count(5, 3) == 12);
    CHECK(cyclic::prime_power_tuple_count(3, 4) == 6);
    CHECK(cyclic::prime_power_tuple_count(2, 2) == 1);
    CHECK_THROWS_AS(cyclic::prime_power_tuple_count(6, 2), DomainError);
    for (std::int64_t p : {2, 3, 5, 7}) {
      for (int s = 1; s <= 6; ++s) {
        const ResidueConstraint rc{p, std::vector<std::int64_t>(static_cast<std::size_t>(s), 1)};
        CHECK(cyclic::count_residue_tuples(rc) == cyclic::prime_power_tuple_count(p, s));
        if (s >= 2) {
          BigInt pm;
          mpz_ui_pow_ui(pm.get_mpz_t(), static_cast<unsigned long>(p - 1), static_cast<unsigned long>(s - 1));
          CHECK(cyclic::prime_power_tuple_count(p, s) == pm - cyclic::prime_power_tuple_count(p, s - 1));
        }
      }
    }
  }

  TEST_CASE("connected monodromy counts") {
    CHECK(cyclic::count_connected_monodromies(2, 1, 1) == 4);
    for (std::int64_t ord : {1, 3, 8}) CHECK(cyclic::count_connected_monodromies(ord, 0, 1) == 1);
    CHECK(cyclic::count_connected_monodromies(4, 0, 2) == 0);
    CHECK(cyclic::count_connected_monodromies(4, 1, 2) == 12);
    CHECK(cyclic::count_connected_monodromies_bruteforce(2, 1, 1) == 4);
    CHECK(cyclic::count_connected_monodromies_bruteforce(4, 1, 2) == 12);
    CHECK(cyclic::count_connected_monodromies_bruteforce(6, 1, 6) == 24);
    CHECK(cyclic::count_connected_monodromies_bruteforce(3, 2, 3) == 80);
    CHECK_THROWS_AS(cyclic::count_connected_monodromies(4, 1, 3), DomainError);
    CHECK_THROWS_AS(cyclic::count_connected_monodromies_bruteforce(30, 4, 1, 1000), BudgetError);

    for (std::int64_t ord = 1; ord <= 8; ++ord) {
      for (int h = 0; h <= 2; ++h) {
        for (auto L : arith::divisors(ord)) {
          CAPTURE(ord);
          CAPTURE(h);
          CAPTURE(L);
          CHECK(cyclic::count_connected_monodromies(ord, h, L) == cyclic::count_connected_monodromies_bruteforce(ord, h, L));
        }
      }
    }
  }

  TEST_CASE("printed monodromy exponent is negative") {
    FormulaOptions printed;
    printed.printed_monodromy_exponent = true;
    CHECK(cyclic::count_connected_monodromies(4, 1, 2, printed) == -48);
    // both readings agree when L = 1
    CHECK(cyclic::count_connected_monodromies(2, 1, 1, printed) == 4);
  }
}

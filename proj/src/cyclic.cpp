#include "mgn/cyclic.hpp"

#include <algorithm>
#include <string>

#include "mgn/arith.hpp"
#include "mgn/error.hpp"

namespace mgn::cyclic {
namespace {

void require_divides(std::int64_t a, std::int64_t k, const char* what) {
  if (a < 1 || k < 1 || k % a != 0) {
    throw DomainError(std::string(what) + ": " + std::to_string(a) + " does not divide " + std::to_string(k));
  }
}

// Power with overflow guard, used only to compare enumeration sizes against budgets.
std::int64_t capped_power(std::int64_t base, int exponent, std::int64_t cap) {
  std::int64_t out = 1;
  for (int i = 0; i < exponent; ++i) {
    if (out > cap / std::max<std::int64_t>(base, 1)) return cap + 1;
    out *= base;
  }
  return out;
}

// a / b for polynomials with integer coefficients, b monic. Returns the quotient
// and leaves the remainder in a.
std::vector<std::int64_t> divide_monic(std::vector<std::int64_t>& a, const std::vector<std::int64_t>& b) {
  const std::size_t db = b.size() - 1;
  if (a.size() <= db) return {0};
  std::vector<std::int64_t> q(a.size() - db, 0);
  for (std::size_t i = a.size(); i-- > db;) {
    const std::int64_t lead = a[i];
    if (lead == 0) continue;
    q[i - db] = lead;
    for (std::size_t j = 0; j <= db; ++j) a[i - db + j] -= lead * b[j];
  }
  a.resize(db == 0 ? 1 : db);
  return q;
}

}  // namespace

void ResidueConstraint::validate() const {
  if (modulus < 1) throw DomainError("residue constraint: modulus must be positive");
  for (auto l : classes) require_divides(l, modulus, "residue constraint");
}

std::int64_t c_sum(std::int64_t k, std::int64_t l, std::int64_t d) {
  require_divides(l, k, "c_sum");
  require_divides(d, k, "c_sum");
  const std::int64_t e = d / arith::gcd(d, l);
  const std::int64_t num = arith::euler_phi(k / l);
  const std::int64_t den = arith::euler_phi(e);
  if (num % den != 0) throw InvariantError("c_sum: phi(d/(d,l)) does not divide phi(k/l)");
  return arith::mobius(e) * (num / den);
}

std::vector<std::int64_t> cyclotomic_polynomial(std::int64_t d) {
  if (d < 1) throw DomainError("cyclotomic_polynomial: order must be positive");
  std::vector<std::int64_t> poly(static_cast<std::size_t>(d) + 1, 0);
  poly[0] = -1;
  poly[static_cast<std::size_t>(d)] = 1;
  for (auto e : arith::divisors(d)) {
    if (e == d) break;
    auto factor = cyclotomic_polynomial(e);
    auto rem = poly;
    poly = divide_monic(rem, factor);
    for (auto c : rem) {
      if (c != 0) throw InvariantError("cyclotomic_polynomial: inexact division");
    }
  }
  return poly;
}

std::int64_t c_sum_bruteforce(std::int64_t k, std::int64_t l, std::int64_t d) {
  require_divides(l, k, "c_sum_bruteforce");
  require_divides(d, k, "c_sum_bruteforce");
  // sum zeta^r, zeta of order d, as a vector of exponent counts mod d
  std::vector<std::int64_t> element(static_cast<std::size_t>(d), 0);
  for (std::int64_t r = 0; r < k; ++r) {
    if (arith::gcd(r, k) == l) ++element[static_cast<std::size_t>(r % d)];
  }
  divide_monic(element, cyclotomic_polynomial(d));
  for (std::size_t i = 1; i < element.size(); ++i) {
    if (element[i] != 0) throw InvariantError("c_sum_bruteforce: character sum is not rational");
  }
  return element[0];
}

BigInt count_residue_tuples(const ResidueConstraint& c) {
  c.validate();
  const std::int64_t k = c.modulus;
  BigInt total = 0;
  for (auto d : arith::divisors(k)) {
    BigInt term = arith::euler_phi(d);
    for (auto l : c.classes) term *= c_sum(k, l, d);
    total += term;
  }
  if (total % k != 0) throw InvariantError("count_residue_tuples: sum not divisible by the modulus");
  BigInt out = total / k;
  if (out < 0) throw InvariantError("count_residue_tuples: negative count");
  return out;
}

BigInt count_residue_tuples_bruteforce(const ResidueConstraint& c, std::int64_t budget) {
  c.validate();
  const std::int64_t k = c.modulus;
  const int s = static_cast<int>(c.classes.size());
  if (capped_power(k, s, budget) > budget) {
    throw BudgetError("count_residue_tuples_bruteforce: k^s exceeds the enumeration budget");
  }
  // residues of each gcd-class, found by scanning Z/k
  std::vector<std::vector<std::int64_t>> candidates;
  for (auto l : c.classes) {
    std::vector<std::int64_t> list;
    for (std::int64_t r = 0; r < k; ++r) {
      if (arith::gcd(r, k) == l) list.push_back(r);
    }
    if (list.empty()) return 0;
    candidates.push_back(std::move(list));
  }
  std::int64_t count = 0;
  std::vector<std::size_t> pick(static_cast<std::size_t>(s), 0);
  while (true) {
    std::int64_t sum = 0;
    for (int i = 0; i < s; ++i) sum += candidates[i][pick[i]];
    if (sum % k == 0) ++count;
    int pos = 0;
    while (pos < s && ++pick[pos] == candidates[pos].size()) pick[pos++] = 0;
    if (pos == s) break;
  }
  return count;
}

BigInt prime_power_tuple_count(std::int64_t p, int s) {
  if (!arith::is_prime(p)) throw DomainError("prime_power_tuple_count: " + std::to_string(p) + " is not prime");
  if (s < 0) throw DomainError("prime_power_tuple_count: negative tuple length");
  BigInt a;
  mpz_ui_pow_ui(a.get_mpz_t(), static_cast<unsigned long>(p - 1), static_cast<unsigned long>(s));
  BigInt b = (s % 2 == 0 ? 1 : -1) * (p - 1);
  BigInt total = a + b;
  if (total % p != 0) throw InvariantError("prime_power_tuple_count: inexact division");
  return total / p;
}

BigInt count_connected_monodromies(std::int64_t ord, int h, std::int64_t L, const FormulaOptions& options) {
  if (h < 0) throw DomainError("count_connected_monodromies: negative genus");
  require_divides(L, ord, "count_connected_monodromies");
  Rational count = pow(Rational(ord), 2L * h);
  for (const auto& pe : arith::factorize(L)) {
    const long exponent = options.printed_monodromy_exponent ? 2L * h : -2L * h;
    count *= Rational(1) - pow(Rational(static_cast<long>(pe.prime)), exponent);
  }
  BigInt out = count.to_integer();
  if (!options.printed_monodromy_exponent && out < 0) {
    throw InvariantError("count_connected_monodromies: negative count");
  }
  return out;
}

BigInt count_connected_monodromies_bruteforce(std::int64_t ord, int h, std::int64_t L, std::int64_t budget) {
  if (h < 0) throw DomainError("count_connected_monodromies_bruteforce: negative genus");
  require_divides(L, ord, "count_connected_monodromies_bruteforce");
  const int len = 2 * h;
  if (capped_power(ord, len, budget) > budget) {
    throw BudgetError("count_connected_monodromies_bruteforce: ord^{2h} exceeds the enumeration budget");
  }
  std::int64_t count = 0;
  std::vector<std::int64_t> a(static_cast<std::size_t>(len), 0);
  while (true) {
    std::int64_t g = L;
    for (auto x : a) g = arith::gcd(g, x);
    if (g == 1) ++count;
    int pos = 0;
    while (pos < len && ++a[pos] == ord) a[pos++] = 0;
    if (pos == len) break;
  }
  return count;
}

}  // namespace mgn::cyclic

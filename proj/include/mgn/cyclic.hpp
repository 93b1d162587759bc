#pragma once

#include <cstdint>
#include <vector>

#include "mgn/options.hpp"
#include "mgn/rational.hpp"

// Counting formulas for cyclic branched covers: the root-of-unity character
// sums c(k, l, d), residue-tuple counts N(k; l_1, ..., l_s), and the number
// of monodromy assignments giving a connected cover. Every closed form has a
// brute-force counterpart that shares no code path with it.

namespace mgn::cyclic {

/// Modulus k and a multiset of gcd-classes l_i, each dividing k.
/// An empty multiset is the unramified case.
struct ResidueConstraint {
  std::int64_t modulus = 1;
  std::vector<std::int64_t> classes;

  /// Throws DomainError unless modulus >= 1 and every class divides it.
  void validate() const;
};

/// Sum of zeta^r over 0 <= r < k with gcd(r, k) = l, zeta a primitive d-th
/// root of unity: mu(d/(d,l)) * phi(k/l) / phi(d/(d,l)).
std::int64_t c_sum(std::int64_t k, std::int64_t l, std::int64_t d);

/// Same sum evaluated directly: accumulates the exponents r mod d into an
/// element of Z[x]/(x^d - 1) and reduces modulo the d-th cyclotomic polynomial.
/// The remainder must be a constant, which is returned.
std::int64_t c_sum_bruteforce(std::int64_t k, std::int64_t l, std::int64_t d);

/// Integer coefficients of the d-th cyclotomic polynomial, lowest degree first.
std::vector<std::int64_t> cyclotomic_polynomial(std::int64_t d);

/// N(k; l) = (1/k) sum_{d|k} phi(d) prod_i c(k, l_i, d).
BigInt count_residue_tuples(const ResidueConstraint& c);

/// Enumerates (Z/k)^s directly. Throws BudgetError when k^s > budget.
BigInt count_residue_tuples_bruteforce(const ResidueConstraint& c, std::int64_t budget = 100'000'000);

/// ((p-1)^s + (-1)^s (p-1)) / p, the closed form of N(p; 1, ..., 1).
BigInt prime_power_tuple_count(std::int64_t p, int s);

/// Number of (a_1, ..., a_{2h}) in (Z/ord)^{2h} with gcd(a_1, ..., a_{2h}, L) = 1,
/// as ord^{2h} * prod_{p|L} (1 - p^{-2h}). Requires L | ord.
BigInt count_connected_monodromies(std::int64_t ord, int h, std::int64_t L,
                                   const FormulaOptions& options = {});

/// Direct enumeration. Throws BudgetError when ord^{2h} > budget.
BigInt count_connected_monodromies_bruteforce(std::int64_t ord, int h, std::int64_t L,
                                              std::int64_t budget = 100'000'000);

}  // namespace mgn::cyclic

#pragma once

#include <cstdint>
#include <functional>
#include <map>

#include "mgn/partition.hpp"
#include "mgn/ppolynomial.hpp"

namespace mgn {

/// Irreducible character chi^lambda evaluated on the class of cycle type mu,
/// by the Murnaghan-Nakayama rule. Results are memoized in a process-wide
/// table that tolerates concurrent callers. |lambda| != |mu| throws.
std::int64_t mn_character(const Partition& lambda, const Partition& mu);

/// Number of standard Young tableaux of shape lambda (hook-length formula).
BigInt hook_dimension(const Partition& lambda);

/// Schur multiplicities keyed by lambda, (n) first. Only nonzero entries.
using SchurExpansion = std::map<Partition, Rational, std::greater<>>;

/// Expands a degree-n polynomial in the p_j into Schur functions using
/// p_mu = sum_lambda chi^lambda(mu) s_lambda. Non-homogeneous input throws.
SchurExpansion p_to_schur(const PPolynomial& f, int n);

/// n! times the coefficient of p_1^n: the total (virtual) dimension.
/// Cross-checked against sum_lambda m_lambda f^lambda.
Rational specialize_plain_euler(const PPolynomial& f, int n);

/// f with every p_j set to 1: the multiplicity of the trivial representation,
/// i.e. the Euler characteristic of the S_n-quotient.
Rational specialize_quotient_euler(const PPolynomial& f);

}  // namespace mgn

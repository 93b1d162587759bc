#pragma once

#include <cstdint>
#include <vector>

#include "mgn/rational.hpp"

namespace mgn::arith {

struct PrimePower {
  std::int64_t prime;
  int exponent;
  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// Primes strictly increasing; factorize(1) is empty.
using Factorization = std::vector<PrimePower>;

/// Trial division. Integers in this library are at most a few hundred.
Factorization factorize(std::int64_t n);

int mobius(std::int64_t n);
std::int64_t euler_phi(std::int64_t n);

/// Ascending, including 1 and n.
std::vector<std::int64_t> divisors(std::int64_t n);

bool is_prime(std::int64_t n);

/// gcd with the convention gcd(0, k) = k.
std::int64_t gcd(std::int64_t a, std::int64_t b);

/// Bernoulli number B_m for even m >= 0 (B_2 = 1/6). Odd m is rejected.
/// Memoized; safe to call from several threads.
Rational bernoulli(int m);

BigInt factorial(long n);

/// Generalized binomial coefficient C(k, m) = k(k-1)...(k-m+1)/m!, any integer k.
BigInt binomial(long k, long m);

}  // namespace mgn::arith

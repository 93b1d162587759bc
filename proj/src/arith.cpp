#include "mgn/arith.hpp"

#include <mutex>
#include <numeric>
#include <shared_mutex>
#include <string>

#include "mgn/error.hpp"

namespace mgn::arith {
namespace {

void require_positive(std::int64_t n, const char* what) {
  if (n < 1) throw DomainError(std::string(what) + ": argument must be positive, got " + std::to_string(n));
}

}  // namespace

Factorization factorize(std::int64_t n) {
  require_positive(n, "factorize");
  Factorization out;
  for (std::int64_t p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    out.push_back({p, e});
  }
  if (n > 1) out.push_back({n, 1});
  return out;
}

int mobius(std::int64_t n) {
  require_positive(n, "mobius");
  int sign = 1;
  for (const auto& [p, e] : factorize(n)) {
    if (e > 1) return 0;
    sign = -sign;
  }
  return sign;
}

std::int64_t euler_phi(std::int64_t n) {
  require_positive(n, "euler_phi");
  std::int64_t phi = n;
  for (const auto& pe : factorize(n)) phi = phi / pe.prime * (pe.prime - 1);
  return phi;
}

std::vector<std::int64_t> divisors(std::int64_t n) {
  require_positive(n, "divisors");
  std::vector<std::int64_t> small, large;
  for (std::int64_t d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    small.push_back(d);
    if (d != n / d) large.push_back(n / d);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  auto f = factorize(n);
  return f.size() == 1 && f.front().exponent == 1;
}

std::int64_t gcd(std::int64_t a, std::int64_t b) { return std::gcd(a, b); }

Rational bernoulli(int m) {
  if (m < 0) throw DomainError("bernoulli: negative index");
  if (m % 2 == 1 && m > 1) throw DomainError("bernoulli: odd index " + std::to_string(m) + " is not supported");

  // Table holds B_0..B_k for the full recurrence, B_1 = -1/2 included internally.
  static std::vector<Rational> table{Rational(1), Rational(-1) / Rational(2)};
  static std::shared_mutex mutex;
  {
    std::shared_lock lock(mutex);
    if (static_cast<std::size_t>(m) < table.size()) return table[m];
  }
  std::unique_lock lock(mutex);
  while (table.size() <= static_cast<std::size_t>(m)) {
    const long idx = static_cast<long>(table.size());
    // sum_{k<=idx} C(idx+1, k) B_k = 0
    Rational acc;
    for (long k = 0; k < idx; ++k) acc += Rational(binomial(idx + 1, k)) * table[k];
    table.push_back(-acc / Rational(idx + 1));
  }
  return table[m];
}

BigInt factorial(long n) {
  if (n < 0) throw DomainError("factorial of a negative number");
  BigInt out;
  mpz_fac_ui(out.get_mpz_t(), static_cast<unsigned long>(n));
  return out;
}

BigInt binomial(long k, long m) {
  if (m < 0) return 0;
  BigInt num = 1;
  for (long i = 0; i < m; ++i) num *= k - i;
  BigInt den = factorial(m);
  if (num % den != 0) throw InvariantError("binomial coefficient is not integral");
  return num / den;
}

}  // namespace mgn::arith

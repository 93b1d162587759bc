#include "mgn/characters.hpp"

#include <algorithm>
#include <mutex>
#include <shared_mutex>
#include <utility>
#include <vector>

#include "mgn/arith.hpp"
#include "mgn/error.hpp"

namespace mgn {
namespace {

using Key = std::pair<std::vector<int>, std::vector<int>>;

struct CharacterMemo {
  std::shared_mutex mutex;
  std::map<Key, std::int64_t> table;
};

CharacterMemo& memo() {
  static CharacterMemo instance;
  return instance;
}

// lambda from a beta-set (first-column hook lengths), zeros dropped.
std::vector<int> from_beta(std::vector<int> beta) {
  std::sort(beta.begin(), beta.end(), std::greater<>());
  const int len = static_cast<int>(beta.size());
  std::vector<int> parts;
  for (int i = 0; i < len; ++i) {
    const int part = beta[i] - (len - 1 - i);
    if (part > 0) parts.push_back(part);
  }
  return parts;
}

// mu is weakly decreasing; the largest part is stripped first.
std::int64_t mn_rec(const std::vector<int>& lambda, const std::vector<int>& mu) {
  if (mu.empty()) return lambda.empty() ? 1 : 0;

  Key key{lambda, mu};
  auto& m = memo();
  {
    std::shared_lock lock(m.mutex);
    if (auto it = m.table.find(key); it != m.table.end()) return it->second;
  }

  const int r = mu.front();
  const std::vector<int> rest(mu.begin() + 1, mu.end());
  const int len = static_cast<int>(lambda.size());
  std::vector<int> beta(static_cast<std::size_t>(len));
  for (int i = 0; i < len; ++i) beta[i] = lambda[i] + (len - 1 - i);

  std::int64_t total = 0;
  for (int i = 0; i < len; ++i) {
    const int target = beta[i] - r;
    if (target < 0 || std::find(beta.begin(), beta.end(), target) != beta.end()) continue;
    // leg length of the removed rim hook = beads strictly between target and beta[i]
    const auto height = std::count_if(beta.begin(), beta.end(), [&](int b) { return b > target && b < beta[i]; });
    auto next = beta;
    next[i] = target;
    const std::int64_t sub = mn_rec(from_beta(std::move(next)), rest);
    total += (height % 2 == 0) ? sub : -sub;
  }

  std::unique_lock lock(m.mutex);
  m.table.emplace(std::move(key), total);
  return total;
}

}  // namespace

std::int64_t mn_character(const Partition& lambda, const Partition& mu) {
  if (lambda.weight() != mu.weight()) {
    throw DomainError("mn_character: weight mismatch between " + lambda.str() + " and " + mu.str());
  }
  return mn_rec(lambda.parts(), mu.parts());
}

BigInt hook_dimension(const Partition& lambda) {
  const auto conj = lambda.conjugate();
  BigInt hooks = 1;
  for (int i = 0; i < lambda.length(); ++i) {
    for (int j = 0; j < lambda[i]; ++j) {
      const int arm = lambda[i] - j - 1;
      const int leg = conj[static_cast<std::size_t>(j)] - i - 1;
      hooks *= arm + leg + 1;
    }
  }
  BigInt nf = arith::factorial(lambda.weight());
  if (nf % hooks != 0) throw InvariantError("hook_dimension: hook product does not divide n!");
  return nf / hooks;
}

SchurExpansion p_to_schur(const PPolynomial& f, int n) {
  f.require_homogeneous(n);
  SchurExpansion out;
  for (const auto& lambda : partitions_of(n)) {
    Rational m;
    for (const auto& [mono, c] : f.terms()) m += c * Rational(static_cast<long>(mn_character(lambda, mono.to_partition())));
    if (!m.is_zero()) out.emplace(lambda, m);
  }
  return out;
}

Rational specialize_plain_euler(const PPolynomial& f, int n) {
  f.require_homogeneous(n);
  const Rational direct = f.coefficient(PMonomial::variable(1, n)) * Rational(arith::factorial(n));
  Rational via_schur;
  for (const auto& [lambda, m] : p_to_schur(f, n)) via_schur += m * Rational(hook_dimension(lambda));
  if (direct != via_schur) {
    throw InvariantError("specialize_plain_euler: p_1 coefficient gives " + direct.str() +
                         " but Schur dimensions give " + via_schur.str());
  }
  return direct;
}

Rational specialize_quotient_euler(const PPolynomial& f) {
  const Rational value = f.evaluate_at_ones();
  if (f.is_zero()) return value;
  const int n = f.terms().begin()->first.degree();
  if (!f.is_homogeneous(n)) return value;
  const auto schur = p_to_schur(f, n);
  const auto it = schur.find(Partition(n == 0 ? std::vector<int>{} : std::vector<int>{n}));
  const Rational trivial = it == schur.end() ? Rational() : it->second;
  if (trivial != value) {
    throw InvariantError("specialize_quotient_euler: p_j -> 1 gives " + value.str() +
                         " but the trivial Schur multiplicity is " + trivial.str());
  }
  return value;
}

}  // namespace mgn

#include "mgn/confspace.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "mgn/arith.hpp"
#include "mgn/error.hpp"

namespace mgn::confspace {
namespace {

TruncatedSeries product_of_powers(const std::map<int, long>& exponents, int order) {
  auto out = TruncatedSeries::one(order);
  for (const auto& [j, k] : exponents) {
    if (k == 0) continue;
    out = series_mul(out, binomial_power(j, k, order));
  }
  return out;
}

Permutation compose(const Permutation& a, const Permutation& b) {  // a after b
  Permutation out(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) out[i] = a[static_cast<std::size_t>(b[i])];
  return out;
}

Permutation identity(int points) {
  Permutation id(static_cast<std::size_t>(points));
  std::iota(id.begin(), id.end(), 0);
  return id;
}

void check_permutation(const Permutation& p, int points) {
  if (static_cast<int>(p.size()) != points) throw DomainError("finite model: permutation has the wrong size");
  std::vector<bool> seen(p.size(), false);
  for (int x : p) {
    if (x < 0 || x >= points || seen[static_cast<std::size_t>(x)]) {
      throw DomainError("finite model: element is not a permutation of the points");
    }
    seen[static_cast<std::size_t>(x)] = true;
  }
}

Partition cycle_type(const Permutation& p) {
  std::vector<bool> seen(p.size(), false);
  std::vector<int> parts;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(p[j])) {
      seen[j] = true;
      ++len;
    }
    parts.push_back(len);
  }
  return Partition(std::move(parts));
}

}  // namespace

long GroupElementData::total_euler() const {
  long sum = 0;
  for (const auto& [k, chi] : chi_by_orbit_length) sum += chi;
  return sum;
}

void GroupActionData::validate() const {
  if (group_order < 1) throw SchemaError("group_order must be positive");
  if (static_cast<long>(elements.size()) != group_order) {
    throw SchemaError("expected " + std::to_string(group_order) + " group elements, got " +
                      std::to_string(elements.size()));
  }
  for (const auto& e : elements) {
    for (const auto& [k, chi] : e.chi_by_orbit_length) {
      if (k < 1) throw SchemaError("element " + e.label + ": orbit lengths must be positive");
    }
    if (e.total_euler() != elements.front().total_euler()) {
      throw SchemaError("element " + e.label + " has chi(X) = " + std::to_string(e.total_euler()) + ", element " +
                        elements.front().label + " has " + std::to_string(elements.front().total_euler()));
    }
  }
}

TruncatedSeries equivariant_config_series(const GroupActionData& data, int order) {
  data.validate();
  TruncatedSeries sum(order);
  for (const auto& e : data.elements) {
    std::map<int, long> exponents;
    for (const auto& [k, chi] : e.chi_by_orbit_length) {
      if (chi % k != 0) {
        throw InvariantError("element " + e.label + ": chi(X_" + std::to_string(k) + ") = " + std::to_string(chi) +
                             " is not divisible by the orbit length " + std::to_string(k));
      }
      exponents[k] = chi / k;
    }
    sum += product_of_powers(exponents, order);
  }
  return sum * (Rational(1) / Rational(data.group_order));
}

TruncatedSeries strata_combine(const std::vector<Stratum>& strata, int order) {
  TruncatedSeries sum(order);
  for (const auto& stratum : strata) sum += product_of_powers(stratum.exponents, order) * stratum.weight;
  return sum;
}

FiniteModel::FiniteModel(int points, std::vector<Permutation> elements)
    : points_(points), elements_(std::move(elements)) {
  if (points < 0) throw DomainError("finite model: negative number of points");
  for (const auto& p : elements_) check_permutation(p, points);
  std::set<Permutation> set(elements_.begin(), elements_.end());
  if (set.size() != elements_.size()) throw DomainError("finite model: repeated group element");
  if (!set.count(identity(points))) throw DomainError("finite model: identity is missing");
  for (const auto& a : elements_) {
    for (const auto& b : elements_) {
      if (!set.count(compose(a, b))) throw DomainError("finite model: elements are not closed under composition");
    }
  }
}

FiniteModel FiniteModel::generated_by(int points, const std::vector<Permutation>& generators) {
  std::set<Permutation> group{identity(points)};
  std::vector<Permutation> frontier{identity(points)};
  for (const auto& g : generators) check_permutation(g, points);
  while (!frontier.empty()) {
    std::vector<Permutation> next;
    for (const auto& a : frontier) {
      for (const auto& g : generators) {
        auto c = compose(g, a);
        if (group.insert(c).second) next.push_back(std::move(c));
      }
    }
    frontier = std::move(next);
  }
  return FiniteModel(points, std::vector<Permutation>(group.begin(), group.end()));
}

GroupActionData FiniteModel::action_data() const {
  GroupActionData data;
  data.group_order = static_cast<long>(elements_.size());
  for (std::size_t idx = 0; idx < elements_.size(); ++idx) {
    const auto& g = elements_[idx];
    GroupElementData e;
    e.label = "g" + std::to_string(idx);
    for (int x = 0; x < points_; ++x) {
      int len = 1;
      for (int y = g[static_cast<std::size_t>(x)]; y != x; y = g[static_cast<std::size_t>(y)]) ++len;
      ++e.chi_by_orbit_length[len];
    }
    data.elements.push_back(std::move(e));
  }
  return data;
}

PPolynomial finite_model_oracle(const FiniteModel& model, int n, std::int64_t budget) {
  if (n < 0) throw DomainError("finite_model_oracle: negative n");
  const int m = model.points();
  std::int64_t size = 1;
  for (int i = 0; i < n; ++i) {
    size *= std::max(m, 1);
    if (size > budget) throw BudgetError("finite_model_oracle: points^n exceeds the enumeration budget");
  }

  auto canonical = [&](const std::vector<int>& tuple) {
    std::vector<int> best;
    std::vector<int> image(tuple.size());
    for (const auto& g : model.elements()) {
      for (std::size_t i = 0; i < tuple.size(); ++i) image[i] = g[static_cast<std::size_t>(tuple[i])];
      if (best.empty() || image < best) best = image;
    }
    return best;
  };

  // G-orbits of injective tuples, each stored as its least translate
  std::set<std::vector<int>> orbits;
  std::vector<int> tuple(static_cast<std::size_t>(n), 0);
  if (n <= m) {
    while (true) {
      std::vector<int> sorted = tuple;
      std::sort(sorted.begin(), sorted.end());
      if (std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end()) orbits.insert(canonical(tuple));
      int pos = 0;
      while (pos < n && ++tuple[static_cast<std::size_t>(pos)] == m) tuple[static_cast<std::size_t>(pos++)] = 0;
      if (pos == n) break;
    }
  }

  std::map<Partition, long> fixed_by_type;
  std::vector<int> sigma(static_cast<std::size_t>(n));
  std::iota(sigma.begin(), sigma.end(), 0);
  do {
    long fixed = 0;
    std::vector<int> moved(static_cast<std::size_t>(n));
    for (const auto& rep : orbits) {
      for (int i = 0; i < n; ++i) moved[static_cast<std::size_t>(sigma[i])] = rep[static_cast<std::size_t>(i)];
      if (canonical(moved) == rep) ++fixed;
    }
    fixed_by_type[cycle_type(sigma)] += fixed;
  } while (std::next_permutation(sigma.begin(), sigma.end()));

  PPolynomial out;
  const Rational inv_fact = Rational(1) / Rational(arith::factorial(n));
  for (const auto& [mu, count] : fixed_by_type) out.add_term(PMonomial::from_partition(mu), Rational(count) * inv_fact);
  return out;
}

Rational falling_factorial_check(long chi, int n) {
  if (n < 0) throw DomainError("falling_factorial_check: negative n");
  Rational direct(1);
  for (int i = 0; i < n; ++i) direct *= Rational(chi - i);
  const auto series = binomial_power(1, chi, n);
  const Rational via_series = series[n].evaluate_at_ones() * Rational(arith::factorial(n));
  if (direct != via_series) {
    throw InvariantError("falling_factorial_check: chi = " + std::to_string(chi) + ", n = " + std::to_string(n) +
                         ": product " + direct.str() + " vs series " + via_series.str());
  }
  return direct;
}

}  // namespace mgn::confspace

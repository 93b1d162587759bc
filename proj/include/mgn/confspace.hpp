#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "mgn/ppolynomial.hpp"
#include "mgn/rational.hpp"
#include "mgn/series.hpp"

// Equivariant Euler characteristics of unordered-by-G configuration spaces
// F(X, n)/G, packaged as a t-series of Frobenius characteristics
//   ch_n = (1/n!) sum_{sigma in S_n} p_{type(sigma)} Tr(sigma),
// together with a brute-force oracle over finite G-sets.

namespace mgn::confspace {

/// Fixed-point data of one group element g: k -> chi(X_k(g)), the Euler
/// characteristic of the locus of points whose g-orbit has length k.
struct GroupElementData {
  std::string label;
  std::map<int, long> chi_by_orbit_length;

  long total_euler() const;
};

struct GroupActionData {
  long group_order = 1;
  /// One entry per group element, so elements.size() == group_order.
  std::vector<GroupElementData> elements;

  /// Throws SchemaError on inconsistent sizes, bad keys, or elements that
  /// disagree on chi(X).
  void validate() const;
};

/// A stratum of the base: orbifold weight times prod_j (1 + p_j t^j)^{k_j}.
struct Stratum {
  Rational weight;
  std::map<int, long> exponents;
};

/// (1/|G|) sum_g prod_k (1 + p_k t^k)^{chi(X_k(g))/k}. Throws InvariantError
/// when some chi(X_k(g)) is not divisible by k.
TruncatedSeries equivariant_config_series(const GroupActionData& data, int order);

/// sum_strata weight * prod_j (1 + p_j t^j)^{k_j}, summed in input order.
TruncatedSeries strata_combine(const std::vector<Stratum>& strata, int order);

/// Image of each point 0..m-1.
using Permutation = std::vector<int>;

/// A finite group acting on the points {0, ..., m-1} by permutations.
class FiniteModel {
 public:
  /// The element list must contain the identity and be closed under
  /// composition; duplicates are rejected.
  FiniteModel(int points, std::vector<Permutation> elements);
  /// Closes the generators under composition.
  static FiniteModel generated_by(int points, const std::vector<Permutation>& generators);

  int points() const { return points_; }
  const std::vector<Permutation>& elements() const { return elements_; }
  std::size_t order() const { return elements_.size(); }

  /// Counts points by orbit length for every element.
  GroupActionData action_data() const;

 private:
  int points_;
  std::vector<Permutation> elements_;
};

/// Degree-n Frobenius characteristic of the permutation representation of S_n
/// on the G-orbits of injective n-tuples, by explicit enumeration.
/// Throws BudgetError when points^n exceeds the budget.
PPolynomial finite_model_oracle(const FiniteModel& model, int n, std::int64_t budget = 1'000'000);

/// chi (chi-1) ... (chi-n+1), checked against n! [t^n] (1 + t)^chi computed
/// through binomial_power with p_1 -> 1.
Rational falling_factorial_check(long chi, int n);

}  // namespace mgn::confspace

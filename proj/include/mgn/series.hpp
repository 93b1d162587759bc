#pragma once

#include <vector>

#include "mgn/ppolynomial.hpp"

namespace mgn {

/// Power series in t with PPolynomial coefficients, truncated after t^order.
class TruncatedSeries {
 public:
  explicit TruncatedSeries(int order = 0);
  static TruncatedSeries one(int order);

  int order() const { return static_cast<int>(coeffs_.size()) - 1; }
  const PPolynomial& operator[](int n) const { return coeffs_.at(static_cast<std::size_t>(n)); }
  PPolynomial& operator[](int n) { return coeffs_.at(static_cast<std::size_t>(n)); }
  const std::vector<PPolynomial>& coefficients() const { return coeffs_; }

  bool is_zero() const;
  /// Every t^n coefficient homogeneous of p-degree n.
  bool is_graded() const;

  TruncatedSeries& operator+=(const TruncatedSeries& o);
  TruncatedSeries& operator*=(const Rational& c);
  friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
  friend TruncatedSeries operator*(TruncatedSeries a, const Rational& c) { return a *= c; }
  friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) { return a.coeffs_ == b.coeffs_; }

 private:
  std::vector<PPolynomial> coeffs_;
};

/// Cauchy product truncated at the common order. Mismatched orders throw.
TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b);

/// (1 + p_j t^j)^k = sum_m C(k, m) p_j^m t^{jm}, any integer k.
TruncatedSeries binomial_power(int j, long k, int order);

}  // namespace mgn

#include "mgn/series.hpp"

#include "mgn/arith.hpp"
#include "mgn/error.hpp"

namespace mgn {

TruncatedSeries::TruncatedSeries(int order) {
  if (order < 0) throw DomainError("truncation order must be non-negative");
  coeffs_.resize(static_cast<std::size_t>(order) + 1);
}

TruncatedSeries TruncatedSeries::one(int order) {
  TruncatedSeries s(order);
  s.coeffs_[0] = PPolynomial(Rational(1));
  return s;
}

bool TruncatedSeries::is_zero() const {
  for (const auto& c : coeffs_) {
    if (!c.is_zero()) return false;
  }
  return true;
}

bool TruncatedSeries::is_graded() const {
  for (int n = 0; n <= order(); ++n) {
    if (!coeffs_[static_cast<std::size_t>(n)].is_homogeneous(n)) return false;
  }
  return true;
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& o) {
  if (o.order() != order()) throw DomainError("series_add: mismatched truncation orders");
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  return *this;
}

TruncatedSeries& TruncatedSeries::operator*=(const Rational& c) {
  for (auto& p : coeffs_) p *= c;
  return *this;
}

TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b) {
  if (a.order() != b.order()) throw DomainError("series_mul: mismatched truncation orders");
  const int N = a.order();
  TruncatedSeries out(N);
  for (int i = 0; i <= N; ++i) {
    if (a[i].is_zero()) continue;
    for (int j = 0; i + j <= N; ++j) {
      if (b[j].is_zero()) continue;
      out[i + j] += a[i] * b[j];
    }
  }
  return out;
}

TruncatedSeries binomial_power(int j, long k, int order) {
  if (j < 1) throw DomainError("binomial_power: variable index must be positive");
  TruncatedSeries out(order);
  for (long m = 0; static_cast<long>(j) * m <= order; ++m) {
    BigInt c = arith::binomial(k, m);
    if (c == 0) break;  // k >= 0 and m > k
    out[static_cast<int>(j * m)] = PPolynomial(PMonomial::variable(j, static_cast<int>(m)), Rational(c));
  }
  return out;
}

}  // namespace mgn

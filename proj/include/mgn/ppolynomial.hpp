#pragma once

#include <compare>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "mgn/partition.hpp"
#include "mgn/rational.hpp"

namespace mgn {

/// Monomial prod_j p_j^{e_j} in the power-sum variables. p_j has degree j,
/// so a degree-n monomial is the same thing as a cycle type of S_n.
class PMonomial {
 public:
  using Exponent = std::pair<int, int>;  // (variable index j, exponent e_j)

  PMonomial() = default;
  /// p_j^e; e == 0 gives the unit monomial.
  static PMonomial variable(int j, int e = 1);
  static PMonomial from_partition(const Partition& mu);
  /// Drops zero exponents, merges repeated indices.
  static PMonomial from_exponents(std::vector<Exponent> exponents);

  /// Sorted by variable index, all exponents >= 1.
  const std::vector<Exponent>& exponents() const { return exps_; }
  int degree() const { return degree_; }
  bool is_one() const { return exps_.empty(); }
  int exponent_of(int j) const;

  Partition to_partition() const;
  /// "1", "p1^2*p3"
  std::string str() const;

  friend PMonomial operator*(const PMonomial& a, const PMonomial& b);
  friend bool operator==(const PMonomial& a, const PMonomial& b) { return a.exps_ == b.exps_; }
  /// Graded: lower degree first; within a degree, larger cycle type first
  /// (p_n before p_1^n).
  friend std::strong_ordering operator<=>(const PMonomial& a, const PMonomial& b);

 private:
  std::vector<Exponent> exps_;
  int degree_ = 0;
};

/// Finite Q-linear combination of power-sum monomials. Zero coefficients are
/// never stored; iteration order is the canonical monomial order.
class PPolynomial {
 public:
  using Terms = std::map<PMonomial, Rational>;

  PPolynomial() = default;
  PPolynomial(const Rational& constant);  // NOLINT(google-explicit-constructor)
  PPolynomial(const PMonomial& m, const Rational& c = Rational(1));

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  Rational coefficient(const PMonomial& m) const;
  void add_term(const PMonomial& m, const Rational& c);

  /// True when every monomial has degree n (the zero polynomial qualifies).
  bool is_homogeneous(int n) const;
  /// Throws InvariantError naming the offending monomial otherwise.
  void require_homogeneous(int n) const;

  /// Value with every p_j set to 1.
  Rational evaluate_at_ones() const;

  /// "1/2*p1^2 + 1/2*p2", "0" when empty.
  std::string str() const;

  PPolynomial& operator+=(const PPolynomial& o);
  PPolynomial& operator-=(const PPolynomial& o);
  PPolynomial& operator*=(const Rational& c);
  friend PPolynomial operator+(PPolynomial a, const PPolynomial& b) { return a += b; }
  friend PPolynomial operator-(PPolynomial a, const PPolynomial& b) { return a -= b; }
  friend PPolynomial operator*(PPolynomial a, const Rational& c) { return a *= c; }
  friend PPolynomial operator*(const Rational& c, PPolynomial a) { return a *= c; }
  friend PPolynomial operator*(const PPolynomial& a, const PPolynomial& b);
  friend bool operator==(const PPolynomial& a, const PPolynomial& b) { return a.terms_ == b.terms_; }

 private:
  Terms terms_;
};

}  // namespace mgn

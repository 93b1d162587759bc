#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "mgn/confspace.hpp"
#include "mgn/options.hpp"
#include "mgn/rational.hpp"
#include "mgn/series.hpp"

// Generating series sum_n t^n ch(M_{g,n}) for g >= 2, assembled from the
// strata of pairs (C, tau) with tau a cyclic automorphism of C. Each stratum
// is labelled by a Signature and weighted by the orbifold Euler
// characteristic of the corresponding space of cyclic covers.

namespace mgn::moduli {

/// Harer-Zagier orbifold Euler characteristic of M_{h,s}.
///   h = 0: (-1)^{s-3} (s-3)!
///   h >= 1: (-1)^s (2h-3+s)! (2h-1) B_{2h} / (2h)!
/// Throws UnstableError for (0, s < 3), (1, 0) and negative arguments.
Rational orb_chi_moduli(int h, int s);

/// The variant (-1)^s (2g-1) B_{2g} / (2g-3)!, kept only so the self-test can
/// show it disagrees with the reference table.
Rational printed_orbifold_euler(int g, int s);

/// Combinatorial type of a cyclic automorphism tau of order `ord` of a genus-g
/// curve: k_j = chi(C_j(tau)) / j for each divisor j of ord.
struct Signature {
  int genus = 0;
  int ord = 1;
  /// j -> k_j. Entries with k_j == 0 are omitted, k_ord is always present.
  std::map<int, long> exponents;
  /// Genus of C / tau.
  int quotient_genus = 0;
  /// Number of branch points, sum_{j < ord} k_j.
  int branch_points = 0;
  /// gcd-classes of the branch monodromies: k_j copies of j, ascending.
  std::vector<std::int64_t> classes;

  long k(int j) const;
  /// gcd(l_1, ..., l_s, ord); equals ord when there are no branch points.
  std::int64_t monodromy_gcd() const;
  /// (k_j for each divisor j of ord, ascending j).
  std::vector<long> key() const;
  /// "ord=5 k1=3 k5=-1"
  std::string str() const;

  friend bool operator==(const Signature& a, const Signature& b) {
    return a.genus == b.genus && a.ord == b.ord && a.exponents == b.exponents;
  }
  /// By (ord, key()).
  friend std::strong_ordering operator<=>(const Signature& a, const Signature& b);
};

/// Validates and derives h, s and the class list. Throws DomainError when
/// sum_j j k_j != 2 - 2g, some j does not divide ord, k_j < 0 for j < ord,
/// or the quotient genus is not a non-negative integer.
Signature make_signature(int genus, int ord, std::map<int, long> exponents, const FormulaOptions& options = {});

/// Quotient genus from the k_j: (2 - sum k_j)/2, or the printed variant.
Rational quotient_genus(const std::map<int, long>& exponents, const FormulaOptions& options = {});

/// c_k together with the factors it is built from:
///   coefficient = chi_orb * monodromy_count * n_value / denominator,
///   denominator = prod_{j<ord} k_j! * ord.
struct CoefficientRecord {
  Signature signature;
  Rational coefficient;
  Rational chi_orb;
  BigInt monodromy_count;
  BigInt n_value;
  BigInt denominator;

  /// coefficient equals the product of the breakdown factors.
  bool consistent() const;
};

/// All signatures of cyclic automorphisms of genus-g curves whose stratum is
/// nonempty, sorted by (ord, k). Orders run up to max_order, which defaults
/// to 4g + 2.
std::vector<Signature> enumerate_signatures(int genus, const FormulaOptions& options = {}, int max_order = 0);

CoefficientRecord signature_coefficient(const Signature& sig, const FormulaOptions& options = {});

/// enumerate_signatures followed by signature_coefficient.
std::vector<CoefficientRecord> coefficient_table(int genus, const FormulaOptions& options = {});

/// Coefficients of t^0 ... t^order of sum_n t^n ch(M_{g,n}).
TruncatedSeries mgn_series(int genus, int order, const FormulaOptions& options = {});

/// The records as strata, in table order.
std::vector<confspace::Stratum> to_strata(const std::vector<CoefficientRecord>& records);

/// The ten genus-2 strata with their breakdowns, hard-coded in the order
/// (1+p1 t)^-2, (1+p1 t)^6 (1+p2 t^2)^-4, ... of the classical formula.
std::vector<CoefficientRecord> genus2_reference_table();

struct ClosedForms {
  CoefficientRecord identity;
  CoefficientRecord hyperelliptic;
};

/// Identity stratum chi^orb(M_{g,0}) (1+p1 t)^{2-2g} and hyperelliptic
/// stratum -1/(4g(2g+1)(2g+2)) (1+p1 t)^{2g+2} (1+p2 t^2)^{-2g}. Throws
/// InvariantError unless both appear verbatim in coefficient_table(g).
ClosedForms general_g_closed_forms(int genus);

}  // namespace mgn::moduli

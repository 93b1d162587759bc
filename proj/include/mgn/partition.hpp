#pragma once

#include <compare>
#include <initializer_list>
#include <string>
#include <vector>

#include "mgn/rational.hpp"

namespace mgn {

/// Weakly decreasing sequence of positive parts. Labels both irreducible
/// characters (lambda) and cycle types (mu).
class Partition {
 public:
  Partition() = default;
  /// Sorts the parts; throws DomainError on a non-positive part.
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

  const std::vector<int>& parts() const { return parts_; }
  int weight() const { return weight_; }
  int length() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }
  int operator[](std::size_t i) const { return parts_[i]; }

  /// Multiplicity of the part j.
  int multiplicity(int j) const;

  Partition conjugate() const;

  /// "[3,1,1]"
  std::string str() const;

  friend bool operator==(const Partition&, const Partition&) = default;
  /// Lexicographic on the part sequences.
  friend std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
    return a.parts_ <=> b.parts_;
  }

 private:
  std::vector<int> parts_;
  int weight_ = 0;
};

/// All partitions of n, reverse-lexicographic: (n) first, (1^n) last.
std::vector<Partition> partitions_of(int n);

/// Centralizer order prod_j j^{m_j} m_j!.
BigInt z_of(const Partition& mu);

}  // namespace mgn

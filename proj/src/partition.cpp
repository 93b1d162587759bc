#include "mgn/partition.hpp"

#include <algorithm>
#include <functional>

#include "mgn/arith.hpp"
#include "mgn/error.hpp"

namespace mgn {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  std::sort(parts_.begin(), parts_.end(), std::greater<>());
  for (int p : parts_) {
    if (p < 1) throw DomainError("partition parts must be positive");
    weight_ += p;
  }
}

int Partition::multiplicity(int j) const {
  return static_cast<int>(std::count(parts_.begin(), parts_.end(), j));
}

Partition Partition::conjugate() const {
  std::vector<int> out;
  if (parts_.empty()) return Partition();
  for (int col = 1; col <= parts_.front(); ++col) {
    int height = 0;
    for (int p : parts_) height += p >= col ? 1 : 0;
    out.push_back(height);
  }
  return Partition(std::move(out));
}

std::string Partition::str() const {
  std::string s = "[";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(parts_[i]);
  }
  return s + "]";
}

std::vector<Partition> partitions_of(int n) {
  if (n < 0) throw DomainError("partitions_of: negative weight");
  std::vector<Partition> out;
  std::vector<int> current;
  std::function<void(int, int)> rec = [&](int remaining, int max_part) {
    if (remaining == 0) {
      out.emplace_back(current);
      return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
      current.push_back(p);
      rec(remaining - p, p);
      current.pop_back();
    }
  };
  rec(n, n);
  return out;
}

BigInt z_of(const Partition& mu) {
  BigInt z = 1;
  const auto& parts = mu.parts();
  for (std::size_t i = 0; i < parts.size();) {
    std::size_t j = i;
    while (j < parts.size() && parts[j] == parts[i]) ++j;
    const long m = static_cast<long>(j - i);
    BigInt jm;
    mpz_ui_pow_ui(jm.get_mpz_t(), static_cast<unsigned long>(parts[i]), static_cast<unsigned long>(m));
    z *= jm * arith::factorial(m);
    i = j;
  }
  return z;
}

}  // namespace mgn

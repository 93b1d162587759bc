#include "mgn/ppolynomial.hpp"

#include <algorithm>

#include "mgn/error.hpp"

namespace mgn {

PMonomial PMonomial::variable(int j, int e) { return from_exponents({{j, e}}); }

PMonomial PMonomial::from_partition(const Partition& mu) {
  std::vector<Exponent> exps;
  for (int p : mu.parts()) exps.push_back({p, 1});
  return from_exponents(std::move(exps));
}

PMonomial PMonomial::from_exponents(std::vector<Exponent> exponents) {
  std::sort(exponents.begin(), exponents.end());
  PMonomial m;
  for (const auto& [j, e] : exponents) {
    if (j < 1) throw DomainError("power-sum variable index must be positive");
    if (e < 0) throw DomainError("monomial exponents must be non-negative");
    if (e == 0) continue;
    if (!m.exps_.empty() && m.exps_.back().first == j) {
      m.exps_.back().second += e;
    } else {
      m.exps_.push_back({j, e});
    }
    m.degree_ += j * e;
  }
  return m;
}

int PMonomial::exponent_of(int j) const {
  auto it = std::lower_bound(exps_.begin(), exps_.end(), Exponent{j, 0});
  return it != exps_.end() && it->first == j ? it->second : 0;
}

Partition PMonomial::to_partition() const {
  std::vector<int> parts;
  for (const auto& [j, e] : exps_) parts.insert(parts.end(), static_cast<std::size_t>(e), j);
  return Partition(std::move(parts));
}

std::string PMonomial::str() const {
  if (exps_.empty()) return "1";
  std::string s;
  for (const auto& [j, e] : exps_) {
    if (!s.empty()) s += "*";
    s += "p" + std::to_string(j);
    if (e != 1) s += "^" + std::to_string(e);
  }
  return s;
}

PMonomial operator*(const PMonomial& a, const PMonomial& b) {
  PMonomial out;
  out.exps_.reserve(a.exps_.size() + b.exps_.size());
  auto ia = a.exps_.begin(), ib = b.exps_.begin();
  while (ia != a.exps_.end() || ib != b.exps_.end()) {
    if (ib == b.exps_.end() || (ia != a.exps_.end() && ia->first < ib->first)) {
      out.exps_.push_back(*ia++);
    } else if (ia == a.exps_.end() || ib->first < ia->first) {
      out.exps_.push_back(*ib++);
    } else {
      out.exps_.push_back({ia->first, ia->second + ib->second});
      ++ia;
      ++ib;
    }
  }
  out.degree_ = a.degree_ + b.degree_;
  return out;
}

std::strong_ordering operator<=>(const PMonomial& a, const PMonomial& b) {
  if (auto c = a.degree_ <=> b.degree_; c != 0) return c;
  // Walk both cycle types from the largest part down.
  auto ia = a.exps_.rbegin(), ib = b.exps_.rbegin();
  for (; ia != a.exps_.rend() && ib != b.exps_.rend(); ++ia, ++ib) {
    if (ia->first != ib->first) return ia->first > ib->first ? std::strong_ordering::less : std::strong_ordering::greater;
    if (ia->second != ib->second) return ia->second > ib->second ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  if (ia == a.exps_.rend() && ib == b.exps_.rend()) return std::strong_ordering::equal;
  return ia == a.exps_.rend() ? std::strong_ordering::greater : std::strong_ordering::less;
}

PPolynomial::PPolynomial(const Rational& constant) { add_term(PMonomial(), constant); }

PPolynomial::PPolynomial(const PMonomial& m, const Rational& c) { add_term(m, c); }

Rational PPolynomial::coefficient(const PMonomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational() : it->second;
}

void PPolynomial::add_term(const PMonomial& m, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

bool PPolynomial::is_homogeneous(int n) const {
  return std::all_of(terms_.begin(), terms_.end(), [n](const auto& t) { return t.first.degree() == n; });
}

void PPolynomial::require_homogeneous(int n) const {
  for (const auto& [m, c] : terms_) {
    if (m.degree() != n) {
      throw InvariantError("expected a homogeneous polynomial of degree " + std::to_string(n) + ", found monomial " +
                           m.str() + " of degree " + std::to_string(m.degree()));
    }
  }
}

Rational PPolynomial::evaluate_at_ones() const {
  Rational sum;
  for (const auto& [m, c] : terms_) sum += c;
  return sum;
}

std::string PPolynomial::str() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const auto& [m, c] : terms_) {
    Rational mag = c.sign() < 0 ? -c : c;
    if (s.empty()) {
      if (c.sign() < 0) s += "-";
    } else {
      s += c.sign() < 0 ? " - " : " + ";
    }
    if (m.is_one()) {
      s += mag.short_str();
    } else {
      if (mag != Rational(1)) s += mag.short_str() + "*";
      s += m.str();
    }
  }
  return s;
}

PPolynomial& PPolynomial::operator+=(const PPolynomial& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

PPolynomial& PPolynomial::operator-=(const PPolynomial& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

PPolynomial& PPolynomial::operator*=(const Rational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, coeff] : terms_) coeff *= c;
  return *this;
}

PPolynomial operator*(const PPolynomial& a, const PPolynomial& b) {
  PPolynomial out;
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) out.add_term(ma * mb, ca * cb);
  }
  return out;
}

}  // namespace mgn

#pragma once

// Monomials over a fixed variable set and the monomial orders used by the
// Groebner engine.

#include <algorithm>
#include <compare>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "numsg/error.hpp"

namespace numsg {

using Exponent = std::int64_t;

/// x^a for an exponent vector a >= 0.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::vector<Exponent> exponents) : exps_(std::move(exponents)) {
    for (Exponent e : exps_)
      if (e < 0) throw Error(ErrorCode::InvalidArgument, "negative exponent");
  }
  Monomial(std::initializer_list<Exponent> exponents)
      : Monomial(std::vector<Exponent>(exponents)) {}

  static Monomial one(std::size_t nvars) { return Monomial(std::vector<Exponent>(nvars, 0)); }
  static Monomial variable(std::size_t nvars, std::size_t index, Exponent power = 1) {
    std::vector<Exponent> e(nvars, 0);
    e.at(index) = power;
    return Monomial(std::move(e));
  }

  std::size_t size() const noexcept { return exps_.size(); }
  Exponent operator[](std::size_t i) const { return exps_[i]; }
  std::span<const Exponent> exponents() const noexcept { return exps_; }

  bool is_one() const noexcept {
    return std::all_of(exps_.begin(), exps_.end(), [](Exponent e) { return e == 0; });
  }

  Integer total_degree() const {
    Integer d = 0;
    for (Exponent e : exps_) d = checked_add(d, e);
    return d;
  }

  Integer weighted_degree(std::span<const Integer> weights) const {
    require_size(weights.size());
    Integer d = 0;
    for (std::size_t i = 0; i < exps_.size(); ++i)
      d = checked_add(d, checked_mul(exps_[i], weights[i]));
    return d;
  }

  bool divides(const Monomial& other) const {
    other.require_size(size());
    for (std::size_t i = 0; i < exps_.size(); ++i)
      if (exps_[i] > other.exps_[i]) return false;
    return true;
  }

  bool coprime(const Monomial& other) const {
    other.require_size(size());
    for (std::size_t i = 0; i < exps_.size(); ++i)
      if (exps_[i] != 0 && other.exps_[i] != 0) return false;
    return true;
  }

  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    b.require_size(a.size());
    std::vector<Exponent> e(a.size());
    for (std::size_t i = 0; i < e.size(); ++i) e[i] = checked_add(a.exps_[i], b.exps_[i]);
    return Monomial(std::move(e));
  }

  /// a / b; b must divide a.
  friend Monomial operator/(const Monomial& a, const Monomial& b) {
    if (!b.divides(a)) throw Error(ErrorCode::InvalidArgument, "monomial does not divide");
    std::vector<Exponent> e(a.size());
    for (std::size_t i = 0; i < e.size(); ++i) e[i] = a.exps_[i] - b.exps_[i];
    return Monomial(std::move(e));
  }

  friend Monomial lcm(const Monomial& a, const Monomial& b) {
    b.require_size(a.size());
    std::vector<Exponent> e(a.size());
    for (std::size_t i = 0; i < e.size(); ++i) e[i] = std::max(a.exps_[i], b.exps_[i]);
    return Monomial(std::move(e));
  }

  /// Drops variable `index` (which must have exponent 0 for a faithful image).
  Monomial without(std::size_t index) const {
    std::vector<Exponent> e = exps_;
    e.erase(e.begin() + static_cast<std::ptrdiff_t>(index));
    return Monomial(std::move(e));
  }

  // Lexicographic on exponent vectors; a container order, not a monomial order.
  friend auto operator<=>(const Monomial&, const Monomial&) = default;
  friend bool operator==(const Monomial&, const Monomial&) = default;

 private:
  void require_size(std::size_t n) const {
    if (n != exps_.size())
      throw Error(ErrorCode::DimensionMismatch,
                  "variable count mismatch: " + std::to_string(n) + " vs " +
                      std::to_string(exps_.size()));
  }

  std::vector<Exponent> exps_;
};

/// Weighted-degree reverse-lexicographic order, optionally preceded by an
/// elimination block made of the first `eliminated` variables. Monomials
/// are compared on the block first; ties fall through to the remaining
/// variables. Within each block: larger weighted degree wins, then the
/// monomial with the smaller exponent in the last differing variable wins.
class MonomialOrder {
 public:
  enum class Kind { WeightedRevLex, BlockElimination };

  static MonomialOrder weighted_revlex(std::vector<Integer> weights) {
    return MonomialOrder(Kind::WeightedRevLex, 0, std::move(weights));
  }

  static MonomialOrder block_elimination(std::size_t eliminated, std::vector<Integer> weights) {
    if (eliminated > weights.size())
      throw Error(ErrorCode::InvalidArgument, "elimination block larger than variable set");
    return MonomialOrder(Kind::BlockElimination, eliminated, std::move(weights));
  }

  Kind kind() const noexcept { return kind_; }
  std::size_t num_variables() const noexcept { return weights_.size(); }
  std::size_t eliminated() const noexcept { return eliminated_; }
  std::span<const Integer> weights() const noexcept { return weights_; }

  Integer degree(const Monomial& m) const { return m.weighted_degree(weights_); }

  std::strong_ordering compare(const Monomial& a, const Monomial& b) const {
    if (a.size() != num_variables() || b.size() != num_variables())
      throw Error(ErrorCode::DimensionMismatch, "monomial does not match the order's variables");
    if (eliminated_ > 0) {
      if (auto c = compare_range(a, b, 0, eliminated_); c != 0) return c;
    }
    return compare_range(a, b, eliminated_, num_variables());
  }

  bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }

 private:
  MonomialOrder(Kind kind, std::size_t eliminated, std::vector<Integer> weights)
      : kind_(kind), eliminated_(eliminated), weights_(std::move(weights)) {
    for (Integer w : weights_)
      if (w < 1) throw Error(ErrorCode::InvalidArgument, "order weights must be positive");
  }

  std::strong_ordering compare_range(const Monomial& a, const Monomial& b, std::size_t lo,
                                     std::size_t hi) const {
    Integer da = 0, db = 0;
    for (std::size_t i = lo; i < hi; ++i) {
      da = checked_add(da, checked_mul(a[i], weights_[i]));
      db = checked_add(db, checked_mul(b[i], weights_[i]));
    }
    if (da != db) return da <=> db;
    for (std::size_t i = hi; i-- > lo;)
      if (a[i] != b[i]) return b[i] <=> a[i];
    return std::strong_ordering::equal;
  }

  Kind kind_;
  std::size_t eliminated_;
  std::vector<Integer> weights_;
};

inline std::strong_ordering compare(const MonomialOrder& order, const Monomial& a,
                                    const Monomial& b) {
  return order.compare(a, b);
}

}  // namespace numsg

#pragma once

// Numerical semigroups H = N n_1 + ... + N n_d: canonical generators,
// Apery sets, membership, Frobenius number, conductor, gaps and
// pseudo-Frobenius numbers.

#include <algorithm>
#include <cstddef>
#include <functional>
#include <limits>
#include <numeric>
#include <queue>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "numsg/error.hpp"

namespace numsg {

inline constexpr Integer kUnreachable = std::numeric_limits<Integer>::max();

namespace detail {

// Shortest paths on the residues mod `modulus`, arcs r -> (r + g) mod modulus
// of weight g. dist[r] is the least non-negative combination of `gens`
// congruent to r, or kUnreachable.
inline std::vector<Integer> residue_shortest_paths(std::span<const Integer> gens,
                                                   Integer modulus) {
  const auto n = static_cast<std::size_t>(modulus);
  std::vector<Integer> dist(n, kUnreachable);
  dist[0] = 0;
  using Item = std::pair<Integer, std::size_t>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> queue;
  queue.emplace(0, 0);
  while (!queue.empty()) {
    auto [d, r] = queue.top();
    queue.pop();
    if (d != dist[r]) continue;
    for (Integer g : gens) {
      if (g % modulus == 0) continue;
      const auto next = static_cast<std::size_t>((static_cast<Integer>(r) + g) % modulus);
      const Integer nd = checked_add(d, g);
      if (nd < dist[next]) {
        dist[next] = nd;
        queue.emplace(nd, next);
      }
    }
  }
  return dist;
}

}  // namespace detail

/// Least semigroup element in every residue class modulo `modulus`.
class AperyTable {
 public:
  AperyTable() = default;
  AperyTable(Integer modulus, std::vector<Integer> entries)
      : modulus_(modulus), entries_(std::move(entries)) {}

  Integer modulus() const noexcept { return modulus_; }
  std::span<const Integer> entries() const noexcept { return entries_; }
  Integer operator[](std::size_t residue) const { return entries_.at(residue); }

  Integer max() const { return *std::max_element(entries_.begin(), entries_.end()); }

  /// The set Ap(H, n) in increasing order.
  std::vector<Integer> sorted_values() const {
    std::vector<Integer> out = entries_;
    std::sort(out.begin(), out.end());
    return out;
  }

  bool operator==(const AperyTable&) const = default;

 private:
  Integer modulus_ = 1;
  std::vector<Integer> entries_{0};
};

class NumericalSemigroup {
 public:
  /// Sorts, deduplicates and drops generators representable by the others.
  /// Throws EmptyInput, InvalidArgument (entry < 1) or NonCoprime.
  static NumericalSemigroup from_generators(std::span<const Integer> raw) {
    if (raw.empty()) throw Error(ErrorCode::EmptyInput, "no generators given");
    std::vector<Integer> sorted(raw.begin(), raw.end());
    for (Integer g : sorted)
      if (g < 1)
        throw Error(ErrorCode::InvalidArgument,
                    "generators must be positive, got " + std::to_string(g));
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());

    Integer g0 = 0;
    for (Integer g : sorted) g0 = std::gcd(g0, g);
    if (g0 != 1)
      throw Error(ErrorCode::NonCoprime,
                  "generators have gcd " + std::to_string(g0) +
                      "; the Frobenius number does not exist");

    // Only smaller generators can represent g, and the kept ones already
    // represent every discarded one.
    std::vector<Integer> kept;
    for (Integer g : sorted) {
      if (!kept.empty()) {
        const auto dist = detail::residue_shortest_paths(kept, kept.front());
        if (dist[static_cast<std::size_t>(g % kept.front())] <= g) continue;
      }
      kept.push_back(g);
    }
    return NumericalSemigroup(std::move(kept));
  }

  const std::vector<Integer>& generators() const noexcept { return generators_; }
  std::size_t embedding_dimension() const noexcept { return generators_.size(); }
  Integer multiplicity() const noexcept { return generators_.front(); }
  Integer largest_generator() const noexcept { return generators_.back(); }

  /// Apery table with respect to the multiplicity, built once.
  const AperyTable& multiplicity_apery() const noexcept { return apery_; }

  bool contains(Integer x) const {
    if (x < 0) return false;
    const auto r = static_cast<std::size_t>(x % apery_.modulus());
    return x >= apery_[r];
  }

  bool operator==(const NumericalSemigroup& other) const {
    return generators_ == other.generators_;
  }

 private:
  explicit NumericalSemigroup(std::vector<Integer> generators)
      : generators_(std::move(generators)),
        apery_(generators_.front(),
               detail::residue_shortest_paths(generators_, generators_.front())) {}

  std::vector<Integer> generators_;
  AperyTable apery_;
};

inline NumericalSemigroup new_semigroup(std::span<const Integer> raw) {
  return NumericalSemigroup::from_generators(raw);
}

inline NumericalSemigroup new_semigroup(std::initializer_list<Integer> raw) {
  return NumericalSemigroup::from_generators(std::span<const Integer>(raw.begin(), raw.size()));
}

inline bool contains(const NumericalSemigroup& s, Integer x) { return s.contains(x); }

/// Ap(H, n) = { h in H : h - n not in H }. Requires n in H, n > 0.
inline AperyTable apery_set(const NumericalSemigroup& s, Integer n) {
  if (n <= 0 || !s.contains(n))
    throw Error(ErrorCode::NotInSemigroup,
                std::to_string(n) + " is not a nonzero element of the semigroup");
  if (n == s.multiplicity()) return s.multiplicity_apery();
  return AperyTable(n, detail::residue_shortest_paths(s.generators(), n));
}

/// f = max Ap(H, n) - n with n the multiplicity; -1 for H = N_0.
inline Integer frobenius_number(const NumericalSemigroup& s) {
  const auto& ap = s.multiplicity_apery();
  return ap.max() - ap.modulus();
}

inline Integer conductor(const NumericalSemigroup& s) { return frobenius_number(s) + 1; }

inline std::vector<Integer> gaps(const NumericalSemigroup& s) {
  std::vector<Integer> out;
  const Integer f = frobenius_number(s);
  for (Integer x = 1; x <= f; ++x)
    if (!s.contains(x)) out.push_back(x);
  return out;
}

/// M^- \ H: integers outside H that land in H after adding any generator.
struct PseudoFrobeniusSet {
  std::vector<Integer> values;

  std::size_t type() const noexcept { return values.size(); }
  Integer max() const { return values.back(); }
};

inline PseudoFrobeniusSet pseudo_frobenius(const NumericalSemigroup& s) {
  // z + n_1 is in H and z is not, so z + n_1 lies in Ap(H, n_1).
  const auto& ap = s.multiplicity_apery();
  PseudoFrobeniusSet out;
  for (Integer w : ap.sorted_values()) {
    const Integer z = w - ap.modulus();
    if (s.contains(z)) continue;
    const bool all = std::all_of(s.generators().begin(), s.generators().end(),
                                 [&](Integer g) { return s.contains(z + g); });
    if (all) out.values.push_back(z);
  }
  return out;
}

}  // namespace numsg

#pragma once

// Brute-force reference values by dynamic programming over [0, bound].
// Independent of the Apery and socle routes; meant for cross-validation at
// desk scale only (memory grows with n_1 * n_d).

#include <algorithm>
#include <cstddef>
#include <span>
#include <vector>

#include "numsg/error.hpp"

namespace numsg::naive {

/// member[x] for 0 <= x <= bound.
inline std::vector<bool> membership(std::span<const Integer> gens, Integer bound) {
  std::vector<bool> member(static_cast<std::size_t>(bound) + 1, false);
  member[0] = true;
  for (Integer x = 1; x <= bound; ++x)
    for (Integer g : gens)
      if (g <= x && member[static_cast<std::size_t>(x - g)]) {
        member[static_cast<std::size_t>(x)] = true;
        break;
      }
  return member;
}

/// Schur: f <= (n_1 - 1)(n_d - 1) - 1 < n_1 n_d for coprime generators.
inline Integer conductor_bound(std::span<const Integer> gens) {
  const auto [lo, hi] = std::minmax_element(gens.begin(), gens.end());
  return checked_mul(*lo, *hi);
}

inline Integer frobenius(std::span<const Integer> gens) {
  const Integer bound = conductor_bound(gens);
  const auto member = membership(gens, bound);
  for (Integer x = bound; x >= 0; --x)
    if (!member[static_cast<std::size_t>(x)]) return x;
  return -1;
}

inline std::vector<Integer> pseudo_frobenius(std::span<const Integer> gens) {
  const Integer largest = *std::max_element(gens.begin(), gens.end());
  const Integer bound = checked_add(conductor_bound(gens), largest);
  const auto member = membership(gens, bound);
  const Integer f = frobenius(gens);
  if (f < 0) return {-1};
  std::vector<Integer> out;
  for (Integer z = 1; z <= f; ++z) {
    if (member[static_cast<std::size_t>(z)]) continue;
    if (std::all_of(gens.begin(), gens.end(),
                    [&](Integer g) { return member[static_cast<std::size_t>(z + g)]; }))
      out.push_back(z);
  }
  return out;
}

/// {h in H : h - n not in H}, increasing.
inline std::vector<Integer> apery(std::span<const Integer> gens, Integer n) {
  const Integer bound = checked_add(conductor_bound(gens), n);
  const auto member = membership(gens, bound);
  std::vector<Integer> out;
  for (Integer h = 0; h <= bound; ++h)
    if (member[static_cast<std::size_t>(h)] &&
        (h < n || !member[static_cast<std::size_t>(h - n)]))
      out.push_back(h);
  return out;
}

}  // namespace numsg::naive

#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>

#include "numsg/binomial.hpp"

namespace numsg {

/// "x1^2x2" style rendering. `labels[i]` is the 1-based display index of
/// variable i; identity labels when empty.
inline std::string format_monomial(const Monomial& m, std::string_view prefix = "x",
                                   std::span<const std::size_t> labels = {}) {
  std::string out;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] == 0) continue;
    out += prefix;
    out += std::to_string(labels.empty() ? i + 1 : labels[i]);
    if (m[i] > 1) out += "^" + std::to_string(m[i]);
  }
  return out.empty() ? "1" : out;
}

inline std::string format_binomial(const Binomial& b, std::string_view prefix = "X",
                                   std::span<const std::size_t> labels = {}) {
  std::string out = format_monomial(b.lead(), prefix, labels);
  if (b.trail()) out += " - " + format_monomial(*b.trail(), prefix, labels);
  return out;
}

}  // namespace numsg

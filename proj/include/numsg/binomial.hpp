#pragma once

// Pure-difference binomials x^a - x^b and single monomials, with
// coefficient-free reduction and S-polynomials.

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "numsg/monomial.hpp"

namespace numsg {

/// lead - trail with lead > trail, or the single monomial `lead` when the
/// trail is absent. The zero polynomial is never a Binomial.
class Binomial {
 public:
  /// a - b in normalized form; nullopt when a == b.
  static std::optional<Binomial> make(Monomial a, std::optional<Monomial> b,
                                      const MonomialOrder& order) {
    if (!b) return Binomial(std::move(a), std::nullopt);
    const auto c = order.compare(a, *b);
    if (c == 0) return std::nullopt;
    if (c < 0) std::swap(a, *b);
    return Binomial(std::move(a), std::move(b));
  }

  static Binomial make_monomial(Monomial m) { return Binomial(std::move(m), std::nullopt); }

  /// Nonzero a - b; throws if a == b.
  static Binomial difference(Monomial a, Monomial b, const MonomialOrder& order) {
    auto out = make(std::move(a), std::move(b), order);
    if (!out) throw Error(ErrorCode::InvalidArgument, "binomial with equal terms is zero");
    return *std::move(out);
  }

  const Monomial& lead() const noexcept { return lead_; }
  const std::optional<Monomial>& trail() const noexcept { return trail_; }
  bool is_monomial() const noexcept { return !trail_.has_value(); }
  std::size_t num_variables() const noexcept { return lead_.size(); }

  bool is_homogeneous(std::span<const Integer> weights) const {
    return !trail_ || lead_.weighted_degree(weights) == trail_->weighted_degree(weights);
  }

  friend bool operator==(const Binomial&, const Binomial&) = default;

 private:
  Binomial(Monomial lead, std::optional<Monomial> trail)
      : lead_(std::move(lead)), trail_(std::move(trail)) {}

  Monomial lead_;
  std::optional<Monomial> trail_;
};

namespace detail {

inline const Binomial* find_reducer(const Monomial& term, std::span<const Binomial> basis) {
  for (const auto& g : basis)
    if (g.lead().divides(term)) return &g;
  return nullptr;
}

// Replaces `term` by its image (term / lead(g)) * trail(g), or zero.
inline std::optional<Monomial> rewrite(const Monomial& term, const Binomial& g) {
  if (g.is_monomial()) return std::nullopt;
  return (term / g.lead()) * *g.trail();
}

inline void require_descent(const MonomialOrder& order, const std::optional<Monomial>& image,
                            const Monomial& term) {
  if (image && order.compare(*image, term) >= 0)
    throw Error(ErrorCode::InternalClosureViolation,
                "reduction step did not decrease the rewritten term");
}

}  // namespace detail

/// Fully reduced normal form of f modulo `basis`; nullopt means zero.
inline std::optional<Binomial> reduce(const Binomial& f, std::span<const Binomial> basis,
                                      const MonomialOrder& order) {
  std::optional<Monomial> lead = f.lead();
  std::optional<Monomial> trail = f.trail();
  for (const auto& g : basis)
    if (g.num_variables() != f.num_variables())
      throw Error(ErrorCode::DimensionMismatch, "basis element over a different variable set");

  // Invariant: lead > trail when both present; either may vanish.
  while (true) {
    if (lead) {
      if (const Binomial* g = detail::find_reducer(*lead, basis)) {
        auto image = detail::rewrite(*lead, *g);
        detail::require_descent(order, image, *lead);
        lead = std::move(image);
        if (lead && trail) {
          const auto c = order.compare(*lead, *trail);
          if (c == 0) return std::nullopt;
          if (c < 0) std::swap(*lead, *trail);
        } else if (!lead) {
          lead = std::move(trail);
          trail.reset();
        }
        continue;
      }
    } else {
      return std::nullopt;
    }
    if (trail) {
      if (const Binomial* g = detail::find_reducer(*trail, basis)) {
        auto image = detail::rewrite(*trail, *g);
        detail::require_descent(order, image, *trail);
        trail = std::move(image);
        continue;
      }
    }
    break;
  }
  if (trail && order.compare(*lead, *trail) <= 0)
    throw Error(ErrorCode::InternalClosureViolation, "normal form lost its term order");
  return Binomial::make(std::move(*lead), std::move(trail), order);
}

/// S-polynomial lcm/lead(f) * f - lcm/lead(g) * g, up to sign.
inline std::optional<Binomial> s_polynomial(const Binomial& f, const Binomial& g,
                                            const MonomialOrder& order) {
  const Monomial l = lcm(f.lead(), g.lead());
  std::optional<Monomial> a, b;
  if (f.trail()) a = (l / f.lead()) * *f.trail();
  if (g.trail()) b = (l / g.lead()) * *g.trail();
  if (!a && !b) return std::nullopt;
  if (!a) return Binomial::make_monomial(std::move(*b));
  if (!b) return Binomial::make_monomial(std::move(*a));
  return Binomial::make(std::move(*a), std::move(*b), order);
}

}  // namespace numsg

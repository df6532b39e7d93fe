#pragma once

// Buchberger's algorithm for ideals generated by pure-difference binomials
// and monomials, plus an independent basis checker.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <queue>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "numsg/binomial.hpp"

namespace numsg {

class GroebnerBasis {
 public:
  GroebnerBasis(std::vector<Binomial> elements, MonomialOrder order)
      : elements_(std::move(elements)), order_(std::move(order)) {}

  const std::vector<Binomial>& elements() const noexcept { return elements_; }
  const MonomialOrder& order() const noexcept { return order_; }
  std::size_t size() const noexcept { return elements_.size(); }
  bool empty() const noexcept { return elements_.empty(); }

  std::vector<Monomial> leads() const {
    std::vector<Monomial> out;
    out.reserve(elements_.size());
    for (const auto& e : elements_) out.push_back(e.lead());
    return out;
  }

  /// Normal form of f; nullopt iff f lies in the ideal.
  std::optional<Binomial> reduce(const Binomial& f) const {
    // f may have been normalized under a different order.
    auto g = Binomial::make(f.lead(), f.trail(), order_);
    if (!g) return std::nullopt;
    return numsg::reduce(*g, elements_, order_);
  }

  bool contains(const Binomial& f) const { return !reduce(f).has_value(); }

 private:
  std::vector<Binomial> elements_;
  MonomialOrder order_;
};

namespace detail {

// Drops elements whose lead is divisible by another lead, reduces every
// trail, and sorts by increasing lead.
inline std::vector<Binomial> interreduce(std::vector<Binomial> g, const MonomialOrder& order) {
  std::vector<Binomial> minimal;
  for (std::size_t i = 0; i < g.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < g.size() && !redundant; ++j) {
      if (i == j || !g[j].lead().divides(g[i].lead())) continue;
      // Equal leads: keep the earliest.
      redundant = g[j].lead() != g[i].lead() || j < i;
    }
    if (!redundant) minimal.push_back(g[i]);
  }

  std::vector<Binomial> out;
  out.reserve(minimal.size());
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<Binomial> others;
    for (std::size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(minimal[j]);
    auto r = numsg::reduce(minimal[i], others, order);
    if (!r || r->lead() != minimal[i].lead())
      throw Error(ErrorCode::Internal, "interreduction changed a minimal lead");
    out.push_back(*std::move(r));
  }
  std::sort(out.begin(), out.end(),
            [&](const Binomial& a, const Binomial& b) { return order.less(a.lead(), b.lead()); });
  return out;
}

}  // namespace detail

/// Reduced Groebner basis of the ideal generated by `generators`.
///
/// Pairs are processed by the normal strategy: smallest lcm of leads first,
/// ties broken by creation order. Pairs with coprime leads are skipped
/// (Buchberger's first criterion). Output is sorted by increasing lead.
inline GroebnerBasis buchberger(std::span<const Binomial> generators, const MonomialOrder& order) {
  for (const auto& f : generators)
    if (f.num_variables() != order.num_variables())
      throw Error(ErrorCode::DimensionMismatch, "generator does not match the order's variables");

  std::vector<Binomial> basis;
  for (const auto& f : generators)
    if (auto r = reduce(f, basis, order)) basis.push_back(*std::move(r));

  struct Pair {
    Monomial lcm;
    std::size_t seq;
    std::size_t i, j;
  };
  auto later = [&order](const Pair& a, const Pair& b) {
    const auto c = order.compare(a.lcm, b.lcm);
    return c != 0 ? c > 0 : a.seq > b.seq;
  };
  std::priority_queue<Pair, std::vector<Pair>, decltype(later)> pairs(later);
  std::size_t seq = 0;
  auto add_pairs_with = [&](std::size_t k) {
    for (std::size_t i = 0; i < k; ++i) {
      if (basis[i].lead().coprime(basis[k].lead())) continue;
      pairs.push(Pair{lcm(basis[i].lead(), basis[k].lead()), seq++, i, k});
    }
  };
  for (std::size_t k = 0; k < basis.size(); ++k) add_pairs_with(k);

  while (!pairs.empty()) {
    const Pair p = pairs.top();
    pairs.pop();
    auto s = s_polynomial(basis[p.i], basis[p.j], order);
    if (!s) continue;
    if (auto h = reduce(*s, basis, order)) {
      basis.push_back(*std::move(h));
      add_pairs_with(basis.size() - 1);
    }
  }
  return GroebnerBasis(detail::interreduce(std::move(basis), order), order);
}

/// Normal form of a monomial; for these ideals it is a monomial or zero.
inline std::optional<Monomial> normal_form_monomial(const Monomial& m, const GroebnerBasis& gb) {
  auto r = gb.reduce(Binomial::make_monomial(m));
  if (!r) return std::nullopt;
  if (!r->is_monomial())
    throw Error(ErrorCode::InternalClosureViolation, "monomial normal form has two terms");
  return r->lead();
}

struct GroebnerCheck {
  bool s_pairs_reduce = true;
  bool reduced = true;
  bool closed = true;
  std::string detail;

  bool ok() const noexcept { return s_pairs_reduce && reduced && closed; }
};

/// Checks a basis without trusting how it was produced: every S-pair
/// (no criteria applied) reduces to zero, no lead divides a term of another
/// element, and every element is a well-formed pure difference or monomial.
inline GroebnerCheck verify_groebner(const GroebnerBasis& gb) {
  GroebnerCheck out;
  const auto& elems = gb.elements();
  const auto& order = gb.order();
  for (std::size_t i = 0; i < elems.size(); ++i) {
    const auto& e = elems[i];
    if (e.num_variables() != order.num_variables() ||
        (e.trail() && order.compare(e.lead(), *e.trail()) <= 0)) {
      out.closed = false;
      out.detail = "element " + std::to_string(i) + " is not a normalized pure difference";
      return out;
    }
  }
  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (std::size_t j = 0; j < elems.size(); ++j) {
      if (i == j) continue;
      const auto& lead = elems[i].lead();
      if (lead.divides(elems[j].lead()) ||
          (elems[j].trail() && lead.divides(*elems[j].trail()))) {
        out.reduced = false;
        out.detail = "lead of element " + std::to_string(i) + " divides a term of element " +
                     std::to_string(j);
      }
    }
  }
  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (std::size_t j = i + 1; j < elems.size(); ++j) {
      auto s = s_polynomial(elems[i], elems[j], order);
      if (s && reduce(*s, elems, order)) {
        out.s_pairs_reduce = false;
        out.detail = "S-pair (" + std::to_string(i) + ", " + std::to_string(j) +
                     ") has a nonzero remainder";
      }
    }
  }
  return out;
}

/// Same ideal iff each basis reduces the other's elements to zero.
inline bool same_ideal(const GroebnerBasis& a, const GroebnerBasis& b) {
  auto inside = [](const GroebnerBasis& gb, const GroebnerBasis& other) {
    return std::all_of(other.elements().begin(), other.elements().end(),
                       [&](const Binomial& f) { return gb.contains(f); });
  };
  return inside(a, b) && inside(b, a);
}

}  // namespace numsg

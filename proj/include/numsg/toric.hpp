#pragma once

// Algebraic route to the Frobenius number. The presentation ideal p of
// k[H] is obtained by eliminating t from (X_i - t^{n_i}); sending the
// distinguished variable X_d to zero gives p', whose quotient
// R' = k[X_1..X_{d-1}]/p' is isomorphic to k[H]/(t^{n_d}). Its standard
// monomials have degrees Ap(H, n_d), its socle has dimension equal to the
// type of H, and the top socle degree minus n_d is the Frobenius number.

#include <algorithm>
#include <cstddef>
#include <deque>
#include <numeric>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "numsg/groebner.hpp"
#include "numsg/semigroup.hpp"

namespace numsg {

struct PipelineOptions {
  /// 0-based index into the canonical generators of the generator whose
  /// power t^{n} is quotiented out. Defaults to the largest generator.
  std::optional<std::size_t> distinguished;
  /// Order of the remaining d-1 canonical indices as ring variables
  /// X_1..X_{d-1}. Empty means increasing.
  std::vector<std::size_t> leading_order;
};

struct IdealPresentation {
  std::vector<Integer> weights;     // deg X_k, pipeline variable order
  std::vector<std::size_t> labels;  // pipeline variable k -> canonical generator index
  GroebnerBasis elimination;        // variables (t, X_1..X_d), t-block first
  GroebnerBasis p;                  // reduced GB of p over X_1..X_d
  std::vector<Binomial> p_prime_generators;
  GroebnerBasis p_prime;            // reduced GB of p' over X_1..X_{d-1}
};

struct QuotientBasis {
  std::vector<Monomial> standard_monomials;  // increasing degree
  std::vector<Integer> degrees;

  std::size_t size() const noexcept { return standard_monomials.size(); }
};

struct SocleReport {
  std::vector<Monomial> socle_monomials;  // increasing degree
  std::vector<Integer> socle_degrees;
  std::size_t dim = 0;
  Monomial top;  // b: a socle monomial of maximal degree
  Integer max_degree = 0;
  Integer modulus = 1;  // n_d
  Integer frobenius = -1;
  Integer conductor = 0;
};

struct SocleComputation {
  IdealPresentation presentation;
  QuotientBasis quotient;
  SocleReport report;
};

/// Reduced GB of the elimination ideal (X_k - t^{w_k}) in variables
/// (t, X_1..X_d) under the t-first block order.
inline GroebnerBasis elimination_basis(std::span<const Integer> weights) {
  const std::size_t d = weights.size();
  std::vector<Integer> w{1};
  w.insert(w.end(), weights.begin(), weights.end());
  auto order = MonomialOrder::block_elimination(1, w);
  std::vector<Binomial> gens;
  for (std::size_t k = 0; k < d; ++k)
    gens.push_back(Binomial::difference(Monomial::variable(d + 1, k + 1),
                                        Monomial::variable(d + 1, 0, weights[k]), order));
  return buchberger(gens, order);
}

/// t-free part of an elimination basis, as a reduced GB over X_1..X_d.
inline GroebnerBasis presentation_from_elimination(const GroebnerBasis& elimination) {
  const auto all = elimination.order().weights();
  std::vector<Integer> weights(all.begin() + 1, all.end());
  auto order = MonomialOrder::weighted_revlex(weights);
  std::vector<Binomial> out;
  for (const auto& g : elimination.elements()) {
    if (g.lead()[0] != 0 || (g.trail() && (*g.trail())[0] != 0)) continue;
    std::optional<Monomial> trail;
    if (g.trail()) trail = g.trail()->without(0);
    auto b = Binomial::make(g.lead().without(0), std::move(trail), order);
    if (!b) throw Error(ErrorCode::Internal, "eliminated element collapsed to zero");
    out.push_back(*std::move(b));
  }
  std::sort(out.begin(), out.end(),
            [&](const Binomial& a, const Binomial& b) { return order.less(a.lead(), b.lead()); });
  return GroebnerBasis(std::move(out), std::move(order));
}

/// Reduced GB of ker(X_k -> t^{w_k}) under weighted revlex with weights w.
inline GroebnerBasis presentation_ideal(std::span<const Integer> weights) {
  return presentation_from_elimination(elimination_basis(weights));
}

inline std::vector<Binomial> presentation_ideal(const NumericalSemigroup& s) {
  return presentation_ideal(s.generators()).elements();
}

/// Image of `gens` under X_d -> 0, over the first d-1 variables.
inline std::vector<Binomial> substitute_last_to_zero(std::span<const Binomial> gens,
                                                     const MonomialOrder& target) {
  std::vector<Binomial> out;
  for (const auto& g : gens) {
    const std::size_t last = g.num_variables() - 1;
    if (last != target.num_variables())
      throw Error(ErrorCode::DimensionMismatch, "target order must drop exactly one variable");
    const bool lead_dies = g.lead()[last] != 0;
    const bool trail_dies = !g.trail() || (*g.trail())[last] != 0;
    if (lead_dies && trail_dies) continue;
    if (lead_dies) {
      out.push_back(Binomial::make_monomial(g.trail()->without(last)));
    } else if (trail_dies) {
      out.push_back(Binomial::make_monomial(g.lead().without(last)));
    } else if (auto b = Binomial::make(g.lead().without(last), g.trail()->without(last), target)) {
      out.push_back(*std::move(b));
    }
  }
  return out;
}

/// Standard monomials of an Artinian quotient, found breadth-first from 1.
/// Throws NotArtinian once more than `limit` are found.
inline QuotientBasis quotient_basis(const GroebnerBasis& gb, std::span<const Integer> weights,
                                    std::size_t limit) {
  const std::size_t nvars = weights.size();
  if (gb.order().num_variables() != nvars)
    throw Error(ErrorCode::DimensionMismatch, "weights do not match the basis variables");
  const auto leads = gb.leads();
  auto standard = [&](const Monomial& m) {
    return std::none_of(leads.begin(), leads.end(), [&](const Monomial& l) { return l.divides(m); });
  };

  std::vector<Monomial> found;
  std::set<Monomial> seen;
  std::deque<Monomial> frontier;
  const auto one = Monomial::one(nvars);
  if (standard(one)) {
    seen.insert(one);
    frontier.push_back(one);
  }
  while (!frontier.empty()) {
    Monomial m = std::move(frontier.front());
    frontier.pop_front();
    found.push_back(m);
    if (found.size() > limit)
      throw Error(ErrorCode::NotArtinian,
                  "quotient has more than " + std::to_string(limit) + " standard monomials");
    for (std::size_t i = 0; i < nvars; ++i) {
      Monomial next = m * Monomial::variable(nvars, i);
      if (!standard(next) || !seen.insert(next).second) continue;
      frontier.push_back(std::move(next));
    }
  }

  QuotientBasis out;
  std::vector<std::pair<Integer, Monomial>> keyed;
  for (auto& m : found) keyed.emplace_back(m.weighted_degree(weights), std::move(m));
  std::sort(keyed.begin(), keyed.end());
  for (auto& [deg, m] : keyed) {
    out.degrees.push_back(deg);
    out.standard_monomials.push_back(std::move(m));
  }
  return out;
}

/// Socle of R' = k[X]/p' spanned by standard monomials killed by every
/// variable. `modulus` is n_d, the degree of the quotiented t-power.
inline SocleReport socle(const QuotientBasis& basis, const GroebnerBasis& gb, Integer modulus) {
  // Distinct degrees make multiplication by X_i a partial injection on
  // standard monomials, so the socle is spanned by monomials.
  for (std::size_t i = 1; i < basis.degrees.size(); ++i)
    if (basis.degrees[i] == basis.degrees[i - 1])
      throw Error(ErrorCode::DegreeCollision,
                  "two standard monomials share degree " + std::to_string(basis.degrees[i]));

  const std::size_t nvars = gb.order().num_variables();
  SocleReport out;
  out.modulus = modulus;
  for (std::size_t k = 0; k < basis.size(); ++k) {
    const auto& m = basis.standard_monomials[k];
    bool killed = true;
    for (std::size_t i = 0; i < nvars && killed; ++i)
      killed = !normal_form_monomial(m * Monomial::variable(nvars, i), gb).has_value();
    if (!killed) continue;
    out.socle_monomials.push_back(m);
    out.socle_degrees.push_back(basis.degrees[k]);
  }
  out.dim = out.socle_monomials.size();
  if (out.dim == 0) throw Error(ErrorCode::Internal, "empty socle");

  out.max_degree = out.socle_degrees.back();
  std::optional<Monomial> top;
  for (std::size_t k = 0; k < out.dim; ++k)
    if (out.socle_degrees[k] == out.max_degree && (!top || out.socle_monomials[k] < *top))
      top = out.socle_monomials[k];
  out.top = *top;
  out.frobenius = out.max_degree - modulus;
  out.conductor = out.frobenius + 1;
  return out;
}

/// Canonical generator indices in pipeline variable order; the
/// distinguished generator comes last.
inline std::vector<std::size_t> pipeline_labels(const NumericalSemigroup& s,
                                                const PipelineOptions& options) {
  const std::size_t d = s.embedding_dimension();
  const std::size_t dist = options.distinguished.value_or(d - 1);
  if (dist >= d)
    throw Error(ErrorCode::InvalidArgument,
                "distinguished generator index " + std::to_string(dist) + " out of range");
  std::vector<std::size_t> labels;
  if (options.leading_order.empty()) {
    for (std::size_t i = 0; i < d; ++i)
      if (i != dist) labels.push_back(i);
  } else {
    labels = options.leading_order;
    std::vector<std::size_t> expect;
    for (std::size_t i = 0; i < d; ++i)
      if (i != dist) expect.push_back(i);
    auto sorted = labels;
    std::sort(sorted.begin(), sorted.end());
    if (sorted != expect)
      throw Error(ErrorCode::InvalidArgument,
                  "variable order must permute the non-distinguished generators");
  }
  labels.push_back(dist);
  return labels;
}

inline SocleComputation run_socle_pipeline(const NumericalSemigroup& s,
                                           const PipelineOptions& options = {}) {
  const auto labels = pipeline_labels(s, options);
  std::vector<Integer> weights;
  for (std::size_t k : labels) weights.push_back(s.generators()[k]);
  const Integer modulus = weights.back();

  auto elimination = elimination_basis(weights);
  auto p = presentation_from_elimination(elimination);
  std::vector<Integer> reduced_weights(weights.begin(), weights.end() - 1);
  auto reduced_order = MonomialOrder::weighted_revlex(reduced_weights);
  auto p_prime_gens = substitute_last_to_zero(p.elements(), reduced_order);
  auto p_prime = buchberger(p_prime_gens, reduced_order);

  auto quotient = quotient_basis(p_prime, reduced_weights, static_cast<std::size_t>(modulus));
  if (quotient.size() != static_cast<std::size_t>(modulus))
    throw Error(ErrorCode::Internal, "quotient has " + std::to_string(quotient.size()) +
                                         " standard monomials, expected " +
                                         std::to_string(modulus));
  auto report = socle(quotient, p_prime, modulus);

  return SocleComputation{
      IdealPresentation{std::move(weights), labels, std::move(elimination), std::move(p),
                        std::move(p_prime_gens), std::move(p_prime)},
      std::move(quotient), std::move(report)};
}

/// f = deg(b) - n_d and c = f + 1 read off the socle of R'.
inline SocleReport frobenius_via_socle(const NumericalSemigroup& s,
                                       const PipelineOptions& options = {}) {
  return run_socle_pipeline(s, options).report;
}

}  // namespace numsg

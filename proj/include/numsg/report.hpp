#pragma once

// Runs the Apery route and the socle route side by side, serializes the
// outcome, and drives seeded randomized cross-validation.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <numeric>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "numsg/format.hpp"
#include "numsg/naive.hpp"
#include "numsg/semigroup.hpp"
#include "numsg/toric.hpp"

namespace numsg {

enum class Method { Apery, Socle, Both };

inline std::string_view method_name(Method m) {
  switch (m) {
    case Method::Apery: return "apery";
    case Method::Socle: return "socle";
    case Method::Both: return "both";
  }
  return "both";
}

inline std::optional<Method> parse_method(std::string_view s) {
  if (s == "apery") return Method::Apery;
  if (s == "socle") return Method::Socle;
  if (s == "both") return Method::Both;
  return std::nullopt;
}

struct AperyRoute {
  Integer modulus = 1;
  Integer frobenius = -1;
  Integer conductor = 0;
  std::size_t type = 0;
  Integer max_apery = 0;
  std::vector<Integer> pseudo_frobenius;

  bool operator==(const AperyRoute&) const = default;
};

struct SocleRoute {
  Integer modulus = 1;
  Integer frobenius = -1;
  Integer conductor = 0;
  std::size_t dim = 0;
  Integer max_degree = 0;
  std::vector<Integer> socle_degrees;
  std::vector<std::string> socle_monomials;
  std::string top_monomial;
  std::vector<std::string> p_prime;

  bool operator==(const SocleRoute&) const = default;
};

struct Timings {
  std::optional<std::int64_t> apery_us;
  std::optional<std::int64_t> socle_us;

  bool operator==(const Timings&) const = default;
};

struct ComparisonReport {
  std::vector<Integer> semigroup;
  Method method = Method::Both;
  std::optional<AperyRoute> apery;
  std::optional<SocleRoute> socle;
  std::optional<std::string> error;  // "E_TAG: message"
  bool agree = false;
  Timings timings;

  bool operator==(const ComparisonReport&) const = default;
};

struct CompareOptions {
  Method method = Method::Both;
  /// Apery-route modulus; the socle route's distinguished generator when
  /// unset, so apery_max and deg(b) are directly comparable.
  std::optional<Integer> modulus;
  PipelineOptions pipeline;
};

namespace detail {

template <class F>
auto timed(F&& f, std::optional<std::int64_t>& micros) {
  const auto start = std::chrono::steady_clock::now();
  auto out = f();
  micros = std::chrono::duration_cast<std::chrono::microseconds>(
               std::chrono::steady_clock::now() - start)
               .count();
  return out;
}

inline std::string describe(const Error& e) { return std::string(e.tag()) + ": " + e.what(); }

}  // namespace detail

inline AperyRoute apery_route(const NumericalSemigroup& s, std::optional<Integer> modulus = {}) {
  const auto table = apery_set(s, modulus.value_or(s.multiplicity()));
  const auto pf = pseudo_frobenius(s);
  AperyRoute out;
  out.modulus = table.modulus();
  out.max_apery = table.max();
  out.frobenius = out.max_apery - out.modulus;
  out.conductor = out.frobenius + 1;
  out.type = pf.type();
  out.pseudo_frobenius = pf.values;
  return out;
}

inline SocleRoute socle_route(const SocleComputation& run) {
  const auto& pres = run.presentation;
  const auto& rep = run.report;
  std::vector<std::size_t> labels;
  for (std::size_t k : pres.labels) labels.push_back(k + 1);
  const std::span<const std::size_t> lead_labels(labels.data(), labels.size() - 1);

  SocleRoute out;
  out.modulus = rep.modulus;
  out.frobenius = rep.frobenius;
  out.conductor = rep.conductor;
  out.dim = rep.dim;
  out.max_degree = rep.max_degree;
  out.socle_degrees = rep.socle_degrees;
  for (const auto& m : rep.socle_monomials)
    out.socle_monomials.push_back(format_monomial(m, "x", lead_labels));
  out.top_monomial = format_monomial(rep.top, "x", lead_labels);
  for (const auto& g : pres.p_prime.elements())
    out.p_prime.push_back(format_binomial(g, "X", lead_labels));
  return out;
}

inline bool routes_agree(const AperyRoute& a, const SocleRoute& s) {
  return a.frobenius == s.frobenius && a.conductor == s.conductor && a.type == s.dim;
}

/// Runs the requested routes. Route failures are recorded in `error` and
/// force agree = false; they are not rethrown.
inline ComparisonReport compare_methods(const NumericalSemigroup& s,
                                        const CompareOptions& options = {}) {
  ComparisonReport out;
  out.semigroup = s.generators();
  out.method = options.method;
  try {
    const auto distinguished = options.pipeline.distinguished.value_or(s.embedding_dimension() - 1);
    if (distinguished >= s.embedding_dimension())
      throw Error(ErrorCode::InvalidArgument, "distinguished generator index out of range");
    const Integer modulus = options.modulus.value_or(s.generators()[distinguished]);
    if (options.method != Method::Socle)
      out.apery = detail::timed([&] { return apery_route(s, modulus); },
                                out.timings.apery_us);
    if (options.method != Method::Apery)
      out.socle = detail::timed(
          [&] { return socle_route(run_socle_pipeline(s, options.pipeline)); },
          out.timings.socle_us);
  } catch (const Error& e) {
    out.error = detail::describe(e);
  }
  if (out.error) {
    out.agree = false;
  } else if (out.apery && out.socle) {
    out.agree = routes_agree(*out.apery, *out.socle);
  } else {
    out.agree = true;
  }
  return out;
}

/// Canonicalizes raw input first; construction errors land in the report.
inline ComparisonReport evaluate(std::span<const Integer> raw, const CompareOptions& options = {}) {
  try {
    return compare_methods(new_semigroup(raw), options);
  } catch (const Error& e) {
    ComparisonReport out;
    out.semigroup.assign(raw.begin(), raw.end());
    out.method = options.method;
    out.error = detail::describe(e);
    return out;
  }
}

// JSON

inline nlohmann::ordered_json to_json(const ComparisonReport& r, bool with_timing = false) {
  using nlohmann::ordered_json;
  ordered_json j;
  j["generators"] = r.semigroup;
  ordered_json frob = nullptr, cond = nullptr, type = nullptr;
  if (r.apery) {
    frob = r.apery->frobenius;
    cond = r.apery->conductor;
    type = r.apery->type;
  } else if (r.socle) {
    frob = r.socle->frobenius;
    cond = r.socle->conductor;
    type = r.socle->dim;
  }
  j["frobenius"] = frob;
  j["conductor"] = cond;
  j["type"] = type;
  j["apery_max"] = r.apery ? ordered_json(r.apery->max_apery) : ordered_json(nullptr);
  j["socle_degrees"] = r.socle ? ordered_json(r.socle->socle_degrees) : ordered_json(nullptr);
  j["method"] = method_name(r.method);
  j["agree"] = r.agree;
  if (with_timing) {
    auto opt = [](const std::optional<std::int64_t>& v) {
      return v ? ordered_json(*v) : ordered_json(nullptr);
    };
    j["timing_us"] = {{"apery", opt(r.timings.apery_us)}, {"socle", opt(r.timings.socle_us)}};
  } else {
    j["timing_us"] = nullptr;
  }
  if (r.apery) {
    j["apery"] = {{"modulus", r.apery->modulus},
                  {"frobenius", r.apery->frobenius},
                  {"conductor", r.apery->conductor},
                  {"type", r.apery->type},
                  {"max", r.apery->max_apery},
                  {"pseudo_frobenius", r.apery->pseudo_frobenius}};
  } else {
    j["apery"] = nullptr;
  }
  if (r.socle) {
    j["socle"] = {{"modulus", r.socle->modulus},
                  {"frobenius", r.socle->frobenius},
                  {"conductor", r.socle->conductor},
                  {"dim", r.socle->dim},
                  {"max_degree", r.socle->max_degree},
                  {"top_monomial", r.socle->top_monomial},
                  {"socle_monomials", r.socle->socle_monomials},
                  {"p_prime", r.socle->p_prime}};
  } else {
    j["socle"] = nullptr;
  }
  j["error"] = r.error ? ordered_json(*r.error) : ordered_json(nullptr);
  return j;
}

inline ComparisonReport report_from_json(const nlohmann::ordered_json& j) {
  ComparisonReport r;
  r.semigroup = j.at("generators").get<std::vector<Integer>>();
  const auto method = parse_method(j.at("method").get<std::string>());
  if (!method) throw Error(ErrorCode::InvalidArgument, "unknown method in report");
  r.method = *method;
  r.agree = j.at("agree").get<bool>();
  if (const auto& t = j.at("timing_us"); !t.is_null()) {
    if (!t.at("apery").is_null()) r.timings.apery_us = t.at("apery").get<std::int64_t>();
    if (!t.at("socle").is_null()) r.timings.socle_us = t.at("socle").get<std::int64_t>();
  }
  if (const auto& a = j.at("apery"); !a.is_null()) {
    AperyRoute ar;
    ar.modulus = a.at("modulus").get<Integer>();
    ar.frobenius = a.at("frobenius").get<Integer>();
    ar.conductor = a.at("conductor").get<Integer>();
    ar.type = a.at("type").get<std::size_t>();
    ar.max_apery = a.at("max").get<Integer>();
    ar.pseudo_frobenius = a.at("pseudo_frobenius").get<std::vector<Integer>>();
    r.apery = std::move(ar);
  }
  if (const auto& s = j.at("socle"); !s.is_null()) {
    SocleRoute sr;
    sr.modulus = s.at("modulus").get<Integer>();
    sr.frobenius = s.at("frobenius").get<Integer>();
    sr.conductor = s.at("conductor").get<Integer>();
    sr.dim = s.at("dim").get<std::size_t>();
    sr.max_degree = s.at("max_degree").get<Integer>();
    sr.top_monomial = s.at("top_monomial").get<std::string>();
    sr.socle_monomials = s.at("socle_monomials").get<std::vector<std::string>>();
    sr.p_prime = s.at("p_prime").get<std::vector<std::string>>();
    sr.socle_degrees = j.at("socle_degrees").get<std::vector<Integer>>();
    r.socle = std::move(sr);
  }
  if (!j.at("error").is_null()) r.error = j.at("error").get<std::string>();
  return r;
}

// Randomized cross-validation

struct ValidationFailure {
  std::vector<Integer> generators;
  std::string reason;

  bool operator==(const ValidationFailure&) const = default;
};

struct ValidationSummary {
  std::uint64_t seed = 0;
  std::size_t count = 0;
  std::size_t passed = 0;
  std::size_t failed = 0;
  std::optional<ValidationFailure> first_failure;

  bool operator==(const ValidationSummary&) const = default;
};

/// Every identity linking the two routes and the brute-force oracle on one
/// semigroup; returns the first violated one.
inline std::optional<std::string> validate_instance(const NumericalSemigroup& s,
                                                    const PipelineOptions& options = {}) {
  try {
    const auto& gens = s.generators();
    const auto run = run_socle_pipeline(s, options);
    const auto& rep = run.report;
    const Integer nd = rep.modulus;

    const Integer f = frobenius_number(s);
    const auto pf = pseudo_frobenius(s);
    if (!routes_agree(apery_route(s), socle_route(run))) return "routes disagree";
    if (rep.frobenius != f) return "socle frobenius " + std::to_string(rep.frobenius) +
                                   " != apery frobenius " + std::to_string(f);
    if (rep.conductor != conductor(s)) return "conductor mismatch";
    if (rep.dim != pf.type()) return "socle dimension != type";
    if (naive::frobenius(gens) != f) return "apery frobenius != brute-force frobenius";
    if (naive::pseudo_frobenius(gens) != pf.values) return "pseudo-Frobenius != brute force";

    std::vector<Integer> shifted;
    for (Integer deg : rep.socle_degrees) shifted.push_back(deg - nd);
    if (shifted != pf.values) return "socle degrees - n_d != pseudo-Frobenius numbers";

    const auto ap = apery_set(s, nd).sorted_values();
    if (rep.max_degree != ap.back()) return "max Ap(H, n_d) != deg(b)";
    if (run.quotient.size() != static_cast<std::size_t>(nd)) return "dim R' != n_d";
    if (run.quotient.degrees != ap) return "standard monomial degrees != Ap(H, n_d)";

    const auto& pres = run.presentation;
    for (const auto* gb : {&pres.elimination, &pres.p, &pres.p_prime})
      if (auto check = verify_groebner(*gb); !check.ok()) return "groebner check: " + check.detail;
    for (const auto& g : pres.p.elements())
      if (!g.is_homogeneous(pres.weights)) return "presentation element not in the kernel";
  } catch (const Error& e) {
    return detail::describe(e);
  }
  return std::nullopt;
}

/// Random coprime tuple with 2..max_d entries in [2, max_gen]; (1) when
/// max_d = 1.
inline std::vector<Integer> random_generators(std::mt19937_64& rng, std::size_t max_d,
                                              Integer max_gen) {
  if (max_d < 1 || max_gen < 2)
    throw Error(ErrorCode::InvalidArgument, "need max_d >= 1 and max_gen >= 2");
  if (max_d == 1) return {1};
  std::uniform_int_distribution<std::size_t> dim(2, max_d);
  std::uniform_int_distribution<Integer> value(2, max_gen);
  while (true) {
    std::vector<Integer> gens(dim(rng));
    for (auto& g : gens) g = value(rng);
    Integer g0 = 0;
    for (Integer g : gens) g0 = std::gcd(g0, g);
    if (g0 == 1) return gens;
  }
}

inline ValidationSummary run_random_validation(std::uint64_t seed, std::size_t count,
                                               std::size_t max_d, Integer max_gen) {
  ValidationSummary out;
  out.seed = seed;
  out.count = count;
  std::mt19937_64 rng(seed);
  for (std::size_t i = 0; i < count; ++i) {
    const auto raw = random_generators(rng, max_d, max_gen);
    const auto s = new_semigroup(raw);
    if (auto failure = validate_instance(s)) {
      ++out.failed;
      if (!out.first_failure) out.first_failure = ValidationFailure{s.generators(), *failure};
    } else {
      ++out.passed;
    }
  }
  return out;
}

}  // namespace numsg

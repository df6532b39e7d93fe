// numsg: Frobenius number, conductor, Apery set and type of a numerical
// semigroup, computed by the Apery route and the socle route.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "numsg/numsg.hpp"

namespace {

using numsg::Integer;

constexpr Integer kMaxGenerator = 1'000'000;

enum class Format { Text, Json };

struct Common {
  std::string format = "text";
  bool timing = false;

  Format fmt() const { return format == "json" ? Format::Json : Format::Text; }
};

std::string join(const std::vector<Integer>& v, std::string_view sep = ", ") {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? sep : "") << v[i];
  return os.str();
}

std::string join(const std::vector<std::string>& v, std::string_view sep = ", ") {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? std::string(sep) : "") + v[i];
  return out;
}

// Returns an error line for out-of-range input; reports dropped generators.
std::optional<std::string> check_input(const std::vector<Integer>& raw) {
  for (Integer g : raw) {
    if (g < 1) return "E_ARGUMENT: generators must be positive, got " + std::to_string(g);
    if (g > kMaxGenerator)
      return "E_RANGE: generator " + std::to_string(g) + " exceeds the cap " +
             std::to_string(kMaxGenerator);
  }
  return std::nullopt;
}

void note_minimization(const std::vector<Integer>& raw, const numsg::ComparisonReport& r) {
  if (r.error) return;
  std::vector<Integer> dropped;
  for (Integer g : raw)
    if (std::find(r.semigroup.begin(), r.semigroup.end(), g) == r.semigroup.end() &&
        std::find(dropped.begin(), dropped.end(), g) == dropped.end())
      dropped.push_back(g);
  if (!dropped.empty())
    std::cerr << "note: dropped non-minimal generators: " << join(dropped) << "\n";
}

void print_text(std::ostream& os, const numsg::ComparisonReport& r, bool timing) {
  auto row = [&os](std::string_view label, const std::string& a, const std::string& s) {
    os << std::left << std::setw(18) << label << std::setw(16) << a << s << "\n";
  };
  auto opt = [](bool present, auto value) {
    return present ? std::to_string(value) : std::string("-");
  };
  os << std::left << std::setw(18) << "semigroup" << "<" << join(r.semigroup) << ">\n";
  os << std::left << std::setw(18) << "method" << numsg::method_name(r.method) << "\n";
  if (r.apery || r.socle) {
    const auto* a = r.apery ? &*r.apery : nullptr;
    const auto* s = r.socle ? &*r.socle : nullptr;
    row("", "apery", "socle");
    row("frobenius", opt(a, a ? a->frobenius : 0), opt(s, s ? s->frobenius : 0));
    row("conductor", opt(a, a ? a->conductor : 0), opt(s, s ? s->conductor : 0));
    row("type / dim", opt(a, a ? a->type : 0), opt(s, s ? s->dim : 0));
    row("modulus", opt(a, a ? a->modulus : 0), opt(s, s ? s->modulus : 0));
    row("max Ap / deg(b)", opt(a, a ? a->max_apery : 0), opt(s, s ? s->max_degree : 0));
    if (a) os << std::left << std::setw(18) << "pseudo-Frobenius" << join(a->pseudo_frobenius) << "\n";
    if (s) {
      os << std::left << std::setw(18) << "socle degrees" << join(s->socle_degrees) << "\n";
      os << std::left << std::setw(18) << "socle basis" << join(s->socle_monomials) << "\n";
      os << std::left << std::setw(18) << "b" << s->top_monomial << "\n";
      os << std::left << std::setw(18) << "p' basis"
         << (s->p_prime.empty() ? std::string("(0)") : join(s->p_prime)) << "\n";
    }
    if (timing) {
      row("time (us)", opt(r.timings.apery_us.has_value(), r.timings.apery_us.value_or(0)),
          opt(r.timings.socle_us.has_value(), r.timings.socle_us.value_or(0)));
    }
  }
  if (r.error) os << std::left << std::setw(18) << "error" << *r.error << "\n";
  os << std::left << std::setw(18) << "agree" << (r.agree ? "yes" : "no") << "\n";
}

// Prints one report; returns true when it counts as a success.
bool emit(const numsg::ComparisonReport& r, const Common& common) {
  if (common.fmt() == Format::Json)
    std::cout << numsg::to_json(r, common.timing).dump() << "\n";
  else
    print_text(std::cout, r, common.timing);
  if (r.error) std::cerr << *r.error << "\n";
  return !r.error && r.agree;
}

numsg::CompareOptions make_options(numsg::Method method, std::optional<Integer> modulus,
                                   std::optional<std::size_t> socle_var) {
  numsg::CompareOptions options;
  options.method = method;
  options.modulus = modulus;
  if (socle_var) options.pipeline.distinguished = *socle_var - 1;
  return options;
}

int run_one(const std::vector<Integer>& raw, const numsg::CompareOptions& options,
            const Common& common) {
  if (auto bad = check_input(raw)) {
    std::cerr << *bad << "\n";
    return 1;
  }
  const auto report = numsg::evaluate(raw, options);
  note_minimization(raw, report);
  return emit(report, common) ? 0 : 1;
}

struct Stats {
  std::int64_t min = 0, median = 0, mean = 0;
};

Stats summarize(std::vector<std::int64_t> samples) {
  std::sort(samples.begin(), samples.end());
  Stats s;
  s.min = samples.front();
  s.median = samples[samples.size() / 2];
  std::int64_t total = 0;
  for (auto v : samples) total += v;
  s.mean = total / static_cast<std::int64_t>(samples.size());
  return s;
}

int run_bench(const std::vector<Integer>& raw, std::size_t repeat, const Common& common) {
  if (auto bad = check_input(raw)) {
    std::cerr << *bad << "\n";
    return 1;
  }
  std::optional<numsg::NumericalSemigroup> s;
  try {
    s = numsg::new_semigroup(raw);
  } catch (const numsg::Error& e) {
    std::cerr << e.tag() << ": " << e.what() << "\n";
    return 1;
  }
  std::vector<std::int64_t> apery, socle;
  bool agree = true;
  for (std::size_t i = 0; i < repeat; ++i) {
    const auto r = numsg::compare_methods(*s);
    if (r.error) {
      std::cerr << *r.error << "\n";
      return 1;
    }
    agree = agree && r.agree;
    apery.push_back(*r.timings.apery_us);
    socle.push_back(*r.timings.socle_us);
  }
  const auto a = summarize(apery), b = summarize(socle);
  if (common.fmt() == Format::Json) {
    nlohmann::ordered_json j;
    j["generators"] = s->generators();
    j["repeat"] = repeat;
    j["agree"] = agree;
    j["apery_us"] = {{"min", a.min}, {"median", a.median}, {"mean", a.mean}};
    j["socle_us"] = {{"min", b.min}, {"median", b.median}, {"mean", b.mean}};
    std::cout << j.dump() << "\n";
  } else {
    std::cout << "semigroup <" << join(s->generators()) << ">, " << repeat << " runs\n";
    std::cout << std::left << std::setw(8) << "route" << std::right << std::setw(12) << "min us"
              << std::setw(12) << "median us" << std::setw(12) << "mean us" << "\n";
    for (auto [name, st] : {std::pair{"apery", a}, std::pair{"socle", b}})
      std::cout << std::left << std::setw(8) << name << std::right << std::setw(12) << st.min
                << std::setw(12) << st.median << std::setw(12) << st.mean << "\n";
    std::cout << "agree " << (agree ? "yes" : "no") << "\n";
  }
  return agree ? 0 : 1;
}

int run_validate(std::uint64_t seed, std::size_t count, std::size_t max_d, Integer max_gen,
                 const Common& common) {
  numsg::ValidationSummary summary;
  try {
    summary = numsg::run_random_validation(seed, count, max_d, max_gen);
  } catch (const numsg::Error& e) {
    std::cerr << e.tag() << ": " << e.what() << "\n";
    return 1;
  }
  if (common.fmt() == Format::Json) {
    nlohmann::ordered_json j;
    j["seed"] = seed;
    j["count"] = count;
    j["max_d"] = max_d;
    j["max_gen"] = max_gen;
    j["passed"] = summary.passed;
    j["failed"] = summary.failed;
    if (summary.first_failure)
      j["first_failure"] = {{"generators", summary.first_failure->generators},
                            {"reason", summary.first_failure->reason}};
    else
      j["first_failure"] = nullptr;
    std::cout << j.dump() << "\n";
  } else {
    std::cout << "seed " << seed << ": " << summary.passed << " passed, " << summary.failed
              << " failed of " << count << "\n";
    if (summary.first_failure)
      std::cout << "first failure <" << join(summary.first_failure->generators)
                << ">: " << summary.first_failure->reason << "\n";
  }
  return summary.failed == 0 ? 0 : 1;
}

int run_batch(const std::string& path, const numsg::CompareOptions& options,
              const Common& common) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    std::cerr << "E_IO: cannot open " << path << "\n";
    return 1;
  }
  bool ok = true;
  bool first = true;
  for (const auto& entry : numsg::parse_batch(in)) {
    if (!first && common.fmt() == Format::Text) std::cout << "\n";
    first = false;
    if (entry.error) {
      std::cerr << *entry.error << "\n";
      ok = false;
      continue;
    }
    if (auto bad = check_input(entry.generators)) {
      std::cerr << *bad << " (line " << entry.line << ")\n";
      ok = false;
      continue;
    }
    const auto report = numsg::evaluate(entry.generators, options);
    note_minimization(entry.generators, report);
    ok = emit(report, common) && ok;
  }
  return ok ? 0 : 1;
}

void add_common(CLI::App* cmd, Common& common) {
  cmd->add_option("--format", common.format, "Output format")
      ->check(CLI::IsMember({"text", "json"}));
  cmd->add_flag("--timing", common.timing, "Include per-route wall-clock time");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Frobenius number and socle of numerical semigroups"};
  app.require_subcommand(1);

  Common common;
  std::vector<Integer> generators;
  std::string method = "both";
  std::optional<Integer> modulus;
  std::optional<std::size_t> socle_var;

  auto* compute = app.add_subcommand("compute", "Compute invariants by one or both routes");
  compute->add_option("generators", generators, "Semigroup generators")->required();
  compute->add_option("--method", method, "apery, socle or both")
      ->check(CLI::IsMember({"apery", "socle", "both"}));
  compute->add_option("--modulus", modulus, "Apery-route modulus (an element of H)");
  compute->add_option("--socle-var", socle_var, "1-based generator quotiented in the socle route")
      ->check(CLI::PositiveNumber);
  add_common(compute, common);

  auto* compare = app.add_subcommand("compare", "Run both routes and check they agree");
  compare->add_option("generators", generators, "Semigroup generators")->required();
  compare->add_option("--socle-var", socle_var, "1-based generator quotiented in the socle route")
      ->check(CLI::PositiveNumber);
  add_common(compare, common);

  std::uint64_t seed = 1;
  std::size_t count = 200, max_d = 4;
  Integer max_gen = 40;
  auto* validate = app.add_subcommand("validate", "Seeded randomized cross-validation");
  validate->add_option("--seed", seed, "RNG seed");
  validate->add_option("--count", count, "Number of random semigroups");
  validate->add_option("--max-d", max_d, "Maximum embedding dimension")->check(CLI::PositiveNumber);
  validate->add_option("--max-gen", max_gen, "Maximum generator")->check(CLI::Range(2, 1'000'000));
  add_common(validate, common);

  std::size_t repeat = 10;
  auto* bench = app.add_subcommand("bench", "Time both routes");
  bench->add_option("generators", generators, "Semigroup generators")->required();
  bench->add_option("--repeat", repeat, "Repetitions")->check(CLI::PositiveNumber);
  add_common(bench, common);

  std::string file;
  auto* batch = app.add_subcommand("batch", "Process one semigroup per line of FILE");
  batch->add_option("file", file, "Input file")->required();
  batch->add_option("--method", method, "apery, socle or both")
      ->check(CLI::IsMember({"apery", "socle", "both"}));
  add_common(batch, common);

  CLI11_PARSE(app, argc, argv);

  const auto chosen = *numsg::parse_method(method);
  if (compute->parsed()) return run_one(generators, make_options(chosen, modulus, socle_var), common);
  if (compare->parsed())
    return run_one(generators, make_options(numsg::Method::Both, std::nullopt, socle_var), common);
  if (validate->parsed()) return run_validate(seed, count, max_d, max_gen, common);
  if (bench->parsed()) return run_bench(generators, repeat, common);
  if (batch->parsed()) return run_batch(file, make_options(chosen, std::nullopt, std::nullopt), common);
  return 1;
}

// Command-line front end: dist, moments and check subcommands.
//
// Exit codes: 0 success, 1 verification failure, 2 usage error,
// 3 enumeration budget exceeded.
#pragma once

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "succdist/succdist.hpp"

namespace succdist::cli {

enum ExitCode : int { kOk = 0, kVerificationFailed = 1, kUsage = 2, kBudget = 3 };

inline constexpr unsigned kMaxMomentOrder = 6;

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// 12 significant digits, locale independent.
inline std::string decimal(const Rational& r) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", r.convert_to<double>());
  return buf;
}

inline std::string exact(const Rational& r) { return r.str(); }

struct RunConfig {
  std::string spec_text;
  std::string method = "explicit";
  unsigned mmax = 2;
  std::string format = "plain";
  std::string output;
  std::optional<std::uint64_t> budget_flag;

  // check only
  std::string suite = "all";
  std::optional<unsigned> kmax;
  std::optional<unsigned> nmax;
  unsigned dir = 2;
  std::optional<unsigned> steps;
  std::uint64_t seed = 1;
};

inline std::uint64_t effective_budget(const RunConfig& cfg) {
  if (cfg.budget_flag) return *cfg.budget_flag;
  if (const char* env = std::getenv("SUCCDIST_BUDGET"); env && *env) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (*end != '\0') throw UsageError(std::string("SUCCDIST_BUDGET is not an integer: ") + env);
    return v;
  }
  return kDefaultEnumerationBudget;
}

inline Specification parse_spec(const std::string& text) {
  try {
    return Specification::parse(text);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

inline nlohmann::ordered_json moments_json(const MomentReport& rep) {
  nlohmann::ordered_json m;
  m["mean"] = exact(rep.mean);
  m["variance"] = exact(rep.variance);
  std::vector<std::string> fact;
  for (std::size_t i = 1; i < rep.factorial_moments.size(); ++i) fact.push_back(exact(rep.factorial_moments[i]));
  m["factorial"] = fact;
  return m;
}

inline nlohmann::ordered_json base_json(const Specification& spec, const WPoly& p, const MomentReport& rep) {
  nlohmann::ordered_json j;
  j["spec"] = spec.counts();
  std::vector<std::string> counts;
  for (const auto& c : p.coeffs()) counts.push_back(c.str());
  j["counts"] = counts;
  j["total"] = rep.total.str();
  j["moments"] = moments_json(rep);
  return j;
}

struct MethodOutcome {
  Method method;
  std::string status;  // "OK", "MISMATCH", "skipped (...)"
};

/// Computes P with the selected method(s). For "all", every method that
/// applies to the input runs; the oracle is skipped when over budget.
inline WPoly compute_polynomial(const Specification& spec, const RunConfig& cfg, std::uint64_t budget,
                                std::vector<MethodOutcome>& outcomes, bool& agree) {
  agree = true;
  if (cfg.method != "all") {
    Method m;
    try {
      m = parse_method(cfg.method);
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
    try {
      return polynomial_by(spec, m, budget);
    } catch (const MethodUnavailable& e) {
      throw UsageError(e.what());
    }
  }
  const WPoly reference = polynomial_by(spec, Method::explicit_formula, budget);
  for (Method m : kAllMethods) {
    if (!method_supports(m, spec)) {
      outcomes.push_back({m, "skipped (k too large)"});
      continue;
    }
    try {
      const WPoly p = polynomial_by(spec, m, budget);
      const bool same = p == reference;
      agree = agree && same;
      outcomes.push_back({m, same ? "OK" : "MISMATCH"});
    } catch (const BudgetExceeded&) {
      outcomes.push_back({m, "skipped (budget)"});
    }
  }
  return reference;
}

inline void emit(const RunConfig& cfg, const std::string& text, std::ostream& out) {
  if (cfg.output.empty()) {
    out << text;
    return;
  }
  std::ofstream f(cfg.output, std::ios::binary);
  if (!f) throw UsageError("cannot open output file '" + cfg.output + "'");
  f << text;
}

inline void check_format(const RunConfig& cfg) {
  if (cfg.format != "plain" && cfg.format != "csv" && cfg.format != "json")
    throw UsageError("unknown format '" + cfg.format + "'");
  if (cfg.mmax < 1 || cfg.mmax > kMaxMomentOrder)
    throw UsageError("--mmax must be in 1.." + std::to_string(kMaxMomentOrder));
}

inline int cmd_dist(const RunConfig& cfg, std::ostream& out) {
  check_format(cfg);
  const Specification spec = parse_spec(cfg.spec_text);
  const std::uint64_t budget = effective_budget(cfg);
  std::vector<MethodOutcome> outcomes;
  bool agree = true;
  const WPoly p = compute_polynomial(spec, cfg, budget, outcomes, agree);
  const auto dist = SuccessionDistribution::from_polynomial(spec, p);
  const auto rep = moments_from_polynomial(p, cfg.mmax);

  std::ostringstream os;
  if (cfg.format == "json") {
    auto j = base_json(spec, p, rep);
    j["method"] = cfg.method;
    if (!outcomes.empty()) {
      nlohmann::ordered_json a;
      for (const auto& o : outcomes) a[std::string(method_name(o.method))] = o.status;
      j["agreement"] = a;
    }
    os << j.dump(2) << '\n';
  } else if (cfg.format == "csv") {
    os << "r,count,probability_exact,probability_decimal\n";
    for (std::size_t r = 0; r < dist.counts.size(); ++r)
      os << r << ',' << dist.counts[r] << ',' << exact(dist.probability(r)) << ',' << decimal(dist.probability(r))
         << '\n';
  } else {
    os << "spec: [" << spec.to_string() << "]\n";
    os << "method: " << cfg.method << '\n';
    os << "polynomial: " << p << '\n';
    os << "total: " << dist.total << '\n';
    os << "r  count  probability  decimal\n";
    for (std::size_t r = 0; r < dist.counts.size(); ++r)
      os << r << "  " << dist.counts[r] << "  " << exact(dist.probability(r)) << "  " << decimal(dist.probability(r))
         << '\n';
  }
  if (!outcomes.empty() && cfg.format == "plain") {
    os << "agreement: " << (agree ? "OK" : "MISMATCH") << '\n';
    for (const auto& o : outcomes) os << "  " << method_name(o.method) << ": " << o.status << '\n';
  }
  emit(cfg, os.str(), out);
  return agree ? kOk : kVerificationFailed;
}

inline int cmd_moments(const RunConfig& cfg, std::ostream& out) {
  check_format(cfg);
  const Specification spec = parse_spec(cfg.spec_text);
  const std::uint64_t budget = effective_budget(cfg);
  std::vector<MethodOutcome> outcomes;
  bool agree = true;
  const WPoly p = compute_polynomial(spec, cfg, budget, outcomes, agree);
  const auto rep = moments_from_polynomial(p, cfg.mmax);
  const double mu = rep.mean.convert_to<double>();
  const double sd = std::sqrt(rep.variance.convert_to<double>());
  char mu_buf[64], sd_buf[64];
  std::snprintf(mu_buf, sizeof mu_buf, "%.12g", mu);
  std::snprintf(sd_buf, sizeof sd_buf, "%.12g", sd);

  std::ostringstream os;
  if (cfg.format == "json") {
    auto j = base_json(spec, p, rep);
    j["moments"]["second_factorial"] = exact(rep.second_factorial);
    j["method"] = cfg.method;
    j["normal_approx"] = {{"mean", std::string(mu_buf)}, {"sd", std::string(sd_buf)}};
    if (!outcomes.empty()) {
      nlohmann::ordered_json a;
      for (const auto& o : outcomes) a[std::string(method_name(o.method))] = o.status;
      j["agreement"] = a;
    }
    os << j.dump(2) << '\n';
  } else if (cfg.format == "csv") {
    os << "quantity,exact,decimal\n";
    os << "mean," << exact(rep.mean) << ',' << decimal(rep.mean) << '\n';
    os << "variance," << exact(rep.variance) << ',' << decimal(rep.variance) << '\n';
    os << "second_factorial," << exact(rep.second_factorial) << ',' << decimal(rep.second_factorial) << '\n';
    for (unsigned m = 1; m <= cfg.mmax; ++m)
      os << "factorial_" << m << ',' << exact(rep.factorial_moments[m]) << ',' << decimal(rep.factorial_moments[m])
         << '\n';
  } else {
    os << "spec: [" << spec.to_string() << "]\n";
    os << "total: " << rep.total << '\n';
    os << "mean: " << exact(rep.mean) << " (" << decimal(rep.mean) << ")\n";
    os << "variance: " << exact(rep.variance) << " (" << decimal(rep.variance) << ")\n";
    os << "second_factorial: " << exact(rep.second_factorial) << " (" << decimal(rep.second_factorial) << ")\n";
    for (unsigned m = 1; m <= cfg.mmax; ++m)
      os << "E[R^(" << m << ")]: " << exact(rep.factorial_moments[m]) << " (" << decimal(rep.factorial_moments[m])
         << ")\n";
    os << "normal_approx: mean=" << mu_buf << " sd=" << sd_buf << '\n';
    if (!outcomes.empty()) os << "agreement: " << (agree ? "OK" : "MISMATCH") << '\n';
  }
  emit(cfg, os.str(), out);
  return agree ? kOk : kVerificationFailed;
}

inline int cmd_check(const RunConfig& cfg, std::ostream& out) {
  if (cfg.format != "plain" && cfg.format != "json") throw UsageError("check supports --format plain|json");
  const std::uint64_t budget = effective_budget(cfg);
  const std::vector<std::string> known{"a000255",     "oracle",  "recurrence", "recurrence-random",
                                       "determinant", "closed-form", "moments", "dm"};
  std::vector<std::string> wanted;
  if (cfg.suite == "all")
    wanted = known;
  else if (std::find(known.begin(), known.end(), cfg.suite) != known.end())
    wanted = {cfg.suite};
  else
    throw UsageError("unknown suite '" + cfg.suite + "'");

  std::vector<SuiteResult> results;
  for (const auto& name : wanted) {
    try {
      if (name == "a000255") {
        results.push_back(suite_a000255(cfg.kmax.value_or(8), budget));
      } else if (name == "oracle") {
        results.push_back(suite_oracle(cfg.nmax.value_or(6), cfg.kmax.value_or(4), budget));
      } else if (name == "recurrence") {
        const Specification base = parse_spec(cfg.spec_text.empty() ? "1,1,2" : cfg.spec_text);
        if (cfg.dir < 1 || cfg.dir > base.k()) throw UsageError("--dir must be in 1..k");
        const std::size_t i = cfg.dir - 1;
        if (base[i] < 1) throw UsageError("recurrence needs n_i >= 1 in direction --dir");
        results.push_back(suite_recurrence(base, i, cfg.steps.value_or(recurrence_order(base, i) + 1)));
      } else if (name == "recurrence-random") {
        results.push_back(suite_recurrence_random(50, cfg.seed));
      } else if (name == "determinant") {
        results.push_back(suite_determinant(cfg.kmax.value_or(5), 4, cfg.seed));
      } else if (name == "closed-form") {
        results.push_back(suite_closed_form());
      } else if (name == "moments") {
        results.push_back(suite_moments(cfg.nmax.value_or(9), 100, cfg.seed));
      } else if (name == "dm") {
        results.push_back(suite_dm(cfg.nmax.value_or(9)));
      }
    } catch (const UsageError&) {
      throw;
    } catch (const BudgetExceeded&) {
      throw;
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  }

  bool all_ok = true;
  for (const auto& r : results) all_ok = all_ok && r.ok();
  std::ostringstream os;
  if (cfg.format == "json") {
    nlohmann::ordered_json j;
    j["suites"] = nlohmann::ordered_json::array();
    for (const auto& r : results)
      j["suites"].push_back({{"name", r.name}, {"passed", r.passed}, {"total", r.total}, {"ok", r.ok()},
                             {"failures", r.failures}});
    j["ok"] = all_ok;
    os << j.dump(2) << '\n';
  } else {
    for (const auto& r : results) {
      os << "suite " << r.name << ": " << r.passed << "/" << r.total << " passed " << (r.ok() ? "PASS" : "FAIL")
         << '\n';
      for (std::size_t f = 0; f < r.failures.size() && f < 20; ++f) os << "  failed: " << r.failures[f] << '\n';
    }
    os << "overall: " << (all_ok ? "PASS" : "FAIL") << '\n';
  }
  emit(cfg, os.str(), out);
  return all_ok ? kOk : kVerificationFailed;
}

/// Entry point shared by the executable and the tests.
inline int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact distributions and moments of increasing successions in multiset permutations", "succdist"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--spec", cfg.spec_text, "multiplicities n1,n2,...,nk");
    sub->add_option("--method", cfg.method, "recursive|explicit|matrix|closed-form|oracle|all");
    sub->add_option("--mmax", cfg.mmax, "highest factorial moment order (1..6)");
    sub->add_option("--format", cfg.format, "plain|csv|json");
    sub->add_option("--output,-o", cfg.output, "write to file instead of stdout");
    sub->add_option("--budget", cfg.budget_flag, "enumeration budget for the oracle");
  };

  CLI::App* dist = app.add_subcommand("dist", "succession counts and probabilities");
  add_common(dist);
  dist->get_option("--spec")->required();
  CLI::App* moments = app.add_subcommand("moments", "exact mean, variance and factorial moments");
  add_common(moments);
  moments->get_option("--spec")->required();

  CLI::App* check = app.add_subcommand("check", "run the cross-validation suites");
  check->add_option("--suite", cfg.suite,
                    "all|a000255|oracle|recurrence|recurrence-random|determinant|closed-form|moments|dm");
  check->add_option("--kmax", cfg.kmax, "largest k (a000255, oracle, determinant)");
  check->add_option("--nmax", cfg.nmax, "largest total n (oracle, moments, dm)");
  check->add_option("--spec", cfg.spec_text, "base spec of the recurrence family");
  check->add_option("--dir", cfg.dir, "1-based index of the varying multiplicity");
  check->add_option("--steps", cfg.steps, "number of family members");
  check->add_option("--seed", cfg.seed, "seed for the randomized suites");
  check->add_option("--format", cfg.format, "plain|json");
  check->add_option("--output,-o", cfg.output, "write to file instead of stdout");
  check->add_option("--budget", cfg.budget_flag, "enumeration budget for the oracle");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  try {
    if (dist->parsed()) return cmd_dist(cfg, out);
    if (moments->parsed()) return cmd_moments(cfg, out);
    return cmd_check(cfg, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const BudgetExceeded& e) {
    err << "error: " << e.what() << '\n';
    return kBudget;
  }
}

}  // namespace succdist::cli

#pragma once

#include "sbo/identities.hpp"

#include <nlohmann/json.hpp>

namespace sbo {

enum class RunMode { Symbolic, Numeric };

struct RunConfig {
  std::optional<int> n;
  std::optional<int> k;
  std::optional<std::vector<Rational>> lambda, nu;
  Parities xi, eta;
  std::vector<unsigned> alpha;
  std::uint64_t seed = 1;
  RunMode mode = RunMode::Numeric;  // Symbolic skips every seeded check
  std::string output = "json";
  bool timing = false;  // measured millis in JSON; off keeps reports byte-identical

  // Seed actually used by seeded checks.
  std::uint64_t effective_seed() const { return mode == RunMode::Numeric ? seed : 1; }
};

struct SuiteReport {
  std::string suite;
  std::vector<CheckResult> checks;
  double millis = 0;
  bool pass() const;
};

const std::vector<std::string>& suite_names();  // without "all"
// Throws std::invalid_argument("unknown suite") for names outside suite_names() and "all".
std::vector<SuiteReport> run_suites(const std::string& name, const RunConfig& cfg);

std::vector<CheckResult> suite_restriction(const RunConfig& cfg);
std::vector<CheckResult> suite_bernstein_sato(const RunConfig& cfg);
std::vector<CheckResult> suite_expansion(const RunConfig& cfg);
std::vector<CheckResult> suite_residue_scalar(const RunConfig& cfg);
std::vector<CheckResult> suite_n2_classify(const RunConfig& cfg);
std::vector<CheckResult> suite_algebra_axioms(const RunConfig& cfg);

// Building blocks shared with the acceptance binary.
CheckResult check_constructor_calibration();
std::vector<CheckResult> check_pde_calibration();
std::vector<CheckResult> check_classification_sweep(std::uint64_t seed, int per_case = 6);
CheckResult check_classification_instance(const InductionParams& p, int k);
std::vector<CheckResult> check_residue_scalars(int max_n);
CheckResult check_gamma_ratio(std::uint64_t seed, int patterns = 10);
CheckResult check_gamma_numeric();
std::vector<CheckResult> check_riesz_probe();
// The property families of the algebra-axioms suite, `per_family` cases each.
std::vector<CheckResult> check_properties(std::uint64_t seed, int per_family = 200);

nlohmann::ordered_json to_json(const CheckResult& c, bool timing);
nlohmann::ordered_json to_json(const std::vector<SuiteReport>& reports, const RunConfig& cfg);
std::string to_text(const std::vector<SuiteReport>& reports);
std::string to_latex(const std::vector<SuiteReport>& reports);

}  // namespace sbo

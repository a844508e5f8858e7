#pragma once

// Acceptance checks for the whole library, shared by the acceptance test
// binary and `yaglom verify`.

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace yaglom {

/// 137-digit prime defining the reference concatenated family.
inline constexpr std::string_view kReferencePrimeDigits =
    "54324557194526233431402996499932247126422684050879721482365330417236755446526748745089584552036020441984626385846298664106668659730094751";
inline constexpr double kReferenceTau = 0.00155359;
inline constexpr double kReferenceLambda = 0.98;
/// ln(rho) below which the reference family is claimed to clear the tangent.
inline constexpr double kReferenceLogRho = -640.48;
/// Scale used when comparing the envelope with the Shannon bound.
inline constexpr double kEnvelopeLambda = 0.976;
/// Published value of the large-alphabet constant, reported for comparison.
inline constexpr double kPublishedLargeAlphabetDefect = 0.77e-8;

struct VerifyOptions {
  std::uint64_t seed = 0;
  unsigned workers = 1;
};

struct CriterionOutcome {
  bool pass = false;
  std::string detail;
};

struct Criterion {
  int id = 0;
  std::string name;
  std::vector<std::string> tags;
  /// Wall-clock budget in seconds; 0 means none.
  double budget_seconds = 0.0;
  std::function<CriterionOutcome(const VerifyOptions&)> run;
};

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  double seconds = 0.0;
  std::string detail;
};

const std::vector<Criterion>& acceptance_criteria();

/// Runs the criteria whose name, tag or id matches one of `only` (all when
/// empty). Throws UsageError if a selector matches nothing. A criterion over
/// its time budget fails.
std::vector<CriterionResult> run_verification(const std::vector<std::string>& only, const VerifyOptions& options,
                                              const std::function<void(const CriterionResult&)>& on_result = {});

/// One JSON object per line: id, name, pass, seconds, detail.
std::string format_result(const CriterionResult& result);

}  // namespace yaglom

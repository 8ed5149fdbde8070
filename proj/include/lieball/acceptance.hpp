#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace lieball {

struct AcceptanceConfig {
  std::uint64_t seed = 0;
};

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;
  double seconds = 0.0;
};

/// Pinned tolerances of the acceptance suite.
namespace acceptance_tol {
inline constexpr double kIsometry = 1e-9;
inline constexpr double kIsometryRuntime = 10.0;  // seconds, criterion 1 total
inline constexpr double kProperBoundary = 1e-9;
inline constexpr double kNonIsometryFloor = 1e-3;
inline constexpr double kBeta = 1e-8;
inline constexpr double kMembership = 1e-12;
inline constexpr double kIntertwining = 1e-9;
inline constexpr double kMetricInvariance = 1e-8;
inline constexpr double kLiftAction = 1e-12;
inline constexpr double kJacobianRelative = 1e-6;
inline constexpr double kMetricFd = 1e-6;
inline constexpr double kTakagi = 1e-9;
}  // namespace acceptance_tol

CriterionResult check_isometry_constants(const AcceptanceConfig& cfg);
CriterionResult check_nonisometry_separation(const AcceptanceConfig& cfg);
CriterionResult check_classification_round_trip(const AcceptanceConfig& cfg);
CriterionResult check_witnesses(const AcceptanceConfig& cfg);
CriterionResult check_signatures(const AcceptanceConfig& cfg);
CriterionResult check_group_invariance(const AcceptanceConfig& cfg);
CriterionResult check_jets(const AcceptanceConfig& cfg);
CriterionResult check_oracles(const AcceptanceConfig& cfg);

std::vector<CriterionResult> run_acceptance(const AcceptanceConfig& cfg = {});

/// "[PASS] 3 classification-round-trip: ... (0.41 s)"
std::string format_line(const CriterionResult& r);

}  // namespace lieball

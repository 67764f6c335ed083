#pragma once

#include <chrono>
#include <optional>
#include <string>

#include "json.hpp"
#include "wreath_id/poly.hpp"

namespace wreath_id {

/// Outcome of checking one claim for one parameter set. A failed report
/// always carries the first counterexample found.
class VerificationReport {
 public:
  static VerificationReport pass(std::string claim, nlohmann::json params);
  static VerificationReport fail(std::string claim, nlohmann::json params,
                                 nlohmann::json counterexample);

  const std::string& claim() const noexcept { return claim_; }
  const nlohmann::json& params() const noexcept { return params_; }
  bool passed() const noexcept { return !counterexample_.has_value(); }
  const std::optional<nlohmann::json>& counterexample() const noexcept {
    return counterexample_;
  }
  double elapsed_ms() const noexcept { return elapsed_ms_; }
  void set_elapsed_ms(double ms) noexcept { elapsed_ms_ = ms; }

  /// {"claim", "params", "status", "counterexample", "elapsed_ms"}
  nlohmann::json to_json() const;

 private:
  VerificationReport(std::string claim, nlohmann::json params,
                     std::optional<nlohmann::json> counterexample);

  std::string claim_;
  nlohmann::json params_;
  std::optional<nlohmann::json> counterexample_;
  double elapsed_ms_ = 0.0;
};

/// First monomial (in (t, q, u) order) whose coefficients differ, as
/// {"monomial": {...}, "lhs": a, "rhs": b}; nullopt if the polynomials agree.
std::optional<nlohmann::json> first_difference(const TruncatedPoly& lhs,
                                               const TruncatedPoly& rhs);

/// Runs `check` and records its wall-clock time on the returned report.
template <typename CheckFn>
VerificationReport timed(CheckFn&& check) {
  const auto start = std::chrono::steady_clock::now();
  VerificationReport report = check();
  const std::chrono::duration<double, std::milli> elapsed =
      std::chrono::steady_clock::now() - start;
  report.set_elapsed_ms(elapsed.count());
  return report;
}

}  // namespace wreath_id

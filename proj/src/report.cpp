#include "wreath_id/report.hpp"

#include <cmath>

namespace wreath_id {

VerificationReport::VerificationReport(std::string claim, nlohmann::json params,
                                       std::optional<nlohmann::json> counterexample)
    : claim_(std::move(claim)),
      params_(std::move(params)),
      counterexample_(std::move(counterexample)) {}

VerificationReport VerificationReport::pass(std::string claim,
                                            nlohmann::json params) {
  return VerificationReport(std::move(claim), std::move(params), std::nullopt);
}

VerificationReport VerificationReport::fail(std::string claim,
                                            nlohmann::json params,
                                            nlohmann::json counterexample) {
  if (counterexample.is_null()) counterexample = nlohmann::json::object();
  return VerificationReport(std::move(claim), std::move(params),
                            std::move(counterexample));
}

nlohmann::json VerificationReport::to_json() const {
  return {{"claim", claim_},
          {"params", params_},
          {"status", passed() ? "pass" : "fail"},
          {"counterexample",
           counterexample_ ? *counterexample_ : nlohmann::json(nullptr)},
          {"elapsed_ms", std::round(elapsed_ms_ * 1000.0) / 1000.0}};
}

std::optional<nlohmann::json> first_difference(const TruncatedPoly& lhs,
                                               const TruncatedPoly& rhs) {
  auto a = lhs.terms().begin();
  auto b = rhs.terms().begin();
  const auto a_end = lhs.terms().end();
  const auto b_end = rhs.terms().end();
  auto mismatch = [](const Monomial& m, std::int64_t x, std::int64_t y) {
    return nlohmann::json{{"monomial", to_json(m)}, {"lhs", x}, {"rhs", y}};
  };
  while (a != a_end || b != b_end) {
    if (b == b_end || (a != a_end && a->first < b->first)) {
      return mismatch(a->first, a->second, 0);
    }
    if (a == a_end || b->first < a->first) {
      return mismatch(b->first, 0, b->second);
    }
    if (a->second != b->second) return mismatch(a->first, a->second, b->second);
    ++a;
    ++b;
  }
  if (lhs.t_cap() != rhs.t_cap()) {
    return nlohmann::json{{"t_cap_lhs", lhs.t_cap()}, {"t_cap_rhs", rhs.t_cap()}};
  }
  return std::nullopt;
}

}  // namespace wreath_id

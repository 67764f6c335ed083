#include "wreath_id/errors.hpp"

#include <limits>

namespace wreath_id {

BudgetExceeded::BudgetExceeded(std::string what_enumerated,
                               std::uint64_t required, std::uint64_t limit)
    : std::runtime_error("enumeration budget exceeded for " + what_enumerated +
                         ": needs " + std::to_string(required) +
                         " objects, limit is " + std::to_string(limit)),
      required_(required),
      limit_(limit) {}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_add_overflow(a, b, &out)) {
    throw CoefficientOverflow("coefficient overflow in addition: " +
                              std::to_string(a) + " + " + std::to_string(b));
  }
  return out;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_mul_overflow(a, b, &out)) {
    throw CoefficientOverflow("coefficient overflow in multiplication: " +
                              std::to_string(a) + " * " + std::to_string(b));
  }
  return out;
}

std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) noexcept {
  std::uint64_t out = 0;
  if (__builtin_mul_overflow(a, b, &out)) {
    return std::numeric_limits<std::uint64_t>::max();
  }
  return out;
}

std::uint64_t saturating_pow(std::uint64_t base, unsigned exponent) noexcept {
  std::uint64_t out = 1;
  for (unsigned i = 0; i < exponent; ++i) out = saturating_mul(out, base);
  return out;
}

std::uint64_t saturating_factorial(unsigned n) noexcept {
  std::uint64_t out = 1;
  for (unsigned i = 2; i <= n; ++i) out = saturating_mul(out, i);
  return out;
}

void EnumerationBudget::require(std::uint64_t count,
                                const std::string& what) const {
  if (count > max_objects) throw BudgetExceeded(what, count, max_objects);
}

}  // namespace wreath_id

#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace wreath_id {

/// A coefficient or count left the range of std::int64_t.
class CoefficientOverflow : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

/// An enumeration would visit more objects than the configured budget allows.
class BudgetExceeded : public std::runtime_error {
 public:
  BudgetExceeded(std::string what_enumerated, std::uint64_t required,
                 std::uint64_t limit);

  std::uint64_t required() const noexcept { return required_; }
  std::uint64_t limit() const noexcept { return limit_; }

 private:
  std::uint64_t required_;
  std::uint64_t limit_;
};

/// A structural claim that must hold for every valid input did not hold,
/// e.g. a search that must find exactly one permutation found zero or two.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

std::int64_t checked_add(std::int64_t a, std::int64_t b);
std::int64_t checked_mul(std::int64_t a, std::int64_t b);

/// Saturating product used for object counts; never wraps.
std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) noexcept;
std::uint64_t saturating_pow(std::uint64_t base, unsigned exponent) noexcept;
std::uint64_t saturating_factorial(unsigned n) noexcept;

struct EnumerationBudget {
  static constexpr std::uint64_t kDefaultLimit = 10'000'000;

  std::uint64_t max_objects = kDefaultLimit;

  /// Throws BudgetExceeded when `count` objects would exceed the limit.
  void require(std::uint64_t count, const std::string& what) const;
};

}  // namespace wreath_id

#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <string>

#include "json.hpp"

namespace wreath_id {

/// q^q t^t u^u. Ordered by (t, q, u), which is also the interchange order.
struct Monomial {
  int q = 0;
  int t = 0;
  int u = 0;

  friend bool operator==(const Monomial&, const Monomial&) = default;
  friend std::strong_ordering operator<=>(const Monomial& a,
                                          const Monomial& b) {
    if (auto c = a.t <=> b.t; c != 0) return c;
    if (auto c = a.q <=> b.q; c != 0) return c;
    return a.u <=> b.u;
  }

  Monomial operator*(const Monomial& other) const {
    return {q + other.q, t + other.t, u + other.u};
  }
};

/// Renders the t-free part the way the lattice figures label points:
/// "1", "q", "q^3u", "qu^2".
std::string qu_label(const Monomial& m);

/// Polynomial in q, t, u with exact int64 coefficients. Every term with
/// t-degree above t_cap is discarded; q and u degrees are never truncated.
/// Zero coefficients are never stored, so equality is structural.
class TruncatedPoly {
 public:
  using Coefficient = std::int64_t;
  using TermMap = std::map<Monomial, Coefficient>;

  explicit TruncatedPoly(int t_cap);

  static TruncatedPoly constant(Coefficient c, int t_cap);
  static TruncatedPoly term(Monomial m, Coefficient c, int t_cap);

  int t_cap() const noexcept { return t_cap_; }
  const TermMap& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  Coefficient coefficient(const Monomial& m) const;

  /// Adds c·m in place; terms above the cap are dropped.
  void add_term(const Monomial& m, Coefficient c);

  /// Same polynomial with a smaller (or equal) cap.
  TruncatedPoly truncated(int new_cap) const;

  /// The t^k coefficient as a t-free polynomial (same cap).
  TruncatedPoly t_coefficient(int k) const;

  /// Sum of all coefficients, i.e. the value at q = t = u = 1.
  Coefficient evaluate_at_one() const;

  std::string to_string() const;

  TruncatedPoly operator-() const;
  TruncatedPoly& operator+=(const TruncatedPoly& other);
  TruncatedPoly& operator-=(const TruncatedPoly& other);

  friend TruncatedPoly operator+(TruncatedPoly a, const TruncatedPoly& b) {
    return a += b;
  }
  friend TruncatedPoly operator-(TruncatedPoly a, const TruncatedPoly& b) {
    return a -= b;
  }
  friend TruncatedPoly operator*(const TruncatedPoly& a,
                                 const TruncatedPoly& b);
  friend bool operator==(const TruncatedPoly&, const TruncatedPoly&) = default;

 private:
  void require_same_cap(const TruncatedPoly& other) const;

  int t_cap_;
  TermMap terms_;
};

TruncatedPoly add(const TruncatedPoly& a, const TruncatedPoly& b);
TruncatedPoly mul(const TruncatedPoly& a, const TruncatedPoly& b);
TruncatedPoly pow(const TruncatedPoly& base, unsigned exponent);

/// [n]_q = 1 + q + ... + q^{n-1}; [0]_q = 0.
TruncatedPoly q_integer(int n, int cap);
/// [n]_u, same with u.
TruncatedPoly u_integer(int n, int cap);

/// Power-series expansion of prod_{j=0}^{n} 1/(1 - q^j t) up to t^cap.
TruncatedPoly expand_denominator(int n, int cap);

/// ([k+1]_q + u [r-1]_u [k]_q)^n t^k. Requires k <= cap.
TruncatedPoly lhs_term(int r, int n, int k, int cap);

/// Sum of lhs_term over k = 0..cap.
TruncatedPoly lhs_series(int r, int n, int cap);

/// Array of {"q","t","u","coeff"} records sorted by (t, q, u).
nlohmann::json to_json(const TruncatedPoly& p);
TruncatedPoly poly_from_json(const nlohmann::json& records, int t_cap);

nlohmann::json to_json(const Monomial& m);

}  // namespace wreath_id

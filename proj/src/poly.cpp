#include "wreath_id/poly.hpp"

#include <sstream>
#include <stdexcept>

#include "wreath_id/errors.hpp"

namespace wreath_id {
namespace {

void require_nonnegative(int value, const char* what) {
  if (value < 0) {
    throw std::invalid_argument(std::string(what) + " must be nonnegative, got " +
                                std::to_string(value));
  }
}

}  // namespace

std::string qu_label(const Monomial& m) {
  std::string out;
  auto append = [&out](char var, int e) {
    if (e == 0) return;
    out += var;
    if (e > 1) out += "^" + std::to_string(e);
  };
  append('q', m.q);
  append('u', m.u);
  return out.empty() ? "1" : out;
}

TruncatedPoly::TruncatedPoly(int t_cap) : t_cap_(t_cap) {
  require_nonnegative(t_cap, "t_cap");
}

TruncatedPoly TruncatedPoly::constant(Coefficient c, int t_cap) {
  return term(Monomial{}, c, t_cap);
}

TruncatedPoly TruncatedPoly::term(Monomial m, Coefficient c, int t_cap) {
  TruncatedPoly p(t_cap);
  p.add_term(m, c);
  return p;
}

TruncatedPoly::Coefficient TruncatedPoly::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? 0 : it->second;
}

void TruncatedPoly::add_term(const Monomial& m, Coefficient c) {
  if (m.q < 0 || m.t < 0 || m.u < 0) {
    throw std::invalid_argument("monomial exponents must be nonnegative");
  }
  if (c == 0 || m.t > t_cap_) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (inserted) return;
  it->second = checked_add(it->second, c);
  if (it->second == 0) terms_.erase(it);
}

TruncatedPoly TruncatedPoly::truncated(int new_cap) const {
  if (new_cap > t_cap_) {
    throw std::invalid_argument("cannot raise the truncation cap from " +
                                std::to_string(t_cap_) + " to " +
                                std::to_string(new_cap));
  }
  TruncatedPoly out(new_cap);
  for (const auto& [m, c] : terms_) {
    if (m.t > new_cap) break;
    out.terms_.emplace_hint(out.terms_.end(), m, c);
  }
  return out;
}

TruncatedPoly TruncatedPoly::t_coefficient(int k) const {
  TruncatedPoly out(t_cap_);
  for (const auto& [m, c] : terms_) {
    if (m.t == k) out.terms_.emplace(Monomial{m.q, 0, m.u}, c);
  }
  return out;
}

TruncatedPoly::Coefficient TruncatedPoly::evaluate_at_one() const {
  Coefficient sum = 0;
  for (const auto& [m, c] : terms_) sum = checked_add(sum, c);
  return sum;
}

std::string TruncatedPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    Coefficient magnitude = c;
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    if (c < 0) magnitude = -c;
    first = false;

    std::string vars;
    auto append = [&vars](char var, int e) {
      if (e == 0) return;
      if (!vars.empty()) vars += "*";
      vars += var;
      if (e > 1) vars += "^" + std::to_string(e);
    };
    append('q', m.q);
    append('t', m.t);
    append('u', m.u);

    if (vars.empty()) {
      os << magnitude;
    } else if (magnitude == 1) {
      os << vars;
    } else {
      os << magnitude << "*" << vars;
    }
  }
  return os.str();
}

void TruncatedPoly::require_same_cap(const TruncatedPoly& other) const {
  if (t_cap_ != other.t_cap_) {
    throw std::invalid_argument("t_cap mismatch: " + std::to_string(t_cap_) +
                                " vs " + std::to_string(other.t_cap_));
  }
}

TruncatedPoly TruncatedPoly::operator-() const {
  TruncatedPoly out(t_cap_);
  for (const auto& [m, c] : terms_) {
    out.terms_.emplace_hint(out.terms_.end(), m, checked_mul(c, -1));
  }
  return out;
}

TruncatedPoly& TruncatedPoly::operator+=(const TruncatedPoly& other) {
  require_same_cap(other);
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

TruncatedPoly& TruncatedPoly::operator-=(const TruncatedPoly& other) {
  require_same_cap(other);
  for (const auto& [m, c] : other.terms_) add_term(m, checked_mul(c, -1));
  return *this;
}

TruncatedPoly operator*(const TruncatedPoly& a, const TruncatedPoly& b) {
  a.require_same_cap(b);
  TruncatedPoly out(a.t_cap_);
  for (const auto& [ma, ca] : a.terms_) {
    // b's terms are sorted by t first, so stop once the cap is passed.
    for (const auto& [mb, cb] : b.terms_) {
      if (ma.t + mb.t > out.t_cap_) break;
      out.add_term(ma * mb, checked_mul(ca, cb));
    }
  }
  return out;
}

TruncatedPoly add(const TruncatedPoly& a, const TruncatedPoly& b) {
  return a + b;
}

TruncatedPoly mul(const TruncatedPoly& a, const TruncatedPoly& b) {
  return a * b;
}

TruncatedPoly pow(const TruncatedPoly& base, unsigned exponent) {
  TruncatedPoly result = TruncatedPoly::constant(1, base.t_cap());
  TruncatedPoly square = base;
  while (exponent > 0) {
    if (exponent & 1U) result = result * square;
    exponent >>= 1U;
    if (exponent > 0) square = square * square;
  }
  return result;
}

TruncatedPoly q_integer(int n, int cap) {
  require_nonnegative(n, "n");
  TruncatedPoly p(cap);
  for (int i = 0; i < n; ++i) p.add_term(Monomial{i, 0, 0}, 1);
  return p;
}

TruncatedPoly u_integer(int n, int cap) {
  require_nonnegative(n, "n");
  TruncatedPoly p(cap);
  for (int i = 0; i < n; ++i) p.add_term(Monomial{0, 0, i}, 1);
  return p;
}

TruncatedPoly expand_denominator(int n, int cap) {
  require_nonnegative(n, "n");
  TruncatedPoly result = TruncatedPoly::constant(1, cap);
  for (int j = 0; j <= n; ++j) {
    TruncatedPoly geometric(cap);
    for (int m = 0; m <= cap; ++m) geometric.add_term(Monomial{j * m, m, 0}, 1);
    result = result * geometric;
  }
  return result;
}

TruncatedPoly lhs_term(int r, int n, int k, int cap) {
  if (r < 1 || n < 1) {
    throw std::invalid_argument("r and n must be positive");
  }
  require_nonnegative(k, "k");
  if (k > cap) {
    throw std::invalid_argument("k = " + std::to_string(k) +
                                " exceeds t_cap = " + std::to_string(cap));
  }
  const TruncatedPoly u = TruncatedPoly::term(Monomial{0, 0, 1}, 1, cap);
  const TruncatedPoly base =
      q_integer(k + 1, cap) + u * u_integer(r - 1, cap) * q_integer(k, cap);
  return pow(base, static_cast<unsigned>(n)) *
         TruncatedPoly::term(Monomial{0, k, 0}, 1, cap);
}

TruncatedPoly lhs_series(int r, int n, int cap) {
  TruncatedPoly sum(cap);
  for (int k = 0; k <= cap; ++k) sum += lhs_term(r, n, k, cap);
  return sum;
}

nlohmann::json to_json(const Monomial& m) {
  return {{"q", m.q}, {"t", m.t}, {"u", m.u}};
}

nlohmann::json to_json(const TruncatedPoly& p) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& [m, c] : p.terms()) {
    out.push_back({{"q", m.q}, {"t", m.t}, {"u", m.u}, {"coeff", c}});
  }
  return out;
}

TruncatedPoly poly_from_json(const nlohmann::json& records, int t_cap) {
  if (!records.is_array()) {
    throw std::invalid_argument("polynomial JSON must be an array");
  }
  TruncatedPoly p(t_cap);
  for (const auto& rec : records) {
    Monomial m{rec.at("q").get<int>(), rec.at("t").get<int>(),
               rec.at("u").get<int>()};
    p.add_term(m, rec.at("coeff").get<std::int64_t>());
  }
  return p;
}

}  // namespace wreath_id

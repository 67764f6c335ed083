#include "wreath_id/wreath.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "wreath_id/parallel.hpp"

namespace wreath_id {
namespace {

// Rank key realizing the BZ order: colored letters live in tier 0 ordered by
// decreasing value, the sentinel and uncolored letters in tier 1 by value.
std::pair<int, int> bz_key(ColoredLetter a) {
  if (a.color > 0) return {0, -a.value};
  return {1, a.value};
}

void require_positive(int value, const char* what) {
  if (value < 1) {
    throw std::invalid_argument(std::string(what) + " must be positive, got " +
                                std::to_string(value));
  }
}

int parse_int(std::string_view token, std::string_view context) {
  int value = 0;
  auto [end, ec] =
      std::from_chars(token.data(), token.data() + token.size(), value);
  if (token.empty() || ec != std::errc{} || end != token.data() + token.size()) {
    throw std::invalid_argument("malformed window letter '" +
                                std::string(context) + "'");
  }
  return value;
}

}  // namespace

std::weak_ordering bz_compare(ColoredLetter a, ColoredLetter b) {
  const auto ka = bz_key(a);
  const auto kb = bz_key(b);
  if (ka < kb) return std::weak_ordering::less;
  if (kb < ka) return std::weak_ordering::greater;
  return std::weak_ordering::equivalent;
}

EpsilonVector::EpsilonVector(std::vector<int> colors)
    : colors_(std::move(colors)) {
  for (int c : colors_) {
    if (c < 0) throw std::invalid_argument("colors must be nonnegative");
  }
}

std::vector<int> EpsilonVector::support() const {
  std::vector<int> out;
  for (std::size_t i = 0; i < colors_.size(); ++i) {
    if (colors_[i] > 0) out.push_back(static_cast<int>(i) + 1);
  }
  return out;
}

int EpsilonVector::col() const {
  return std::accumulate(colors_.begin(), colors_.end(), 0);
}

int EpsilonVector::max_color() const {
  return colors_.empty() ? 0 : *std::max_element(colors_.begin(), colors_.end());
}

void EpsilonVector::require_colors_below(int r) const {
  if (max_color() >= r) {
    throw std::invalid_argument("color " + std::to_string(max_color()) +
                                " is outside [0, " + std::to_string(r - 1) + "]");
  }
}

ColoredPermutation::ColoredPermutation(Permutation pi,
                                       std::vector<int> window_colors)
    : pi_(std::move(pi)), colors_(std::move(window_colors)) {
  if (pi_.empty()) throw std::invalid_argument("empty permutation");
  if (!is_permutation(pi_)) {
    throw std::invalid_argument("window values are not a permutation of 1..n");
  }
  if (colors_.size() != pi_.size()) {
    throw std::invalid_argument("window color count does not match n");
  }
  for (int c : colors_) {
    if (c < 0) throw std::invalid_argument("colors must be nonnegative");
  }
}

ColoredPermutation::ColoredPermutation(Permutation pi)
    : ColoredPermutation(pi, std::vector<int>(pi.size(), 0)) {}

ColoredLetter ColoredPermutation::letter_at(int position) const {
  if (position == 0) return ColoredLetter::sentinel();
  return {pi_.at(position - 1), colors_.at(position - 1)};
}

EpsilonVector ColoredPermutation::letter_colors() const {
  std::vector<int> by_letter(pi_.size());
  for (std::size_t i = 0; i < pi_.size(); ++i) by_letter[pi_[i] - 1] = colors_[i];
  return EpsilonVector(std::move(by_letter));
}

DescentSet descent_set(const ColoredPermutation& w) {
  DescentSet out;
  for (int i = 0; i < w.size(); ++i) {
    if (bz_compare(w.letter_at(i), w.letter_at(i + 1)) > 0) out.push_back(i);
  }
  return out;
}

DescentSet descent_set(const Permutation& pi) {
  DescentSet out;
  for (std::size_t i = 1; i < pi.size(); ++i) {
    if (pi[i - 1] > pi[i]) out.push_back(static_cast<int>(i));
  }
  return out;
}

int maj(const ColoredPermutation& w) { return statistics(w).maj; }
int des(const ColoredPermutation& w) { return statistics(w).des; }

int col(const ColoredPermutation& w) {
  const auto& c = w.window_colors();
  return std::accumulate(c.begin(), c.end(), 0);
}

Statistics statistics(const ColoredPermutation& w) {
  Statistics s;
  for (int i : descent_set(w)) {
    s.maj += i;
    ++s.des;
  }
  s.col = col(w);
  return s;
}

bool is_permutation(std::span<const int> pi) {
  std::vector<bool> seen(pi.size() + 1, false);
  for (int v : pi) {
    if (v < 1 || v > static_cast<int>(pi.size()) || seen[v]) return false;
    seen[v] = true;
  }
  return true;
}

Permutation identity_permutation(int n) {
  Permutation pi(n);
  std::iota(pi.begin(), pi.end(), 1);
  return pi;
}

Permutation compose(const Permutation& a, const Permutation& b) {
  if (a.size() != b.size()) throw std::invalid_argument("size mismatch");
  Permutation out(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) out[i] = a.at(b[i] - 1);
  return out;
}

std::vector<Permutation> all_permutations(int n) {
  std::vector<Permutation> out;
  Permutation pi = identity_permutation(n);
  do {
    out.push_back(pi);
  } while (std::next_permutation(pi.begin(), pi.end()));
  return out;
}

std::uint64_t group_order(int r, int n) {
  return saturating_mul(saturating_pow(r, n), saturating_factorial(n));
}

namespace {

// Odometer over [0, r-1]^n with the last position varying fastest.
bool next_color_vector(std::vector<int>& colors, int r) {
  for (auto it = colors.rbegin(); it != colors.rend(); ++it) {
    if (++*it < r) return true;
    *it = 0;
  }
  return false;
}

void check_group_params(int r, int n, const EnumerationBudget& budget) {
  require_positive(r, "r");
  require_positive(n, "n");
  budget.require(group_order(r, n),
                 "Z_" + std::to_string(r) + " wr S_" + std::to_string(n));
}

}  // namespace

void for_each_group_element(
    int r, int n, const EnumerationBudget& budget,
    const std::function<void(const ColoredPermutation&)>& visit) {
  check_group_params(r, n, budget);
  for (const Permutation& pi : all_permutations(n)) {
    std::vector<int> colors(n, 0);
    do {
      visit(ColoredPermutation(pi, colors));
    } while (next_color_vector(colors, r));
  }
}

std::vector<ColoredPermutation> enumerate_group(int r, int n,
                                                const EnumerationBudget& budget) {
  std::vector<ColoredPermutation> out;
  for_each_group_element(r, n, budget,
                         [&out](const ColoredPermutation& w) { out.push_back(w); });
  return out;
}

std::vector<EpsilonVector> all_epsilon_vectors(int r, int n,
                                               const EnumerationBudget& budget) {
  require_positive(r, "r");
  require_positive(n, "n");
  budget.require(saturating_pow(r, n), "Z_" + std::to_string(r) + "^" +
                                           std::to_string(n));
  std::vector<EpsilonVector> out;
  std::vector<int> colors(n, 0);
  do {
    out.emplace_back(colors);
  } while (next_color_vector(colors, r));
  return out;
}

std::vector<ColoredPermutation> g_epsilon(const EpsilonVector& eps) {
  std::vector<ColoredPermutation> out;
  const int n = static_cast<int>(eps.size());
  for (const Permutation& pi : all_permutations(n)) {
    std::vector<int> window(n);
    for (int i = 0; i < n; ++i) window[i] = eps.color_of_letter(pi[i]);
    out.emplace_back(pi, std::move(window));
  }
  return out;
}

namespace {

void accumulate_element(TruncatedPoly& acc, const ColoredPermutation& w) {
  const Statistics s = statistics(w);
  acc.add_term(Monomial{s.maj, s.des, s.col}, 1);
}

}  // namespace

TruncatedPoly numerator(int r, int n, int t_cap,
                        const EnumerationBudget& budget) {
  check_group_params(r, n, budget);
  const std::vector<Permutation> perms = all_permutations(n);
  auto chunk = [&](std::size_t index) {
    TruncatedPoly acc(t_cap);
    std::vector<int> colors(n, 0);
    do {
      accumulate_element(acc, ColoredPermutation(perms[index], colors));
    } while (next_color_vector(colors, r));
    return acc;
  };
  return parallel_reduce(perms.size(), TruncatedPoly(t_cap), chunk,
                         [](TruncatedPoly a, const TruncatedPoly& b) {
                           return a += b;
                         });
}

TruncatedPoly g_epsilon_numerator(const EpsilonVector& eps, int t_cap) {
  TruncatedPoly acc(t_cap);
  const int weight = eps.col();
  for (const ColoredPermutation& w : g_epsilon(eps)) {
    const Statistics s = statistics(w);
    acc.add_term(Monomial{s.maj, s.des, weight}, 1);
  }
  return acc;
}

std::string format_letter(ColoredLetter letter) {
  return std::to_string(letter.value) + "^" + std::to_string(letter.color);
}

std::string format_window(const ColoredPermutation& w) {
  std::string out = "[";
  for (int i = 1; i <= w.size(); ++i) {
    if (i > 1) out += ' ';
    out += format_letter(w.letter_at(i));
  }
  return out + "]";
}

ColoredPermutation parse_window(std::string_view text) {
  auto is_space = [](char c) { return c == ' ' || c == '\t' || c == '\n'; };
  while (!text.empty() && is_space(text.front())) text.remove_prefix(1);
  while (!text.empty() && is_space(text.back())) text.remove_suffix(1);
  if (text.size() < 2 || text.front() != '[' || text.back() != ']') {
    throw std::invalid_argument("window must be enclosed in brackets: '" +
                                std::string(text) + "'");
  }
  text = text.substr(1, text.size() - 2);

  Permutation pi;
  std::vector<int> colors;
  while (true) {
    while (!text.empty() && is_space(text.front())) text.remove_prefix(1);
    if (text.empty()) break;
    std::size_t end = 0;
    while (end < text.size() && !is_space(text[end])) ++end;
    const std::string_view token = text.substr(0, end);
    text.remove_prefix(end);

    const auto caret = token.find('^');
    if (caret == std::string_view::npos) {
      throw std::invalid_argument("window letter lacks '^': '" +
                                  std::string(token) + "'");
    }
    pi.push_back(parse_int(token.substr(0, caret), token));
    colors.push_back(parse_int(token.substr(caret + 1), token));
  }
  return ColoredPermutation(std::move(pi), std::move(colors));
}

}  // namespace wreath_id

#pragma once

#include <compare>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "wreath_id/errors.hpp"
#include "wreath_id/poly.hpp"

namespace wreath_id {

/// One-line permutation of {1..n}: entry i-1 is the image of i.
using Permutation = std::vector<int>;

/// Sorted list of descent positions.
using DescentSet = std::vector<int>;

/// The symbol value^color. Value 0 is reserved for the sentinel 0^0.
struct ColoredLetter {
  int value = 0;
  int color = 0;

  static constexpr ColoredLetter sentinel() { return {0, 0}; }

  friend bool operator==(const ColoredLetter&, const ColoredLetter&) = default;
};

/// Weak order on letters: colored letters first, by decreasing
/// value, then 0^0, then uncolored letters by increasing value. Two letters
/// with the same value and positive (possibly different) colors are
/// equivalent.
std::weak_ordering bz_compare(ColoredLetter a, ColoredLetter b);

/// Color vector indexed by letter: colors()[i-1] is the color of letter i.
class EpsilonVector {
 public:
  EpsilonVector() = default;
  explicit EpsilonVector(std::vector<int> colors);

  std::size_t size() const noexcept { return colors_.size(); }
  const std::vector<int>& colors() const noexcept { return colors_; }
  int color_of_letter(int letter) const { return colors_.at(letter - 1); }

  /// Letters (1-based) with positive color.
  std::vector<int> support() const;
  int col() const;
  int max_color() const;

  /// Throws std::invalid_argument unless every color lies in [0, r-1].
  void require_colors_below(int r) const;

  friend bool operator==(const EpsilonVector&, const EpsilonVector&) = default;
  friend auto operator<=>(const EpsilonVector&, const EpsilonVector&) = default;

 private:
  std::vector<int> colors_;
};

/// (epsilon, pi) = [pi(1)^{eps_1} ... pi(n)^{eps_n}]. Colors are indexed by
/// window position, not by letter.
class ColoredPermutation {
 public:
  ColoredPermutation(Permutation pi, std::vector<int> window_colors);

  /// Uncolored permutation.
  explicit ColoredPermutation(Permutation pi);

  int size() const noexcept { return static_cast<int>(pi_.size()); }
  const Permutation& pi() const noexcept { return pi_; }
  const std::vector<int>& window_colors() const noexcept { return colors_; }

  /// Letter at window position i in [0, n]; position 0 is the sentinel 0^0.
  ColoredLetter letter_at(int position) const;

  /// The letter-indexed color vector, eps_{pi(i)} = window color at i.
  EpsilonVector letter_colors() const;

  friend bool operator==(const ColoredPermutation&,
                         const ColoredPermutation&) = default;
  friend auto operator<=>(const ColoredPermutation&,
                          const ColoredPermutation&) = default;

 private:
  Permutation pi_;
  std::vector<int> colors_;
};

struct Statistics {
  int maj = 0;
  int des = 0;
  int col = 0;

  friend bool operator==(const Statistics&, const Statistics&) = default;
};

DescentSet descent_set(const ColoredPermutation& w);
/// Ordinary descent set Des(0, pi), positions in [1, n-1].
DescentSet descent_set(const Permutation& pi);

int maj(const ColoredPermutation& w);
int des(const ColoredPermutation& w);
int col(const ColoredPermutation& w);
Statistics statistics(const ColoredPermutation& w);

bool is_permutation(std::span<const int> pi);
Permutation identity_permutation(int n);
/// (a ∘ b)(i) = a(b(i)).
Permutation compose(const Permutation& a, const Permutation& b);
/// All of S_n in lexicographic order.
std::vector<Permutation> all_permutations(int n);

/// r^n * n!, saturating.
std::uint64_t group_order(int r, int n);

/// Visits every element of Z_r wr S_n once, ordered lexicographically by pi
/// and then by window color vector.
void for_each_group_element(
    int r, int n, const EnumerationBudget& budget,
    const std::function<void(const ColoredPermutation&)>& visit);
std::vector<ColoredPermutation> enumerate_group(
    int r, int n, const EnumerationBudget& budget = {});

/// Every color vector in Z_r^n, lexicographic.
std::vector<EpsilonVector> all_epsilon_vectors(
    int r, int n, const EnumerationBudget& budget = {});

/// G_eps: for each pi (lexicographic), the window whose position i carries
/// eps_{pi(i)}.
std::vector<ColoredPermutation> g_epsilon(const EpsilonVector& eps);

/// Sum over the whole group of q^maj t^des u^col.
TruncatedPoly numerator(int r, int n, int t_cap,
                        const EnumerationBudget& budget = {});

/// Sum over G_eps of q^maj t^des u^col(eps).
TruncatedPoly g_epsilon_numerator(const EpsilonVector& eps, int t_cap);

/// "[2^0 3^1 1^1]"
std::string format_window(const ColoredPermutation& w);
ColoredPermutation parse_window(std::string_view text);
std::string format_letter(ColoredLetter letter);

}  // namespace wreath_id

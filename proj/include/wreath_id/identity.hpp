#pragma once

#include <map>
#include <vector>

#include "wreath_id/errors.hpp"
#include "wreath_id/geometry.hpp"
#include "wreath_id/poly.hpp"
#include "wreath_id/report.hpp"
#include "wreath_id/wreath.hpp"

namespace wreath_id {

/// n parts, zeros allowed. In a (k, l) context the first l parts are at most
/// k - 1 and the rest at most k.
struct Composition {
  std::vector<int> parts;
  friend auto operator<=>(const Composition&, const Composition&) = default;
};

/// n weakly decreasing nonnegative parts.
struct Partition {
  std::vector<int> parts;
  friend auto operator<=>(const Partition&, const Partition&) = default;
};

/// (1, ..., 1, 0, ..., 0) with l ones.
EpsilonVector few_colors_vector(int l, int n);

/// l (l-1) ... 2 1 (l+1) ... n, the involution reversing [1, l].
Permutation rho(int l, int n);

bool composition_in_bounds(const Composition& alpha, int k, int l);

/// The unique (gamma, pi) in G_{(1^l, 0^{n-l})} with
/// k - eps_{rho pi(1)} >= alpha_{rho pi(1)} >= ... >= alpha_{rho pi(n)} >= 0,
/// strict at Des(rho pi). Exhaustive over S_n; throws InternalError unless
/// exactly one pi qualifies.
ColoredPermutation find_pi_for_composition(const Composition& alpha, int k,
                                           int l, int n);

struct CompositionImage {
  Partition lambda;
  ColoredPermutation element;
};

/// lambda_i = alpha_{rho pi(i)} - |Des(rho pi) \ {1, ..., i-1}|.
CompositionImage composition_to_partition(const Composition& alpha, int k,
                                          int l, int n);

/// Inverse of composition_to_partition for a fixed element of G_eps.
Composition partition_to_composition(const Partition& lambda,
                                     const ColoredPermutation& element, int l);

/// The order-preserving bijection omega between {i^{eps_i}} and
/// {i^{eps'_i}} under the BZ order.
class LetterRelabeling {
 public:
  /// Throws std::invalid_argument unless eps_prime rearranges eps.
  LetterRelabeling(const EpsilonVector& eps, const EpsilonVector& eps_prime);

  ColoredLetter operator()(ColoredLetter letter) const;

 private:
  std::map<int, ColoredLetter> image_by_value_;
  EpsilonVector source_;
};

/// Omega: applies omega letterwise to a window of G_eps.
ColoredPermutation omega_map(const EpsilonVector& eps,
                             const EpsilonVector& eps_prime,
                             const ColoredPermutation& w);

// Verifiers. Each returns a pass/fail report with the first counterexample.

/// Des(gamma, pi) \ {0} = Des(rho pi), and 0 is a descent iff pi(1) <= l.
VerificationReport descent_shift_check(int l, int n);

/// Same-support color vectors give equal descent sets for every pi.
VerificationReport verify_same_support_descents(
    int r, int n, const EnumerationBudget& budget = {});

/// Same-support cone sums differ by u^{col(eps) - col(eps')}, checked both
/// pointwise along the shift v = v' + k(eps - eps') and on the summed series.
VerificationReport verify_same_support_cone_sums(
    int r, int n, int t_cap, const EnumerationBudget& budget = {});

/// Both of the above.
VerificationReport verify_lemma_same_support(
    int r, int n, int t_cap, const EnumerationBudget& budget = {});

/// cone_sum((1^l, 0^{n-l})) against u^l sum_k [k]^l [k+1]^{n-l} t^k and
/// against the G_eps generating function times the denominator expansion.
VerificationReport verify_prop_few_colors(int l, int n, int t_cap,
                                          const EnumerationBudget& budget = {});

/// For heights 0..k_max: each valid composition has exactly one pi, its
/// partition has the stated sum, shape and bound, and the map is a bijection
/// onto bounded partitions (counted from both sides).
VerificationReport verify_composition_bijection(int l, int n, int k_max);

/// Omega is a bijection G_eps -> G_eps' preserving Des (hence maj, des) and
/// col.
VerificationReport verify_lemma_triple_preserving(const EpsilonVector& eps,
                                                  const EpsilonVector& eps_prime);

enum class RearrangementPairs {
  kAll,      // every ordered pair within each rearrangement class
  kSampled,  // each eps against its decreasing sort and its reversal
};

/// verify_lemma_triple_preserving over many pairs of Z_r^n, aggregated.
VerificationReport verify_omega_pairs(int r, int n, RearrangementPairs pairs,
                                      const EnumerationBudget& budget = {});

/// cone_sum(eps) = (sum over G_eps of q^maj t^des u^col(eps)) / prod(1 - q^j t).
VerificationReport verify_corollary(const EpsilonVector& eps, int r, int t_cap,
                                    const EnumerationBudget& budget = {});

/// Summing the G_eps generating functions over all eps gives numerator(r, n).
VerificationReport verify_regrouping(int r, int n, int t_cap,
                                     const EnumerationBudget& budget = {});

/// The identity itself up to t^t_cap: the closed-form left side, the
/// lattice-point sum over the full slices, and numerator * denominator
/// expansion must all agree exactly.
VerificationReport verify_theorem(int r, int n, int t_cap,
                                  const EnumerationBudget& budget = {});

}  // namespace wreath_id

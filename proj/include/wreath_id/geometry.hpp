#pragma once

#include <functional>
#include <vector>

#include "json.hpp"
#include "wreath_id/errors.hpp"
#include "wreath_id/poly.hpp"
#include "wreath_id/wreath.hpp"

namespace wreath_id {

/// A lattice point (v, k) on the height-k slice of cone([0, r]^n), i.e.
/// 0 <= v_i <= k r.
class LatticePoint {
 public:
  LatticePoint(std::vector<int> v, int k, int r);

  const std::vector<int>& v() const noexcept { return v_; }
  int k() const noexcept { return k_; }
  int r() const noexcept { return r_; }
  int dimension() const noexcept { return static_cast<int>(v_.size()); }

  friend bool operator==(const LatticePoint&, const LatticePoint&) = default;

 private:
  std::vector<int> v_;
  int k_;
  int r_;
};

/// Height-k slice of cone(F_eps) inside cone([0, r]^n).
struct CubeSliceSpec {
  EpsilonVector eps;
  int k = 0;
  int r = 1;
};

/// Coordinate monomial: q^j for j <= k, otherwise
/// q^{(j-1) mod k} u^{floor((j-1)/k)}. Requires 0 <= j <= k r.
Monomial m_prime(int j, int k, int r);

/// Product of m_prime over the coordinates, times t^k.
Monomial lattice_monomial(const LatticePoint& p);

/// k eps_i <= v_i <= k (eps_i + 1), strict on the left for colored i.
/// At k = 0 only the apex belongs, and only to eps = 0.
bool slice_membership(const LatticePoint& p, const CubeSliceSpec& spec);

/// Visits the slice's points in lexicographic order of v.
void for_each_slice_point(const CubeSliceSpec& spec,
                          const EnumerationBudget& budget,
                          const std::function<void(const LatticePoint&)>& visit);
std::vector<LatticePoint> enumerate_slice(const CubeSliceSpec& spec,
                                          const EnumerationBudget& budget = {});

TruncatedPoly slice_sum(const CubeSliceSpec& spec, int t_cap,
                        const EnumerationBudget& budget = {});

/// Sum of m over cone(F_eps) for heights 0..t_cap.
TruncatedPoly cone_sum(const EpsilonVector& eps, int r, int t_cap,
                       const EnumerationBudget& budget = {});

/// Sum of m over all of [0, k r]^n at height k.
TruncatedPoly full_slice_sum(int r, int n, int k, int t_cap,
                             const EnumerationBudget& budget = {});

/// k >= alpha_{pi(1)} >= ... >= alpha_{pi(n)} >= 0, strict at Des(pi).
bool delta_membership(const std::vector<int>& alpha, int k,
                      const Permutation& pi);

/// The unique pi with delta_membership(alpha, k, pi), by exhaustive search.
/// Throws InternalError if the search does not find exactly one.
Permutation find_simplex(const std::vector<int>& alpha, int k);

/// Row-major grid of t-free monomials over [0, k r]^2:
/// [{"v": [a, b], "monomial": {"q": .., "u": ..}, "label": "q^3u"}, ...].
nlohmann::json figure_grid(int r, int n, int k,
                           const EnumerationBudget& budget = {});

}  // namespace wreath_id

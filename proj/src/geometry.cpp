#include "wreath_id/geometry.hpp"

#include <optional>
#include <stdexcept>
#include <string>

#include "wreath_id/parallel.hpp"

namespace wreath_id {
namespace {

void require_height(int k) {
  if (k < 0) {
    throw std::invalid_argument("height must be nonnegative, got " +
                                std::to_string(k));
  }
}

void require_r(int r) {
  if (r < 1) {
    throw std::invalid_argument("r must be positive, got " + std::to_string(r));
  }
}

// m_prime without the upper range check; callers guarantee 0 <= j <= k r.
Monomial coordinate_monomial(int j, int k) {
  if (j <= k) return {j, 0, 0};
  return {(j - 1) % k, 0, (j - 1) / k};
}

// Advances `v` through the box lo <= v <= hi, last coordinate fastest.
bool next_in_box(std::vector<int>& v, const std::vector<int>& lo,
                 const std::vector<int>& hi) {
  for (std::size_t i = v.size(); i-- > 0;) {
    if (++v[i] <= hi[i]) return true;
    v[i] = lo[i];
  }
  return false;
}

}  // namespace

LatticePoint::LatticePoint(std::vector<int> v, int k, int r)
    : v_(std::move(v)), k_(k), r_(r) {
  require_height(k_);
  require_r(r_);
  for (int x : v_) {
    if (x < 0 || x > k_ * r_) {
      throw std::invalid_argument("coordinate " + std::to_string(x) +
                                  " outside [0, " + std::to_string(k_ * r_) +
                                  "]");
    }
  }
}

Monomial m_prime(int j, int k, int r) {
  require_height(k);
  require_r(r);
  if (j < 0 || j > k * r) {
    throw std::invalid_argument("j = " + std::to_string(j) + " outside [0, " +
                                std::to_string(k * r) + "]");
  }
  return coordinate_monomial(j, k);
}

Monomial lattice_monomial(const LatticePoint& p) {
  Monomial m{0, p.k(), 0};
  for (int x : p.v()) m = m * coordinate_monomial(x, p.k());
  return m;
}

bool slice_membership(const LatticePoint& p, const CubeSliceSpec& spec) {
  if (p.k() != spec.k) {
    throw std::invalid_argument("height mismatch: point at " +
                                std::to_string(p.k()) + ", slice at " +
                                std::to_string(spec.k));
  }
  if (static_cast<std::size_t>(p.dimension()) != spec.eps.size()) {
    throw std::invalid_argument("dimension mismatch between point and slice");
  }
  spec.eps.require_colors_below(spec.r);
  const int k = spec.k;
  const auto& eps = spec.eps.colors();
  if (k == 0) {
    // Apex (0, 0) belongs to cone(F_0) only.
    for (int e : eps) {
      if (e != 0) return false;
    }
    return true;
  }
  for (std::size_t i = 0; i < eps.size(); ++i) {
    const int x = p.v()[i];
    const int lower = k * eps[i];
    const int upper = k * (eps[i] + 1);
    if (x > upper) return false;
    if (eps[i] > 0 ? x <= lower : x < lower) return false;
  }
  return true;
}

void for_each_slice_point(
    const CubeSliceSpec& spec, const EnumerationBudget& budget,
    const std::function<void(const LatticePoint&)>& visit) {
  require_height(spec.k);
  require_r(spec.r);
  spec.eps.require_colors_below(spec.r);
  const int n = static_cast<int>(spec.eps.size());
  const int k = spec.k;
  budget.require(saturating_pow(static_cast<std::uint64_t>(k) + 1, n),
                 "height-" + std::to_string(k) + " cube slice");

  if (k == 0) {
    if (spec.eps.max_color() == 0) visit(LatticePoint(std::vector<int>(n, 0), 0, spec.r));
    return;
  }
  std::vector<int> lo(n);
  std::vector<int> hi(n);
  for (int i = 0; i < n; ++i) {
    const int e = spec.eps.colors()[i];
    lo[i] = e == 0 ? 0 : k * e + 1;
    hi[i] = k * (e + 1);
  }
  std::vector<int> v = lo;
  do {
    visit(LatticePoint(v, k, spec.r));
  } while (next_in_box(v, lo, hi));
}

std::vector<LatticePoint> enumerate_slice(const CubeSliceSpec& spec,
                                          const EnumerationBudget& budget) {
  std::vector<LatticePoint> out;
  for_each_slice_point(spec, budget,
                       [&out](const LatticePoint& p) { out.push_back(p); });
  return out;
}

TruncatedPoly slice_sum(const CubeSliceSpec& spec, int t_cap,
                        const EnumerationBudget& budget) {
  TruncatedPoly sum(t_cap);
  for_each_slice_point(spec, budget, [&sum](const LatticePoint& p) {
    sum.add_term(lattice_monomial(p), 1);
  });
  return sum;
}

TruncatedPoly cone_sum(const EpsilonVector& eps, int r, int t_cap,
                       const EnumerationBudget& budget) {
  TruncatedPoly sum(t_cap);
  for (int k = 0; k <= t_cap; ++k) {
    sum += slice_sum(CubeSliceSpec{eps, k, r}, t_cap, budget);
  }
  return sum;
}

TruncatedPoly full_slice_sum(int r, int n, int k, int t_cap,
                             const EnumerationBudget& budget) {
  require_r(r);
  require_height(k);
  if (n < 1) throw std::invalid_argument("n must be positive");
  const int side = k * r + 1;
  budget.require(saturating_pow(side, n),
                 "height-" + std::to_string(k) + " slice of [0, kr]^n");

  std::vector<Monomial> coordinate(side);
  for (int j = 0; j < side; ++j) coordinate[j] = coordinate_monomial(j, k);

  // One chunk per value of the first coordinate.
  auto chunk = [&](std::size_t first) {
    TruncatedPoly acc(t_cap);
    std::vector<int> lo(n, 0);
    std::vector<int> hi(n, side - 1);
    lo[0] = hi[0] = static_cast<int>(first);
    std::vector<int> v = lo;
    do {
      Monomial m{0, k, 0};
      for (int x : v) m = m * coordinate[x];
      acc.add_term(m, 1);
    } while (next_in_box(v, lo, hi));
    return acc;
  };
  return parallel_reduce(static_cast<std::size_t>(side), TruncatedPoly(t_cap),
                         chunk, [](TruncatedPoly a, const TruncatedPoly& b) {
                           return a += b;
                         });
}

bool delta_membership(const std::vector<int>& alpha, int k,
                      const Permutation& pi) {
  require_height(k);
  if (alpha.size() != pi.size() || !is_permutation(pi)) {
    throw std::invalid_argument("pi must be a permutation of the same size as alpha");
  }
  for (int a : alpha) {
    if (a < 0 || a > k) {
      throw std::invalid_argument("alpha entry " + std::to_string(a) +
                                  " outside [0, " + std::to_string(k) + "]");
    }
  }
  const DescentSet descents = descent_set(pi);
  auto at = [&](std::size_t i) { return alpha[pi[i - 1] - 1]; };  // 1-based i
  // k >= alpha_{pi(1)} and alpha_{pi(n)} >= 0 hold by the range check.
  std::size_t next_descent = 0;
  for (std::size_t i = 1; i < pi.size(); ++i) {
    const bool strict = next_descent < descents.size() &&
                        descents[next_descent] == static_cast<int>(i);
    if (strict) ++next_descent;
    if (strict ? !(at(i) > at(i + 1)) : !(at(i) >= at(i + 1))) return false;
  }
  return true;
}

Permutation find_simplex(const std::vector<int>& alpha, int k) {
  std::optional<Permutation> found;
  for (const Permutation& pi : all_permutations(static_cast<int>(alpha.size()))) {
    if (!delta_membership(alpha, k, pi)) continue;
    if (found) {
      throw InternalError("point lies in two simplices of the cube triangulation");
    }
    found = pi;
  }
  if (!found) {
    throw InternalError("point lies in no simplex of the cube triangulation");
  }
  return *found;
}

nlohmann::json figure_grid(int r, int n, int k,
                           const EnumerationBudget& budget) {
  if (n != 2) {
    throw std::invalid_argument("figures are drawn for n = 2 only, got n = " +
                                std::to_string(n));
  }
  require_r(r);
  require_height(k);
  const int side = k * r + 1;
  budget.require(saturating_pow(side, 2), "figure grid");
  nlohmann::json grid = nlohmann::json::array();
  for (int a = 0; a < side; ++a) {
    for (int b = 0; b < side; ++b) {
      Monomial m = lattice_monomial(LatticePoint({a, b}, k, r));
      m.t = 0;
      grid.push_back({{"v", {a, b}},
                      {"monomial", {{"q", m.q}, {"u", m.u}}},
                      {"label", qu_label(m)}});
    }
  }
  return grid;
}

}  // namespace wreath_id

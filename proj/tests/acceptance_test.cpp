// Acceptance suite: one [PASS]/[FAIL] line per criterion, exact equality only.

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "fixtures.hpp"
#include "json.hpp"
#include "oracles.hpp"
#include "wreath_id/geometry.hpp"
#include "wreath_id/identity.hpp"
#include "wreath_id/poly.hpp"
#include "wreath_id/wreath.hpp"

namespace {

using namespace wreath_id;
using nlohmann::json;

// Returns an empty string on success, otherwise a description of the failure.
using Check = std::function<std::string()>;

std::string first_failure(const VerificationReport& report) {
  if (report.passed()) return {};
  return report.claim() + " " + report.params().dump() + " " +
         report.counterexample()->dump();
}

std::vector<std::vector<int>> all_vectors(int n, int max_value) {
  std::vector<std::vector<int>> out;
  std::vector<int> v(n, 0);
  while (true) {
    out.push_back(v);
    int i = n - 1;
    while (i >= 0 && v[i] == max_value) v[i--] = 0;
    if (i < 0) return out;
    ++v[i];
  }
}

std::string theorem_end_to_end() {
  const auto start = std::chrono::steady_clock::now();
  for (int r = 1; r <= 3; ++r) {
    for (int n = 1; n <= 4; ++n) {
      if (auto f = first_failure(verify_theorem(r, n, n + 3)); !f.empty()) return f;
    }
  }
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (seconds >= 60.0) return "took " + std::to_string(seconds) + " s";
  return {};
}

std::string figure_goldens() {
  for (const auto& [k, table] : {std::pair{1, fixtures::kFigureHeight1},
                                 std::pair{2, fixtures::kFigureHeight2}}) {
    cli::RunConfig config;
    config.r = 2;
    config.n = 2;
    config.k = k;
    std::ostringstream out;
    if (cli::cmd_figure(config, out) != cli::kPass) return "cmd_figure failed";
    const json grid = json::parse(out.str());
    if (grid.size() != table.size()) return "wrong grid size at k=" + std::to_string(k);
    for (const auto& cell : grid) {
      const std::pair<int, int> v{cell["v"][0], cell["v"][1]};
      if (cell["label"] != table.at(v)) return "k=" + std::to_string(k) + " " + cell.dump();
    }
  }
  return {};
}

std::string worked_examples() {
  for (const auto* rows : {&fixtures::kEps101, &fixtures::kEps110}) {
    const EpsilonVector eps = parse_window((*rows)[0].window).letter_colors();
    const auto group = g_epsilon(eps);
    if (group.size() != rows->size()) return "wrong G_eps size";
    for (std::size_t i = 0; i < rows->size(); ++i) {
      if (format_window(group[i]) != (*rows)[i].window) return "order " + format_window(group[i]);
      if (descent_set(group[i]) != (*rows)[i].descents) return "Des " + format_window(group[i]);
    }
  }
  const EpsilonVector eps101({1, 0, 1});
  const EpsilonVector eps110({1, 1, 0});
  const LetterRelabeling omega(eps101, eps110);
  const std::vector<std::pair<ColoredLetter, ColoredLetter>> letters = {
      {{3, 1}, {2, 1}}, {{1, 1}, {1, 1}}, {{2, 0}, {3, 0}}};
  for (const auto& [from, to] : letters) {
    if (omega(from) != to) return "omega(" + format_letter(from) + ")";
  }
  for (const auto& [from, to] : fixtures::kOmega101To110) {
    const ColoredPermutation w = parse_window(from);
    const ColoredPermutation image = omega_map(eps101, eps110, w);
    if (format_window(image) != to) return "Omega " + from;
    if (descent_set(image) != descent_set(w)) return "Omega Des " + from;
  }
  return {};
}

std::string same_support() {
  for (int r = 1; r <= 3; ++r) {
    for (int n = 1; n <= 4; ++n) {
      if (auto f = first_failure(verify_same_support_descents(r, n)); !f.empty()) return f;
      if (n <= 3) {
        if (auto f = first_failure(verify_same_support_cone_sums(r, n, 5)); !f.empty()) return f;
      }
    }
  }
  return {};
}

std::string few_colors() {
  for (int n = 1; n <= 4; ++n) {
    for (int l = 0; l <= n; ++l) {
      if (auto f = first_failure(verify_prop_few_colors(l, n, n + 3)); !f.empty()) return f;
    }
  }
  return {};
}

std::string composition_internals() {
  for (int n = 1; n <= 4; ++n) {
    for (int l = 0; l <= n; ++l) {
      if (auto f = first_failure(descent_shift_check(l, n)); !f.empty()) return f;
      if (auto f = first_failure(verify_composition_bijection(l, n, 4)); !f.empty()) return f;
    }
  }
  return {};
}

std::string omega_pairs() {
  for (int r = 1; r <= 3; ++r) {
    for (int n = 1; n <= 4; ++n) {
      if (auto f = first_failure(verify_omega_pairs(r, n, RearrangementPairs::kAll)); !f.empty()) {
        return f;
      }
    }
  }
  return {};
}

std::string decompositions() {
  for (int r = 1; r <= 3; ++r) {
    for (int n = 1; n <= 3; ++n) {
      const auto vectors = all_epsilon_vectors(r, n);
      for (int k = 0; k <= 4; ++k) {
        for (const auto& v : all_vectors(n, k * r)) {
          const LatticePoint p(v, k, r);
          int owners = 0;
          for (const auto& eps : vectors) owners += slice_membership(p, {eps, k, r}) ? 1 : 0;
          if (owners != 1) {
            return "slice point " + json(v).dump() + " at k=" + std::to_string(k) + " has " +
                   std::to_string(owners) + " owners";
          }
        }
        const int cap = k;
        TruncatedPoly total(cap);
        for (const auto& eps : vectors) total += slice_sum({eps, k, r}, cap);
        if (total != full_slice_sum(r, n, k, cap)) {
          return "slice sums r=" + std::to_string(r) + " n=" + std::to_string(n) +
                 " k=" + std::to_string(k);
        }
      }
    }
  }
  for (int n = 1; n <= 5; ++n) {
    const auto perms = all_permutations(n);
    for (int k = 0; k <= 5; ++k) {
      for (const auto& alpha : all_vectors(n, k)) {
        int owners = 0;
        for (const auto& pi : perms) owners += delta_membership(alpha, k, pi) ? 1 : 0;
        if (owners != 1) return "simplex point " + json(alpha).dump() + " k=" + std::to_string(k);
      }
    }
  }
  return {};
}

std::string specializations() {
  for (int r = 1; r <= 3; ++r) {
    for (int n = 1; n <= 4; ++n) {
      const auto count = numerator(r, n, n).evaluate_at_one();
      if (count != oracle::ipow(r, n) * oracle::factorial(n)) {
        return "group size r=" + std::to_string(r) + " n=" + std::to_string(n);
      }
    }
  }
  for (int n = 1; n <= 5; ++n) {
    TruncatedPoly expected(n);
    for (const auto& [key, c] : oracle::euler_mahonian(n)) expected.add_term({key.first, key.second, 0}, c);
    if (numerator(1, n, n) != expected) return "Euler-Mahonian n=" + std::to_string(n);
  }
  for (int r = 1; r <= 3; ++r) {
    for (int n = 1; n <= 4; ++n) {
      const int cap = 4;
      const TruncatedPoly lhs = lhs_series(r, n, cap);
      const TruncatedPoly rhs = numerator(r, n, cap) * expand_denominator(n, cap);
      for (int k = 0; k <= cap; ++k) {
        const auto expected = oracle::ipow(static_cast<std::int64_t>(k) * r + 1, n);
        if (lhs.t_coefficient(k).evaluate_at_one() != expected ||
            rhs.t_coefficient(k).evaluate_at_one() != expected) {
          return "slice count r=" + std::to_string(r) + " n=" + std::to_string(n) +
                 " k=" + std::to_string(k);
        }
      }
    }
  }
  return {};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, Check>> criteria = {
      {"identity holds exactly for r<=3, n<=4 within 60 s", theorem_end_to_end},
      {"lattice figure monomials at heights 1 and 2", figure_goldens},
      {"worked-example descent sets and relabeling tables", worked_examples},
      {"same-support descent sets and cone-sum u-shift", same_support},
      {"few-colors cone sums match closed form and generating function", few_colors},
      {"composition-to-partition bijection and descent shift", composition_internals},
      {"rearrangement relabeling preserves descents for every pair", omega_pairs},
      {"unit cubes and simplices partition their slices", decompositions},
      {"specializations at q=t=u=1 and Euler-Mahonian agreement", specializations},
  };
  int failures = 0;
  for (const auto& [name, check] : criteria) {
    std::string detail;
    try {
      detail = check();
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    const bool ok = detail.empty();
    failures += ok ? 0 : 1;
    std::cout << (ok ? "[PASS] " : "[FAIL] ") << name << (ok ? "" : ": " + detail) << '\n';
  }
  std::cout << (criteria.size() - failures) << "/" << criteria.size() << " criteria passed\n";
  return failures == 0 ? 0 : 1;
}

#include "wreath_id/identity.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace wreath_id {
namespace {

using nlohmann::json;

void require_l(int l, int n) {
  if (n < 1 || l < 0 || l > n) {
    throw std::invalid_argument("need 0 <= l <= n and n >= 1, got l = " +
                                std::to_string(l) + ", n = " + std::to_string(n));
  }
}

// Number of descents of `descents` that are >= i.
int descents_from(const DescentSet& descents, int i) {
  return static_cast<int>(std::count_if(descents.begin(), descents.end(),
                                        [i](int d) { return d >= i; }));
}

ColoredPermutation g_element(const Permutation& pi, const EpsilonVector& eps) {
  std::vector<int> window(pi.size());
  for (std::size_t i = 0; i < pi.size(); ++i) window[i] = eps.color_of_letter(pi[i]);
  return ColoredPermutation(pi, std::move(window));
}

// Weakly decreasing n-tuples with entries in [0, bound], visited in
// lexicographic order.
template <typename Visit>
void for_each_bounded_partition(int n, int bound, Visit visit) {
  if (bound < 0) return;
  std::vector<int> parts(n, 0);
  auto rec = [&](auto& self, int i, int cap) -> void {
    if (i == n) {
      visit(parts);
      return;
    }
    for (int x = 0; x <= cap; ++x) {
      parts[i] = x;
      self(self, i + 1, x);
    }
  };
  rec(rec, 0, bound);
}

template <typename Visit>
void for_each_composition(int n, int k, int l, Visit visit) {
  std::vector<int> hi(n);
  for (int i = 0; i < n; ++i) hi[i] = i < l ? k - 1 : k;
  if (std::any_of(hi.begin(), hi.end(), [](int h) { return h < 0; })) return;
  std::vector<int> parts(n, 0);
  while (true) {
    visit(Composition{parts});
    int i = n - 1;
    while (i >= 0 && parts[i] == hi[i]) parts[i--] = 0;
    if (i < 0) return;
    ++parts[i];
  }
}

json poly_params(int r, int n, int t_cap) {
  return {{"r", r}, {"n", n}, {"t_cap", t_cap}};
}

}  // namespace

EpsilonVector few_colors_vector(int l, int n) {
  require_l(l, n);
  std::vector<int> colors(n, 0);
  std::fill(colors.begin(), colors.begin() + l, 1);
  return EpsilonVector(std::move(colors));
}

Permutation rho(int l, int n) {
  require_l(l, n);
  Permutation out = identity_permutation(n);
  std::reverse(out.begin(), out.begin() + l);
  return out;
}

bool composition_in_bounds(const Composition& alpha, int k, int l) {
  for (std::size_t i = 0; i < alpha.parts.size(); ++i) {
    const int bound = static_cast<int>(i) < l ? k - 1 : k;
    if (alpha.parts[i] < 0 || alpha.parts[i] > bound) return false;
  }
  return true;
}

ColoredPermutation find_pi_for_composition(const Composition& alpha, int k,
                                           int l, int n) {
  require_l(l, n);
  if (static_cast<int>(alpha.parts.size()) != n ||
      !composition_in_bounds(alpha, k, l)) {
    throw std::invalid_argument("composition violates its (k, l) bounds");
  }
  const EpsilonVector eps = few_colors_vector(l, n);
  const Permutation flip = rho(l, n);
  auto a = [&](int letter) { return alpha.parts[letter - 1]; };

  std::optional<Permutation> found;
  for (const Permutation& pi : all_permutations(n)) {
    const Permutation sigma = compose(flip, pi);
    if (a(sigma[0]) > k - eps.color_of_letter(sigma[0])) continue;
    const DescentSet descents = descent_set(sigma);
    bool chain = true;
    for (int i = 1; i < n && chain; ++i) {
      const bool strict =
          std::binary_search(descents.begin(), descents.end(), i);
      const int hi = a(sigma[i - 1]);
      const int lo = a(sigma[i]);
      chain = strict ? hi > lo : hi >= lo;
    }
    if (!chain) continue;
    if (found) {
      throw InternalError("two permutations satisfy the chain for one composition");
    }
    found = pi;
  }
  if (!found) {
    throw InternalError("no permutation satisfies the chain for a composition");
  }
  return g_element(*found, eps);
}

CompositionImage composition_to_partition(const Composition& alpha, int k,
                                          int l, int n) {
  ColoredPermutation element = find_pi_for_composition(alpha, k, l, n);
  const Permutation sigma = compose(rho(l, n), element.pi());
  const DescentSet descents = descent_set(sigma);
  Partition lambda;
  lambda.parts.resize(n);
  for (int i = 1; i <= n; ++i) {
    lambda.parts[i - 1] = alpha.parts[sigma[i - 1] - 1] - descents_from(descents, i);
  }
  return {std::move(lambda), std::move(element)};
}

Composition partition_to_composition(const Partition& lambda,
                                     const ColoredPermutation& element, int l) {
  const int n = element.size();
  if (static_cast<int>(lambda.parts.size()) != n) {
    throw std::invalid_argument("partition and element sizes differ");
  }
  const Permutation sigma = compose(rho(l, n), element.pi());
  const DescentSet descents = descent_set(sigma);
  Composition alpha;
  alpha.parts.resize(n);
  for (int i = 1; i <= n; ++i) {
    alpha.parts[sigma[i - 1] - 1] = lambda.parts[i - 1] + descents_from(descents, i);
  }
  return alpha;
}

LetterRelabeling::LetterRelabeling(const EpsilonVector& eps,
                                   const EpsilonVector& eps_prime)
    : source_(eps) {
  std::vector<int> a = eps.colors();
  std::vector<int> b = eps_prime.colors();
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  if (a != b) {
    throw std::invalid_argument("eps_prime is not a rearrangement of eps");
  }

  auto sorted_letters = [](const EpsilonVector& e) {
    std::vector<ColoredLetter> letters;
    for (int i = 1; i <= static_cast<int>(e.size()); ++i) {
      letters.push_back({i, e.color_of_letter(i)});
    }
    // Values are distinct, so the BZ order is total on this set.
    std::sort(letters.begin(), letters.end(),
              [](ColoredLetter x, ColoredLetter y) { return bz_compare(x, y) < 0; });
    return letters;
  };
  const auto from = sorted_letters(eps);
  const auto to = sorted_letters(eps_prime);
  for (std::size_t i = 0; i < from.size(); ++i) {
    image_by_value_.emplace(from[i].value, to[i]);
  }
}

ColoredLetter LetterRelabeling::operator()(ColoredLetter letter) const {
  auto it = image_by_value_.find(letter.value);
  if (it == image_by_value_.end() ||
      source_.color_of_letter(letter.value) != letter.color) {
    throw std::invalid_argument("letter " + format_letter(letter) +
                                " is not in the relabeling's domain");
  }
  return it->second;
}

ColoredPermutation omega_map(const EpsilonVector& eps,
                             const EpsilonVector& eps_prime,
                             const ColoredPermutation& w) {
  if (w.letter_colors() != eps) {
    throw std::invalid_argument(format_window(w) + " is not in G_eps");
  }
  const LetterRelabeling omega(eps, eps_prime);
  Permutation pi(w.size());
  std::vector<int> colors(w.size());
  for (int i = 1; i <= w.size(); ++i) {
    const ColoredLetter image = omega(w.letter_at(i));
    pi[i - 1] = image.value;
    colors[i - 1] = image.color;
  }
  return ColoredPermutation(std::move(pi), std::move(colors));
}

VerificationReport descent_shift_check(int l, int n) {
  return timed([&] {
    const json params = {{"l", l}, {"n", n}};
    const EpsilonVector eps = few_colors_vector(l, n);
    const Permutation flip = rho(l, n);
    for (const Permutation& pi : all_permutations(n)) {
      const ColoredPermutation w = g_element(pi, eps);
      DescentSet colored = descent_set(w);
      const bool zero_is_descent = !colored.empty() && colored.front() == 0;
      if (zero_is_descent) colored.erase(colored.begin());
      const DescentSet plain = descent_set(compose(flip, pi));
      const bool expect_zero = l >= 1 && pi[0] <= l;
      if (colored != plain || zero_is_descent != expect_zero) {
        return VerificationReport::fail(
            "descent_shift", params,
            {{"window", format_window(w)},
             {"des", descent_set(w)},
             {"rho_pi", compose(flip, pi)},
             {"des_rho_pi", plain}});
      }
    }
    return VerificationReport::pass("descent_shift", params);
  });
}

VerificationReport verify_same_support_descents(int r, int n,
                                                const EnumerationBudget& budget) {
  return timed([&] {
    const json params = {{"r", r}, {"n", n}};
    const auto vectors = all_epsilon_vectors(r, n, budget);
    std::map<std::vector<int>, std::vector<EpsilonVector>> by_support;
    for (const auto& e : vectors) by_support[e.support()].push_back(e);
    const auto perms = all_permutations(n);

    for (const auto& [support, group] : by_support) {
      for (const Permutation& pi : perms) {
        // Window-indexed color vectors: (eps, pi) = [pi(1)^{eps_1} ...].
        const DescentSet reference =
            descent_set(ColoredPermutation(pi, group.front().colors()));
        for (const auto& e : group) {
          const ColoredPermutation w(pi, e.colors());
          const DescentSet d = descent_set(w);
          if (d != reference) {
            return VerificationReport::fail(
                "same_support_descents", params,
                {{"eps", group.front().colors()},
                 {"eps_prime", e.colors()},
                 {"pi", pi},
                 {"des", reference},
                 {"des_prime", d}});
          }
        }
      }
    }
    return VerificationReport::pass("same_support_descents", params);
  });
}

VerificationReport verify_same_support_cone_sums(
    int r, int n, int t_cap, const EnumerationBudget& budget) {
  return timed([&]() -> VerificationReport {
    const json params = poly_params(r, n, t_cap);
    const auto vectors = all_epsilon_vectors(r, n, budget);
    std::map<EpsilonVector, TruncatedPoly> sums;
    for (const auto& e : vectors) sums.emplace(e, cone_sum(e, r, t_cap, budget));

    for (const auto& e : vectors) {
      for (const auto& e2 : vectors) {
        if (e == e2 || e.support() != e2.support()) continue;
        const int shift = e.col() - e2.col();
        const Monomial lift_e{0, 0, std::max(0, -shift)};
        const Monomial lift_e2{0, 0, std::max(0, shift)};

        // Pointwise: v = v' + k (eps - eps') maps slice(eps') onto slice(eps).
        for (int k = 0; k <= t_cap; ++k) {
          const auto source = enumerate_slice(CubeSliceSpec{e2, k, r}, budget);
          const auto target_count =
              enumerate_slice(CubeSliceSpec{e, k, r}, budget).size();
          const CubeSliceSpec target{e, k, r};
          for (const LatticePoint& p2 : source) {
            std::vector<int> v = p2.v();
            for (int i = 0; i < n; ++i) {
              v[i] += k * (e.colors()[i] - e2.colors()[i]);
            }
            const LatticePoint p(v, k, r);
            const bool inside = slice_membership(p, target);
            if (!inside || lattice_monomial(p) * lift_e !=
                               lattice_monomial(p2) * lift_e2) {
              return VerificationReport::fail(
                  "same_support_cone_sums", params,
                  {{"eps", e.colors()},
                   {"eps_prime", e2.colors()},
                   {"k", k},
                   {"v_prime", p2.v()},
                   {"v", v},
                   {"in_target_slice", inside}});
            }
          }
          if (source.size() != target_count) {
            return VerificationReport::fail(
                "same_support_cone_sums", params,
                {{"eps", e.colors()},
                 {"eps_prime", e2.colors()},
                 {"k", k},
                 {"slice_sizes", {target_count, source.size()}}});
          }
        }

        const TruncatedPoly lhs =
            sums.at(e) * TruncatedPoly::term(lift_e, 1, t_cap);
        const TruncatedPoly rhs =
            sums.at(e2) * TruncatedPoly::term(lift_e2, 1, t_cap);
        if (auto diff = first_difference(lhs, rhs)) {
          (*diff)["eps"] = e.colors();
          (*diff)["eps_prime"] = e2.colors();
          return VerificationReport::fail("same_support_cone_sums", params,
                                          *diff);
        }
      }
    }
    return VerificationReport::pass("same_support_cone_sums", params);
  });
}

VerificationReport verify_lemma_same_support(int r, int n, int t_cap,
                                             const EnumerationBudget& budget) {
  return timed([&] {
    const json params = poly_params(r, n, t_cap);
    for (const VerificationReport& part :
         {verify_same_support_descents(r, n, budget),
          verify_same_support_cone_sums(r, n, t_cap, budget)}) {
      if (!part.passed()) {
        return VerificationReport::fail(
            "same_support", params,
            {{"part", part.claim()}, {"detail", *part.counterexample()}});
      }
    }
    return VerificationReport::pass("same_support", params);
  });
}

VerificationReport verify_prop_few_colors(int l, int n, int t_cap,
                                          const EnumerationBudget& budget) {
  return timed([&] {
    const json params = {{"l", l}, {"n", n}, {"t_cap", t_cap}};
    const EpsilonVector eps = few_colors_vector(l, n);
    const TruncatedPoly geometric = cone_sum(eps, 2, t_cap, budget);

    TruncatedPoly closed(t_cap);
    for (int k = 0; k <= t_cap; ++k) {
      closed += pow(q_integer(k, t_cap), l) * pow(q_integer(k + 1, t_cap), n - l) *
                TruncatedPoly::term(Monomial{0, k, 0}, 1, t_cap);
    }
    closed = closed * TruncatedPoly::term(Monomial{0, 0, l}, 1, t_cap);

    const TruncatedPoly rational =
        g_epsilon_numerator(eps, t_cap) * expand_denominator(n, t_cap);

    if (auto diff = first_difference(geometric, closed)) {
      (*diff)["stage"] = "cone_sum_vs_closed_form";
      return VerificationReport::fail("few_colors_cone_sum", params, *diff);
    }
    if (auto diff = first_difference(geometric, rational)) {
      (*diff)["stage"] = "cone_sum_vs_generating_function";
      return VerificationReport::fail("few_colors_cone_sum", params, *diff);
    }
    return VerificationReport::pass("few_colors_cone_sum", params);
  });
}

VerificationReport verify_composition_bijection(int l, int n, int k_max) {
  return timed([&]() -> VerificationReport {
    const json params = {{"l", l}, {"n", n}, {"k_max", k_max}};
    const EpsilonVector eps = few_colors_vector(l, n);
    auto fail = [&](json detail) {
      return VerificationReport::fail("composition_bijection", params,
                                      std::move(detail));
    };

    for (int k = 0; k <= k_max; ++k) {
      std::set<std::pair<Permutation, std::vector<int>>> image;
      std::optional<json> failure;
      std::size_t domain_size = 0;

      for_each_composition(n, k, l, [&](const Composition& alpha) {
        if (failure) return;
        ++domain_size;
        json where = {{"k", k}, {"alpha", alpha.parts}};
        CompositionImage out{Partition{}, ColoredPermutation(identity_permutation(n))};
        try {
          out = composition_to_partition(alpha, k, l, n);
        } catch (const InternalError& e) {
          where["error"] = e.what();
          failure = where;
          return;
        }
        const Statistics s = statistics(out.element);
        const auto& lam = out.lambda.parts;
        const int alpha_sum = std::accumulate(alpha.parts.begin(), alpha.parts.end(), 0);
        const int lambda_sum = std::accumulate(lam.begin(), lam.end(), 0);
        where["window"] = format_window(out.element);
        where["lambda"] = lam;
        if (!std::is_sorted(lam.rbegin(), lam.rend()) || lam.back() < 0) {
          where["violation"] = "lambda not a partition";
          failure = where;
        } else if (lambda_sum != alpha_sum - s.maj) {
          where["violation"] = "sum(lambda) != sum(alpha) - maj";
          failure = where;
        } else if (lam.front() > k - s.des) {
          where["violation"] = "part exceeds k - des";
          failure = where;
        } else if (partition_to_composition(out.lambda, out.element, l).parts !=
                   alpha.parts) {
          where["violation"] = "inverse does not recover alpha";
          failure = where;
        } else if (!image.emplace(out.element.pi(), lam).second) {
          where["violation"] = "not injective";
          failure = where;
        }
      });
      if (failure) return fail(*failure);

      // Surjectivity: every bounded partition over every element is hit.
      std::size_t codomain_size = 0;
      for (const Permutation& pi : all_permutations(n)) {
        const ColoredPermutation element = g_element(pi, eps);
        const int bound = k - des(element);
        for_each_bounded_partition(n, bound, [&](const std::vector<int>& lam) {
          ++codomain_size;
          if (!failure && !image.count({pi, lam})) {
            failure = json{{"k", k},
                           {"window", format_window(element)},
                           {"lambda", lam},
                           {"violation", "not surjective"}};
          }
        });
      }
      if (failure) return fail(*failure);
      if (codomain_size != domain_size) {
        return fail({{"k", k},
                     {"domain_size", domain_size},
                     {"codomain_size", codomain_size}});
      }
    }
    return VerificationReport::pass("composition_bijection", params);
  });
}

VerificationReport verify_lemma_triple_preserving(const EpsilonVector& eps,
                                                  const EpsilonVector& eps_prime) {
  return timed([&]() -> VerificationReport {
    const json params = {{"eps", eps.colors()}, {"eps_prime", eps_prime.colors()}};
    auto fail = [&](json detail) {
      return VerificationReport::fail("omega_bijection", params, std::move(detail));
    };
    if (eps.col() != eps_prime.col()) {
      return fail({{"col", eps.col()}, {"col_prime", eps_prime.col()}});
    }
    std::set<ColoredPermutation> images;
    const auto source = g_epsilon(eps);
    for (const ColoredPermutation& w : source) {
      const ColoredPermutation image = omega_map(eps, eps_prime, w);
      json where = {{"window", format_window(w)}, {"image", format_window(image)}};
      if (image.letter_colors() != eps_prime) {
        where["violation"] = "image not in G_eps_prime";
        return fail(where);
      }
      if (descent_set(w) != descent_set(image)) {
        where["des"] = descent_set(w);
        where["des_image"] = descent_set(image);
        return fail(where);
      }
      const Statistics a = statistics(w);
      const Statistics b = statistics(image);
      if (a != b) {
        where["stats"] = {a.maj, a.des, a.col};
        where["stats_image"] = {b.maj, b.des, b.col};
        return fail(where);
      }
      if (!images.insert(image).second) {
        where["violation"] = "not injective";
        return fail(where);
      }
    }
    if (images.size() != g_epsilon(eps_prime).size()) {
      return fail({{"violation", "not surjective"}, {"image_size", images.size()}});
    }
    return VerificationReport::pass("omega_bijection", params);
  });
}

VerificationReport verify_omega_pairs(int r, int n, RearrangementPairs pairs,
                                      const EnumerationBudget& budget) {
  return timed([&] {
    const json params = {{"r", r},
                         {"n", n},
                         {"pairs", pairs == RearrangementPairs::kAll ? "all" : "sampled"}};
    const auto vectors = all_epsilon_vectors(r, n, budget);
    std::vector<std::pair<EpsilonVector, EpsilonVector>> todo;
    if (pairs == RearrangementPairs::kAll) {
      std::map<std::vector<int>, std::vector<EpsilonVector>> classes;
      for (const auto& e : vectors) {
        std::vector<int> key = e.colors();
        std::sort(key.begin(), key.end());
        classes[key].push_back(e);
      }
      for (const auto& [key, members] : classes) {
        for (const auto& a : members) {
          for (const auto& b : members) todo.emplace_back(a, b);
        }
      }
    } else {
      for (const auto& e : vectors) {
        std::vector<int> sorted = e.colors();
        std::sort(sorted.rbegin(), sorted.rend());
        std::vector<int> reversed(e.colors().rbegin(), e.colors().rend());
        todo.emplace_back(e, EpsilonVector(sorted));
        todo.emplace_back(e, EpsilonVector(reversed));
      }
    }
    for (const auto& [a, b] : todo) {
      VerificationReport one = verify_lemma_triple_preserving(a, b);
      if (!one.passed()) {
        json detail = *one.counterexample();
        detail["eps"] = a.colors();
        detail["eps_prime"] = b.colors();
        return VerificationReport::fail("omega_pairs", params, detail);
      }
    }
    json with_count = params;
    with_count["pair_count"] = todo.size();
    return VerificationReport::pass("omega_pairs", with_count);
  });
}

VerificationReport verify_corollary(const EpsilonVector& eps, int r, int t_cap,
                                    const EnumerationBudget& budget) {
  return timed([&] {
    const json params = {{"eps", eps.colors()}, {"r", r}, {"t_cap", t_cap}};
    const int n = static_cast<int>(eps.size());
    const TruncatedPoly lhs = cone_sum(eps, r, t_cap, budget);
    const TruncatedPoly rhs =
        g_epsilon_numerator(eps, t_cap) * expand_denominator(n, t_cap);
    if (auto diff = first_difference(lhs, rhs)) {
      return VerificationReport::fail("cone_sum_by_color_vector", params, *diff);
    }
    return VerificationReport::pass("cone_sum_by_color_vector", params);
  });
}

VerificationReport verify_regrouping(int r, int n, int t_cap,
                                     const EnumerationBudget& budget) {
  return timed([&] {
    const json params = poly_params(r, n, t_cap);
    TruncatedPoly regrouped(t_cap);
    for (const auto& e : all_epsilon_vectors(r, n, budget)) {
      regrouped += g_epsilon_numerator(e, t_cap);
    }
    const TruncatedPoly whole = numerator(r, n, t_cap, budget);
    if (auto diff = first_difference(regrouped, whole)) {
      return VerificationReport::fail("color_vector_regrouping", params, *diff);
    }
    return VerificationReport::pass("color_vector_regrouping", params);
  });
}

VerificationReport verify_theorem(int r, int n, int t_cap,
                                  const EnumerationBudget& budget) {
  return timed([&] {
    const json params = poly_params(r, n, t_cap);
    const TruncatedPoly closed = lhs_series(r, n, t_cap);

    TruncatedPoly lattice(t_cap);
    for (int k = 0; k <= t_cap; ++k) {
      lattice += full_slice_sum(r, n, k, t_cap, budget);
    }
    if (auto diff = first_difference(closed, lattice)) {
      (*diff)["stage"] = "closed_form_vs_lattice_sum";
      return VerificationReport::fail("bz_identity", params, *diff);
    }

    const TruncatedPoly rational =
        numerator(r, n, t_cap, budget) * expand_denominator(n, t_cap);
    if (auto diff = first_difference(closed, rational)) {
      (*diff)["stage"] = "closed_form_vs_generating_function";
      return VerificationReport::fail("bz_identity", params, *diff);
    }
    return VerificationReport::pass("bz_identity", params);
  });
}

}  // namespace wreath_id

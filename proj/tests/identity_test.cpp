#include "wreath_id/identity.hpp"

#include <gtest/gtest.h>

#include <numeric>
#include <set>

#include "fixtures.hpp"
#include "oracles.hpp"

namespace wreath_id {
namespace {

ColoredPermutation w(const std::string& text) { return parse_window(text); }

void expect_pass(const VerificationReport& report) {
  EXPECT_TRUE(report.passed()) << report.to_json().dump();
}

TEST(Rho, Examples) {
  EXPECT_EQ(rho(2, 3), (Permutation{2, 1, 3}));
  EXPECT_EQ(rho(0, 4), identity_permutation(4));
  EXPECT_EQ(rho(3, 3), (Permutation{3, 2, 1}));
  EXPECT_THROW(rho(4, 3), std::invalid_argument);
}

TEST(Rho, IsAnInvolution) {
  for (int n = 1; n <= 6; ++n) {
    for (int l = 0; l <= n; ++l) {
      EXPECT_EQ(compose(rho(l, n), rho(l, n)), identity_permutation(n));
    }
  }
}

TEST(DescentShift, WorkedExample) {
  const Permutation flip = rho(2, 3);
  for (const auto& row : fixtures::kRhoShift110) {
    const auto x = w(row.window);
    EXPECT_EQ(compose(flip, x.pi()), row.rho_pi) << row.window;
    DescentSet expected = descent_set(row.rho_pi);
    if (row.adjoin_zero) expected.insert(expected.begin(), 0);
    EXPECT_EQ(descent_set(x), expected) << row.window;
  }
  EXPECT_EQ(descent_set(w("[2^1 1^1 3^0]")), (DescentSet{0}));
  EXPECT_EQ(descent_set(w("[3^0 2^1 1^1]")), descent_set(Permutation{3, 1, 2}));
}

TEST(DescentShift, HoldsForSmallSizes) {
  for (int n = 1; n <= 5; ++n) {
    for (int l = 0; l <= n; ++l) expect_pass(descent_shift_check(l, n));
  }
}

TEST(FindPiForComposition, Examples) {
  const auto x = find_pi_for_composition(Composition{{1, 0, 2}}, 2, 2, 3);
  EXPECT_EQ(x.pi(), (Permutation{3, 2, 1}));
  EXPECT_EQ(x.window_colors(), (std::vector<int>{0, 1, 1}));
  EXPECT_EQ(format_window(x), "[3^0 2^1 1^1]");

  for (int k = 1; k <= 3; ++k) {
    EXPECT_EQ(find_pi_for_composition(Composition{{0, 0, 0}}, k, 0, 3).pi(),
              identity_permutation(3));
  }

  // Only [1^1 2^0] satisfies the chain for alpha = (0,0), k = 1, l = 1.
  int qualifying = 0;
  for (const auto& pi : all_permutations(2)) {
    const Permutation sigma = compose(rho(1, 2), pi);
    const int top_bound = 1 - (sigma[0] <= 1 ? 1 : 0);
    const bool ordered = descent_set(sigma).empty();  // alpha ties forbid descents
    if (ordered && 0 <= top_bound) ++qualifying;
  }
  EXPECT_EQ(qualifying, 1);
  EXPECT_EQ(format_window(find_pi_for_composition(Composition{{0, 0}}, 1, 1, 2)), "[1^1 2^0]");
}

TEST(FindPiForComposition, RejectsOutOfBoundsCompositions) {
  EXPECT_THROW(find_pi_for_composition(Composition{{2, 0, 0}}, 2, 1, 3), std::invalid_argument);
  EXPECT_THROW(find_pi_for_composition(Composition{{0, 0}}, 2, 1, 3), std::invalid_argument);
}

TEST(CompositionToPartition, Examples) {
  const auto out = composition_to_partition(Composition{{1, 0, 2}}, 2, 2, 3);
  EXPECT_EQ(out.lambda.parts, (std::vector<int>{1, 1, 0}));
  EXPECT_EQ(maj(out.element), 1);
  EXPECT_EQ(des(out.element), 1);

  const auto zero = composition_to_partition(Composition{{0, 0, 0}}, 3, 0, 3);
  EXPECT_EQ(zero.lambda.parts, (std::vector<int>{0, 0, 0}));
}

TEST(CompositionToPartition, BijectiveForThreeLettersTwoColored) {
  std::set<std::pair<Permutation, std::vector<int>>> image;
  int domain = 0;
  for (int a = 0; a <= 1; ++a) {
    for (int b = 0; b <= 1; ++b) {
      for (int c = 0; c <= 2; ++c) {
        ++domain;
        const auto out = composition_to_partition(Composition{{a, b, c}}, 2, 2, 3);
        EXPECT_LE(out.lambda.parts.front(), 2 - des(out.element));
        image.emplace(out.element.pi(), out.lambda.parts);
      }
    }
  }
  EXPECT_EQ(domain, 12);
  EXPECT_EQ(image.size(), 12U);

  // Codomain: partitions with 3 parts each <= 2 - des, over G_(1,1,0).
  std::size_t codomain = 0;
  for (const auto& x : g_epsilon(few_colors_vector(2, 3))) {
    const int bound = 2 - des(x);
    for (int p = 0; p <= bound; ++p) {
      for (int q = 0; q <= p; ++q) {
        for (int s = 0; s <= q; ++s) ++codomain;
      }
    }
  }
  EXPECT_EQ(codomain, 12U);
}

TEST(CompositionBijection, HoldsForSmallSizes) {
  for (int n = 1; n <= 3; ++n) {
    for (int l = 0; l <= n; ++l) expect_pass(verify_composition_bijection(l, n, 3));
  }
}

TEST(Omega, WorkedExampleLetters) {
  const EpsilonVector eps({1, 0, 1});
  const EpsilonVector zeta({1, 1, 0});
  const LetterRelabeling omega(eps, zeta);
  EXPECT_EQ(omega({3, 1}), (ColoredLetter{2, 1}));
  EXPECT_EQ(omega({1, 1}), (ColoredLetter{1, 1}));
  EXPECT_EQ(omega({2, 0}), (ColoredLetter{3, 0}));
  EXPECT_THROW(omega({2, 1}), std::invalid_argument);
}

TEST(Omega, WorkedExampleWindows) {
  const EpsilonVector eps({1, 0, 1});
  const EpsilonVector zeta({1, 1, 0});
  for (const auto& [from, to] : fixtures::kOmega101To110) {
    const auto image = omega_map(eps, zeta, w(from));
    EXPECT_EQ(format_window(image), to);
    EXPECT_EQ(descent_set(image), descent_set(w(from))) << from;
  }
}

TEST(Omega, IdentityWhenVectorsAgree) {
  const EpsilonVector eps({2, 0, 1, 1});
  for (const auto& x : g_epsilon(eps)) EXPECT_EQ(omega_map(eps, eps, x), x);
}

TEST(Omega, Errors) {
  EXPECT_THROW(LetterRelabeling(EpsilonVector({1, 0}), EpsilonVector({1, 1})),
               std::invalid_argument);
  EXPECT_THROW(omega_map(EpsilonVector({1, 0}), EpsilonVector({0, 1}), w("[1^0 2^0]")),
               std::invalid_argument);
}

TEST(Omega, PreservesDescentsForAllPairs) {
  for (int r = 1; r <= 3; ++r) {
    for (int n = 1; n <= 3; ++n) {
      expect_pass(verify_omega_pairs(r, n, RearrangementPairs::kAll));
      expect_pass(verify_omega_pairs(r, n, RearrangementPairs::kSampled));
    }
  }
}

TEST(Verifiers, SameSupport) {
  for (int r = 1; r <= 3; ++r) {
    for (int n = 1; n <= 2; ++n) expect_pass(verify_lemma_same_support(r, n, 4));
  }
}

TEST(Verifiers, FewColors) {
  for (int n = 1; n <= 3; ++n) {
    for (int l = 0; l <= n; ++l) expect_pass(verify_prop_few_colors(l, n, n + 3));
  }
}

TEST(Verifiers, CorollaryForEveryColorVector) {
  for (int r = 1; r <= 3; ++r) {
    for (int n = 1; n <= 2; ++n) {
      for (const auto& eps : all_epsilon_vectors(r, n)) expect_pass(verify_corollary(eps, r, 5));
    }
  }
}

TEST(Verifiers, Regrouping) {
  for (int r = 1; r <= 3; ++r) {
    for (int n = 1; n <= 4; ++n) expect_pass(verify_regrouping(r, n, n));
  }
}

TEST(Theorem, SingleColorTwoLetters) {
  expect_pass(verify_theorem(1, 2, 4));
  // Independently: the t^k coefficient is [k+1]_q^2.
  const auto rhs = numerator(1, 2, 4) * expand_denominator(2, 4);
  for (int k = 0; k <= 4; ++k) {
    EXPECT_EQ(rhs.t_coefficient(k), pow(q_integer(k + 1, 4), 2));
  }
}

TEST(Theorem, TwoColorsOneLetter) {
  expect_pass(verify_theorem(2, 1, 4));
  // (1 + tu)/((1 - t)(1 - qt)) has t^k coefficient [k+1]_q + u [k]_q.
  const auto rhs = numerator(2, 1, 4) * expand_denominator(1, 4);
  const auto u = TruncatedPoly::term(Monomial{0, 0, 1}, 1, 4);
  for (int k = 0; k <= 4; ++k) {
    EXPECT_EQ(rhs.t_coefficient(k), q_integer(k + 1, 4) + u * q_integer(k, 4));
  }
}

TEST(Theorem, ThreeColorsThreeLetters) {
  expect_pass(verify_theorem(3, 3, 5));
  const auto rhs = numerator(3, 3, 5) * expand_denominator(3, 5);
  for (int k = 0; k <= 5; ++k) {
    EXPECT_EQ(rhs.t_coefficient(k).evaluate_at_one(), oracle::ipow(3 * k + 1, 3));
  }
}

TEST(Theorem, BothSidesHaveNonnegativeCoefficients) {
  for (int r = 1; r <= 3; ++r) {
    for (int n = 1; n <= 3; ++n) {
      for (const auto& p : {lhs_series(r, n, 5),
                            numerator(r, n, 5) * expand_denominator(n, 5)}) {
        for (const auto& [m, c] : p.terms()) EXPECT_GT(c, 0);
      }
    }
  }
}

TEST(Theorem, BudgetIsEnforced) {
  EXPECT_THROW(verify_theorem(3, 4, 7, EnumerationBudget{5000}), BudgetExceeded);
}

TEST(Report, FailureCarriesCounterexample) {
  const auto report = VerificationReport::fail("x", {{"n", 1}}, nullptr);
  EXPECT_FALSE(report.passed());
  ASSERT_TRUE(report.counterexample().has_value());
  const auto j = report.to_json();
  EXPECT_EQ(j["status"], "fail");
  EXPECT_TRUE(j["counterexample"].is_object());

  const auto ok = VerificationReport::pass("y", {{"n", 2}}).to_json();
  EXPECT_EQ(ok["status"], "pass");
  EXPECT_TRUE(ok["counterexample"].is_null());
  for (const char* key : {"claim", "params", "status", "counterexample", "elapsed_ms"}) {
    EXPECT_TRUE(ok.contains(key)) << key;
  }
}

TEST(Report, FirstDifferenceIsLexicographicallyFirst) {
  TruncatedPoly a(3);
  TruncatedPoly b(3);
  a.add_term({2, 1, 0}, 1);
  b.add_term({0, 2, 0}, 4);
  a.add_term({5, 0, 1}, 2);
  b.add_term({5, 0, 1}, 2);
  const auto diff = first_difference(a, b);
  ASSERT_TRUE(diff);
  EXPECT_EQ((*diff)["monomial"], (nlohmann::json{{"q", 2}, {"t", 1}, {"u", 0}}));
  EXPECT_EQ((*diff)["lhs"], 1);
  EXPECT_EQ((*diff)["rhs"], 0);
  EXPECT_FALSE(first_difference(a, a));
}

}  // namespace
}  // namespace wreath_id

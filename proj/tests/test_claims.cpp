#include <random>

#include "doctest.h"
#include "hypercong/claims.hpp"
#include "hypercong/errors.hpp"
#include "hypercong/hyper.hpp"
#include "hypercong/sweep.hpp"

using namespace hypercong;

TEST_CASE("main congruence: gates and verdicts") {
  auto pass = check_theorem_main(7, Rat(-2), Rat(1));
  CHECK(pass.verdict == Verdict::Pass);
  CHECK(pass.hypothesis_met);
  CHECK(pass.achieved == ValuationResult::at_least(2));

  auto skip = check_theorem_main(7, Rat(-1), Rat(1));
  CHECK(skip.verdict == Verdict::Skipped);
  CHECK(!skip.hypothesis_met);

  auto skip2 = check_theorem_main(5, rat(1, 3), Rat(2));
  CHECK(skip2.verdict == Verdict::Skipped);  // <-1/3>_5 = 3 is odd

  CHECK_THROWS_AS(check_theorem_main(4, Rat(1), Rat(1)), BadPrimeError);
  CHECK_THROWS_AS(check_theorem_main(7, rat(1, 7), Rat(1)), NonPIntegralError);
}

TEST_CASE("truncating at p-2 has discriminating power") {
  // the dropped terms only matter mod p^2 when alpha ≡ 1 (mod p)
  bool found_fail = false;
  for (long p : {5L, 7L, 11L}) {
    for (const Rat& alpha : rational_lattice(6, 6, p)) {
      for (const Rat& z : {Rat(1), Rat(2)}) {
        auto c = check_theorem_main(p, alpha, z, 2, p - 2);
        if (c.verdict == Verdict::Fail) found_fail = true;
      }
    }
  }
  CHECK(found_fail);
  CHECK(check_theorem_main(5, Rat(6), Rat(1), 2, 3).verdict == Verdict::Fail);
}

TEST_CASE("squared 2F1 congruence") {
  CHECK(check_clausen_congruence(7, Rat(-2), Rat(1)).verdict == Verdict::Pass);
  auto zero = check_clausen_congruence(5, Rat(0), rat(-1, 2));
  CHECK(zero.verdict == Verdict::Pass);  // both sides are 1
  CHECK(check_clausen_congruence(11, rat(1, 5), Rat(3)).verdict == Verdict::Pass);
  CHECK(check_clausen_congruence(11, rat(1, 5), Rat(3)).hypothesis_met);
}

TEST_CASE("weighted central-binomial sum") {
  for (long p : {3L, 5L, 17L, 97L}) {
    auto c = check_corollary_b(p, 1);
    CHECK(c.verdict == Verdict::Pass);
    CHECK(c.achieved == ValuationResult::infinite());  // the sum is exactly 0
  }
  auto c17 = check_corollary_b(17, 4);
  CHECK(c17.verdict == Verdict::Pass);
  CHECK(c17.hypothesis_met);
  auto c5 = check_corollary_b(5, 4);
  CHECK(c5.verdict == Verdict::Skipped);  // <-1/4>_5 = 1 is odd
  auto c7 = check_corollary_b(7, 5);
  CHECK(c7.verdict == Verdict::Skipped);  // 7 ≡ 2 (mod 5)
  auto c2 = check_corollary_b(2, 1);
  CHECK(c2.verdict == Verdict::Pass);
}

TEST_CASE("the sum matches a direct exact-rational oracle") {
  // independent route: term-by-term binomial products, no recurrences
  for (long p : {5L, 13L}) {
    for (long b : {2L, 3L, 4L, 6L}) {
      Rat sum(0);
      for (long k = 0; k <= p - 1; ++k) {
        auto ku = static_cast<unsigned long>(k);
        sum += Rat(b * b * k + b - 1) * Rat(binomial(2 * ku, ku)) /
               rpow(Rat(4), ku) * binomial_rational(rat(-1, b), ku) *
               binomial_rational(rat(1, b) - 1, ku);
      }
      auto c = check_corollary_b(p, b);
      if (sum == 0) {
        CHECK(c.achieved == ValuationResult::infinite());
      } else {
        CHECK(c.achieved == ValuationResult::exact(*valuation(sum, p)));
      }
    }
  }
}

TEST_CASE("special cases with elevated exponents") {
  auto p13 = check_special_case(13, ClaimId::Cor1_4A);
  CHECK(p13.hypothesis_met);
  CHECK(p13.verdict == Verdict::Pass);
  CHECK(p13.required == ValuationResult::exact(2));

  auto p3 = check_special_case(3, ClaimId::Cor1_4B);
  CHECK(p3.hypothesis_met);  // 3 ≡ 3 (mod 8)
  CHECK(p3.required == ValuationResult::exact(3));
  CHECK(p3.verdict == Verdict::Pass);
  // independent oracle: sum_{k=0}^{2} (16k+3) C(2k,k)^2 C(4k,2k) / 256^k
  Rat s(0);
  for (unsigned long k = 0; k <= 2; ++k)
    s += Rat(16 * static_cast<long>(k) + 3) * Rat(binomial(2 * k, k)) *
         Rat(binomial(2 * k, k)) * Rat(binomial(4 * k, 2 * k)) / rpow(Rat(256), k);
  CHECK(s == rat(50193, 8192));
  CHECK(*valuation(s, 3) == 3);
  CHECK(p3.achieved == ValuationResult::exact(3));

  auto p5 = check_special_cases(5);
  CHECK(p5[0].verdict == Verdict::Skipped);  // 5 ≡ 2 (mod 3)
  CHECK(p5[1].verdict == Verdict::Skipped);  // 5 ≡ 5 (mod 8)
  CHECK(p5[2].verdict == Verdict::Pass);
  CHECK(p5[3].verdict == Verdict::Pass);
  CHECK(p5[3].required == ValuationResult::exact(3));
}

TEST_CASE("binomial product identities") {
  auto c = check_binomial_product_identities(40);
  CHECK(c.verdict == Verdict::Pass);
  CHECK(c.achieved == ValuationResult::infinite());
  CHECK(check_binomial_product_identities(0).verdict == Verdict::Pass);
  // spot values at k = 1
  CHECK(binomial_rational(rat(-1, 3), 1) * binomial_rational(rat(-2, 3), 1) ==
        rat(2, 9));
  CHECK(binomial_rational(rat(-1, 6), 1) * binomial_rational(rat(-5, 6), 1) ==
        rat(5, 36));
}

TEST_CASE("rewriting identity") {
  CHECK(check_identity_1_9(5, 3).verdict == Verdict::Pass);
  CHECK(check_identity_1_9(7, 2).verdict == Verdict::Pass);
  CHECK(check_identity_1_9(3, 1).verdict == Verdict::Pass);
  CHECK(check_identity_1_9(2, 3).verdict == Verdict::Pass);
  CHECK_THROWS_AS(check_identity_1_9(5, 10), ZeroDenominatorError);
}

TEST_CASE("harmonic-sum lemma") {
  auto c = check_lemma_tauraso(5, Rat(1));
  CHECK(c.verdict == Verdict::Pass);
  CHECK(check_lemma_tauraso(7, Rat(0)).verdict == Verdict::Pass);
  CHECK_THROWS_AS(check_lemma_tauraso(3, Rat(1)), BadPrimeError);
  CHECK_THROWS_AS(check_lemma_tauraso(5, rat(1, 5)), NonPIntegralError);
}

TEST_CASE("Gauss-value lemma, both branches") {
  // s = <-1/2>_5 + <-1/2>_5 = 4 < 5
  CHECK(check_lemma_maopan(5, rat(1, 2), rat(1, 2)).verdict == Verdict::Pass);
  // s = 3 + 3 = 6 >= 5
  CHECK(least_residue(rat(-3, 4), 5) == 3);
  CHECK(check_lemma_maopan(5, rat(3, 4), rat(3, 4)).verdict == Verdict::Pass);
  // terminating left side: alpha = 0
  CHECK(check_lemma_maopan(7, Rat(0), rat(1, 2)).verdict == Verdict::Pass);
}

TEST_CASE("scaled 3F2 congruence") {
  CHECK(check_lemma_2_3(17, 4).verdict == Verdict::Pass);
  CHECK(check_lemma_2_3(7, 3).verdict == Verdict::Pass);
  CHECK(check_lemma_2_3(5, 4).verdict == Verdict::Skipped);
  CHECK_THROWS_AS(check_lemma_2_3(7, 1), ConfigError);
}

TEST_CASE("expansions at alpha = 1 + p t") {
  CHECK(check_case2_expansions(5, Rat(0), Rat(1)).verdict == Verdict::Pass);
  CHECK(check_case2_expansions(5, Rat(1), Rat(1)).verdict == Verdict::Pass);
  CHECK(check_case2_expansions(7, Rat(2), Rat(3)).verdict == Verdict::Pass);
  CHECK_THROWS_AS(check_case2_expansions(3, Rat(1), Rat(1)), BadPrimeError);
}

TEST_CASE("conjecture exploration") {
  auto c = explore_conjecture(7, 3, 2);
  CHECK(c.verdict == Verdict::Pass);
  CHECK(c.exploratory);
  auto c2 = explore_conjecture(5, 2, 3);
  CHECK(c2.verdict == Verdict::Pass);
  auto b1 = explore_conjecture(7, 1, 1);
  CHECK(b1.verdict == Verdict::Skipped);  // prefactor D = 0
  CHECK(!b1.hypothesis_met);
}

TEST_CASE("n = 1 exploration agrees with the direct sum checker") {
  for (long p : primes_in_range(2, 31))
    for (long b = 2; b <= 8; ++b)
      CHECK(explore_conjecture(p, b, 1).verdict ==
            check_corollary_b(p, b).verdict);
}

TEST_CASE("the elevated exponents come from the prefactor valuation") {
  // at (p, b) = (5, 6) and (3, 4), n = 1: v_p(D) = 1, so the exploration
  // demands one more power of p than the plain sum checker
  Rat d56 = Rat(1) * binomial_rational(rat(-1, 6), 1) *
            binomial_rational(rat(1, 6) - 1, 1);
  CHECK(*valuation(d56, 5) == 1);
  CHECK(explore_conjecture(5, 6, 1).verdict == Verdict::Pass);
  CHECK(explore_conjecture(3, 4, 1).verdict == Verdict::Pass);
}

TEST_CASE("proof-chain cross-derivation") {
  // For gated (p, b): the rewriting identity expresses the sum as
  // b F[1+1/b,...] - F[1/b,...], the scaled 3F2 congruence makes that
  // difference vanish mod p^2, and the latter reduces to the two parametric
  // congruences at z = 1 with alpha = 1/b and alpha = 1 - 1/b.
  for (long p : primes_in_range(3, 31)) {
    for (long b = 2; b <= 8; ++b) {
      auto cor = check_corollary_b(p, b);
      if (!cor.hypothesis_met) continue;
      Rat ob = rat(1, b);
      auto id = check_identity_1_9(p, b);
      auto lem = check_lemma_2_3(p, b);
      auto cl = check_clausen_congruence(p, ob, Rat(1));
      auto th = check_theorem_main(p, 1 - ob, Rat(1));
      CHECK(id.verdict == Verdict::Pass);
      CHECK(lem.verdict == Verdict::Pass);
      CHECK(cl.hypothesis_met);
      CHECK(cl.verdict == Verdict::Pass);
      CHECK(th.hypothesis_met);
      CHECK(th.verdict == Verdict::Pass);
      // identity + scaled congruence together imply the sum congruence
      if (id.verdict == Verdict::Pass && lem.verdict == Verdict::Pass)
        CHECK(cor.verdict == Verdict::Pass);
    }
  }
}

TEST_CASE("checkers are deterministic") {
  auto a = check_theorem_main(13, rat(1, 2), rat(1, 3));
  auto b = check_theorem_main(13, rat(1, 2), rat(1, 3));
  CHECK(a.claim == b.claim);
  CHECK(a.p == b.p);
  CHECK(a.e == b.e);
  CHECK(a.params == b.params);
  CHECK(a.hypothesis_met == b.hypothesis_met);
  CHECK(a.achieved == b.achieved);
  CHECK(a.required == b.required);
  CHECK(a.verdict == b.verdict);
}

TEST_CASE("skipped records still log the achieved valuation") {
  auto skip = check_theorem_main(7, Rat(-1), Rat(1));
  CHECK(skip.verdict == Verdict::Skipped);
  CHECK(skip.achieved.known());
  auto skip2 = check_corollary_b(5, 4);
  CHECK(skip2.achieved.known());
}

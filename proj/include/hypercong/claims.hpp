#pragma once

#include <vector>

#include "hypercong/check_record.hpp"
#include "hypercong/gamma.hpp"
#include "hypercong/rational.hpp"

namespace hypercong {

// Product of the two truncated 2F1 factors against the 3F2, mod p^e, gated
// on <-alpha>_p being even. truncation < 0 means the standard p-1; other
// values exist for perturbation canaries.
CongruenceCheck check_theorem_main(long p, const Rat& alpha, const Rat& z,
                                   int e = 2, long truncation = -1);

// Square of the truncated 2F1 against the 3F2, mod p^e, same parity gate.
CongruenceCheck check_clausen_congruence(long p, const Rat& alpha, const Rat& z,
                                         int e = 2);

// v_p of sum_{k<p} (b^2 k + b - 1) C(2k,k)/4^k binom(-1/b,k) binom(1/b-1,k),
// gated on p ≡ ±1 (mod b) and <-1/b>_p even (vacuous for b = 1).
CongruenceCheck check_corollary_b(long p, long b, int e = 2);

// One of the four central-binomial sum congruences (which = Cor1_4A..D).
CongruenceCheck check_special_case(long p, ClaimId which);
std::vector<CongruenceCheck> check_special_cases(long p);

// The four exact binomial-product identities for 0 <= k <= k_max.
CongruenceCheck check_binomial_product_identities(long k_max);

// Exact equality of the weighted central-binomial sum with the difference
// b * 3F2[1+1/b, 1-1/b, 1/2; 1, 1 | 1] - 3F2[1/b, 1-1/b, 1/2; 1, 1 | 1],
// both truncated at p-1. ZeroDenominatorError when p | b.
CongruenceCheck check_identity_1_9(long p, long b);

// Harmonic-number identity mod p for primes p > 3 (BadPrimeError otherwise).
CongruenceCheck check_lemma_tauraso(long p, const Rat& x);

// Truncated 2F1[alpha, beta; 1 | 1] against the Gamma_p quotient, mod p^e,
// branching on <-alpha>_p + <-beta>_p < p or >= p.
CongruenceCheck check_lemma_maopan(const GammaContext& ctx, const Rat& alpha,
                                   const Rat& beta);
CongruenceCheck check_lemma_maopan(long p, const Rat& alpha, const Rat& beta,
                                   int e = 2);

// b * 3F2[1+1/b, ...] ≡ 3F2[1/b, ...] (mod p^e) for gated (p, b), b >= 2.
CongruenceCheck check_lemma_2_3(long p, long b, int e = 2);

// The three mod-p^2 expansions at alpha = 1 + p t (primes p > 3).
CongruenceCheck check_case2_expansions(long p, const Rat& t, const Rat& z);

// v_p(S) - v_p(D) >= 2 for the order-pn-1 sum S and prefactor denominator
// D = n^2 binom(-1/b,n) binom(1/b-1,n); exploratory for n >= 2. D = 0 is
// reported as a skipped record (the claim presumes D != 0).
CongruenceCheck explore_conjecture(long p, long b, long n);

}  // namespace hypercong

#include "hypercong/claims.hpp"

#include "hypercong/errors.hpp"
#include "hypercong/hyper.hpp"
#include "hypercong/residue.hpp"

namespace hypercong {

namespace {

void require_prime(long p) {
  if (!is_prime(p)) throw BadPrimeError(std::to_string(p) + " is not prime");
}

void require_odd_prime(long p) {
  if (!is_prime(p) || p % 2 == 0)
    throw BadPrimeError("requires an odd prime, got " + std::to_string(p));
}

void require_prime_gt3(long p) {
  if (!is_prime(p) || p <= 3)
    throw BadPrimeError("requires a prime p > 3, got " + std::to_string(p));
}

ValuationResult residue_diff(const Residue& lhs, const Residue& rhs,
                             const ResidueRing& ring) {
  auto v = ring.valuation(ring.sub(lhs, rhs));
  return v ? ValuationResult::exact(*v)
           : ValuationResult::at_least(ring.exponent());
}

ValuationResult exact_valuation(const Rat& x, long p) {
  auto v = valuation(x, p);
  return v ? ValuationResult::exact(*v) : ValuationResult::infinite();
}

struct Gate {
  bool met;
  std::string reason;
};

// p ≡ ±1 (mod b) and <-1/b>_p even; vacuous for b = 1. Meeting the first
// condition with b >= 2 forces p ∤ b, so the least residue is defined.
Gate b_gate(long p, long b) {
  if (b == 1) return {true, ""};
  long r = p % b;
  if (r != 1 && r != b - 1)
    return {false, "p = " + std::to_string(r) + " (mod b), not +-1"};
  long a = least_residue(rat(-1, b), p);
  if (a % 2 != 0) return {false, "<-1/b>_p = " + std::to_string(a) + " is odd"};
  return {true, ""};
}

// Numerator of the weighted central-binomial sum
//   S = sum_{k=0}^{K} (b^2 k + b - 1) C(2k,k)/4^k binom(-1/b,k) binom(1/b-1,k)
// over the common denominator 4^K b^(2K) (K!)^2, using
//   binom(-1/b,k) binom(1/b-1,k) = (1/b)_k (1-1/b)_k / (k!)^2
// and the all-integer products P1 = prod(1+ib), P2 = prod(ib-1).
Int corollary_sum_numerator(long b, long K) {
  Int acc(b - 1);
  Int central(1), p1(1), p2(1);
  for (long k = 1; k <= K; ++k) {
    central *= 2 * (2 * k - 1);
    mpz_divexact_ui(central.get_mpz_t(), central.get_mpz_t(),
                    static_cast<unsigned long>(k));
    p1 *= Int(b) * (k - 1) + 1;
    p2 *= Int(b) * k - 1;
    Int coeff = Int(b) * b;
    coeff *= k;
    coeff += b - 1;
    Int ratio = Int(4) * b;
    ratio *= b;
    ratio *= k;
    ratio *= k;
    acc = acc * ratio + coeff * central * p1 * p2;
  }
  return acc;
}

long corollary_denominator_valuation(long b, long K, long p) {
  long v = 2 * factorial_valuation(static_cast<unsigned long>(K), p);
  v += K * valuation(Int(4), p).value_or(0);
  v += 2 * K * valuation(Int(b), p).value_or(0);
  return v;
}

ValuationResult corollary_sum_valuation(long b, long K, long p) {
  Int num = corollary_sum_numerator(b, K);
  if (num == 0) return ValuationResult::infinite();
  return ValuationResult::exact(*valuation(num, p) -
                                corollary_denominator_valuation(b, K, p));
}

Rat corollary_sum_exact(long b, long K) {
  Int den = ipow(Int(4), static_cast<unsigned long>(K)) *
            ipow(Int(b), 2 * static_cast<unsigned long>(K)) *
            ipow(factorial(static_cast<unsigned long>(K)), 2);
  return make_rational(corollary_sum_numerator(b, K), den);
}

}  // namespace

CongruenceCheck check_theorem_main(long p, const Rat& alpha, const Rat& z,
                                   int e, long truncation) {
  require_odd_prime(p);
  const long trunc = truncation < 0 ? p - 1 : truncation;
  CongruenceCheck c;
  c.claim = ClaimId::ThmMain;
  c.p = p;
  c.e = e;
  c.params = {{"alpha", to_string(alpha)}, {"z", to_string(z)}};
  if (trunc != p - 1) c.params.emplace_back("trunc", std::to_string(trunc));
  c.required = ValuationResult::exact(e);
  const long a = least_residue(-alpha, p);
  c.hypothesis_met = a % 2 == 0;
  if (!c.hypothesis_met)
    c.reason = "<-alpha>_p = " + std::to_string(a) + " is odd";
  ResidueRing ring(p, e);
  const Rat ha = alpha / 2;
  Residue l1 = eval_truncated_mod({{ha, rat(3, 2) - ha}, {Rat(1)}, z, trunc}, ring);
  Residue l2 = eval_truncated_mod({{ha, rat(1, 2) - ha}, {Rat(1)}, z, trunc}, ring);
  Residue r = eval_truncated_mod(
      {{alpha, 2 - alpha, rat(1, 2)}, {Rat(1), Rat(1)}, z, trunc}, ring);
  c.achieved = residue_diff(ring.mul(l1, l2), r, ring);
  c.verdict = judge(c.hypothesis_met, c.achieved, c.required);
  return c;
}

CongruenceCheck check_clausen_congruence(long p, const Rat& alpha, const Rat& z,
                                         int e) {
  require_odd_prime(p);
  CongruenceCheck c;
  c.claim = ClaimId::Eq1_3;
  c.p = p;
  c.e = e;
  c.params = {{"alpha", to_string(alpha)}, {"z", to_string(z)}};
  c.required = ValuationResult::exact(e);
  const long a = least_residue(-alpha, p);
  c.hypothesis_met = a % 2 == 0;
  if (!c.hypothesis_met)
    c.reason = "<-alpha>_p = " + std::to_string(a) + " is odd";
  ResidueRing ring(p, e);
  const Rat ha = alpha / 2;
  Residue l = eval_truncated_mod({{ha, rat(1, 2) - ha}, {Rat(1)}, z, p - 1}, ring);
  Residue r = eval_truncated_mod(
      {{alpha, 1 - alpha, rat(1, 2)}, {Rat(1), Rat(1)}, z, p - 1}, ring);
  c.achieved = residue_diff(ring.mul(l, l), r, ring);
  c.verdict = judge(c.hypothesis_met, c.achieved, c.required);
  return c;
}

CongruenceCheck check_corollary_b(long p, long b, int e) {
  require_prime(p);
  if (b < 1) throw ConfigError("b must be >= 1");
  CongruenceCheck c;
  c.claim = ClaimId::Cor1_3;
  c.p = p;
  c.e = e;
  c.params = {{"b", std::to_string(b)}};
  c.required = ValuationResult::exact(e);
  Gate g = b_gate(p, b);
  c.hypothesis_met = g.met;
  c.reason = g.reason;
  c.achieved = corollary_sum_valuation(b, p - 1, p);
  c.verdict = judge(c.hypothesis_met, c.achieved, c.required);
  return c;
}

CongruenceCheck check_special_case(long p, ClaimId which) {
  require_odd_prime(p);
  long base = 0;
  long cm = 0, cc = 0;
  bool gate = false;
  int required = 2;
  switch (which) {
    case ClaimId::Cor1_4A:
      base = 108, cm = 9, cc = 2, gate = (p % 3 == 1);
      break;
    case ClaimId::Cor1_4B:
      base = 256, cm = 16, cc = 3, gate = (p % 8 == 1 || p % 8 == 3);
      if (p == 3) required = 3;
      break;
    case ClaimId::Cor1_4C:
      base = 64, cm = 4, cc = 1, gate = (p % 4 == 1);
      break;
    case ClaimId::Cor1_4D:
      base = 1728, cm = 36, cc = 5, gate = (p % 4 == 1);
      if (p == 5) required = 3;
      break;
    default:
      throw ConfigError("not a special-case claim id");
  }
  auto binoms = [&](unsigned long k) -> Int {
    switch (which) {
      case ClaimId::Cor1_4A:
        return binomial(2 * k, k) * binomial(2 * k, k) * binomial(3 * k, k);
      case ClaimId::Cor1_4B:
        return binomial(2 * k, k) * binomial(2 * k, k) * binomial(4 * k, 2 * k);
      case ClaimId::Cor1_4C:
        return binomial(2 * k, k) * binomial(2 * k, k) * binomial(2 * k, k);
      default:
        return binomial(6 * k, 3 * k) * binomial(3 * k, k) * binomial(2 * k, k);
    }
  };
  CongruenceCheck c;
  c.claim = which;
  c.p = p;
  c.e = required;
  c.required = ValuationResult::exact(required);
  c.hypothesis_met = gate;
  if (!gate) c.reason = "residue class of p fails the gate";
  Int acc(cc);  // k = 0 term over denominator base^0
  for (long k = 1; k <= p - 1; ++k)
    acc = acc * base + Int(cm * k + cc) * binoms(static_cast<unsigned long>(k));
  if (acc == 0) {
    c.achieved = ValuationResult::infinite();
  } else {
    long vden = (p - 1) * valuation(Int(base), p).value_or(0);
    c.achieved = ValuationResult::exact(*valuation(acc, p) - vden);
  }
  c.verdict = judge(c.hypothesis_met, c.achieved, c.required);
  return c;
}

std::vector<CongruenceCheck> check_special_cases(long p) {
  return {check_special_case(p, ClaimId::Cor1_4A),
          check_special_case(p, ClaimId::Cor1_4B),
          check_special_case(p, ClaimId::Cor1_4C),
          check_special_case(p, ClaimId::Cor1_4D)};
}

CongruenceCheck check_binomial_product_identities(long k_max) {
  if (k_max < 0) throw ConfigError("k_max must be >= 0");
  CongruenceCheck c;
  c.claim = ClaimId::BinomIds;
  c.params = {{"k_max", std::to_string(k_max)}};
  c.required = ValuationResult::infinite();
  long bad = -1;
  for (long sk = 0; sk <= k_max && bad < 0; ++sk) {
    auto k = static_cast<unsigned long>(sk);
    Rat c2k(binomial(2 * k, k));
    if (binomial_rational(rat(-1, 2), k) != c2k / rpow(rat(-4), k)) bad = sk;
    if (binomial_rational(rat(-1, 3), k) * binomial_rational(rat(-2, 3), k) !=
        c2k * Rat(binomial(3 * k, k)) / rpow(rat(27), k))
      bad = sk;
    if (binomial_rational(rat(-1, 4), k) * binomial_rational(rat(-3, 4), k) !=
        c2k * Rat(binomial(4 * k, 2 * k)) / rpow(rat(64), k))
      bad = sk;
    if (binomial_rational(rat(-1, 6), k) * binomial_rational(rat(-5, 6), k) !=
        Rat(binomial(6 * k, 3 * k)) * Rat(binomial(3 * k, k)) / rpow(rat(432), k))
      bad = sk;
  }
  if (bad >= 0) c.params.emplace_back("first_mismatch_k", std::to_string(bad));
  c.achieved = bad < 0 ? ValuationResult::infinite() : ValuationResult::none();
  c.verdict = judge(true, c.achieved, c.required);
  return c;
}

CongruenceCheck check_identity_1_9(long p, long b) {
  require_prime(p);
  if (b < 1) throw ConfigError("b must be >= 1");
  if (b % p == 0) throw ZeroDenominatorError("p divides b");
  CongruenceCheck c;
  c.claim = ClaimId::Eq1_9;
  c.p = p;
  c.params = {{"b", std::to_string(b)}};
  c.required = ValuationResult::infinite();
  const long trunc = p - 1;
  Rat lhs = corollary_sum_exact(b, trunc);
  Rat ob = rat(1, b);
  Rat f1 = eval_truncated_exact(
      {{1 + ob, 1 - ob, rat(1, 2)}, {Rat(1), Rat(1)}, Rat(1), trunc});
  Rat f2 = eval_truncated_exact(
      {{ob, 1 - ob, rat(1, 2)}, {Rat(1), Rat(1)}, Rat(1), trunc});
  c.achieved = exact_valuation(lhs - (b * f1 - f2), p);
  c.verdict = judge(true, c.achieved, c.required);
  return c;
}

CongruenceCheck check_lemma_tauraso(long p, const Rat& x) {
  require_prime_gt3(p);
  ResidueRing ring(p, 1);
  CongruenceCheck c;
  c.claim = ClaimId::LemTauraso;
  c.p = p;
  c.e = 1;
  c.params = {{"x", to_string(x)}};
  c.required = ValuationResult::exact(1);
  Residue xr = ring.reduce(x);
  Residue xk = ring.one();
  Residue s1 = ring.zero(), s2 = ring.zero();
  for (long k = 1; k <= p - 1; ++k) {
    xk = ring.mul(xk, xr);
    Residue term = ring.mul(
        ring.from_int(binomial(2 * static_cast<unsigned long>(k),
                               static_cast<unsigned long>(k))),
        xk);
    s1 = ring.add(s1, term);
    s2 = ring.add(s2, ring.div(term, ring.from_long(k)));
  }
  // The harmonic side is summed exactly: H_{2k-1} alone is not p-integral
  // once 2k-1 >= p, but C(2k,k) carries the compensating factor of p.
  Rat acc(0);
  Rat xq(1);
  for (long k = 1; k <= p - 1; ++k) {
    xq *= x;
    auto ku = static_cast<unsigned long>(k);
    acc += Rat(binomial(2 * ku, ku)) * (harmonic(2 * ku - 1) - harmonic(ku)) * xq;
  }
  c.achieved = residue_diff(ring.mul(s1, s2), ring.reduce(2 * acc), ring);
  c.verdict = judge(true, c.achieved, c.required);
  return c;
}

CongruenceCheck check_lemma_maopan(const GammaContext& ctx, const Rat& alpha,
                                   const Rat& beta) {
  const ResidueRing& ring = ctx.ring();
  const long p = ring.prime();
  CongruenceCheck c;
  c.claim = ClaimId::LemMaoPan;
  c.p = p;
  c.e = ring.exponent();
  c.params = {{"alpha", to_string(alpha)}, {"beta", to_string(beta)}};
  c.required = ValuationResult::exact(ring.exponent());
  const long s = least_residue(-alpha, p) + least_residue(-beta, p);
  Residue lhs =
      eval_truncated_mod({{alpha, beta}, {Rat(1)}, Rat(1), p - 1}, ring);
  Residue quot = ring.div(
      ctx.gamma(1 - alpha - beta),
      ring.mul(ctx.gamma(1 - alpha), ctx.gamma(1 - beta)));
  Residue rhs = s < p ? ring.neg(quot)
                      : ring.mul(ring.reduce(alpha + beta + (s - p)), quot);
  c.achieved = residue_diff(lhs, rhs, ring);
  c.verdict = judge(true, c.achieved, c.required);
  return c;
}

CongruenceCheck check_lemma_maopan(long p, const Rat& alpha, const Rat& beta,
                                   int e) {
  ResidueRing ring(p, e);
  GammaContext ctx(ring);
  return check_lemma_maopan(ctx, alpha, beta);
}

CongruenceCheck check_lemma_2_3(long p, long b, int e) {
  require_prime(p);
  if (b < 2) throw ConfigError("b must be >= 2");
  CongruenceCheck c;
  c.claim = ClaimId::Lem2_3;
  c.p = p;
  c.e = e;
  c.params = {{"b", std::to_string(b)}};
  c.required = ValuationResult::exact(e);
  Gate g = b_gate(p, b);
  c.hypothesis_met = g.met;
  c.reason = g.reason;
  if (p % 2 != 0 && b % p != 0) {
    ResidueRing ring(p, e);
    Rat ob = rat(1, b);
    Residue f1 = eval_truncated_mod(
        {{1 + ob, 1 - ob, rat(1, 2)}, {Rat(1), Rat(1)}, Rat(1), p - 1}, ring);
    Residue f2 = eval_truncated_mod(
        {{ob, 1 - ob, rat(1, 2)}, {Rat(1), Rat(1)}, Rat(1), p - 1}, ring);
    c.achieved = residue_diff(ring.mul(ring.from_long(b), f1), f2, ring);
  }
  c.verdict = judge(c.hypothesis_met, c.achieved, c.required);
  return c;
}

CongruenceCheck check_case2_expansions(long p, const Rat& t, const Rat& z) {
  require_prime_gt3(p);
  ResidueRing ring(p, 2);
  CongruenceCheck c;
  c.claim = ClaimId::Case2Exp;
  c.p = p;
  c.e = 2;
  c.params = {{"t", to_string(t)}, {"z", to_string(z)}};
  c.required = ValuationResult::exact(2);
  const Rat alpha = 1 + p * t;
  const Rat ha = alpha / 2;
  const Rat z4 = z / 4;

  Residue la =
      eval_truncated_mod({{ha, rat(3, 2) - ha}, {Rat(1)}, z, p - 1}, ring);
  Rat acc(0);
  Rat zq(1);
  for (long k = 0; k <= p - 1; ++k) {
    auto ku = static_cast<unsigned long>(k);
    acc += Rat(binomial(2 * ku, ku)) *
           (1 + Rat(p) * t * (harmonic(2 * ku) - harmonic(ku))) * zq;
    zq *= z4;
  }
  ValuationResult va = residue_diff(la, ring.reduce(acc), ring);

  Residue lb =
      eval_truncated_mod({{ha, rat(1, 2) - ha}, {Rat(1)}, z, p - 1}, ring);
  acc = 0;
  zq = z4;
  for (long k = 1; k <= p - 1; ++k) {
    auto ku = static_cast<unsigned long>(k);
    acc += Rat(binomial(2 * ku, ku)) / Rat(k) * zq;
    zq *= z4;
  }
  ValuationResult vb =
      residue_diff(lb, ring.reduce(1 - Rat(p) * t / 2 * acc), ring);

  Residue lc = eval_truncated_mod(
      {{alpha, 2 - alpha, rat(1, 2)}, {Rat(1), Rat(1)}, z, p - 1}, ring);
  acc = 0;
  zq = 1;
  for (long k = 0; k <= p - 1; ++k) {
    auto ku = static_cast<unsigned long>(k);
    acc += Rat(binomial(2 * ku, ku)) * zq;
    zq *= z4;
  }
  ValuationResult vc = residue_diff(lc, ring.reduce(acc), ring);

  c.achieved = weaker(weaker(va, vb), vc);
  c.verdict = judge(true, c.achieved, c.required);
  return c;
}

CongruenceCheck explore_conjecture(long p, long b, long n) {
  require_prime(p);
  if (b < 1) throw ConfigError("b must be >= 1");
  if (n < 1) throw ConfigError("n must be >= 1");
  CongruenceCheck c;
  c.claim = ClaimId::Conj1_2;
  c.p = p;
  c.e = 2;
  c.params = {{"b", std::to_string(b)}, {"n", std::to_string(n)}};
  c.required = ValuationResult::exact(2);
  c.exploratory = n >= 2;
  Gate g = b_gate(p, b);
  c.hypothesis_met = g.met;
  c.reason = g.reason;
  Rat prefactor = Rat(n) * Rat(n) *
                  binomial_rational(rat(-1, b), static_cast<unsigned long>(n)) *
                  binomial_rational(rat(1, b) - 1, static_cast<unsigned long>(n));
  if (prefactor == 0) {
    c.hypothesis_met = false;
    c.reason = c.reason.empty() ? "prefactor D = 0, statement undefined"
                                : c.reason + "; prefactor D = 0";
    c.verdict = Verdict::Skipped;
    return c;
  }
  const long top = p * n - 1;
  Int num = corollary_sum_numerator(b, top);
  if (num == 0) {
    c.achieved = ValuationResult::infinite();
  } else {
    long vs = *valuation(num, p) - corollary_denominator_valuation(b, top, p);
    c.achieved = ValuationResult::exact(vs - *valuation(prefactor, p));
  }
  c.verdict = judge(c.hypothesis_met, c.achieved, c.required);
  return c;
}

}  // namespace hypercong

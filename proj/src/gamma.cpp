#include "hypercong/gamma.hpp"

#include "hypercong/errors.hpp"

namespace hypercong {

namespace {

// Prefix tables above this many entries would not pay for themselves.
constexpr unsigned long kMaxTable = 4'000'000;

Residue apply_sign(unsigned long n, const Residue& prod, const ResidueRing& ring) {
  return (n % 2 == 1) ? ring.neg(prod) : prod;
}

ValuationResult residue_diff(const Residue& lhs, const Residue& rhs,
                             const ResidueRing& ring) {
  auto v = ring.valuation(ring.sub(lhs, rhs));
  return v ? ValuationResult::exact(*v)
           : ValuationResult::at_least(ring.exponent());
}

}  // namespace

Residue gamma_nat(unsigned long n, const ResidueRing& ring) {
  Residue acc = ring.one();
  const auto p = static_cast<unsigned long>(ring.prime());
  for (unsigned long k = 1; k < n; ++k)
    if (k % p != 0) acc = ring.mul(acc, ring.from_long(static_cast<long>(k)));
  return apply_sign(n, acc, ring);
}

GammaContext::GammaContext(const ResidueRing& ring) : ring_(ring) {
  if (!ring_.modulus().fits_ulong_p())
    throw ConfigError("modulus too large for Gamma_p evaluation");
  const auto mod = ring_.modulus().get_ui();
  if (mod > kMaxTable) return;  // fall back to the direct product
  const auto p = static_cast<unsigned long>(ring_.prime());
  prefix_.reserve(mod + 1);
  prefix_.push_back(Int(1));
  Int acc(1);
  for (unsigned long n = 1; n <= mod; ++n) {
    unsigned long k = n - 1;
    if (k >= 1 && k % p != 0) {
      acc *= k;
      mpz_mod(acc.get_mpz_t(), acc.get_mpz_t(), ring_.modulus().get_mpz_t());
    }
    prefix_.push_back(acc);
  }
}

Residue GammaContext::gamma_nat(unsigned long n) const {
  if (!prefix_.empty() && n < prefix_.size())
    return apply_sign(n, Residue{prefix_[n]}, ring_);
  return hypercong::gamma_nat(n, ring_);
}

Residue GammaContext::gamma(const Rat& x) const {
  return gamma_nat(ring_.reduce(x).v.get_ui());
}

Residue gamma_p(const Rat& x, const ResidueRing& ring) {
  Residue n = ring.reduce(x);
  if (!n.v.fits_ulong_p())
    throw ConfigError("modulus too large for Gamma_p evaluation");
  return gamma_nat(n.v.get_ui(), ring);
}

CongruenceCheck check_gamma_shift(const Rat& x, const GammaContext& ctx) {
  const ResidueRing& ring = ctx.ring();
  CongruenceCheck c;
  c.claim = ClaimId::GammaShift;
  c.p = ring.prime();
  c.e = ring.exponent();
  c.params = {{"x", to_string(x)}};
  c.required = ValuationResult::exact(ring.exponent());
  Residue lhs = ctx.gamma(x + 1);
  Residue rhs = least_residue(x, ring.prime()) == 0
                    ? ring.neg(ctx.gamma(x))
                    : ring.mul(ring.reduce(-x), ctx.gamma(x));
  c.achieved = residue_diff(lhs, rhs, ring);
  c.verdict = judge(true, c.achieved, c.required);
  return c;
}

CongruenceCheck check_gamma_reflection(const Rat& x, const GammaContext& ctx) {
  const ResidueRing& ring = ctx.ring();
  CongruenceCheck c;
  c.claim = ClaimId::GammaReflect;
  c.p = ring.prime();
  c.e = ring.exponent();
  c.params = {{"x", to_string(x)}};
  c.required = ValuationResult::exact(ring.exponent());
  Residue lhs = ring.mul(ctx.gamma(x), ctx.gamma(1 - x));
  long sign_exp = ring.prime() - least_residue(-x, ring.prime());
  Residue rhs = (sign_exp % 2 != 0) ? ring.neg(ring.one()) : ring.one();
  c.achieved = residue_diff(lhs, rhs, ring);
  c.verdict = judge(true, c.achieved, c.required);
  return c;
}

}  // namespace hypercong

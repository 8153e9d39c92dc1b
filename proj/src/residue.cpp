#include "hypercong/residue.hpp"

#include <vector>

#include "hypercong/errors.hpp"

namespace hypercong {

bool is_prime(long n) {
  if (n < 2) return false;
  if (n < 4) return true;
  if (n % 2 == 0) return false;
  for (long d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

std::vector<long> primes_in_range(long lo, long hi) {
  std::vector<long> out;
  if (hi < 2) return out;
  if (hi > 100'000'000) throw ConfigError("prime bound too large");
  std::vector<bool> composite(static_cast<std::size_t>(hi) + 1, false);
  for (long i = 2; i * i <= hi; ++i)
    if (!composite[static_cast<std::size_t>(i)])
      for (long j = i * i; j <= hi; j += i) composite[static_cast<std::size_t>(j)] = true;
  for (long i = std::max(lo, 2L); i <= hi; ++i)
    if (!composite[static_cast<std::size_t>(i)]) out.push_back(i);
  return out;
}

ResidueRing::ResidueRing(long p, int e) : p_(p), e_(e) {
  if (p < 3 || p % 2 == 0 || !is_prime(p))
    throw BadPrimeError("residue ring needs an odd prime, got " + std::to_string(p));
  if (e < 1 || e > 64) throw BadPrimeError("exponent out of range");
  m_ = ipow(Int(p), static_cast<unsigned long>(e));
}

Residue ResidueRing::from_int(const Int& n) const {
  Residue r;
  mpz_mod(r.v.get_mpz_t(), n.get_mpz_t(), m_.get_mpz_t());
  return r;
}

Residue ResidueRing::from_long(long n) const { return from_int(Int(n)); }

Residue ResidueRing::reduce(const Rat& x) const {
  const Int& den = x.get_den();
  if (mpz_divisible_ui_p(den.get_mpz_t(), static_cast<unsigned long>(p_)))
    throw NonPIntegralError("denominator " + den.get_str() + " divisible by " +
                            std::to_string(p_));
  Int inv;
  mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), m_.get_mpz_t());
  return from_int(x.get_num() * inv);
}

Residue ResidueRing::add(const Residue& a, const Residue& b) const {
  return from_int(a.v + b.v);
}

Residue ResidueRing::sub(const Residue& a, const Residue& b) const {
  return from_int(a.v - b.v);
}

Residue ResidueRing::neg(const Residue& a) const {
  return a.v == 0 ? a : Residue{m_ - a.v};
}

Residue ResidueRing::mul(const Residue& a, const Residue& b) const {
  return from_int(a.v * b.v);
}

Residue ResidueRing::inv(const Residue& a) const {
  Residue r;
  if (mpz_invert(r.v.get_mpz_t(), a.v.get_mpz_t(), m_.get_mpz_t()) == 0)
    throw NonUnitDenominatorError(a.v.get_str() + " is not a unit mod " +
                                  std::to_string(p_) + "^" + std::to_string(e_));
  return r;
}

Residue ResidueRing::div(const Residue& a, const Residue& b) const {
  return mul(a, inv(b));
}

Residue ResidueRing::pow(const Residue& base, unsigned long exp) const {
  Residue r;
  mpz_powm_ui(r.v.get_mpz_t(), base.v.get_mpz_t(), exp, m_.get_mpz_t());
  return r;
}

bool ResidueRing::is_unit(const Residue& a) const {
  return mpz_divisible_ui_p(a.v.get_mpz_t(), static_cast<unsigned long>(p_)) == 0;
}

std::optional<long> ResidueRing::valuation(const Residue& a) const {
  if (a.v == 0) return std::nullopt;
  return hypercong::valuation(a.v, p_);
}

long least_residue(const Rat& x, long p) {
  if (!is_prime(p)) throw BadPrimeError(std::to_string(p) + " is not prime");
  const Int pz(p);
  if (mpz_divisible_p(x.get_den().get_mpz_t(), pz.get_mpz_t()))
    throw NonPIntegralError("denominator " + x.get_den().get_str() +
                            " divisible by " + std::to_string(p));
  Int inv;
  mpz_invert(inv.get_mpz_t(), x.get_den().get_mpz_t(), pz.get_mpz_t());
  Int r;
  mpz_mod(r.get_mpz_t(), Int(x.get_num() * inv).get_mpz_t(), pz.get_mpz_t());
  return r.get_si();
}

Residue pochhammer_residue(const Rat& x, unsigned long k, const ResidueRing& ring) {
  Residue acc = ring.one();
  Residue cur = ring.reduce(x);
  for (unsigned long i = 0; i < k; ++i) {
    acc = ring.mul(acc, cur);
    cur = ring.add(cur, ring.one());
  }
  return acc;
}

}  // namespace hypercong

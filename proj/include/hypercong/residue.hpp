#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hypercong/rational.hpp"

namespace hypercong {

bool is_prime(long n);
std::vector<long> primes_in_range(long lo, long hi);

struct Residue {
  Int v;
  bool operator==(const Residue&) const = default;
};

// The ring Z/p^e for an odd prime p. Residues produced by one ring must not
// be mixed with another ring's; all operations keep values in [0, p^e).
class ResidueRing {
 public:
  ResidueRing(long p, int e);

  long prime() const { return p_; }
  int exponent() const { return e_; }
  const Int& modulus() const { return m_; }

  Residue zero() const { return {Int(0)}; }
  Residue one() const { return {Int(1)}; }
  Residue from_int(const Int& n) const;
  Residue from_long(long n) const;

  // num * den^{-1} mod p^e; NonPIntegralError if p | den.
  Residue reduce(const Rat& x) const;

  Residue add(const Residue& a, const Residue& b) const;
  Residue sub(const Residue& a, const Residue& b) const;
  Residue neg(const Residue& a) const;
  Residue mul(const Residue& a, const Residue& b) const;
  Residue inv(const Residue& a) const;  // NonUnitDenominatorError
  Residue div(const Residue& a, const Residue& b) const;
  Residue pow(const Residue& base, unsigned long exp) const;

  bool is_unit(const Residue& a) const;

  // v_p of a nonzero residue; nullopt when the value is 0 (so v_p >= e).
  std::optional<long> valuation(const Residue& a) const;

 private:
  long p_;
  int e_;
  Int m_;
};

// Least nonnegative residue <x>_p; accepts any prime p >= 2.
long least_residue(const Rat& x, long p);

// (x)_k in Z/p^e via the recurrence (x)_{k+1} = (x)_k * (x + k).
Residue pochhammer_residue(const Rat& x, unsigned long k, const ResidueRing& ring);

}  // namespace hypercong

#pragma once

#include <vector>

#include "hypercong/check_record.hpp"
#include "hypercong/rational.hpp"
#include "hypercong/residue.hpp"

namespace hypercong {

// (-1)^n times the product of 1 <= k < n coprime to p, reduced mod p^e.
// n = 0 gives 1.
Residue gamma_nat(unsigned long n, const ResidueRing& ring);

// Gamma_p on p-integral rationals mod p^e via the least-residue lift.
// Carries a prefix-product table over [0, p^e] so repeated evaluations in a
// sweep cost O(1) after the O(p^e) build; the table is defined by equality
// with the direct product.
class GammaContext {
 public:
  explicit GammaContext(const ResidueRing& ring);

  const ResidueRing& ring() const { return ring_; }
  Residue gamma_nat(unsigned long n) const;
  Residue gamma(const Rat& x) const;  // NonPIntegralError if p | den(x)

 private:
  ResidueRing ring_;
  std::vector<Int> prefix_;  // prefix_[n] = prod_{1<=k<n, p∤k} k mod p^e
};

// One-shot Gamma_p(x) mod p^e without a table.
Residue gamma_p(const Rat& x, const ResidueRing& ring);

// Gamma_p(x+1) against -x * Gamma_p(x) (p ∤ x) or -Gamma_p(x) (p | x).
CongruenceCheck check_gamma_shift(const Rat& x, const GammaContext& ctx);

// Gamma_p(x) * Gamma_p(1-x) against (-1)^(p - <-x>_p).
CongruenceCheck check_gamma_reflection(const Rat& x, const GammaContext& ctx);

}  // namespace hypercong

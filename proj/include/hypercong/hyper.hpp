#pragma once

#include <vector>

#include "hypercong/rational.hpp"
#include "hypercong/residue.hpp"

namespace hypercong {

// A truncated (m+1)F_m series: upper parameters x_0..x_m, lower parameters
// y_1..y_m, argument z, truncated after the z^truncation term.
struct HyperSpec {
  std::vector<Rat> upper;
  std::vector<Rat> lower;
  Rat argument;
  long truncation = 0;
};

// Sum over Z/p^e using the term ratio recurrence; every division must be by
// a unit, otherwise NonUnitDenominatorError. NonPIntegralError for
// parameters or argument with p in the denominator.
Residue eval_truncated_mod(const HyperSpec& spec, const ResidueRing& ring);

// Exact rational value of the truncated sum. ZeroDenominatorError when a
// lower parameter hits a nonpositive integer before the truncation order.
Rat eval_truncated_exact(const HyperSpec& spec);

// C(2k,k)/4^k mod p^e, equal to (1/2)_k / k! there; requires 0 <= k <= p-1.
Residue central_binomial_term(long k, const ResidueRing& ring);

}  // namespace hypercong

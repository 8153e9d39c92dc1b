#pragma once

#include <string>
#include <utility>
#include <vector>

#include "hypercong/rational.hpp"

namespace hypercong {

// Coefficient sizes grow fast with the order; orders beyond this are refused.
inline constexpr long kMaxSeriesOrder = 200;

// Truncated formal power series over Q; coeff[k] multiplies z^k.
struct PowerSeries {
  std::vector<Rat> coeff;

  long order() const { return static_cast<long>(coeff.size()) - 1; }
  bool operator==(const PowerSeries&) const = default;
};

// Coefficients of the hypergeometric series with the given parameter lists,
// through z^order. ZeroDenominatorError if a lower Pochhammer vanishes.
PowerSeries hyper_series(const std::vector<Rat>& upper,
                         const std::vector<Rat>& lower, long order);

// Cauchy product truncated at the common order; OrderMismatchError.
PowerSeries series_mul(const PowerSeries& a, const PowerSeries& b);

struct IdentityCheck {
  std::string identity;
  std::vector<std::pair<std::string, std::string>> params;
  long order = 0;
  bool pass = false;
  long first_mismatch = -1;  // coefficient index, -1 when pass
};

// Square of 2F1[a/2, b/2; (1+a+b)/2] against
// 3F2[a, b, (a+b)/2; a+b, (1+a+b)/2], coefficient-wise.
IdentityCheck check_clausen(const Rat& alpha, const Rat& beta, long order);

// The beta = 1 - alpha specialization; both lower parameters become 1.
IdentityCheck check_clausen_special(const Rat& alpha, long order);

// 2F1[a/2, b/2; (a+b-1)/2] * 2F1[a/2, b/2-1; (a+b-1)/2] against
// 3F2[a, b-1, (a+b)/2-1; a+b-2, (a+b-1)/2].
IdentityCheck check_orr(const Rat& alpha, const Rat& beta, long order);

// The beta = 3 - alpha specialization; both lower parameters become 1.
IdentityCheck check_orr_special(const Rat& alpha, long order);

}  // namespace hypercong

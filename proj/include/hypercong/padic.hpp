#pragma once

#include <string>

#include "hypercong/rational.hpp"

namespace hypercong {

// Fixed-precision element of Z_p: p^val * unit with the unit known mod
// p^prec, i.e. the value is determined mod p^(val+prec). A value that
// cancelled below its known precision is kept as the ZERO marker: zero is
// true and prec holds the absolute precision (value ≡ 0 mod p^prec).
struct PadicApprox {
  long p = 0;
  bool zero = true;
  long val = 0;
  Int unit = 0;
  int prec = 1;

  bool operator==(const PadicApprox&) const = default;
};

PadicApprox approx_zero(long p, int abs_prec);
PadicApprox approx_from_rational(const Rat& x, long p, int prec);

// The result is determined mod p^abs.
int absolute_precision(const PadicApprox& a);

PadicApprox approx_add(const PadicApprox& a, const PadicApprox& b);
PadicApprox approx_neg(const PadicApprox& a);
PadicApprox approx_sub(const PadicApprox& a, const PadicApprox& b);
PadicApprox approx_mul(const PadicApprox& a, const PadicApprox& b);
PadicApprox approx_div(const PadicApprox& a, const PadicApprox& b);

std::string to_string(const PadicApprox& a);

}  // namespace hypercong

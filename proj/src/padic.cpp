#include "hypercong/padic.hpp"

#include <algorithm>

#include "hypercong/errors.hpp"
#include "hypercong/residue.hpp"

namespace hypercong {

namespace {

void require_same_prime(const PadicApprox& a, const PadicApprox& b) {
  if (a.p != b.p)
    throw ConfigError("mixed primes in p-adic arithmetic: " +
                      std::to_string(a.p) + " vs " + std::to_string(b.p));
}

Int unit_mod(const Int& u, long p, int prec) {
  Int m = ipow(Int(p), static_cast<unsigned long>(prec));
  Int r;
  mpz_mod(r.get_mpz_t(), u.get_mpz_t(), m.get_mpz_t());
  return r;
}

PadicApprox make_nonzero(long p, long val, const Int& unit, int prec) {
  if (prec < 1) throw PrecisionExhaustedError("no guaranteed digits left");
  PadicApprox r;
  r.p = p;
  r.zero = false;
  r.val = val;
  r.prec = prec;
  r.unit = unit_mod(unit, p, prec);
  return r;
}

}  // namespace

PadicApprox approx_zero(long p, int abs_prec) {
  if (abs_prec < 1) throw PrecisionExhaustedError("no guaranteed digits left");
  PadicApprox r;
  r.p = p;
  r.zero = true;
  r.prec = abs_prec;
  return r;
}

PadicApprox approx_from_rational(const Rat& x, long p, int prec) {
  if (!is_prime(p)) throw BadPrimeError(std::to_string(p) + " is not prime");
  if (prec < 1) throw ConfigError("precision must be >= 1");
  if (x == 0) return approx_zero(p, prec);
  long vnum = *valuation(x.get_num(), p);
  long vden = *valuation(x.get_den(), p);
  long v = vnum - vden;
  if (v < 0)
    throw NonPIntegralError(to_string(x) + " has negative valuation at " +
                            std::to_string(p));
  Int pv = ipow(Int(p), static_cast<unsigned long>(vnum));
  Int num = x.get_num() / pv;  // exact
  Int den = x.get_den() / ipow(Int(p), static_cast<unsigned long>(vden));
  Int m = ipow(Int(p), static_cast<unsigned long>(prec));
  Int inv;
  mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), m.get_mpz_t());
  return make_nonzero(p, v, num * inv, prec);
}

int absolute_precision(const PadicApprox& a) {
  return a.zero ? a.prec : static_cast<int>(a.val) + a.prec;
}

PadicApprox approx_add(const PadicApprox& a, const PadicApprox& b) {
  require_same_prime(a, b);
  if (a.zero && b.zero) return approx_zero(a.p, std::min(a.prec, b.prec));
  if (a.zero || b.zero) {
    const PadicApprox& z = a.zero ? a : b;
    const PadicApprox& n = a.zero ? b : a;
    // n plus an unknown multiple of p^m
    int m = z.prec;
    if (n.val >= m) return approx_zero(a.p, m);
    int abs = std::min(m, static_cast<int>(n.val) + n.prec);
    return make_nonzero(a.p, n.val, n.unit, abs - static_cast<int>(n.val));
  }
  int abs = std::min(absolute_precision(a), absolute_precision(b));
  long v = std::min(a.val, b.val);
  int rel = abs - static_cast<int>(v);  // >= 1 since abs >= val + 1 of the min side
  Int m = ipow(Int(a.p), static_cast<unsigned long>(rel));
  Int w = a.unit * ipow(Int(a.p), static_cast<unsigned long>(a.val - v)) +
          b.unit * ipow(Int(a.p), static_cast<unsigned long>(b.val - v));
  mpz_mod(w.get_mpz_t(), w.get_mpz_t(), m.get_mpz_t());
  if (w == 0) return approx_zero(a.p, abs);
  long j = *valuation(w, a.p);
  Int unit = w / ipow(Int(a.p), static_cast<unsigned long>(j));
  return make_nonzero(a.p, v + j, unit, rel - static_cast<int>(j));
}

PadicApprox approx_neg(const PadicApprox& a) {
  if (a.zero) return a;
  Int m = ipow(Int(a.p), static_cast<unsigned long>(a.prec));
  return make_nonzero(a.p, a.val, m - a.unit, a.prec);
}

PadicApprox approx_sub(const PadicApprox& a, const PadicApprox& b) {
  return approx_add(a, approx_neg(b));
}

PadicApprox approx_mul(const PadicApprox& a, const PadicApprox& b) {
  require_same_prime(a, b);
  if (a.zero && b.zero) return approx_zero(a.p, a.prec + b.prec);
  if (a.zero || b.zero) {
    const PadicApprox& z = a.zero ? a : b;
    const PadicApprox& n = a.zero ? b : a;
    return approx_zero(a.p, z.prec + static_cast<int>(n.val));
  }
  return make_nonzero(a.p, a.val + b.val, a.unit * b.unit,
                      std::min(a.prec, b.prec));
}

PadicApprox approx_div(const PadicApprox& a, const PadicApprox& b) {
  require_same_prime(a, b);
  if (b.zero) throw ZeroDenominatorError("division by ZERO-at-precision");
  if (a.zero) {
    int abs = a.prec - static_cast<int>(b.val);
    if (abs < 1) throw PrecisionExhaustedError("no guaranteed digits left");
    return approx_zero(a.p, abs);
  }
  if (a.val < b.val)
    throw NonPIntegralError("quotient leaves the p-adic integers");
  int prec = std::min(a.prec, b.prec);
  Int m = ipow(Int(a.p), static_cast<unsigned long>(prec));
  Int inv;
  mpz_invert(inv.get_mpz_t(), b.unit.get_mpz_t(), m.get_mpz_t());
  return make_nonzero(a.p, a.val - b.val, a.unit * inv, prec);
}

std::string to_string(const PadicApprox& a) {
  if (a.zero)
    return "O(" + std::to_string(a.p) + "^" + std::to_string(a.prec) + ")";
  return std::to_string(a.p) + "^" + std::to_string(a.val) + " * " +
         a.unit.get_str() + " + O(" + std::to_string(a.p) + "^" +
         std::to_string(absolute_precision(a)) + ")";
}

}  // namespace hypercong

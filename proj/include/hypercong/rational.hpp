#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>

namespace hypercong {

using Int = mpz_class;
using Rat = mpq_class;

// Reduced fraction with positive denominator. Throws ZeroDenominatorError.
Rat make_rational(const Int& num, const Int& den);
Rat rat(long num, long den = 1);

// Parses "a" or "a/b" in base 10; sign allowed on the numerator only.
Rat parse_rational(const std::string& text);

std::string to_string(const Rat& x);

bool is_p_integral(const Rat& x, long p);

// v_p; nullopt encodes v_p(0) = +infinity.
std::optional<long> valuation(const Int& n, long p);
std::optional<long> valuation(const Rat& x, long p);

Int ipow(const Int& base, unsigned long exp);
Rat rpow(const Rat& base, unsigned long exp);

// Memoized k!; safe for concurrent callers.
Int factorial(unsigned long k);

// v_p(k!) by Legendre's formula.
long factorial_valuation(unsigned long k, long p);

// Memoized harmonic number H_k; H_0 = 0.
Rat harmonic(unsigned long k);

// Rising factorial x(x+1)...(x+k-1).
Rat pochhammer(const Rat& x, unsigned long k);

// Falling-factorial binomial x(x-1)...(x-k+1)/k!.
Rat binomial_rational(const Rat& x, unsigned long k);

Int binomial(unsigned long n, unsigned long k);

}  // namespace hypercong

#include "hypercong/hyper.hpp"

#include "hypercong/errors.hpp"

namespace hypercong {

namespace {

void require_truncation(long n) {
  if (n < 0) throw ConfigError("truncation must be >= 0");
}

// A lower parameter y kills the series if (y)_k = 0 for some k <= n, i.e.
// y is an integer in [-(n-1), 0].
void scan_lower_poles(const std::vector<Rat>& lower, long n) {
  for (const Rat& y : lower)
    if (y.get_den() == 1 && y <= 0 && -y.get_num() <= n - 1)
      throw ZeroDenominatorError("lower parameter " + to_string(y) +
                                 " vanishes before truncation " + std::to_string(n));
}

}  // namespace

Residue eval_truncated_mod(const HyperSpec& spec, const ResidueRing& ring) {
  require_truncation(spec.truncation);
  std::vector<Residue> ups, lows;
  ups.reserve(spec.upper.size());
  lows.reserve(spec.lower.size());
  for (const Rat& x : spec.upper) ups.push_back(ring.reduce(x));
  for (const Rat& y : spec.lower) lows.push_back(ring.reduce(y));
  if (spec.argument == 0) return ring.one();
  Residue z = ring.reduce(spec.argument);

  Residue term = ring.one();
  Residue acc = ring.one();
  for (long k = 0; k < spec.truncation; ++k) {
    Residue num = term;
    for (Residue& u : ups) {
      num = ring.mul(num, u);
      u = ring.add(u, ring.one());
    }
    Residue den = ring.from_long(k + 1);
    for (Residue& l : lows) {
      den = ring.mul(den, l);
      l = ring.add(l, ring.one());
    }
    if (!ring.is_unit(den))
      throw NonUnitDenominatorError("denominator not a unit at term " +
                                    std::to_string(k + 1));
    term = ring.mul(ring.mul(num, z), ring.inv(den));
    acc = ring.add(acc, term);
  }
  return acc;
}

Rat eval_truncated_exact(const HyperSpec& spec) {
  require_truncation(spec.truncation);
  scan_lower_poles(spec.lower, spec.truncation);
  if (spec.argument == 0) return Rat(1);

  Rat term(1);
  Rat acc(1);
  for (long k = 0; k < spec.truncation; ++k) {
    Rat num(1);
    for (const Rat& x : spec.upper) num *= x + k;
    Rat den(k + 1);
    for (const Rat& y : spec.lower) den *= y + k;
    term = term * num * spec.argument / den;
    acc += term;
  }
  return acc;
}

Residue central_binomial_term(long k, const ResidueRing& ring) {
  if (k < 0) throw ConfigError("k must be >= 0");
  if (k >= ring.prime())
    throw NonUnitDenominatorError("k! is not a unit for k = " + std::to_string(k) +
                                  " >= p = " + std::to_string(ring.prime()));
  Residue num = ring.from_int(binomial(2 * static_cast<unsigned long>(k),
                                       static_cast<unsigned long>(k)));
  Residue den = ring.pow(ring.from_long(4), static_cast<unsigned long>(k));
  return ring.div(num, den);
}

}  // namespace hypercong

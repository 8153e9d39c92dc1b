#include "hypercong/rational.hpp"

#include <algorithm>
#include <cctype>
#include <mutex>
#include <vector>

#include "hypercong/errors.hpp"

namespace hypercong {

Rat make_rational(const Int& num, const Int& den) {
  if (den == 0) throw ZeroDenominatorError("zero denominator");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

Rat rat(long num, long den) { return make_rational(Int(num), Int(den)); }

Rat parse_rational(const std::string& text) {
  auto digits = [](const std::string& s, bool sign_ok) {
    if (s.empty()) return false;
    std::size_t i = (sign_ok && s[0] == '-') ? 1 : 0;
    if (i >= s.size()) return false;
    return std::all_of(s.begin() + static_cast<long>(i), s.end(),
                       [](unsigned char c) { return std::isdigit(c) != 0; });
  };
  std::string num = text;
  std::string den = "1";
  if (auto pos = text.find('/'); pos != std::string::npos) {
    num = text.substr(0, pos);
    den = text.substr(pos + 1);
  }
  if (!digits(num, true) || !digits(den, false))
    throw ConfigError("bad rational '" + text + "': expected 'a' or 'a/b' in base 10");
  return make_rational(Int(num), Int(den));
}

std::string to_string(const Rat& x) { return x.get_str(); }

bool is_p_integral(const Rat& x, long p) {
  return mpz_divisible_ui_p(x.get_den().get_mpz_t(),
                            static_cast<unsigned long>(p)) == 0;
}

std::optional<long> valuation(const Int& n, long p) {
  if (n == 0) return std::nullopt;
  Int rest;
  Int pz(p);
  unsigned long c = mpz_remove(rest.get_mpz_t(), n.get_mpz_t(), pz.get_mpz_t());
  return static_cast<long>(c);
}

std::optional<long> valuation(const Rat& x, long p) {
  if (x == 0) return std::nullopt;
  return *valuation(x.get_num(), p) - *valuation(x.get_den(), p);
}

Int ipow(const Int& base, unsigned long exp) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
  return r;
}

Rat rpow(const Rat& base, unsigned long exp) {
  return make_rational(ipow(base.get_num(), exp), ipow(base.get_den(), exp));
}

Int factorial(unsigned long k) {
  static std::mutex mu;
  static std::vector<Int> cache{Int(1)};
  std::lock_guard<std::mutex> lock(mu);
  while (cache.size() <= k)
    cache.push_back(cache.back() * static_cast<unsigned long>(cache.size()));
  return cache[k];
}

long factorial_valuation(unsigned long k, long p) {
  long v = 0;
  auto q = static_cast<unsigned long>(p);
  for (unsigned long pw = q; pw <= k; pw *= q) {
    v += static_cast<long>(k / pw);
    if (pw > k / q) break;  // next power would overflow
  }
  return v;
}

Rat harmonic(unsigned long k) {
  static std::mutex mu;
  static std::vector<Rat> cache{Rat(0)};
  std::lock_guard<std::mutex> lock(mu);
  while (cache.size() <= k)
    cache.push_back(cache.back() +
                    make_rational(Int(1), Int(static_cast<unsigned long>(cache.size()))));
  return cache[k];
}

Rat pochhammer(const Rat& x, unsigned long k) {
  Rat acc(1);
  Rat f = x;
  for (unsigned long i = 0; i < k; ++i, f += 1) acc *= f;
  return acc;
}

Rat binomial_rational(const Rat& x, unsigned long k) {
  Rat acc(1);
  Rat f = x;
  for (unsigned long i = 0; i < k; ++i, f -= 1) acc *= f;
  return acc / Rat(factorial(k));
}

Int binomial(unsigned long n, unsigned long k) {
  Int r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

}  // namespace hypercong

#include "hypercong/series.hpp"

#include "hypercong/errors.hpp"

namespace hypercong {

namespace {

void require_order(long n) {
  if (n < 0 || n > kMaxSeriesOrder)
    throw ConfigError("series order must be in [0, " +
                      std::to_string(kMaxSeriesOrder) + "]");
}

IdentityCheck compare(std::string name,
                      std::vector<std::pair<std::string, std::string>> params,
                      const PowerSeries& lhs, const PowerSeries& rhs) {
  IdentityCheck c;
  c.identity = std::move(name);
  c.params = std::move(params);
  c.order = lhs.order();
  c.pass = true;
  for (std::size_t k = 0; k < lhs.coeff.size(); ++k) {
    if (lhs.coeff[k] != rhs.coeff[k]) {
      c.pass = false;
      c.first_mismatch = static_cast<long>(k);
      break;
    }
  }
  return c;
}

}  // namespace

PowerSeries hyper_series(const std::vector<Rat>& upper,
                         const std::vector<Rat>& lower, long order) {
  require_order(order);
  for (const Rat& y : lower)
    if (y.get_den() == 1 && y <= 0 && -y.get_num() <= order - 1)
      throw ZeroDenominatorError("lower parameter " + to_string(y) +
                                 " vanishes before order " + std::to_string(order));
  PowerSeries s;
  s.coeff.assign(static_cast<std::size_t>(order) + 1, Rat(0));
  s.coeff[0] = 1;
  Rat c(1);
  for (long k = 0; k < order; ++k) {
    Rat num(1);
    for (const Rat& x : upper) num *= x + k;
    Rat den(k + 1);
    for (const Rat& y : lower) den *= y + k;
    c = c * num / den;
    s.coeff[static_cast<std::size_t>(k) + 1] = c;
  }
  return s;
}

PowerSeries series_mul(const PowerSeries& a, const PowerSeries& b) {
  if (a.order() != b.order())
    throw OrderMismatchError("orders " + std::to_string(a.order()) + " and " +
                             std::to_string(b.order()) + " differ");
  PowerSeries s;
  s.coeff.assign(a.coeff.size(), Rat(0));
  for (std::size_t i = 0; i < a.coeff.size(); ++i) {
    if (a.coeff[i] == 0) continue;
    for (std::size_t j = 0; i + j < b.coeff.size(); ++j)
      s.coeff[i + j] += a.coeff[i] * b.coeff[j];
  }
  return s;
}

IdentityCheck check_clausen(const Rat& alpha, const Rat& beta, long order) {
  Rat g = (1 + alpha + beta) / 2;
  PowerSeries f = hyper_series({alpha / 2, beta / 2}, {g}, order);
  PowerSeries lhs = series_mul(f, f);
  PowerSeries rhs =
      hyper_series({alpha, beta, (alpha + beta) / 2}, {alpha + beta, g}, order);
  return compare("clausen",
                 {{"alpha", to_string(alpha)}, {"beta", to_string(beta)}}, lhs,
                 rhs);
}

IdentityCheck check_clausen_special(const Rat& alpha, long order) {
  IdentityCheck c = check_clausen(alpha, 1 - alpha, order);
  c.identity = "clausen_special";
  c.params = {{"alpha", to_string(alpha)}};
  return c;
}

IdentityCheck check_orr(const Rat& alpha, const Rat& beta, long order) {
  Rat g = (alpha + beta - 1) / 2;
  PowerSeries lhs =
      series_mul(hyper_series({alpha / 2, beta / 2}, {g}, order),
                 hyper_series({alpha / 2, beta / 2 - 1}, {g}, order));
  PowerSeries rhs = hyper_series({alpha, beta - 1, (alpha + beta) / 2 - 1},
                                 {alpha + beta - 2, g}, order);
  return compare("orr", {{"alpha", to_string(alpha)}, {"beta", to_string(beta)}},
                 lhs, rhs);
}

IdentityCheck check_orr_special(const Rat& alpha, long order) {
  IdentityCheck c = check_orr(alpha, 3 - alpha, order);
  c.identity = "orr_special";
  c.params = {{"alpha", to_string(alpha)}};
  return c;
}

}  // namespace hypercong

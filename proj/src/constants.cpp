#include "pctsp/constants.hpp"

#include <algorithm>
#include <cmath>

namespace pctsp::analysis {

double golden_delta_value() { return (3.0 - std::sqrt(5.0)) / 2.0; }
double golden_ratio() { return (1.0 + std::sqrt(5.0)) / 2.0; }

double alpha_of_delta(double delta) {
  if (!(delta >= 0.0 && delta < 1.0)) throw std::domain_error("alpha_of_delta needs delta in [0,1)");
  return std::max({(5.0 - 2.0 * delta) / (3.0 - delta), (3.0 - delta) / (2.0 - delta), 1.0 / (1.0 - delta)});
}

double gamma_cdf(double t, double delta, double kappa) {
  if (!(delta <= kappa && kappa <= 1.0)) throw std::domain_error("gamma_cdf needs delta <= kappa <= 1");
  if (t < delta || t > kappa) throw std::domain_error("gamma_cdf argument outside [delta, kappa]");
  return (3.0 - delta - kappa) / (3.0 - delta - t);
}

double density_normalizer(double kappa, double kappa0) {
  if (!(0.0 <= kappa0 && kappa0 < kappa && kappa <= 1.0)) throw std::domain_error("need 0 <= kappa0 < kappa <= 1");
  const double d = kappa - kappa0;
  return 1.0 / ((3.0 - kappa) * std::pow(d, 3.2) / 3.2 + std::pow(d, 4.2) / 4.2);
}

double density(double delta, double kappa, double kappa0) {
  if (delta < kappa0 || delta > kappa) return 0.0;
  return density_normalizer(kappa, kappa0) * (3.0 - delta) * std::pow(kappa - delta, 2.2);
}

GuaranteeParams GuaranteeParams::make(double delta, double kappa, double kappa0, double gamma) {
  if (!(kappa0 <= delta && delta <= gamma && gamma <= kappa && kappa <= 1.0))
    throw std::domain_error("need kappa0 <= delta <= gamma <= kappa <= 1");
  return {delta, kappa, kappa0, gamma, density_normalizer(kappa, kappa0)};
}

double g(double kappa, double kappa0) {
  const double nu = density_normalizer(kappa, kappa0);
  const double d = kappa - kappa0;
  return nu * ((7.0 - 4.0 * kappa) * std::pow(d, 3.2) / 3.2 + 2.0 * std::pow(d, 4.2) / 4.2);
}

double phi(double delta, double y, double kappa) {
  return (3.0 - delta - kappa) * (3.0 - delta) / (3.0 - delta - y);
}

double h_y(double y, double kappa, double kappa0) {
  if (!(kappa0 <= y && y <= kappa && kappa < 1.0)) throw std::domain_error("h_y needs kappa0 <= y <= kappa < 1");
  const double nu = density_normalizer(kappa, kappa0);
  const double d = kappa - kappa0;
  const double a = kappa - y;
  const double phi0 = phi(kappa0, y, kappa);
  const double phi1 = phi(kappa, y, kappa);
  const double inner = (phi0 - phi1) * (std::pow(d, 4.2) - std::pow(a, 4.2)) / 4.2 +
                       phi1 * d * (std::pow(d, 3.2) - std::pow(a, 3.2)) / 3.2;
  return 1.0 - y * nu / d * inner;
}

namespace {

struct Interval {
  double lo;
  double hi;
};

Interval operator+(Interval a, Interval b) { return {a.lo + b.lo, a.hi + b.hi}; }
Interval operator-(Interval a, Interval b) { return {a.lo - b.hi, a.hi - b.lo}; }
Interval operator*(Interval a, Interval b) {
  const double p[] = {a.lo * b.lo, a.lo * b.hi, a.hi * b.lo, a.hi * b.hi};
  return {*std::min_element(p, p + 4), *std::max_element(p, p + 4)};
}
Interval operator/(Interval a, Interval b) {
  if (b.lo <= 0.0 && b.hi >= 0.0) throw std::domain_error("interval division by zero");
  return a * Interval{1.0 / b.hi, 1.0 / b.lo};
}
Interval point(double v) { return {v, v}; }
// x^p for x >= 0, p > 0 is increasing.
Interval pow_pos(Interval x, double p) { return {std::pow(std::max(x.lo, 0.0), p), std::pow(std::max(x.hi, 0.0), p)}; }

}  // namespace

SlopeRange penalty_ratio_slope(double lo, double hi, double kappa, double kappa0) {
  const double nu = density_normalizer(kappa, kappa0);
  const double d = kappa - kappa0;
  const Interval y{lo, hi};
  const Interval a = point(kappa) - y;
  const double k0 = (3.0 - kappa0 - kappa) * (3.0 - kappa0);
  const double k1 = (3.0 - 2.0 * kappa) * (3.0 - kappa);
  const Interval den0 = point(3.0 - kappa0) - y;
  const Interval den1 = point(3.0 - kappa) - y;
  const Interval phi0 = point(k0) / den0;
  const Interval phi1 = point(k1) / den1;
  const Interval dphi0 = point(k0) / (den0 * den0);
  const Interval dphi1 = point(k1) / (den1 * den1);
  const Interval p4 = (point(std::pow(d, 4.2)) - pow_pos(a, 4.2)) * point(1.0 / 4.2);
  const Interval p3 = (point(std::pow(d, 3.2)) - pow_pos(a, 3.2)) * point(1.0 / 3.2);
  const Interval inner = (phi0 - phi1) * p4 + phi1 * point(d) * p3;
  const Interval dinner = (dphi0 - dphi1) * p4 + (phi0 - phi1) * pow_pos(a, 3.2) + dphi1 * point(d) * p3 +
                          phi1 * point(d) * pow_pos(a, 2.2);
  const Interval b = y * inner * point(nu / d);
  const Interval db = (inner + y * dinner) * point(nu / d);
  const Interval hy = point(1.0) - b;
  const Interval one_minus_y = point(1.0) - y;
  const Interval slope = (hy - one_minus_y * db) / (one_minus_y * one_minus_y);
  return {slope.lo, slope.hi};
}

PenaltyFactor h(double kappa, double kappa0, double step) {
  if (!(0.0 <= kappa0 && kappa0 < kappa && kappa < 1.0)) throw std::domain_error("h needs 0 <= kappa0 < kappa < 1");
  if (!(step > 0.0)) throw std::domain_error("grid step must be positive");
  const double floor_term = 1.0 / (1.0 - kappa0);
  const long cells = std::max(1L, std::lround(std::ceil((kappa - kappa0) / step - 1e-9)));
  const double width = (kappa - kappa0) / static_cast<double>(cells);
  auto ratio = [&](double y) { return h_y(y, kappa, kappa0) / (1.0 - y); };

  PenaltyFactor out{floor_term, kappa0, floor_term, 0.0, cells};
  double left = ratio(kappa0);
  double grid_max = left;
  double grid_arg = kappa0;
  double certified = left;
  for (long i = 0; i < cells; ++i) {
    const double y0 = kappa0 + width * static_cast<double>(i);
    const double y1 = i + 1 == cells ? kappa : kappa0 + width * static_cast<double>(i + 1);
    const double right = ratio(y1);
    if (right > grid_max) {
      grid_max = right;
      grid_arg = y1;
    }
    const SlopeRange s = penalty_ratio_slope(y0, y1, kappa, kappa0);
    const double lip = std::max(std::fabs(s.lo), std::fabs(s.hi));
    out.slope_bound = std::max(out.slope_bound, lip);
    // A function with |f'| <= L on [y0,y1] stays below (f(y0)+f(y1))/2 + L (y1-y0)/2.
    certified = std::max(certified, 0.5 * (left + right) + 0.5 * lip * (y1 - y0));
    left = right;
  }
  if (grid_max > out.value) {
    out.value = grid_max;
    out.argmax = grid_arg;
  }
  out.upper_bound = std::max(floor_term, certified);
  return out;
}

}  // namespace pctsp::analysis

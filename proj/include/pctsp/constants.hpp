#ifndef PCTSP_CONSTANTS_HPP
#define PCTSP_CONSTANTS_HPP

#include <stdexcept>

namespace pctsp::analysis {

/// Golden-ratio splitting threshold (3 - sqrt 5)/2 and the golden ratio itself.
double golden_delta_value();
double golden_ratio();

/// Guarantee of the single-delta analysis:
/// max{(5 - 2d)/(3 - d), (3 - d)/(2 - d), 1/(1 - d)}. Requires 0 <= d < 1.
double alpha_of_delta(double delta);

/// P[gamma <= t] = (3 - delta - kappa)/(3 - delta - t) on [delta, kappa].
double gamma_cdf(double t, double delta, double kappa);

/// Parameters of the distribution over delta on [kappa0, kappa] with density nu (3 - d)(kappa - d)^2.2.
struct GuaranteeParams {
  double delta;
  double kappa;
  double kappa0;
  double gamma;
  double nu;

  /// Validates kappa0 <= delta <= gamma <= kappa <= 1 and fills nu.
  static GuaranteeParams make(double delta, double kappa, double kappa0, double gamma);
};

/// Normalizer nu(kappa, kappa0) of the delta density.
double density_normalizer(double kappa, double kappa0);
double density(double delta, double kappa, double kappa0);

/// Expected-length factor g(kappa, kappa0).
double g(double kappa, double kappa0);

/// phi(delta) = (3 - delta - kappa)(3 - delta)/(3 - delta - y).
double phi(double delta, double y, double kappa);

/// Upper bound on P[v not visited] for a vertex with y* = y in [kappa0, kappa].
double h_y(double y, double kappa, double kappa0);

struct PenaltyFactor {
  double value;        // max{1/(1 - kappa0), grid max of h_y/(1 - y)}
  double argmax;       // y attaining the grid max (kappa0 if the floor term wins)
  double upper_bound;  // value plus the per-cell slope allowance; a certified bound on the sup
  double slope_bound;  // largest per-cell bound on |d/dy h_y/(1 - y)|
  long cells;
};

/// h(kappa, kappa0) on a uniform grid of the given step over [kappa0, kappa] (kappa < 1).
PenaltyFactor h(double kappa, double kappa0, double step = 1e-5);

/// Interval bound on d/dy [h_y/(1 - y)] for y in [lo, hi].
struct SlopeRange {
  double lo;
  double hi;
};
SlopeRange penalty_ratio_slope(double lo, double hi, double kappa, double kappa0);

}  // namespace pctsp::analysis

#endif  // PCTSP_CONSTANTS_HPP

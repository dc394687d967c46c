#ifndef PCTSP_LEMMA_CHECK_HPP
#define PCTSP_LEMMA_CHECK_HPP

#include <vector>

#include "pctsp/solver.hpp"

namespace pctsp {

/// Exact expectations when T0 ~ mu and gamma follows P[gamma <= t] = (3-delta-kappa)/(3-delta-t) on
/// [delta, kappa] (an atom at delta plus a density). Candidate costs are piecewise constant in
/// gamma, so every expectation is a finite rational sum.
struct LemmaReport {
  Rational delta;
  Rational kappa;
  Rational expectedLength;    // E[c(E[C])]
  Rational lengthBound;       // (7 - 2 delta - 2 kappa)/(3 - delta) * c.x*
  std::vector<Rational> inclusion;       // P[v in V[T]]
  std::vector<Rational> inclusionBound;  // three-case lower bound in y*_v
  bool lengthOk = false;
  bool inclusionOk = false;

  bool ok() const { return lengthOk && inclusionOk; }
};

/// Lower bound on P[v in V[T]] for a vertex with LP value y_star.
Rational inclusion_lower_bound(const Rational& y_star, const Rational& delta, const Rational& kappa);

/// Exact CDF of gamma at t in [delta, kappa].
Rational gamma_cdf_exact(const Rational& t, const Rational& delta, const Rational& kappa);

LemmaReport empirical_lemma_check(const PctspInstance& inst, const Pipeline& pipeline, const Rational& kappa);
LemmaReport empirical_lemma_check(const PctspInstance& inst, const FractionalSolution& lp, const Rational& delta,
                                  const Rational& kappa);

}  // namespace pctsp

#endif  // PCTSP_LEMMA_CHECK_HPP

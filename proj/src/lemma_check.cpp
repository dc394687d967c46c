#include "pctsp/lemma_check.hpp"

#include <algorithm>
#include <map>

namespace pctsp {

Rational gamma_cdf_exact(const Rational& t, const Rational& delta, const Rational& kappa) {
  if (t < delta || t > kappa) throw std::domain_error("gamma CDF argument outside [delta, kappa]");
  return (3 - delta - kappa) / (3 - delta - t);
}

Rational inclusion_lower_bound(const Rational& y_star, const Rational& delta, const Rational& kappa) {
  if (y_star < delta) return 0;
  if (y_star <= kappa) return y_star * (3 - delta - kappa) / (3 - delta - y_star);
  return y_star;
}

LemmaReport empirical_lemma_check(const PctspInstance& inst, const Pipeline& pipeline, const Rational& kappa) {
  const Rational& delta = pipeline.delta;
  if (kappa < delta || kappa > 1) throw std::domain_error("need delta <= kappa <= 1");
  const int n = inst.size();
  LemmaReport rep;
  rep.delta = delta;
  rep.kappa = kappa;
  rep.inclusion.assign(n, Rational(0));

  // (representative gamma, probability) pieces: the atom at delta, then (b_{j-1}, b_j].
  std::vector<std::pair<Rational, Rational>> pieces{{delta, gamma_cdf_exact(delta, delta, kappa)}};
  std::vector<Rational> breaks;
  for (const Rational& v : pipeline.split.y)
    if (v > delta && v < kappa) breaks.push_back(v);
  if (kappa > delta) breaks.push_back(kappa);
  std::sort(breaks.begin(), breaks.end());
  breaks.erase(std::unique(breaks.begin(), breaks.end()), breaks.end());
  Rational prev = delta;
  for (const Rational& b : breaks) {
    pieces.emplace_back(b, gamma_cdf_exact(b, delta, kappa) - gamma_cdf_exact(prev, delta, kappa));
    prev = b;
  }

  std::map<RootedTree, Rational> tour_cost;
  rep.expectedLength = 0;
  for (std::size_t i = 0; i < pipeline.family.size(); ++i) {
    const Rational& mu = pipeline.family.weights[i];
    for (const auto& [gamma, prob] : pieces) {
      if (sgn(prob) == 0) continue;
      RootedTree c = core(pipeline.family.trees[i], pipeline.split.y, gamma, inst.root());
      auto it = tour_cost.find(c);
      if (it == tour_cost.end()) it = tour_cost.emplace(c, parity_correct_and_shortcut(inst, c).tourCost).first;
      const Rational w = mu * prob;
      rep.expectedLength += w * it->second;
      for (Vertex v : c.vertices()) rep.inclusion[v] += w;
    }
  }
  rep.lengthBound = (7 - 2 * delta - 2 * kappa) / (3 - delta) * edge_cost(inst, pipeline.lp.x);
  rep.lengthOk = rep.expectedLength <= rep.lengthBound;
  rep.inclusionOk = true;
  for (Vertex v = 0; v < n; ++v) {
    rep.inclusionBound.push_back(inclusion_lower_bound(pipeline.lp.y[v], delta, kappa));
    if (rep.inclusion[v] < rep.inclusionBound.back()) rep.inclusionOk = false;
  }
  return rep;
}

LemmaReport empirical_lemma_check(const PctspInstance& inst, const FractionalSolution& lp, const Rational& delta,
                                  const Rational& kappa) {
  return empirical_lemma_check(inst, prepare_pipeline(inst, lp, delta), kappa);
}

}  // namespace pctsp

#include "pctsp/splitting.hpp"

#include <algorithm>
#include <tuple>

#include "pctsp/maxflow.hpp"

namespace pctsp {

namespace {

void check_step_shape(const PctspInstance& inst, const SplitStep& step) {
  const int n = inst.size();
  for (Vertex w : {step.vertex, step.s, step.t})
    if (w < 0 || w >= n) throw SplittingError("split step vertex out of range");
  if (step.s == step.vertex || step.t == step.vertex) throw SplittingError("split pair must avoid the split vertex");
  if (step.is_drop() && step.s != inst.root()) throw SplittingError("drop steps are only legal at the root");
  if (sgn(step.amount) < 0) throw SplittingError("negative split amount");
}

// Applies `sign` * step to x/y/objective in place.
void shift(const PctspInstance& inst, FractionalSolution& sol, const SplitStep& step, int sign) {
  const Rational eps = sign * step.amount;
  const Vertex v = step.vertex;
  if (step.is_drop()) {
    sol.x.add(v, step.s, -2 * eps);
    sol.objective += eps * (inst.penalty(v) - 2 * inst.cost(v, step.s));
  } else {
    sol.x.add(v, step.s, -eps);
    sol.x.add(v, step.t, -eps);
    sol.x.add(step.s, step.t, eps);
    sol.objective += eps * (inst.cost(step.s, step.t) - inst.cost(v, step.s) - inst.cost(v, step.t) + inst.penalty(v));
  }
  sol.y[v] -= eps;
}

Rational available(const FractionalSolution& sol, Vertex v, Vertex s, Vertex t) {
  if (s == t) return sol.x(v, s) / 2;
  return rational_min(sol.x(v, s), sol.x(v, t));
}

}  // namespace

FractionalSolution apply_split(const PctspInstance& inst, const FractionalSolution& sol, const SplitStep& step) {
  check_step_shape(inst, step);
  if (step.amount > available(sol, step.vertex, step.s, step.t))
    throw SplittingError("split amount exceeds available edge weight");
  FractionalSolution out = sol;
  shift(inst, out, step, +1);
  return out;
}

FractionalSolution revert_split(const PctspInstance& inst, const FractionalSolution& sol, const SplitStep& step) {
  check_step_shape(inst, step);
  if (!step.is_drop() && step.amount > sol.x(step.s, step.t))
    throw SplittingError("cannot revert: {s,t} carries less than the step amount");
  FractionalSolution out = sol;
  shift(inst, out, step, -1);
  return out;
}

Rational max_admissible(const PctspInstance& inst, const FractionalSolution& sol, Vertex v, Vertex s, Vertex t) {
  const Vertex r = inst.root();
  const int n = inst.size();
  SplitStep step{v, s, t, available(sol, v, s, t)};
  check_step_shape(inst, step);

  // Every cut value is affine in the amount; Newton steps on the concave min-cut function
  // land on the largest feasible amount after finitely many cuts.
  while (sgn(step.amount) > 0) {
    FractionalSolution trial = sol;
    shift(inst, trial, step, +1);
    bool violated = false;
    for (Vertex u = 0; u < n && !violated; ++u) {
      if (u == r || u == v || sgn(sol.y[u]) <= 0) continue;
      MinCut mc = min_cut(trial.x, r, u);
      const Rational need = 2 * sol.y[u];
      if (mc.value >= need) continue;
      const Rational before = cut_value(sol.x, mc.sink_side);
      const Rational slope = (mc.value - before) / step.amount;  // negative
      if (sgn(slope) >= 0) throw SplittingError("input solution violates a cut constraint");
      Rational next = (need - before) / slope;
      if (next >= step.amount) throw SplittingError("non-decreasing admissibility iterate");
      step.amount = rational_max(next, Rational(0));
      violated = true;
    }
    if (!violated) break;
  }
  return step.amount;
}

SplittingResult complete_splitting(const PctspInstance& inst, const FractionalSolution& sol, Vertex v) {
  const Vertex r = inst.root();
  const int n = inst.size();
  if (v == r) throw SplittingError("cannot split at the root");
  SplittingResult result{sol, {}};
  FractionalSolution& cur = result.solution;
  const std::size_t step_cap = 10ULL * n * n * n + 10;

  while (sgn(cur.y[v]) > 0) {
    if (result.steps.size() > step_cap) throw SplittingError("complete splitting did not terminate");
    std::vector<Vertex> nbrs;
    for (Vertex w = 0; w < n; ++w)
      if (w != v && sgn(cur.x(v, w)) > 0) nbrs.push_back(w);
    if (nbrs.empty()) throw SplittingError("y_v > 0 but no incident weight (degree equality broken)");
    if (nbrs.size() == 1 && nbrs.front() != r)
      throw SplittingError("single incident edge at a non-root neighbour: solution is infeasible");

    std::vector<std::tuple<Rational, Vertex, Vertex>> pairs;
    for (std::size_t i = 0; i < nbrs.size(); ++i)
      for (std::size_t j = i + 1; j < nbrs.size(); ++j)
        pairs.emplace_back(rational_min(cur.x(v, nbrs[i]), cur.x(v, nbrs[j])), nbrs[i], nbrs[j]);
    std::stable_sort(pairs.begin(), pairs.end(),
                     [](const auto& a, const auto& b) { return std::get<0>(a) > std::get<0>(b); });
    if (std::find(nbrs.begin(), nbrs.end(), r) != nbrs.end()) pairs.emplace_back(Rational(0), r, r);

    bool progressed = false;
    for (const auto& [weight, s, t] : pairs) {
      Rational eps = max_admissible(inst, cur, v, s, t);
      if (sgn(eps) <= 0) continue;
      SplitStep step{v, s, t, eps};
      cur = apply_split(inst, cur, step);
      result.steps.push_back(std::move(step));
      progressed = true;
      break;
    }
    if (!progressed) throw SplittingError("no admissible splitting pair while y_v > 0");
  }
  return result;
}

}  // namespace pctsp

#include "pctsp/solver.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <map>

namespace pctsp {

namespace {

double ratio_of(const Rational& cost, const Rational& lp) {
  if (sgn(lp) == 0) return sgn(cost) == 0 ? 1.0 : std::numeric_limits<double>::infinity();
  return to_double(cost / lp);
}

void check_delta(const Rational& delta) {
  if (sgn(delta) < 0 || delta >= 1) throw std::invalid_argument("delta must lie in [0,1)");
}

}  // namespace

std::vector<Rational> Pipeline::thresholds() const {
  std::vector<Rational> out{delta};
  for (const Rational& v : split.y)
    if (v >= delta) out.push_back(v);
  std::sort(out.begin(), out.end(), std::greater<>());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Pipeline prepare_pipeline(const PctspInstance& inst, const FractionalSolution& lp, const Rational& delta) {
  check_delta(delta);
  Pipeline p{delta, lp, lp, {}, {}};
  std::vector<Vertex> low;
  for (Vertex v = 0; v < inst.size(); ++v)
    if (v != inst.root() && sgn(lp.y[v]) > 0 && lp.y[v] < delta) low.push_back(v);
  std::stable_sort(low.begin(), low.end(), [&](Vertex a, Vertex b) { return lp.y[a] < lp.y[b]; });
  for (Vertex v : low) {
    auto res = complete_splitting(inst, p.split, v);
    p.split = std::move(res.solution);
    p.steps.insert(p.steps.end(), res.steps.begin(), res.steps.end());
  }
  p.family = decompose(inst, p.split);
  return p;
}

SolveReport evaluate_pipeline(const PctspInstance& inst, const Pipeline& pipeline) {
  SolveReport report;
  report.lpObjective = pipeline.lp.objective;
  report.bestDelta = pipeline.delta;

  std::map<RootedTree, std::size_t> seen;
  auto consider = [&](RootedTree tree, const Rational& gamma, std::size_t tree_index) {
    if (seen.count(tree)) return;
    seen.emplace(tree, report.candidates.size());
    Tour tour = parity_correct_and_shortcut(inst, tree);
    report.candidates.push_back({pipeline.delta, gamma, tree_index, std::move(tree), tour.tourCost, tour.penaltyCost});
    if (report.candidates.size() == 1 || tour.total() < report.bestTour.total()) report.bestTour = std::move(tour);
  };
  consider(RootedTree(inst.root()), Rational(1), pipeline.family.size());
  const auto gammas = pipeline.thresholds();
  for (std::size_t i = 0; i < pipeline.family.size(); ++i)
    for (const Rational& gamma : gammas)
      consider(core(pipeline.family.trees[i], pipeline.split.y, gamma, inst.root()), gamma, i);

  report.candidateCount = report.candidates.size();
  report.ratio = ratio_of(report.bestTour.total(), report.lpObjective);
  return report;
}

SolveReport run_algorithm1(const PctspInstance& inst, const FractionalSolution& lp, const Rational& delta) {
  return evaluate_pipeline(inst, prepare_pipeline(inst, lp, delta));
}

SolveReport run_algorithm1(const PctspInstance& inst, const Rational& delta) {
  check_delta(delta);
  return run_algorithm1(inst, solve_relaxation(inst), delta);
}

std::vector<Rational> enumerated_deltas(const FractionalSolution& lp) {
  std::vector<Rational> deltas{golden_delta()};
  for (const Rational& v : lp.y)
    if (v < 1) deltas.push_back(v);
  std::sort(deltas.begin(), deltas.end());
  deltas.erase(std::unique(deltas.begin(), deltas.end()), deltas.end());
  return deltas;
}

SolveReport run_full(const PctspInstance& inst, const FractionalSolution& lp, const SolverConfig& config) {
  switch (config.policy) {
    case DeltaPolicy::Fixed:
      return run_algorithm1(inst, lp, config.delta);
    case DeltaPolicy::GoldenRatio:
      return run_algorithm1(inst, lp, golden_delta());
    case DeltaPolicy::EnumerateYStar:
      break;
  }
  SolveReport merged;
  bool first = true;
  for (const Rational& delta : enumerated_deltas(lp)) {
    SolveReport r = run_algorithm1(inst, lp, delta);
    if (first || r.bestTour.total() < merged.bestTour.total()) {
      merged.bestTour = r.bestTour;
      merged.bestDelta = delta;
    }
    first = false;
    merged.candidateCount += r.candidateCount;
    for (auto& c : r.candidates) merged.candidates.push_back(std::move(c));
  }
  merged.lpObjective = lp.objective;
  merged.ratio = ratio_of(merged.bestTour.total(), merged.lpObjective);
  return merged;
}

SolveReport run_full(const PctspInstance& inst, const SolverConfig& config) {
  if (config.policy == DeltaPolicy::Fixed) check_delta(config.delta);
  return run_full(inst, solve_relaxation(inst), config);
}

BaselineReport baseline_double_tree(const PctspInstance& inst, const FractionalSolution& lp) {
  BaselineReport out;
  out.family = decompose(inst, lp);
  out.report.lpObjective = lp.objective;
  out.weightedAverage = 0;
  for (std::size_t i = 0; i < out.family.size(); ++i) {
    Tour tour = double_tree_tour(inst, out.family.trees[i]);
    out.weightedAverage += out.family.weights[i] * tour.total();
    out.report.candidates.push_back({Rational(0), Rational(0), i, out.family.trees[i], tour.tourCost, tour.penaltyCost});
    if (i == 0 || tour.total() < out.report.bestTour.total()) out.report.bestTour = std::move(tour);
  }
  out.report.candidateCount = out.report.candidates.size();
  out.report.ratio = ratio_of(out.report.bestTour.total(), lp.objective);
  out.bound = 2 * edge_cost(inst, lp.x);
  for (Vertex v = 0; v < inst.size(); ++v) out.bound += inst.penalty(v) * (1 - lp.y[v]);
  return out;
}

BaselineReport baseline_double_tree(const PctspInstance& inst) {
  return baseline_double_tree(inst, solve_relaxation(inst));
}

}  // namespace pctsp

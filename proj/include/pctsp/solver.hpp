#ifndef PCTSP_SOLVER_HPP
#define PCTSP_SOLVER_HPP

#include <vector>

#include "pctsp/decompose.hpp"
#include "pctsp/parity.hpp"

namespace pctsp {

enum class DeltaPolicy { Fixed, GoldenRatio, EnumerateYStar };

struct SolverConfig {
  DeltaPolicy policy = DeltaPolicy::EnumerateYStar;
  Rational delta = 0;  // used by DeltaPolicy::Fixed, must lie in [0,1)

  static SolverConfig fixed(Rational d) { return {DeltaPolicy::Fixed, std::move(d)}; }
  static SolverConfig golden() { return {DeltaPolicy::GoldenRatio, golden_delta()}; }
  static SolverConfig enumerate() { return {DeltaPolicy::EnumerateYStar, 0}; }
};

/// LP optimum after splitting off every vertex with y < delta, and its tree decomposition.
struct Pipeline {
  Rational delta;
  FractionalSolution lp;
  FractionalSolution split;
  std::vector<SplitStep> steps;
  WeightedTreeFamily family;

  /// Candidate thresholds: {y_v of the split solution} restricted to >= delta, plus delta; descending.
  std::vector<Rational> thresholds() const;
};

Pipeline prepare_pipeline(const PctspInstance& inst, const FractionalSolution& lp, const Rational& delta);

struct CandidateInfo {
  Rational delta;
  Rational gamma;
  std::size_t tree = 0;  // index into the family; family.size() marks the explicit root-only candidate
  RootedTree core;
  Rational tourCost;
  Rational penalty;

  Rational total() const { return tourCost + penalty; }
};

struct SolveReport {
  Tour bestTour;
  Rational bestDelta;
  Rational lpObjective;
  double ratio = 1.0;
  std::size_t candidateCount = 0;
  std::vector<CandidateInfo> candidates;
};

/// Evaluates every distinct core(T, gamma) of an already prepared pipeline.
SolveReport evaluate_pipeline(const PctspInstance& inst, const Pipeline& pipeline);

SolveReport run_algorithm1(const PctspInstance& inst, const Rational& delta);
SolveReport run_algorithm1(const PctspInstance& inst, const FractionalSolution& lp, const Rational& delta);

/// Deltas tried by the derandomized policy: {y*_v < 1} and the golden-ratio delta.
std::vector<Rational> enumerated_deltas(const FractionalSolution& lp);

SolveReport run_full(const PctspInstance& inst, const SolverConfig& config);
SolveReport run_full(const PctspInstance& inst, const FractionalSolution& lp, const SolverConfig& config);

struct BaselineReport {
  SolveReport report;
  WeightedTreeFamily family;
  Rational weightedAverage;  // sum_T mu_T (doubled-tour cost + penalty)
  Rational bound;            // 2 c.x* + pi.(1 - y*)
};

/// Decomposes the unsplit LP optimum and shortcuts each doubled tree.
BaselineReport baseline_double_tree(const PctspInstance& inst);
BaselineReport baseline_double_tree(const PctspInstance& inst, const FractionalSolution& lp);

}  // namespace pctsp

#endif  // PCTSP_SOLVER_HPP

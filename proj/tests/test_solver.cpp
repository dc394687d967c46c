#include <doctest.h>

#include "pctsp/oracle.hpp"
#include "pctsp/solver.hpp"
#include "support.hpp"

using namespace pctsp;
using pctsp::testing::rat;

TEST_CASE("golden delta") {
  const Rational d = golden_delta();
  CHECK(d > rat(38, 100));
  CHECK(d < rat(39, 100));
  // d is within 1e-30 of a root of d^2 - 3d + 1.
  const Rational residual = d * d - 3 * d + 1;
  CHECK(std::abs(to_double(residual)) < 1e-29);
}

TEST_CASE("two-vertex instances") {
  SUBCASE("visiting is optimal") {
    const auto inst = testing::int_instance({{0, 1}, {1, 0}}, {0, 3});
    const auto rep = run_full(inst, SolverConfig::enumerate());
    CHECK(rep.bestTour.total() == 2);
    CHECK(rep.lpObjective == 2);
    CHECK(rep.ratio == doctest::Approx(1.0));
  }
  SUBCASE("skipping is optimal") {
    const auto inst = testing::int_instance({{0, 1}, {1, 0}}, {0, 1});
    const auto rep = run_full(inst, SolverConfig::golden());
    CHECK(rep.bestTour.total() == 1);
    CHECK(rep.bestTour.order == std::vector<Vertex>{0});
  }
  SUBCASE("single vertex") {
    const auto rep = run_full(generate_euclidean(1, 5), SolverConfig::enumerate());
    CHECK(rep.bestTour.total() == 0);
    CHECK(rep.ratio == 1.0);
  }
}

TEST_CASE("fixed delta validation") {
  const auto inst = generate_euclidean(4, 1);
  CHECK_THROWS(run_full(inst, SolverConfig::fixed(1)));
  CHECK_THROWS(run_full(inst, SolverConfig::fixed(-1)));
  CHECK_NOTHROW(run_full(inst, SolverConfig::fixed(0)));
}

TEST_CASE("pipeline thresholds and splitting") {
  for (const auto& inst : testing::fractional_fixtures()) {
    const auto lp = solve_relaxation(inst);
    for (const Rational& delta : enumerated_deltas(lp)) {
      const auto pipe = prepare_pipeline(inst, lp, delta);
      for (Vertex v = 0; v < inst.size(); ++v) {
        if (lp.y[v] < delta) CHECK(pipe.split.y[v] == 0);
        else CHECK(pipe.split.y[v] == lp.y[v]);
      }
      CHECK(verify_feasibility(inst, pipe.split).ok());
      CHECK(edge_cost(inst, pipe.split.x) <= edge_cost(inst, lp.x));
      const auto th = pipe.thresholds();
      CHECK(th.back() == delta);
      for (std::size_t i = 0; i + 1 < th.size(); ++i) CHECK(th[i] > th[i + 1]);
      CHECK_FALSE(family_violation(pipe.split, pipe.family, inst.root()));
    }
  }
}

TEST_CASE("guarantees and sandwich") {
  std::vector<PctspInstance> instances = testing::fractional_fixtures();
  for (int i = 0; i < 30; ++i) instances.push_back(testing::suite_instance(i));
  for (const auto& inst : instances) {
    const auto lp = solve_relaxation(inst);
    const auto opt = brute_force_opt(inst).cost;
    const auto all = run_full(inst, lp, SolverConfig::enumerate());
    const auto gold = run_full(inst, lp, SolverConfig::golden());
    CHECK(all.bestTour.total() <= rat(1599, 1000) * lp.objective);
    CHECK(gold.bestTour.total() <= rat(16181, 10000) * lp.objective);
    CHECK(lp.objective <= opt);
    CHECK(opt <= all.bestTour.total());
    CHECK(all.bestTour.total() <= gold.bestTour.total());
    CHECK(solution_cost(inst, all.bestTour) == all.bestTour.total());

    for (const Rational& delta : enumerated_deltas(lp)) {
      const auto fixed = run_full(inst, lp, SolverConfig::fixed(delta));
      CHECK(all.bestTour.total() <= fixed.bestTour.total());
    }
    for (const auto& c : all.candidates) CHECK(c.core.is_valid(inst.root()));
  }
}

TEST_CASE("determinism") {
  const auto inst = testing::fractional_fixtures().front();
  const auto a = run_full(inst, SolverConfig::enumerate());
  const auto b = run_full(inst, SolverConfig::enumerate());
  CHECK(a.bestTour.order == b.bestTour.order);
  CHECK(a.bestDelta == b.bestDelta);
  CHECK(a.candidateCount == b.candidateCount);
}

TEST_CASE("double-tree baseline") {
  std::vector<PctspInstance> instances = testing::fractional_fixtures();
  for (int i = 0; i < 20; ++i) instances.push_back(testing::suite_instance(100 + i));
  for (const auto& inst : instances) {
    const auto lp = solve_relaxation(inst);
    const auto base = baseline_double_tree(inst, lp);
    CHECK_FALSE(family_violation(lp, base.family, inst.root()));
    Rational avg = 0;
    for (std::size_t i = 0; i < base.family.size(); ++i) {
      const Tour t = double_tree_tour(inst, base.family.trees[i]);
      avg += base.family.weights[i] * t.total();
    }
    CHECK(avg == base.weightedAverage);
    Rational bound = 2 * edge_cost(inst, lp.x);
    for (Vertex v = 0; v < inst.size(); ++v) bound += inst.penalty(v) * (1 - lp.y[v]);
    CHECK(bound == base.bound);
    CHECK(base.weightedAverage <= base.bound);
    CHECK(base.report.bestTour.total() <= base.weightedAverage);
  }
}

#include <doctest.h>

#include "pctsp/maxflow.hpp"
#include "pctsp/oracle.hpp"
#include "pctsp/simplex.hpp"
#include "support.hpp"

using namespace pctsp;
using pctsp::testing::rat;

TEST_CASE("simplex on a small textbook LP") {
  // max 3a + 5b s.t. a <= 4, 2b <= 12, 3a + 2b <= 18  (optimum 36 at a=2, b=6)
  DenseSimplex lp({-3, -5});
  lp.add_row({1, 0}, 4);
  lp.add_row({0, 2}, 12);
  lp.add_row({3, 2}, 18);
  lp.solve();
  CHECK(lp.objective() == -36);
  CHECK(lp.primal() == std::vector<Rational>{2, 6});
  // Appended row a + b <= 7 is violated; dual simplex moves to (1, 6), objective -33.
  lp.add_row({1, 1}, 7);
  lp.solve();
  CHECK(lp.objective() == -33);
  CHECK(lp.primal() == std::vector<Rational>{1, 6});
}

TEST_CASE("two-vertex relaxation") {
  SUBCASE("penalty 3 visits") {
    const auto sol = solve_relaxation(testing::int_instance({{0, 1}, {1, 0}}, {0, 3}));
    CHECK(sol.x(0, 1) == 2);
    CHECK(sol.y[1] == 1);
    CHECK(sol.objective == 2);
  }
  SUBCASE("penalty 1 skips") {
    const auto sol = solve_relaxation(testing::int_instance({{0, 1}, {1, 0}}, {0, 1}));
    CHECK(sol.x(0, 1) == 0);
    CHECK(sol.y[1] == 0);
    CHECK(sol.objective == 1);
  }
  SUBCASE("single vertex") {
    const auto inst = generate_euclidean(1, 0);
    const auto sol = solve_relaxation(inst);
    CHECK(sol.objective == 0);
    CHECK(sol.y[0] == 1);
  }
}

TEST_CASE("separation") {
  const auto two = testing::int_instance({{0, 1}, {1, 0}}, {0, 3});
  SUBCASE("feasible two-vertex point has no violated cut") {
    SymmetricMatrix<Rational> x(2, Rational(0));
    x.set(0, 1, 2);
    CHECK_FALSE(separate(two, x, {1, 1}));
  }
  SUBCASE("x = 0 with y_v = 1") {
    const auto inst = testing::int_instance({{0, 1, 1}, {1, 0, 1}, {1, 1, 0}}, {0, 1, 1});
    SymmetricMatrix<Rational> x(3, Rational(0));
    const auto cut = separate(inst, x, {1, 1, 0});
    REQUIRE(cut);
    CHECK(cut->side[1]);
    CHECK_FALSE(cut->side[0]);
    CHECK(cut->cut == 0);
    CHECK(cut_value(x, cut->side) == 0);
  }
  SUBCASE("agrees with enumeration on random points") {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 120; ++trial) {
      const int n = 3 + trial % 8;
      const auto inst = generate_euclidean(n, 900 + trial);
      SymmetricMatrix<Rational> x(n, Rational(0));
      std::vector<Rational> y(n, Rational(0));
      y[0] = 1;
      for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
          if (rng() % 3 == 0) x.set(u, v, rat(static_cast<long>(rng() % 5), 4));
      for (int v = 1; v < n; ++v) y[v] = rat(static_cast<long>(rng() % 5), 4);
      const Rational slack = testing::min_cut_slack(inst, x, y);
      const auto cut = separate(inst, x, y);
      CHECK(static_cast<bool>(cut) == (slack < 0));
      if (cut) {
        CHECK_FALSE(cut->side[0]);
        CHECK(cut->side[cut->vertex]);
        CHECK(cut->cut == cut_value(x, cut->side));
        // Most violated: equals the enumerated minimum slack.
        CHECK(cut->cut - 2 * y[cut->vertex] == slack);
      }
      for (const auto& c : separate_all(inst, x, y)) CHECK(cut_value(x, c.side) < 2 * y[c.vertex]);
    }
  }
}

TEST_CASE("relaxation optimum is feasible, below OPT, and reproducible") {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 40; ++trial) {
    const auto inst = trial % 2 ? generate_euclidean(3 + trial % 7, 70 + trial)
                                : testing::random_graph_metric(3 + trial % 7, rng);
    const auto res = solve_relaxation_detailed(inst);
    const auto& sol = res.solution;
    CHECK(verify_feasibility(inst, sol).ok());
    CHECK(testing::feasible_by_enumeration(inst, sol));
    CHECK(sol.objective == lp_objective(inst, sol.x, sol.y));
    CHECK(sol.objective <= brute_force_opt(inst).cost);
    CHECK(solve_relaxation(inst).objective == sol.objective);
  }
}

TEST_CASE("every added cut was violated when added") {
  for (int trial = 0; trial < 20; ++trial) {
    const auto inst = generate_euclidean(5 + trial % 6, 300 + trial);
    const auto res = solve_relaxation_detailed(inst);
    for (const auto& c : res.added_cuts) {
      CHECK_FALSE(c.side[inst.root()]);
      CHECK(c.side[c.vertex]);
      CHECK(c.cut < c.demand);
      CHECK(cut_value(res.solution.x, c.side) >= 2 * res.solution.y[c.vertex]);
    }
  }
}

TEST_CASE("relaxation on the fractional fixtures matches brute force") {
  for (const auto& inst : testing::fractional_fixtures()) {
    const auto sol = solve_relaxation(inst);
    CHECK(verify_feasibility(inst, sol).ok());
    CHECK(testing::feasible_by_enumeration(inst, sol));
    bool fractional = false;
    for (const auto& v : sol.y) fractional |= v != 0 && v != 1;
    CHECK(fractional);
    CHECK(sol.objective <= brute_force_opt(inst).cost);
  }
}

TEST_CASE("verify_feasibility failures") {
  const auto inst = generate_euclidean(6, 11);
  const auto sol = solve_relaxation(inst);
  SUBCASE("y bumped by 1/100") {
    Vertex v = 1;
    while (v < inst.size() && sol.y[v] == 1) ++v;
    if (v == inst.size()) v = 1;
    auto bad = sol;
    bad.y[v] += rat(1, 100);
    if (bad.y[v] > 1) bad.y[v] -= rat(2, 100);
    bad.objective = lp_objective(inst, bad.x, bad.y);
    const auto rep = verify_feasibility(inst, bad);
    CHECK_FALSE(rep.ok());
    CHECK_FALSE(rep.degree_equalities);
  }
  SUBCASE("stale objective") {
    auto bad = sol;
    bad.objective += 1;
    CHECK_FALSE(verify_feasibility(inst, bad).objective);
  }
  SUBCASE("cut violation has a witness") {
    // Two disjoint 2-cycles: r-1 and 2-3 (2 and 3 cut off from the root).
    const auto four = testing::int_instance({{0, 1, 1, 1}, {1, 0, 1, 1}, {1, 1, 0, 1}, {1, 1, 1, 0}}, {0, 5, 5, 5});
    FractionalSolution s{SymmetricMatrix<Rational>(4, Rational(0)), {1, 1, 1, 1}, 0};
    s.x.set(0, 1, 2);
    s.x.set(2, 3, 2);
    s.objective = lp_objective(four, s.x, s.y);
    const auto rep = verify_feasibility(four, s);
    CHECK(rep.degree_equalities);
    CHECK_FALSE(rep.cuts);
    REQUIRE(rep.witness);
    CHECK(rep.witness->cut == 0);
    CHECK_FALSE(enumerate_cut_check(four, s).ok);
  }
}

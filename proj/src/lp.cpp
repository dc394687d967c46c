#include "pctsp/lp.hpp"

#include <algorithm>

#include "pctsp/maxflow.hpp"
#include "pctsp/simplex.hpp"

namespace pctsp {

Rational FractionalSolution::degree(Vertex v) const {
  Rational d = 0;
  for (Vertex w = 0; w < size(); ++w)
    if (w != v) d += x(v, w);
  return d;
}

Rational edge_cost(const PctspInstance& inst, const SymmetricMatrix<Rational>& x) {
  Rational sum = 0;
  for (const Edge& e : complete_edges(inst.size()))
    if (sgn(x[e]) != 0) sum += inst.cost(e.u, e.v) * x[e];
  return sum;
}

Rational lp_objective(const PctspInstance& inst, const SymmetricMatrix<Rational>& x, const std::vector<Rational>& y) {
  Rational obj = edge_cost(inst, x);
  for (Vertex v = 0; v < inst.size(); ++v) obj += inst.penalty(v) * (1 - y[v]);
  return obj;
}

std::vector<ViolatedCut> separate_all(const PctspInstance& inst, const SymmetricMatrix<Rational>& x,
                                      const std::vector<Rational>& y) {
  std::vector<ViolatedCut> cuts;
  for (Vertex v = 0; v < inst.size(); ++v) {
    if (v == inst.root() || sgn(y[v]) <= 0) continue;
    MinCut mc = min_cut(x, inst.root(), v);
    if (mc.value < 2 * y[v]) cuts.push_back({std::move(mc.sink_side), v, mc.value, 2 * y[v]});
  }
  return cuts;
}

std::optional<ViolatedCut> separate(const PctspInstance& inst, const SymmetricMatrix<Rational>& x,
                                    const std::vector<Rational>& y) {
  auto cuts = separate_all(inst, x, y);
  if (cuts.empty()) return std::nullopt;
  auto violation = [](const ViolatedCut& c) -> Rational { return c.demand - c.cut; };
  auto best = std::max_element(cuts.begin(), cuts.end(),
                               [&](const ViolatedCut& a, const ViolatedCut& b) { return violation(a) < violation(b); });
  return std::move(*best);
}

LpResult solve_relaxation_detailed(const PctspInstance& inst) {
  const int n = inst.size();
  const Vertex r = inst.root();
  const auto edges = complete_edges(n);
  LpResult result;

  // y_v = x(delta(v))/2 is substituted out, so pi_v (1 - y_v) contributes -pi_v/2 per incident edge.
  std::vector<Rational> costs;
  for (const Edge& e : edges) costs.push_back(inst.cost(e.u, e.v) - (inst.penalty(e.u) + inst.penalty(e.v)) / 2);
  DenseSimplex simplex(costs);

  auto degree_row = [&](Vertex v) {
    std::vector<Rational> row(edges.size(), Rational(0));
    for (std::size_t k = 0; k < edges.size(); ++k)
      if (edges[k].has(v)) row[k] = 1;
    return row;
  };
  if (n > 1) {
    simplex.add_row(degree_row(r), 2);
    for (Vertex v = 0; v < n; ++v)
      if (v != r) simplex.add_row(degree_row(v), 2);  // y_v <= 1
  }

  SymmetricMatrix<Rational> x(n, Rational(0));
  std::vector<Rational> y(n, Rational(0));
  while (true) {
    simplex.solve();
    ++result.rounds;
    const auto values = simplex.primal();
    x = SymmetricMatrix<Rational>(n, Rational(0));
    for (std::size_t k = 0; k < edges.size(); ++k) x.set(edges[k].u, edges[k].v, values[k]);
    for (Vertex v = 0; v < n; ++v) {
      Rational d = 0;
      for (Vertex w = 0; w < n; ++w)
        if (w != v) d += x(v, w);
      y[v] = v == r ? Rational(1) : Rational(d / 2);
    }
    auto cuts = separate_all(inst, x, y);
    if (cuts.empty()) break;
    for (auto& cut : cuts) {
      // x(delta(v)) - x(delta(S)) <= 0
      std::vector<Rational> row(edges.size(), Rational(0));
      for (std::size_t k = 0; k < edges.size(); ++k) {
        const Edge& e = edges[k];
        int coef = e.has(cut.vertex) ? 1 : 0;
        if (cut.side[e.u] != cut.side[e.v]) --coef;
        row[k] = coef;
      }
      simplex.add_row(row, 0);
      result.added_cuts.push_back(std::move(cut));
    }
  }
  result.pivots = simplex.pivot_count();
  result.solution.x = std::move(x);
  result.solution.y = std::move(y);
  result.solution.objective = lp_objective(inst, result.solution.x, result.solution.y);
  return result;
}

FractionalSolution solve_relaxation(const PctspInstance& inst) { return solve_relaxation_detailed(inst).solution; }

FeasibilityReport verify_feasibility(const PctspInstance& inst, const FractionalSolution& sol) {
  FeasibilityReport rep;
  const int n = inst.size();
  const Vertex r = inst.root();
  auto fail = [&rep](bool& flag, std::string msg) {
    if (flag && rep.message.empty()) rep.message = std::move(msg);
    flag = false;
  };
  if (sol.size() != n || static_cast<int>(sol.y.size()) != n) {
    rep.nonnegative = false;
    rep.message = "solution dimension mismatch";
    return rep;
  }
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = 0; v < n; ++v) {
      if (u != v && sgn(sol.x(u, v)) < 0) fail(rep.nonnegative, "negative x on an edge");
      if (u == v && sgn(sol.x(u, v)) != 0) fail(rep.nonnegative, "nonzero diagonal x");
    }
  for (Vertex v = 0; v < n; ++v)
    if (sgn(sol.y[v]) < 0 || sol.y[v] > 1) fail(rep.y_bounds, "y outside [0,1] at " + std::to_string(v));
  if (sol.y[r] != 1) fail(rep.y_bounds, "y_root != 1");
  for (Vertex v = 0; v < n; ++v) {
    Rational d = sol.degree(v);
    if (v == r) {
      if (d > 2) fail(rep.root_degree, "root degree exceeds 2");
    } else if (d != 2 * sol.y[v]) {
      fail(rep.degree_equalities, "degree equality fails at " + std::to_string(v));
    }
  }
  if (sol.objective != lp_objective(inst, sol.x, sol.y)) fail(rep.objective, "stored objective is stale");

  if (n <= 12) {
    std::vector<Vertex> others;
    for (Vertex v = 0; v < n; ++v)
      if (v != r) others.push_back(v);
    const unsigned long long subsets = 1ULL << others.size();
    for (unsigned long long m = 1; m < subsets; ++m) {
      VertexSet side(n, false);
      Vertex heaviest = -1;
      for (std::size_t i = 0; i < others.size(); ++i)
        if ((m >> i) & 1ULL) {
          side[others[i]] = true;
          if (heaviest < 0 || sol.y[others[i]] > sol.y[heaviest]) heaviest = others[i];
        }
      Rational value = cut_value(sol.x, side);
      if (value < 2 * sol.y[heaviest]) {
        fail(rep.cuts, "cut constraint violated");
        rep.witness = ViolatedCut{std::move(side), heaviest, value, 2 * sol.y[heaviest]};
        break;
      }
    }
  } else if (auto cut = separate(inst, sol.x, sol.y)) {
    fail(rep.cuts, "cut constraint violated");
    rep.witness = std::move(cut);
  }
  return rep;
}

}  // namespace pctsp

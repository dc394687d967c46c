#include "pctsp/decompose.hpp"

#include <algorithm>
#include <numeric>

namespace pctsp {

RootedTree::RootedTree(std::vector<Vertex> vertices, std::vector<Edge> edges)
    : vertices_(std::move(vertices)), edges_(std::move(edges)) {
  std::sort(vertices_.begin(), vertices_.end());
  vertices_.erase(std::unique(vertices_.begin(), vertices_.end()), vertices_.end());
  std::sort(edges_.begin(), edges_.end());
}

bool RootedTree::contains(Vertex v) const { return std::binary_search(vertices_.begin(), vertices_.end(), v); }

bool RootedTree::has_edge(const Edge& e) const { return std::binary_search(edges_.begin(), edges_.end(), e); }

void RootedTree::add_vertex(Vertex v) {
  auto it = std::lower_bound(vertices_.begin(), vertices_.end(), v);
  if (it == vertices_.end() || *it != v) vertices_.insert(it, v);
}

void RootedTree::add_edge(const Edge& e) {
  auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
  if (it != edges_.end() && *it == e) throw DecompositionError("edge already in tree");
  edges_.insert(it, e);
  add_vertex(e.u);
  add_vertex(e.v);
}

void RootedTree::remove_edge(const Edge& e) {
  auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
  if (it == edges_.end() || *it != e) throw DecompositionError("edge not in tree");
  edges_.erase(it);
}

std::vector<Vertex> RootedTree::component(Vertex from, const Edge& skip) const {
  std::vector<Vertex> seen{from};
  for (std::size_t head = 0; head < seen.size(); ++head) {
    const Vertex u = seen[head];
    for (const Edge& e : edges_) {
      if (e == skip || !e.has(u)) continue;
      const Vertex w = e.other(u);
      if (std::find(seen.begin(), seen.end(), w) == seen.end()) seen.push_back(w);
    }
  }
  return seen;
}

bool RootedTree::is_valid(Vertex root) const {
  if (!contains(root)) return false;
  if (edges_.size() + 1 != vertices_.size()) return false;
  for (const Edge& e : edges_)
    if (e.u == e.v || !contains(e.u) || !contains(e.v)) return false;
  // |E| = |V| - 1 plus connectivity implies acyclic.
  return component(root, Edge(-1, -1)).size() == vertices_.size();
}

Rational RootedTree::cost(const PctspInstance& inst) const {
  Rational c = 0;
  for (const Edge& e : edges_) c += inst.cost(e.u, e.v);
  return c;
}

std::optional<std::string> family_violation(const FractionalSolution& sol, const WeightedTreeFamily& family,
                                            Vertex root) {
  const int n = sol.size();
  if (family.trees.size() != family.weights.size()) return "tree/weight count mismatch";
  Rational total = 0;
  SymmetricMatrix<Rational> usage(n, Rational(0));
  std::vector<Rational> coverage(n, Rational(0));
  for (std::size_t i = 0; i < family.size(); ++i) {
    const RootedTree& t = family.trees[i];
    const Rational& mu = family.weights[i];
    if (sgn(mu) <= 0 || mu > 1) return "tree weight outside (0,1]";
    if (!t.is_valid(root)) return "invalid rooted tree";
    total += mu;
    for (const Edge& e : t.edges()) usage.add(e.u, e.v, mu);
    for (Vertex v : t.vertices()) coverage[v] += mu;
  }
  if (total != 1) return "weights do not sum to 1";
  for (const Edge& e : complete_edges(n))
    if (usage[e] > sol.x[e]) return "edge usage exceeds x on {" + std::to_string(e.u) + "," + std::to_string(e.v) + "}";
  for (Vertex v = 0; v < n; ++v)
    if (coverage[v] != sol.y[v]) return "coverage differs from y at " + std::to_string(v);
  return std::nullopt;
}

namespace {

// Marks trees satisfying `eligible` up to total weight `amount`, heaviest first, splitting one tree
// into two copies when needed. Returns selected indices; the selected weight is min(amount, eligible).
template <typename Pred>
std::vector<std::size_t> select_weight(WeightedTreeFamily& family, Pred eligible, const Rational& amount,
                                       Rational& selected) {
  std::vector<std::size_t> candidates;
  for (std::size_t i = 0; i < family.size(); ++i)
    if (eligible(family.trees[i])) candidates.push_back(i);
  std::stable_sort(candidates.begin(), candidates.end(),
                   [&](std::size_t a, std::size_t b) { return family.weights[a] > family.weights[b]; });
  std::vector<std::size_t> chosen;
  selected = 0;
  for (std::size_t i : candidates) {
    if (selected == amount) break;
    const Rational remaining = amount - selected;
    if (family.weights[i] <= remaining) {
      selected += family.weights[i];
      chosen.push_back(i);
    } else {
      family.weights[i] -= remaining;
      family.trees.push_back(family.trees[i]);
      family.weights.push_back(remaining);
      chosen.push_back(family.size() - 1);
      selected = amount;
    }
  }
  return chosen;
}

}  // namespace

void undo_split_step(DecompositionState& state, WeightedTreeFamily& family, const SplitStep& step) {
  const Vertex s = state.split_vertex;
  if (step.vertex != s) throw DecompositionError("undo step belongs to another vertex");
  if (step.is_drop()) {
    state.spares[step.s] += step.amount;
    return;
  }
  const Vertex u = step.s;
  const Vertex w = step.t;
  const Edge uw(u, w);
  Rational selected;
  auto chosen = select_weight(family, [&](const RootedTree& t) { return t.has_edge(uw); }, step.amount, selected);
  if (selected < step.amount) state.spares[u] += step.amount - selected;

  for (std::size_t i : chosen) {
    RootedTree& t = family.trees[i];
    t.remove_edge(uw);
    if (!t.contains(s)) {
      t.add_edge(Edge(s, u));
      t.add_edge(Edge(s, w));
      continue;
    }
    const auto side_u = t.component(u, uw);
    const bool s_with_u = std::find(side_u.begin(), side_u.end(), s) != side_u.end();
    const auto side_w = t.component(w, uw);
    const bool s_with_w = std::find(side_w.begin(), side_w.end(), s) != side_w.end();
    if (s_with_u == s_with_w) throw DecompositionError("split vertex must lie in exactly one component");
    if (s_with_u) {
      t.add_edge(Edge(s, w));
      state.spares[u] += family.weights[i];
    } else {
      t.add_edge(Edge(s, u));
      state.spares[w] += family.weights[i];
    }
    if (t.component(s, Edge(-1, -1)).size() != t.vertices().size())
      throw DecompositionError("acyclicity lost while undoing a split");
  }
}

void consume_spares(DecompositionState& state, WeightedTreeFamily& family) {
  const Vertex s = state.split_vertex;
  for (Vertex w = 0; w < static_cast<Vertex>(state.spares.size()); ++w) {
    if (sgn(state.spares[w]) <= 0) continue;
    Rational selected;
    auto chosen = select_weight(
        family, [&](const RootedTree& t) { return t.contains(w) && !t.contains(s); }, state.spares[w], selected);
    if (selected < state.spares[w]) throw DecompositionError("not enough tree weight to absorb spare");
    for (std::size_t i : chosen) family.trees[i].add_edge(Edge(s, w));
    state.spares[w] = 0;
  }
}

namespace {

struct Level {
  Vertex vertex;
  FractionalSolution before;
  std::vector<SplitStep> steps;
};

void prune_zero_weights(WeightedTreeFamily& family) {
  WeightedTreeFamily kept;
  for (std::size_t i = 0; i < family.size(); ++i)
    if (sgn(family.weights[i]) > 0) {
      kept.trees.push_back(std::move(family.trees[i]));
      kept.weights.push_back(std::move(family.weights[i]));
    }
  family = std::move(kept);
}

}  // namespace

WeightedTreeFamily decompose(const PctspInstance& inst, const FractionalSolution& sol, const DecomposeOptions& options) {
  const Vertex r = inst.root();
  const int n = inst.size();
  auto check = [&](const FractionalSolution& at, const WeightedTreeFamily& family, const char* where) {
    if (auto bad = family_violation(at, family, r))
      throw DecompositionError(std::string("decomposition identity failed ") + where + ": " + *bad);
  };

  std::vector<Vertex> active;
  for (Vertex v = 0; v < n; ++v)
    if (v != r && sgn(sol.y[v]) > 0) active.push_back(v);
  // Split order: increasing y, ties by index.
  std::stable_sort(active.begin(), active.end(), [&](Vertex a, Vertex b) { return sol.y[a] < sol.y[b]; });

  std::vector<Level> levels;
  FractionalSolution cur = sol;
  while (active.size() > 1) {
    const Vertex s = active.front();
    active.erase(active.begin());
    auto split = complete_splitting(inst, cur, s);
    levels.push_back({s, std::move(cur), std::move(split.steps)});
    cur = std::move(split.solution);
  }

  WeightedTreeFamily family;
  if (active.empty()) {
    family.trees.emplace_back(r);
    family.weights.emplace_back(1);
  } else {
    const Vertex v = active.front();
    const Rational mu = cur.x(r, v) / 2;
    if (sgn(mu) > 0) {
      family.trees.emplace_back(std::vector<Vertex>{r, v}, std::vector<Edge>{Edge(r, v)});
      family.weights.push_back(mu);
    }
    if (mu < 1) {
      family.trees.emplace_back(r);
      family.weights.emplace_back(1 - mu);
    }
  }
  if (options.check_every_level) check(cur, family, "at the base case");

  for (auto level = levels.rbegin(); level != levels.rend(); ++level) {
    DecompositionState state{level->vertex, std::vector<Rational>(n, Rational(0)), level->steps};
    while (!state.pending.empty()) {
      SplitStep step = std::move(state.pending.back());
      state.pending.pop_back();
      undo_split_step(state, family, step);
      cur = revert_split(inst, cur, step);
    }
    consume_spares(state, family);
    prune_zero_weights(family);
    if (cur.x != level->before.x || cur.y != level->before.y)
      throw DecompositionError("replaying split steps did not restore the solution");
    if (options.check_every_level) check(level->before, family, "after undoing a vertex");
  }
  if (!options.check_every_level) check(sol, family, "at the end");
  return family;
}

}  // namespace pctsp

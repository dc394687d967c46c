#include "pctsp/parity.hpp"

#include <algorithm>
#include <functional>
#include <unordered_map>

namespace pctsp {

RootedTree core(const RootedTree& tree, const std::vector<Rational>& y, const Rational& gamma, Vertex root) {
  std::vector<Vertex> vertices = tree.vertices();
  std::vector<Edge> edges = tree.edges();
  auto degree = [&](Vertex v) {
    return std::count_if(edges.begin(), edges.end(), [v](const Edge& e) { return e.has(v); });
  };
  bool pruned = true;
  while (pruned) {
    pruned = false;
    for (auto it = vertices.begin(); it != vertices.end(); ++it) {
      const Vertex v = *it;
      if (v == root || y[v] >= gamma || degree(v) > 1) continue;
      edges.erase(std::remove_if(edges.begin(), edges.end(), [v](const Edge& e) { return e.has(v); }), edges.end());
      vertices.erase(it);
      pruned = true;
      break;
    }
  }
  return RootedTree(std::move(vertices), std::move(edges));
}

CoreLayers core_layers(const RootedTree& tree, const std::vector<Rational>& y, Vertex root) {
  CoreLayers out;
  for (Vertex v : tree.vertices()) out.thresholds.push_back(y[v]);
  std::sort(out.thresholds.begin(), out.thresholds.end(), std::greater<>());
  out.thresholds.erase(std::unique(out.thresholds.begin(), out.thresholds.end()), out.thresholds.end());
  std::vector<Edge> previous;
  for (const Rational& eta : out.thresholds) {
    const RootedTree c = core(tree, y, eta, root);
    std::vector<Edge> layer;
    std::set_difference(c.edges().begin(), c.edges().end(), previous.begin(), previous.end(),
                        std::back_inserter(layer));
    out.layers.push_back(std::move(layer));
    previous = c.edges();
  }
  return out;
}

std::vector<Vertex> odd_vertices(int n, const std::vector<Edge>& edges) {
  std::vector<int> deg(n, 0);
  for (const Edge& e : edges) {
    ++deg[e.u];
    ++deg[e.v];
  }
  std::vector<Vertex> odd;
  for (Vertex v = 0; v < n; ++v)
    if (deg[v] % 2) odd.push_back(v);
  return odd;
}

Rational edges_cost(const PctspInstance& inst, const std::vector<Edge>& edges) {
  Rational c = 0;
  for (const Edge& e : edges) c += inst.cost(e.u, e.v);
  return c;
}

std::vector<Edge> min_cost_matching(const PctspInstance& inst, const std::vector<Vertex>& vertices) {
  const std::size_t k = vertices.size();
  if (k % 2) throw ParityError("perfect matching needs an even vertex set");
  if (k > kMaxMatchingSize) throw ParityError("odd set too large for the exact matching DP");
  if (k == 0) return {};

  // best[mask]: cheapest perfect matching of the vertices in mask; the lowest member is paired first.
  const std::size_t full = (std::size_t{1} << k) - 1;
  std::unordered_map<std::size_t, std::pair<Rational, std::size_t>> memo;
  std::function<const Rational&(std::size_t)> best = [&](std::size_t mask) -> const Rational& {
    if (auto it = memo.find(mask); it != memo.end()) return it->second.first;
    std::pair<Rational, std::size_t> entry{Rational(0), k};
    if (mask != 0) {
      const std::size_t i = static_cast<std::size_t>(__builtin_ctzll(mask));
      bool first = true;
      for (std::size_t j = i + 1; j < k; ++j) {
        if (!((mask >> j) & 1U)) continue;
        Rational c = inst.cost(vertices[i], vertices[j]) + best(mask & ~(std::size_t{1} << i) & ~(std::size_t{1} << j));
        if (first || c < entry.first) {
          entry = {c, j};
          first = false;
        }
      }
    }
    return memo.emplace(mask, std::move(entry)).first->second.first;
  };
  best(full);

  std::vector<Edge> matching;
  for (std::size_t mask = full; mask != 0;) {
    const std::size_t i = static_cast<std::size_t>(__builtin_ctzll(mask));
    const std::size_t j = memo.at(mask).second;
    matching.emplace_back(vertices[i], vertices[j]);
    mask &= ~(std::size_t{1} << i);
    mask &= ~(std::size_t{1} << j);
  }
  return matching;
}

std::vector<Vertex> eulerian_walk(int n, const std::vector<Edge>& edges, Vertex start) {
  std::vector<std::vector<std::size_t>> incident(n);
  for (std::size_t id = 0; id < edges.size(); ++id) {
    incident[edges[id].u].push_back(id);
    incident[edges[id].v].push_back(id);
  }
  std::vector<bool> used(edges.size(), false);
  std::vector<std::size_t> cursor(n, 0);
  std::vector<Vertex> stack{start};
  std::vector<Vertex> walk;
  while (!stack.empty()) {
    const Vertex u = stack.back();
    auto& pos = cursor[u];
    while (pos < incident[u].size() && used[incident[u][pos]]) ++pos;
    if (pos == incident[u].size()) {
      walk.push_back(u);
      stack.pop_back();
    } else {
      const std::size_t id = incident[u][pos];
      used[id] = true;
      stack.push_back(edges[id].other(u));
    }
  }
  if (std::find(used.begin(), used.end(), false) != used.end()) throw ParityError("multigraph is not connected");
  std::reverse(walk.begin(), walk.end());
  if (walk.size() > 1) walk.pop_back();  // closing return to start
  return walk;
}

namespace {

std::vector<Vertex> first_visits(int n, const std::vector<Vertex>& walk) {
  std::vector<bool> seen(n, false);
  std::vector<Vertex> order;
  for (Vertex v : walk)
    if (!seen[v]) {
      seen[v] = true;
      order.push_back(v);
    }
  return order;
}

}  // namespace

Tour parity_correct_and_shortcut(const PctspInstance& inst, const RootedTree& tree) {
  if (tree.edges().empty()) return root_only_tour(inst);
  std::vector<Edge> multigraph = tree.edges();
  const auto matching = min_cost_matching(inst, odd_vertices(inst.size(), tree.edges()));
  multigraph.insert(multigraph.end(), matching.begin(), matching.end());
  auto walk = eulerian_walk(inst.size(), multigraph, inst.root());
  return make_tour(inst, first_visits(inst.size(), walk));
}

Tour double_tree_tour(const PctspInstance& inst, const RootedTree& tree) {
  std::vector<Edge> doubled = tree.edges();
  doubled.insert(doubled.end(), tree.edges().begin(), tree.edges().end());
  if (doubled.empty()) return root_only_tour(inst);
  auto walk = eulerian_walk(inst.size(), doubled, inst.root());
  return make_tour(inst, first_visits(inst.size(), walk));
}

JoinCertificate build_certificate(const FractionalSolution& sol, const CoreLayers& layers, const Rational& gamma,
                                  const Rational& delta) {
  if (delta > gamma) throw ParityError("certificate needs delta <= gamma");
  const Rational scale = 3 - delta;
  JoinCertificate cert{SymmetricMatrix<Rational>(sol.size(), Rational(0))};
  for (const Edge& e : complete_edges(sol.size())) cert.z.set(e.u, e.v, sol.x[e] / scale);
  for (std::size_t i = 0; i < layers.thresholds.size(); ++i) {
    const Rational& eta = layers.thresholds[i];
    if (eta < gamma) continue;
    const Rational beta = 1 - 2 * eta / scale;
    if (sgn(beta) < 0) throw ParityError("negative layer coefficient (delta > 1 or threshold > 1)");
    for (const Edge& e : layers.layers[i]) cert.z.add(e.u, e.v, beta);
  }
  return cert;
}

JoinCheck check_join_dominant(const SymmetricMatrix<Rational>& z, const RootedTree& tree) {
  const int n = z.size();
  if (n > 20) throw ParityError("join dominant enumeration is limited to n <= 20");
  JoinCheck out;
  if (n <= 1) return out;
  std::vector<std::vector<int>> tree_adj(n, std::vector<int>(n, 0));
  for (const Edge& e : tree.edges()) {
    ++tree_adj[e.u][e.v];
    ++tree_adj[e.v][e.u];
  }
  // Singletons first, so the common failure comes with the smallest witness.
  for (Vertex v = 0; v < n; ++v) {
    int deg = 0;
    Rational value = 0;
    for (Vertex w = 0; w < n; ++w)
      if (w != v) {
        deg += tree_adj[v][w];
        value += z(v, w);
      }
    if (deg % 2 != 0 && value < 1) {
      out.ok = false;
      out.witness = VertexSet(n, false);
      (*out.witness)[v] = true;
      out.witness_value = value;
      return out;
    }
  }
  // Gray-code walk over subsets of {1..n-1}; S and its complement have the same cut.
  VertexSet side(n, false);
  Rational value = 0;
  int tree_cut = 0;
  const unsigned long long count = 1ULL << (n - 1);
  for (unsigned long long step = 1; step < count; ++step) {
    const int bit = __builtin_ctzll(step) + 1;
    const bool entering = !side[bit];
    for (Vertex w = 0; w < n; ++w) {
      if (w == bit) continue;
      const bool same_side_after = side[w] == entering;
      // Edge {bit,w} crosses after the flip iff w is on the other side.
      if (sgn(z(bit, w)) != 0) {
        if (same_side_after)
          value -= z(bit, w);
        else
          value += z(bit, w);
      }
      tree_cut += same_side_after ? -tree_adj[bit][w] : tree_adj[bit][w];
    }
    side[bit] = entering;
    if (tree_cut % 2 != 0 && value < 1) {
      out.ok = false;
      out.witness = side;
      out.witness_value = value;
      return out;
    }
  }
  return out;
}

}  // namespace pctsp

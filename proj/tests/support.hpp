#ifndef PCTSP_TESTS_SUPPORT_HPP
#define PCTSP_TESTS_SUPPORT_HPP

// Independent oracles and fixtures shared by the unit tests and the acceptance runner.
// Nothing here calls the library routine it is used to check.

#include <algorithm>
#include <filesystem>
#include <functional>
#include <limits>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "pctsp/io.hpp"

namespace pctsp::testing {

inline std::filesystem::path data_dir() { return PCTSP_TEST_DATA_DIR; }

/// Instances whose LP optimum has at least one fractional y (1-2 metrics found by search).
inline std::vector<PctspInstance> fractional_fixtures() {
  std::vector<std::filesystem::path> files;
  for (const auto& entry : std::filesystem::directory_iterator(data_dir() / "fractional"))
    if (entry.path().extension() == ".json") files.push_back(entry.path());
  std::sort(files.begin(), files.end());
  std::vector<PctspInstance> out;
  for (const auto& f : files) out.push_back(load_instance(f.string()));
  return out;
}

/// The seeded Euclidean suite: instance i has n = 4 + i mod 7 and seed i.
inline PctspInstance suite_instance(int i) { return generate_euclidean(4 + i % 7, static_cast<std::uint64_t>(i)); }

inline Rational rat(long p, long q = 1) {
  Rational r(p, q);
  r.canonicalize();
  return r;
}

/// Instance from an integer cost matrix (must be metric) and penalties p[i]/den.
inline PctspInstance int_instance(const std::vector<std::vector<long>>& c, const std::vector<long>& p, long den = 1) {
  const int n = static_cast<int>(c.size());
  SymmetricMatrix<Rational> costs(n, Rational(0));
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) costs.set(u, v, Rational(c[u][v]));
  std::vector<Rational> pen;
  for (long q : p) pen.push_back(rat(q, den));
  return PctspInstance(0, costs, pen);
}

/// Shortest-path metric of a random connected sparse graph, penalties k/4 in [0, 2*maxw].
inline PctspInstance random_graph_metric(int n, std::mt19937_64& rng, long maxw = 4) {
  const long inf = std::numeric_limits<long>::max() / 4;
  std::vector<std::vector<long>> d(n, std::vector<long>(n, inf));
  for (int i = 0; i < n; ++i) d[i][i] = 0;
  auto weight = [&] { return 1 + static_cast<long>(rng() % static_cast<std::uint64_t>(maxw)); };
  for (int i = 1; i < n; ++i) {
    const int j = static_cast<int>(rng() % static_cast<std::uint64_t>(i));
    d[i][j] = d[j][i] = std::min(d[i][j], weight());
  }
  for (int k = 0; k < n; ++k) {
    const int a = static_cast<int>(rng() % n);
    const int b = static_cast<int>(rng() % n);
    if (a != b) d[a][b] = d[b][a] = std::min(d[a][b], weight());
  }
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
  std::vector<long> p(n, 0);
  for (int i = 1; i < n; ++i) p[i] = static_cast<long>(rng() % static_cast<std::uint64_t>(8 * maxw + 1));
  return int_instance(d, p, 4);
}

/// Cheapest PCTSP solution by trying every subset and every ordering (n <= 8).
inline Rational permutation_opt(const PctspInstance& inst) {
  const int n = inst.size();
  const Vertex r = inst.root();
  std::vector<Vertex> others;
  for (Vertex v = 0; v < n; ++v)
    if (v != r) others.push_back(v);
  Rational best = inst.total_penalty();
  for (unsigned mask = 1; mask < (1u << others.size()); ++mask) {
    std::vector<Vertex> sub;
    Rational pen = inst.total_penalty();
    for (std::size_t i = 0; i < others.size(); ++i)
      if (mask >> i & 1u) {
        sub.push_back(others[i]);
        pen -= inst.penalty(others[i]);
      }
    do {
      Rational len = inst.cost(r, sub.front()) + inst.cost(sub.back(), r);
      for (std::size_t i = 0; i + 1 < sub.size(); ++i) len += inst.cost(sub[i], sub[i + 1]);
      if (len + pen < best) best = len + pen;
    } while (std::next_permutation(sub.begin(), sub.end()));
  }
  return best;
}

/// Minimum perfect matching cost by recursing over the partner of the first vertex.
inline Rational pairing_opt(const PctspInstance& inst, std::vector<Vertex> vs, long* pairings = nullptr) {
  if (vs.empty()) {
    if (pairings) ++*pairings;
    return 0;
  }
  const Vertex a = vs.front();
  Rational best = -1;
  for (std::size_t i = 1; i < vs.size(); ++i) {
    std::vector<Vertex> rest;
    for (std::size_t k = 1; k < vs.size(); ++k)
      if (k != i) rest.push_back(vs[k]);
    Rational c = inst.cost(a, vs[i]) + pairing_opt(inst, rest, pairings);
    if (best < 0 || c < best) best = c;
  }
  return best;
}

inline Rational set_cut(const SymmetricMatrix<Rational>& x, unsigned mask) {
  Rational c = 0;
  for (int u = 0; u < x.size(); ++u)
    for (int v = u + 1; v < x.size(); ++v)
      if (((mask >> u) & 1u) != ((mask >> v) & 1u)) c += x(u, v);
  return c;
}

/// min over S (root outside) and v in S of x(delta(S)) - 2 y_v; positive infinity stand-in 1e9 if n = 1.
inline Rational min_cut_slack(const PctspInstance& inst, const SymmetricMatrix<Rational>& x,
                              const std::vector<Rational>& y) {
  const int n = inst.size();
  Rational best = 1000000000;
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    if (mask >> inst.root() & 1u) continue;
    Rational ymax = 0;
    for (int v = 0; v < n; ++v)
      if ((mask >> v & 1u) && y[v] > ymax) ymax = y[v];
    Rational slack = set_cut(x, mask) - 2 * ymax;
    if (slack < best) best = slack;
  }
  return best;
}

/// Full constraint check by enumeration, independent of the library's verifier.
inline bool feasible_by_enumeration(const PctspInstance& inst, const FractionalSolution& s) {
  const int n = inst.size();
  const Vertex r = inst.root();
  if (s.y[r] != 1) return false;
  for (Vertex v = 0; v < n; ++v) {
    if (s.y[v] < 0 || s.y[v] > 1) return false;
    Rational deg = 0;
    for (Vertex w = 0; w < n; ++w)
      if (w != v) {
        if (s.x(v, w) < 0) return false;
        deg += s.x(v, w);
      }
    if (v == r ? deg > 2 : deg != 2 * s.y[v]) return false;
  }
  return n == 1 || min_cut_slack(inst, s.x, s.y) >= 0;
}

/// Random feasible point: a convex combination of random root tours with random rational weights.
/// Generally fractional in y; feasible because each tour is.
inline FractionalSolution tour_mixture(const PctspInstance& inst, std::mt19937_64& rng, int tours = 3) {
  const int n = inst.size();
  const Vertex r = inst.root();
  FractionalSolution s{SymmetricMatrix<Rational>(n, Rational(0)), std::vector<Rational>(n, Rational(0)), 0};
  std::vector<long> w(tours);
  for (auto& v : w) v = 1 + static_cast<long>(rng() % 7);
  const long total = std::accumulate(w.begin(), w.end(), 0L);
  for (int k = 0; k < tours; ++k) {
    const Rational mu = rat(w[k], total);
    std::vector<Vertex> order{r};
    for (Vertex v = 0; v < n; ++v)
      if (v != r && rng() % 3 != 0) order.push_back(v);
    std::shuffle(order.begin() + 1, order.end(), rng);
    for (Vertex v : order) s.y[v] += mu;
    if (order.size() == 2) {
      s.x.add(r, order[1], 2 * mu);
    } else if (order.size() > 2) {
      for (std::size_t i = 0; i < order.size(); ++i) s.x.add(order[i], order[(i + 1) % order.size()], mu);
    }
  }
  s.objective = lp_objective(inst, s.x, s.y);
  return s;
}

/// Random spanning tree on `vertices` (first entry is the root) via random attachment.
inline RootedTree random_tree(const std::vector<Vertex>& vertices, std::mt19937_64& rng) {
  std::vector<Edge> edges;
  for (std::size_t i = 1; i < vertices.size(); ++i) edges.emplace_back(vertices[i], vertices[rng() % i]);
  return RootedTree(vertices, edges);
}

inline std::vector<Vertex> iota_vertices(int n) {
  std::vector<Vertex> v(n);
  std::iota(v.begin(), v.end(), 0);
  return v;
}

/// Eleven-vertex sample tree with fixed y values; ids in breadth-first order.
///        r(0)
///       /    \
///    a(1)     f(6)
///    /  \     /  \
///  b(2) e(5) g(7) h(8)
///  / \            / \
/// c(3) d(4)     i(9) j(10)
struct SampleTree {
  RootedTree tree;
  std::vector<Rational> y;
};

inline SampleTree sample_tree() {
  SampleTree f;
  f.tree = RootedTree(iota_vertices(11), {Edge(0, 1), Edge(1, 2), Edge(2, 3), Edge(2, 4), Edge(1, 5), Edge(0, 6),
                                          Edge(6, 7), Edge(6, 8), Edge(8, 9), Edge(8, 10)});
  const Rational q = rat(1, 4);
  const Rational h = rat(1, 2);
  f.y = {1, q, q, h, q, 1, h, 1, q, q, q};
  return f;
}

}  // namespace pctsp::testing

#endif  // PCTSP_TESTS_SUPPORT_HPP

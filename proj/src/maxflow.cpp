#include "pctsp/maxflow.hpp"

#include <deque>
#include <vector>

namespace pctsp {

MinCut min_cut(const SymmetricMatrix<Rational>& capacity, Vertex source, Vertex sink) {
  const int n = capacity.size();
  std::vector<Rational> residual(static_cast<std::size_t>(n) * n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = 0; v < n; ++v)
      if (u != v) residual[static_cast<std::size_t>(u) * n + v] = capacity(u, v);
  auto res = [&](Vertex u, Vertex v) -> Rational& { return residual[static_cast<std::size_t>(u) * n + v]; };

  Rational flow = 0;
  std::vector<Vertex> parent(n);
  while (true) {
    std::fill(parent.begin(), parent.end(), -1);
    parent[source] = source;
    std::deque<Vertex> queue{source};
    while (!queue.empty() && parent[sink] < 0) {
      Vertex u = queue.front();
      queue.pop_front();
      for (Vertex v = 0; v < n; ++v)
        if (parent[v] < 0 && sgn(res(u, v)) > 0) {
          parent[v] = u;
          queue.push_back(v);
        }
    }
    if (parent[sink] < 0) {
      VertexSet sink_side(n, true);
      for (Vertex v = 0; v < n; ++v)
        if (parent[v] >= 0) sink_side[v] = false;
      return {flow, std::move(sink_side)};
    }
    Rational bottleneck = res(parent[sink], sink);
    for (Vertex v = sink; v != source; v = parent[v])
      if (res(parent[v], v) < bottleneck) bottleneck = res(parent[v], v);
    for (Vertex v = sink; v != source; v = parent[v]) {
      res(parent[v], v) -= bottleneck;
      res(v, parent[v]) += bottleneck;
    }
    flow += bottleneck;
  }
}

Rational cut_value(const SymmetricMatrix<Rational>& weights, const VertexSet& side) {
  const int n = weights.size();
  Rational sum = 0;
  for (Vertex u = 0; u < n; ++u)
    if (side[u])
      for (Vertex v = 0; v < n; ++v)
        if (!side[v] && sgn(weights(u, v)) != 0) sum += weights(u, v);
  return sum;
}

}  // namespace pctsp

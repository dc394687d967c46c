#ifndef PCTSP_GRAPH_HPP
#define PCTSP_GRAPH_HPP

#include <cassert>
#include <compare>
#include <cstddef>
#include <utility>
#include <vector>

namespace pctsp {

using Vertex = int;

/// Unordered vertex pair, stored with u < v (u == v only for degenerate steps).
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  Edge() = default;
  Edge(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}

  bool has(Vertex w) const { return u == w || v == w; }
  Vertex other(Vertex w) const { return u == w ? v : u; }

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Dense symmetric matrix indexed by vertex pairs; diagonal entries exist but are unused by edges.
template <typename T>
class SymmetricMatrix {
 public:
  SymmetricMatrix() = default;
  explicit SymmetricMatrix(int n, const T& fill = T()) : n_(n), data_(static_cast<std::size_t>(n) * n, fill) {}

  int size() const { return n_; }

  const T& operator()(Vertex a, Vertex b) const { return data_[index(a, b)]; }

  void set(Vertex a, Vertex b, const T& value) {
    data_[index(a, b)] = value;
    data_[index(b, a)] = value;
  }
  void add(Vertex a, Vertex b, const T& delta) {
    data_[index(a, b)] += delta;
    if (a != b) data_[index(b, a)] += delta;
  }
  const T& operator[](const Edge& e) const { return (*this)(e.u, e.v); }

  friend bool operator==(const SymmetricMatrix&, const SymmetricMatrix&) = default;

 private:
  std::size_t index(Vertex a, Vertex b) const {
    assert(a >= 0 && a < n_ && b >= 0 && b < n_);
    return static_cast<std::size_t>(a) * n_ + b;
  }

  int n_ = 0;
  std::vector<T> data_;
};

/// All unordered pairs {u,v}, u < v, in lexicographic order.
inline std::vector<Edge> complete_edges(int n) {
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  return edges;
}

/// Membership vector for a subset of {0..n-1}.
using VertexSet = std::vector<bool>;

inline VertexSet mask_to_set(int n, unsigned long long mask) {
  VertexSet s(n, false);
  for (int i = 0; i < n; ++i) s[i] = (mask >> i) & 1ULL;
  return s;
}

inline std::vector<Vertex> set_members(const VertexSet& s) {
  std::vector<Vertex> out;
  for (std::size_t i = 0; i < s.size(); ++i)
    if (s[i]) out.push_back(static_cast<Vertex>(i));
  return out;
}

}  // namespace pctsp

#endif  // PCTSP_GRAPH_HPP

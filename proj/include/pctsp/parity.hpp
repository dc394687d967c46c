#ifndef PCTSP_PARITY_HPP
#define PCTSP_PARITY_HPP

#include <optional>
#include <stdexcept>
#include <vector>

#include "pctsp/decompose.hpp"

namespace pctsp {

class ParityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Minimal subtree of `tree` spanning the root and every vertex with y_v >= gamma.
RootedTree core(const RootedTree& tree, const std::vector<Rational>& y, const Rational& gamma, Vertex root);

/// thresholds[0] > thresholds[1] > ... are the distinct y values on the tree; layers[i] holds the
/// edges of core(tree, thresholds[i]) that are not in core(tree, thresholds[i-1]).
struct CoreLayers {
  std::vector<Rational> thresholds;
  std::vector<std::vector<Edge>> layers;
};

CoreLayers core_layers(const RootedTree& tree, const std::vector<Rational>& y, Vertex root);

/// Vertices of odd degree in the multigraph on {0..n-1} given by `edges`.
std::vector<Vertex> odd_vertices(int n, const std::vector<Edge>& edges);

/// Largest odd set accepted by the exact subset DP.
inline constexpr std::size_t kMaxMatchingSize = 22;

/// Exact minimum-cost perfect matching on the complete metric graph over `vertices`.
std::vector<Edge> min_cost_matching(const PctspInstance& inst, const std::vector<Vertex>& vertices);

Rational edges_cost(const PctspInstance& inst, const std::vector<Edge>& edges);

/// Closed walk (first vertex repeated implicitly) using every edge of a connected even multigraph once.
std::vector<Vertex> eulerian_walk(int n, const std::vector<Edge>& edges, Vertex start);

/// Tree + minimum matching on odd(tree), Eulerian walk from the root, first-visit shortcut.
Tour parity_correct_and_shortcut(const PctspInstance& inst, const RootedTree& tree);

/// Depth-first preorder of the tree from the root, i.e. the shortcut doubled tree.
Tour double_tree_tour(const PctspInstance& inst, const RootedTree& tree);

struct JoinCertificate {
  SymmetricMatrix<Rational> z;
};

/// z = x/(3 - delta) + sum over layers with threshold >= gamma of (1 - 2 eta_i/(3 - delta)) chi(E_i).
/// Throws ParityError if a coefficient would be negative (delta > 1) or delta > gamma.
JoinCertificate build_certificate(const FractionalSolution& sol, const CoreLayers& layers, const Rational& gamma,
                                  const Rational& delta);

struct JoinCheck {
  bool ok = true;
  std::optional<VertexSet> witness;
  Rational witness_value;
};

/// z(delta(S)) >= 1 for every S with |delta_T(S)| odd, by enumerating all S (n <= 20).
JoinCheck check_join_dominant(const SymmetricMatrix<Rational>& z, const RootedTree& tree);

}  // namespace pctsp

#endif  // PCTSP_PARITY_HPP

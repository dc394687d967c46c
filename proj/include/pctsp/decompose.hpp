#ifndef PCTSP_DECOMPOSE_HPP
#define PCTSP_DECOMPOSE_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "pctsp/lp.hpp"
#include "pctsp/splitting.hpp"

namespace pctsp {

class DecompositionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Tree containing the root; vertex and edge lists are kept sorted.
class RootedTree {
 public:
  RootedTree() = default;
  explicit RootedTree(Vertex root) : vertices_{root} {}
  RootedTree(std::vector<Vertex> vertices, std::vector<Edge> edges);

  const std::vector<Vertex>& vertices() const { return vertices_; }
  const std::vector<Edge>& edges() const { return edges_; }
  bool contains(Vertex v) const;
  bool has_edge(const Edge& e) const;

  void add_vertex(Vertex v);
  void add_edge(const Edge& e);
  void remove_edge(const Edge& e);

  /// Vertices connected to `from` without using edge `skip`.
  std::vector<Vertex> component(Vertex from, const Edge& skip) const;

  /// Connected, acyclic, |E| = |V| - 1 and contains root.
  bool is_valid(Vertex root) const;

  Rational cost(const PctspInstance& inst) const;

  friend auto operator<=>(const RootedTree&, const RootedTree&) = default;

 private:
  std::vector<Vertex> vertices_;
  std::vector<Edge> edges_;
};

struct WeightedTreeFamily {
  std::vector<RootedTree> trees;
  std::vector<Rational> weights;

  std::size_t size() const { return trees.size(); }
};

/// Declared constant C in the bound |trees| <= C * n^3 (checked for n >= 2).
inline constexpr int kTreeCountConstant = 1;

/// Name of the first failing identity (sum of weights = 1, edge usage <= x, coverage = y,
/// tree validity), or nullopt if the family decomposes `sol`.
std::optional<std::string> family_violation(const FractionalSolution& sol, const WeightedTreeFamily& family,
                                            Vertex root);

/// Bookkeeping while undoing the splittings of one vertex.
struct DecompositionState {
  Vertex split_vertex = 0;
  std::vector<Rational> spares;
  std::vector<SplitStep> pending;  // steps still to undo, most recent last
};

/// Reverts the effect of `step` (most recent un-undone split at state.split_vertex) on the trees.
void undo_split_step(DecompositionState& state, WeightedTreeFamily& family, const SplitStep& step);

/// Attaches the split vertex to trees via {s,w} for every positive spare_w.
void consume_spares(DecompositionState& state, WeightedTreeFamily& family);

struct DecomposeOptions {
  bool check_every_level = true;
};

/// Convex combination of rooted trees with total weight 1, edge usage dominated by x and
/// vertex coverage exactly y. Throws DecompositionError on any identity breach.
WeightedTreeFamily decompose(const PctspInstance& inst, const FractionalSolution& sol,
                             const DecomposeOptions& options = {});

}  // namespace pctsp

#endif  // PCTSP_DECOMPOSE_HPP

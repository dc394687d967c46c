#ifndef PCTSP_INSTANCE_HPP
#define PCTSP_INSTANCE_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "pctsp/graph.hpp"
#include "pctsp/rational.hpp"

namespace pctsp {

class InstanceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Triangle inequality failure c(u,w) > c(u,v) + c(v,w).
class MetricViolation : public InstanceError {
 public:
  MetricViolation(Vertex u, Vertex v, Vertex w);
  Vertex u, v, w;
};

using Point = std::pair<Rational, Rational>;

/// Denominator of the coordinate / distance grid.
inline constexpr unsigned kGridBits = 20;

/// Complete metric graph with a root and vertex penalties. Immutable once built.
class PctspInstance {
 public:
  /// Validates symmetry, zero diagonal, nonnegativity, the triangle inequality and
  /// penalties[root] == 0; throws InstanceError (MetricViolation for the triangle check).
  PctspInstance(Vertex root, SymmetricMatrix<Rational> costs, std::vector<Rational> penalties,
                std::optional<std::vector<Point>> coords = std::nullopt);

  int size() const { return costs_.size(); }
  Vertex root() const { return root_; }
  const Rational& cost(Vertex a, Vertex b) const { return costs_(a, b); }
  const SymmetricMatrix<Rational>& costs() const { return costs_; }
  const Rational& penalty(Vertex v) const { return penalties_[v]; }
  const std::vector<Rational>& penalties() const { return penalties_; }
  const std::optional<std::vector<Point>>& coords() const { return coords_; }

  Rational total_penalty() const;

  friend bool operator==(const PctspInstance&, const PctspInstance&) = default;

 private:
  Vertex root_;
  SymmetricMatrix<Rational> costs_;
  std::vector<Rational> penalties_;
  std::optional<std::vector<Point>> coords_;
};

/// Throws MetricViolation naming the first violating (u, v, w) in index order.
void validate_metric(const SymmetricMatrix<Rational>& costs);

/// Euclidean distance rounded up to the 2^-20 grid. Rounding up keeps the triangle inequality.
Rational grid_distance(const Point& a, const Point& b);

SymmetricMatrix<Rational> euclidean_costs(const std::vector<Point>& coords);

/// n points on the 2^-20 grid of the unit square, penalties on the 2^-10 grid of [0,2],
/// root 0 with penalty 0. Deterministic in (n, seed).
PctspInstance generate_euclidean(int n, std::uint64_t seed);

/// A cycle through the root; `order` starts at the root and has no repeats.
struct Tour {
  std::vector<Vertex> order;
  VertexSet visited;
  Rational tourCost;
  Rational penaltyCost;

  Rational total() const { return tourCost + penaltyCost; }
};

/// Builds a Tour from any cyclic order containing the root (rotated so the root leads).
Tour make_tour(const PctspInstance& inst, std::vector<Vertex> order);

Tour root_only_tour(const PctspInstance& inst);

/// Length of the closed walk through `order` (a 2-vertex order traverses its edge twice).
Rational cycle_length(const PctspInstance& inst, const std::vector<Vertex>& order);

/// Tour length plus penalties of unvisited vertices, recomputed from tour.order.
Rational solution_cost(const PctspInstance& inst, const Tour& tour);

}  // namespace pctsp

#endif  // PCTSP_INSTANCE_HPP

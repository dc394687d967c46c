#ifndef PCTSP_MAXFLOW_HPP
#define PCTSP_MAXFLOW_HPP

#include "pctsp/graph.hpp"
#include "pctsp/rational.hpp"

namespace pctsp {

struct MinCut {
  Rational value;
  /// Vertices NOT reachable from the source in the final residual graph; contains the sink.
  VertexSet sink_side;
};

/// Exact minimum source-sink cut of the undirected graph with the given symmetric capacities,
/// via shortest augmenting paths. The returned sink side is the inclusion-wise maximal one.
MinCut min_cut(const SymmetricMatrix<Rational>& capacity, Vertex source, Vertex sink);

/// x(delta(S)) for a symmetric edge weighting.
Rational cut_value(const SymmetricMatrix<Rational>& weights, const VertexSet& side);

}  // namespace pctsp

#endif  // PCTSP_MAXFLOW_HPP

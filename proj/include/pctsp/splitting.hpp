#ifndef PCTSP_SPLITTING_HPP
#define PCTSP_SPLITTING_HPP

#include <stdexcept>
#include <vector>

#include "pctsp/lp.hpp"

namespace pctsp {

class SplittingError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Moves `amount` of weight from {vertex,s},{vertex,t} to {s,t} and lowers y_vertex by `amount`.
/// s == t is a drop step, legal only at the root: x_{vertex,r} loses 2*amount.
struct SplitStep {
  Vertex vertex = 0;
  Vertex s = 0;
  Vertex t = 0;
  Rational amount;

  bool is_drop() const { return s == t; }
  friend bool operator==(const SplitStep&, const SplitStep&) = default;
};

FractionalSolution apply_split(const PctspInstance& inst, const FractionalSolution& sol, const SplitStep& step);

/// Exact inverse of apply_split.
FractionalSolution revert_split(const PctspInstance& inst, const FractionalSolution& sol, const SplitStep& step);

/// Largest amount <= the available edge weight that keeps min-cut(r,u) >= 2 y_u for all u != v.
/// Pass s == t == root for a drop step. Zero means the pair is inadmissible.
Rational max_admissible(const PctspInstance& inst, const FractionalSolution& sol, Vertex v, Vertex s, Vertex t);

struct SplittingResult {
  FractionalSolution solution;
  std::vector<SplitStep> steps;
};

/// Splits off every edge at v (v != root) until y_v = 0. Throws SplittingError if no admissible
/// pair exists while y_v > 0.
SplittingResult complete_splitting(const PctspInstance& inst, const FractionalSolution& sol, Vertex v);

}  // namespace pctsp

#endif  // PCTSP_SPLITTING_HPP

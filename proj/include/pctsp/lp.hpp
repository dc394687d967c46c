#ifndef PCTSP_LP_HPP
#define PCTSP_LP_HPP

#include <optional>
#include <string>
#include <vector>

#include "pctsp/graph.hpp"
#include "pctsp/instance.hpp"
#include "pctsp/rational.hpp"

namespace pctsp {

/// Point (x, y) of the PCTSP relaxation
///   min c.x + pi.(1 - y)
///   x(delta(v)) = 2 y_v (v != r),  x(delta(r)) <= 2,  x(delta(S)) >= 2 y_v (v in S, r not in S),
///   y_r = 1,  x, y >= 0.
struct FractionalSolution {
  SymmetricMatrix<Rational> x;
  std::vector<Rational> y;
  Rational objective;

  int size() const { return x.size(); }
  Rational degree(Vertex v) const;

  friend bool operator==(const FractionalSolution&, const FractionalSolution&) = default;
};

/// c.x
Rational edge_cost(const PctspInstance& inst, const SymmetricMatrix<Rational>& x);
/// c.x + pi.(1 - y)
Rational lp_objective(const PctspInstance& inst, const SymmetricMatrix<Rational>& x, const std::vector<Rational>& y);

/// S (r not in S) and v in S with x(delta(S)) < 2 y_v.
struct ViolatedCut {
  VertexSet side;
  Vertex vertex = 0;
  Rational cut;     // x(delta(S))
  Rational demand;  // 2 y_v, exceeding cut
};

/// Most violated cut over all v, found by exact r-v minimum cuts; nullopt if none.
std::optional<ViolatedCut> separate(const PctspInstance& inst, const SymmetricMatrix<Rational>& x,
                                    const std::vector<Rational>& y);
/// One violated minimum cut per vertex v that has one.
std::vector<ViolatedCut> separate_all(const PctspInstance& inst, const SymmetricMatrix<Rational>& x,
                                      const std::vector<Rational>& y);

struct LpResult {
  FractionalSolution solution;
  std::vector<ViolatedCut> added_cuts;  // in the order added, each violated at that time
  int rounds = 0;
  std::size_t pivots = 0;
};

/// Exact optimum by row generation over the cut constraints.
LpResult solve_relaxation_detailed(const PctspInstance& inst);
FractionalSolution solve_relaxation(const PctspInstance& inst);

struct FeasibilityReport {
  bool nonnegative = true;
  bool y_bounds = true;       // 0 <= y <= 1 and y_r = 1
  bool degree_equalities = true;
  bool root_degree = true;
  bool cuts = true;
  bool objective = true;      // stored objective equals c.x + pi.(1 - y)
  std::optional<ViolatedCut> witness;
  std::string message;

  bool ok() const { return nonnegative && y_bounds && degree_equalities && root_degree && cuts && objective; }
};

/// Exact check of every constraint family. Cuts are enumerated for n <= 12, min-cut otherwise.
FeasibilityReport verify_feasibility(const PctspInstance& inst, const FractionalSolution& sol);

}  // namespace pctsp

#endif  // PCTSP_LP_HPP

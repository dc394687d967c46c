#ifndef PCTSP_SIMPLEX_HPP
#define PCTSP_SIMPLEX_HPP

#include <cstddef>
#include <vector>

#include "pctsp/rational.hpp"

namespace pctsp {

/// Dense exact tableau for   min c.x  s.t.  A x <= b,  x >= 0,  with b >= 0 for the initial rows,
/// so the all-slack basis is feasible. Rows may be appended after an optimum is reached; the
/// tableau is then re-optimized by dual simplex. Both phases use smallest-index (Bland) rules.
class DenseSimplex {
 public:
  explicit DenseSimplex(std::vector<Rational> costs);

  std::size_t variable_count() const { return num_vars_; }
  std::size_t row_count() const { return rows_.size(); }

  /// Appends a.x <= rhs. Before the first solve() rhs must be >= 0.
  void add_row(const std::vector<Rational>& coeffs, const Rational& rhs);

  /// Runs primal (first call) or dual (after add_row) simplex to optimality.
  void solve();

  Rational objective() const { return objective_; }
  std::vector<Rational> primal() const;
  std::size_t pivot_count() const { return pivots_; }

 private:
  void pivot(std::size_t row, std::size_t col);
  void primal_phase();
  void dual_phase();

  std::size_t num_vars_;
  std::size_t num_cols_;
  std::vector<std::vector<Rational>> rows_;
  std::vector<Rational> rhs_;
  std::vector<std::size_t> basis_;
  std::vector<Rational> reduced_;
  Rational objective_ = 0;
  bool solved_once_ = false;
  std::size_t pivots_ = 0;
};

}  // namespace pctsp

#endif  // PCTSP_SIMPLEX_HPP

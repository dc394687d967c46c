#include "pctsp/simplex.hpp"

#include <limits>
#include <stdexcept>

namespace pctsp {

DenseSimplex::DenseSimplex(std::vector<Rational> costs)
    : num_vars_(costs.size()), num_cols_(costs.size()), reduced_(std::move(costs)) {}

void DenseSimplex::add_row(const std::vector<Rational>& coeffs, const Rational& rhs) {
  if (coeffs.size() != num_vars_) throw std::invalid_argument("row has wrong width");
  if (!solved_once_ && sgn(rhs) < 0) throw std::invalid_argument("initial rows need rhs >= 0");

  const std::size_t slack = num_cols_++;
  for (auto& row : rows_) row.emplace_back(0);
  reduced_.emplace_back(0);

  std::vector<Rational> row(num_cols_);
  for (std::size_t j = 0; j < num_vars_; ++j) row[j] = coeffs[j];
  row[slack] = 1;
  Rational b = rhs;
  // Express the new row in the current nonbasic variables.
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    const Rational coef = row[basis_[i]];
    if (sgn(coef) == 0) continue;
    for (std::size_t j = 0; j < num_cols_; ++j)
      if (sgn(rows_[i][j]) != 0) row[j] -= coef * rows_[i][j];
    b -= coef * rhs_[i];
  }
  rows_.push_back(std::move(row));
  rhs_.push_back(std::move(b));
  basis_.push_back(slack);
}

void DenseSimplex::pivot(std::size_t r, std::size_t c) {
  ++pivots_;
  std::vector<Rational>& prow = rows_[r];
  const Rational inv = 1 / prow[c];
  for (auto& a : prow)
    if (sgn(a) != 0) a *= inv;
  rhs_[r] *= inv;

  std::vector<std::size_t> support;
  for (std::size_t j = 0; j < num_cols_; ++j)
    if (sgn(prow[j]) != 0) support.push_back(j);

  for (std::size_t i = 0; i < rows_.size(); ++i) {
    if (i == r) continue;
    const Rational f = rows_[i][c];
    if (sgn(f) == 0) continue;
    for (std::size_t j : support) rows_[i][j] -= f * prow[j];
    rhs_[i] -= f * rhs_[r];
  }
  const Rational f = reduced_[c];
  if (sgn(f) != 0) {
    for (std::size_t j : support) reduced_[j] -= f * prow[j];
    objective_ += f * rhs_[r];
  }
  basis_[r] = c;
}

void DenseSimplex::primal_phase() {
  while (true) {
    std::size_t enter = num_cols_;
    for (std::size_t j = 0; j < num_cols_; ++j)
      if (sgn(reduced_[j]) < 0) {
        enter = j;
        break;
      }
    if (enter == num_cols_) return;

    std::size_t leave = rows_.size();
    Rational best_ratio;
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      if (sgn(rows_[i][enter]) <= 0) continue;
      Rational ratio = rhs_[i] / rows_[i][enter];
      if (leave == rows_.size() || ratio < best_ratio || (ratio == best_ratio && basis_[i] < basis_[leave])) {
        leave = i;
        best_ratio = ratio;
      }
    }
    if (leave == rows_.size()) throw std::runtime_error("LP unbounded");
    pivot(leave, enter);
  }
}

void DenseSimplex::dual_phase() {
  while (true) {
    std::size_t leave = rows_.size();
    for (std::size_t i = 0; i < rows_.size(); ++i)
      if (sgn(rhs_[i]) < 0 && (leave == rows_.size() || basis_[i] < basis_[leave])) leave = i;
    if (leave == rows_.size()) return;

    std::size_t enter = num_cols_;
    Rational best_ratio;
    for (std::size_t j = 0; j < num_cols_; ++j) {
      const Rational& a = rows_[leave][j];
      if (sgn(a) >= 0) continue;
      Rational ratio = reduced_[j] / -a;
      if (enter == num_cols_ || ratio < best_ratio) {
        enter = j;
        best_ratio = ratio;
      }
    }
    if (enter == num_cols_) throw std::runtime_error("LP infeasible after adding rows");
    pivot(leave, enter);
  }
}

void DenseSimplex::solve() {
  if (solved_once_) dual_phase();
  solved_once_ = true;
  // Dual simplex preserves nonnegative reduced costs, so after it this pass returns at once.
  primal_phase();
}

std::vector<Rational> DenseSimplex::primal() const {
  std::vector<Rational> x(num_vars_, Rational(0));
  for (std::size_t i = 0; i < rows_.size(); ++i)
    if (basis_[i] < num_vars_) x[basis_[i]] = rhs_[i];
  return x;
}

}  // namespace pctsp

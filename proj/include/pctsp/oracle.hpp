#ifndef PCTSP_ORACLE_HPP
#define PCTSP_ORACLE_HPP

#include <optional>
#include <stdexcept>

#include "pctsp/lp.hpp"

namespace pctsp {

class OracleError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr int kMaxOracleSize = 12;

struct OptimumResult {
  Tour tour;
  Rational cost;
};

/// Exact PCTSP optimum: Held-Karp over all vertex subsets containing the root. n <= 12.
OptimumResult brute_force_opt(const PctspInstance& inst);

struct CutCheck {
  bool ok = true;
  std::optional<ViolatedCut> witness;
};

/// x(delta(S)) >= 2 y_v for every S not containing the root and every v in S. n <= 12.
CutCheck enumerate_cut_check(const PctspInstance& inst, const FractionalSolution& sol);

}  // namespace pctsp

#endif  // PCTSP_ORACLE_HPP

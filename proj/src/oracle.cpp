#include "pctsp/oracle.hpp"

#include <algorithm>

#include "pctsp/maxflow.hpp"

namespace pctsp {

OptimumResult brute_force_opt(const PctspInstance& inst) {
  const int n = inst.size();
  if (n > kMaxOracleSize) throw OracleError("brute force refuses instances with n > 12");
  const Vertex r = inst.root();
  std::vector<Vertex> others;
  for (Vertex v = 0; v < n; ++v)
    if (v != r) others.push_back(v);
  const int m = static_cast<int>(others.size());
  const std::size_t masks = std::size_t{1} << m;

  // path[mask][j]: shortest path from r through exactly `mask`, ending at others[j].
  std::vector<std::vector<Rational>> path(masks, std::vector<Rational>(m));
  std::vector<std::vector<int>> prev(masks, std::vector<int>(m, -1));
  std::vector<std::vector<bool>> known(masks, std::vector<bool>(m, false));
  for (int j = 0; j < m; ++j) {
    path[std::size_t{1} << j][j] = inst.cost(r, others[j]);
    known[std::size_t{1} << j][j] = true;
  }
  for (std::size_t mask = 1; mask < masks; ++mask)
    for (int j = 0; j < m; ++j) {
      if (!known[mask][j]) continue;
      for (int k = 0; k < m; ++k) {
        if ((mask >> k) & 1U) continue;
        const std::size_t next = mask | (std::size_t{1} << k);
        Rational len = path[mask][j] + inst.cost(others[j], others[k]);
        if (!known[next][k] || len < path[next][k]) {
          path[next][k] = std::move(len);
          prev[next][k] = j;
          known[next][k] = true;
        }
      }
    }

  OptimumResult best{root_only_tour(inst), inst.total_penalty()};
  for (std::size_t mask = 1; mask < masks; ++mask) {
    Rational skipped = 0;
    for (int j = 0; j < m; ++j)
      if (!((mask >> j) & 1U)) skipped += inst.penalty(others[j]);
    if (skipped >= best.cost) continue;
    int end = -1;
    Rational tour_len;
    for (int j = 0; j < m; ++j) {
      if (!known[mask][j]) continue;
      Rational len = path[mask][j] + inst.cost(others[j], r);
      if (end < 0 || len < tour_len) {
        end = j;
        tour_len = std::move(len);
      }
    }
    Rational total = tour_len + skipped;
    if (total >= best.cost) continue;
    std::vector<Vertex> order;
    for (std::size_t cur = mask; end >= 0;) {
      order.push_back(others[end]);
      const int p = prev[cur][end];
      cur &= ~(std::size_t{1} << end);
      end = p;
    }
    order.push_back(r);
    std::reverse(order.begin(), order.end());
    best.tour = make_tour(inst, std::move(order));
    best.cost = std::move(total);
  }
  return best;
}

CutCheck enumerate_cut_check(const PctspInstance& inst, const FractionalSolution& sol) {
  const int n = inst.size();
  if (n > kMaxOracleSize) throw OracleError("cut enumeration refuses instances with n > 12");
  CutCheck out;
  const Vertex r = inst.root();
  for (unsigned long long mask = 1; mask < (1ULL << n); ++mask) {
    if ((mask >> r) & 1ULL) continue;
    VertexSet side = mask_to_set(n, mask);
    const Rational value = cut_value(sol.x, side);
    for (Vertex v : set_members(side))
      if (value < 2 * sol.y[v]) {
        out.ok = false;
        out.witness = ViolatedCut{side, v, value, 2 * sol.y[v]};
        return out;
      }
  }
  return out;
}

}  // namespace pctsp

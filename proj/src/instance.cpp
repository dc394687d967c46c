#include "pctsp/instance.hpp"

#include <algorithm>
#include <random>

namespace pctsp {

MetricViolation::MetricViolation(Vertex u_, Vertex v_, Vertex w_)
    : InstanceError("metric violation: c(" + std::to_string(u_) + "," + std::to_string(w_) + ") > c(" +
                    std::to_string(u_) + "," + std::to_string(v_) + ") + c(" + std::to_string(v_) + "," +
                    std::to_string(w_) + ")"),
      u(u_),
      v(v_),
      w(w_) {}

void validate_metric(const SymmetricMatrix<Rational>& costs) {
  const int n = costs.size();
  for (Vertex u = 0; u < n; ++u)
    for (Vertex w = u + 1; w < n; ++w)
      for (Vertex v = 0; v < n; ++v) {
        if (v == u || v == w) continue;
        if (costs(u, w) > costs(u, v) + costs(v, w)) throw MetricViolation(u, v, w);
      }
}

PctspInstance::PctspInstance(Vertex root, SymmetricMatrix<Rational> costs, std::vector<Rational> penalties,
                             std::optional<std::vector<Point>> coords)
    : root_(root), costs_(std::move(costs)), penalties_(std::move(penalties)), coords_(std::move(coords)) {
  const int n = costs_.size();
  if (n < 1) throw InstanceError("instance needs at least one vertex");
  if (root_ < 0 || root_ >= n) throw InstanceError("root out of range");
  if (static_cast<int>(penalties_.size()) != n) throw InstanceError("penalty vector has wrong length");
  if (coords_ && static_cast<int>(coords_->size()) != n) throw InstanceError("coordinate list has wrong length");
  for (auto& p : penalties_) p.canonicalize();
  for (Vertex v = 0; v < n; ++v)
    for (Vertex w = v; w < n; ++w) {
      Rational a = costs_(v, w);
      Rational b = costs_(w, v);
      a.canonicalize();
      b.canonicalize();
      if (a != b) throw InstanceError("asymmetric cost on (" + std::to_string(v) + "," + std::to_string(w) + ")");
      costs_.set(v, w, a);
    }
  for (Vertex v = 0; v < n; ++v) {
    if (penalties_[v] < 0) throw InstanceError("negative penalty at vertex " + std::to_string(v));
    if (costs_(v, v) != 0) throw InstanceError("nonzero diagonal cost at vertex " + std::to_string(v));
    for (Vertex w = 0; w < n; ++w) {
      if (costs_(v, w) < 0)
        throw InstanceError("negative cost on (" + std::to_string(v) + "," + std::to_string(w) + ")");
      if (costs_(v, w) != costs_(w, v))
        throw InstanceError("asymmetric cost on (" + std::to_string(v) + "," + std::to_string(w) + ")");
    }
  }
  if (penalties_[root_] != 0) throw InstanceError("root penalty must be 0");
  validate_metric(costs_);
}

Rational PctspInstance::total_penalty() const {
  Rational sum = 0;
  for (const auto& p : penalties_) sum += p;
  return sum;
}

namespace {

// Smallest integer m >= 0 with m^2 >= q, for q >= 0.
mpz_class ceil_sqrt(const Rational& q) {
  mpz_class floor_q = q.get_num() / q.get_den();
  mpz_class m;
  mpz_sqrt(m.get_mpz_t(), floor_q.get_mpz_t());
  while (Rational(m * m) < q) ++m;
  return m;
}

}  // namespace

Rational grid_distance(const Point& a, const Point& b) {
  Rational dx = a.first - b.first;
  Rational dy = a.second - b.second;
  Rational scaled = (dx * dx + dy * dy) * Rational(mpz_class(1) << (2 * kGridBits));
  Rational d(ceil_sqrt(scaled), mpz_class(1) << kGridBits);
  d.canonicalize();
  return d;
}

SymmetricMatrix<Rational> euclidean_costs(const std::vector<Point>& coords) {
  const int n = static_cast<int>(coords.size());
  SymmetricMatrix<Rational> c(n, Rational(0));
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) c.set(u, v, grid_distance(coords[u], coords[v]));
  return c;
}

PctspInstance generate_euclidean(int n, std::uint64_t seed) {
  if (n < 1) throw InstanceError("generate_euclidean needs n >= 1");
  std::mt19937_64 rng(seed);
  // Explicit modular draws keep output identical across standard libraries.
  auto draw = [&rng](std::uint64_t bound) { return rng() % (bound + 1); };
  const std::uint64_t grid = 1ULL << kGridBits;
  std::vector<Point> coords;
  std::vector<Rational> penalties;
  for (int i = 0; i < n; ++i) {
    Rational x(static_cast<unsigned long>(draw(grid)), static_cast<unsigned long>(grid));
    Rational y(static_cast<unsigned long>(draw(grid)), static_cast<unsigned long>(grid));
    x.canonicalize();
    y.canonicalize();
    coords.emplace_back(x, y);
    Rational p(static_cast<unsigned long>(draw(2048)), 1024UL);
    p.canonicalize();
    penalties.push_back(p);
  }
  penalties[0] = 0;
  auto costs = euclidean_costs(coords);
  return PctspInstance(0, std::move(costs), std::move(penalties), std::move(coords));
}

Rational cycle_length(const PctspInstance& inst, const std::vector<Vertex>& order) {
  Rational len = 0;
  if (order.size() < 2) return len;
  for (std::size_t i = 0; i < order.size(); ++i) len += inst.cost(order[i], order[(i + 1) % order.size()]);
  return len;
}

namespace {

VertexSet checked_visit_set(const PctspInstance& inst, const std::vector<Vertex>& order) {
  VertexSet visited(inst.size(), false);
  for (Vertex v : order) {
    if (v < 0 || v >= inst.size()) throw InstanceError("tour vertex out of range: " + std::to_string(v));
    if (visited[v]) throw InstanceError("tour repeats vertex " + std::to_string(v));
    visited[v] = true;
  }
  if (!visited[inst.root()]) throw InstanceError("tour misses the root");
  return visited;
}

Rational unvisited_penalty(const PctspInstance& inst, const VertexSet& visited) {
  Rational sum = 0;
  for (Vertex v = 0; v < inst.size(); ++v)
    if (!visited[v]) sum += inst.penalty(v);
  return sum;
}

}  // namespace

Tour make_tour(const PctspInstance& inst, std::vector<Vertex> order) {
  Tour t;
  t.visited = checked_visit_set(inst, order);
  auto it = std::find(order.begin(), order.end(), inst.root());
  std::rotate(order.begin(), it, order.end());
  t.order = std::move(order);
  t.tourCost = cycle_length(inst, t.order);
  t.penaltyCost = unvisited_penalty(inst, t.visited);
  return t;
}

Tour root_only_tour(const PctspInstance& inst) { return make_tour(inst, {inst.root()}); }

Rational solution_cost(const PctspInstance& inst, const Tour& tour) {
  VertexSet visited = checked_visit_set(inst, tour.order);
  return cycle_length(inst, tour.order) + unvisited_penalty(inst, visited);
}

}  // namespace pctsp

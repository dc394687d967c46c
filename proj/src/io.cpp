#include "pctsp/io.hpp"

#include <fstream>
#include <sstream>

namespace pctsp {

Json rational_to_json(const Rational& q) { return to_string(q); }

Rational rational_from_json(const Json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number()) return parse_rational(j.dump());
  throw InstanceError("expected a number or \"p/q\" string, got " + j.dump());
}

namespace {

std::vector<Rational> rational_list(const Json& j, const char* what) {
  if (!j.is_array()) throw InstanceError(std::string(what) + " must be an array");
  std::vector<Rational> out;
  for (const auto& e : j) out.push_back(rational_from_json(e));
  return out;
}

}  // namespace

PctspInstance instance_from_json(const Json& j) {
  if (!j.is_object()) throw InstanceError("instance must be a JSON object");
  if (!j.contains("n") || !j.at("n").is_number_integer()) throw InstanceError("missing integer field \"n\"");
  const int n = j.at("n").get<int>();
  if (n < 1) throw InstanceError("n must be >= 1");
  const Vertex root = j.value("root", 0);

  std::optional<std::vector<Point>> coords;
  if (j.contains("coords")) {
    const Json& c = j.at("coords");
    if (!c.is_array() || static_cast<int>(c.size()) != n) throw InstanceError("coords must list n points");
    coords.emplace();
    for (const auto& p : c) {
      if (!p.is_array() || p.size() != 2) throw InstanceError("each coordinate is a pair");
      coords->emplace_back(rational_from_json(p[0]), rational_from_json(p[1]));
    }
  }

  SymmetricMatrix<Rational> costs(n, Rational(0));
  if (j.contains("costs")) {
    const Json& rows = j.at("costs");
    if (!rows.is_array() || static_cast<int>(rows.size()) != n) throw InstanceError("costs must be an n x n matrix");
    for (int u = 0; u < n; ++u) {
      auto row = rational_list(rows[u], "cost row");
      if (static_cast<int>(row.size()) != n) throw InstanceError("costs must be an n x n matrix");
      for (int v = 0; v < n; ++v) {
        if (v < u && row[v] != costs(u, v))
          throw InstanceError("asymmetric cost on (" + std::to_string(u) + "," + std::to_string(v) + ")");
        if (v >= u) costs.set(u, v, row[v]);
      }
    }
  } else if (coords) {
    costs = euclidean_costs(*coords);
  } else {
    throw InstanceError("instance needs \"costs\" or \"coords\"");
  }

  if (!j.contains("penalties")) throw InstanceError("missing field \"penalties\"");
  auto penalties = rational_list(j.at("penalties"), "penalties");
  if (static_cast<int>(penalties.size()) != n) throw InstanceError("penalties must have n entries");
  return PctspInstance(root, std::move(costs), std::move(penalties), std::move(coords));
}

Json instance_to_json(const PctspInstance& inst) {
  const int n = inst.size();
  Json j;
  j["n"] = n;
  j["root"] = inst.root();
  if (inst.coords()) {
    Json c = Json::array();
    for (const auto& [x, y] : *inst.coords()) c.push_back({rational_to_json(x), rational_to_json(y)});
    j["coords"] = std::move(c);
  }
  Json rows = Json::array();
  for (int u = 0; u < n; ++u) {
    Json row = Json::array();
    for (int v = 0; v < n; ++v) row.push_back(rational_to_json(inst.cost(u, v)));
    rows.push_back(std::move(row));
  }
  j["costs"] = std::move(rows);
  Json pen = Json::array();
  for (const auto& p : inst.penalties()) pen.push_back(rational_to_json(p));
  j["penalties"] = std::move(pen);
  return j;
}

PctspInstance load_instance(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InstanceError("cannot open instance file " + path);
  Json j;
  try {
    in >> j;
  } catch (const Json::parse_error& e) {
    throw InstanceError(std::string("parse error in ") + path + ": " + e.what());
  }
  try {
    return instance_from_json(j);
  } catch (const Json::exception& e) {
    throw InstanceError(std::string("malformed instance ") + path + ": " + e.what());
  } catch (const std::invalid_argument& e) {
    throw InstanceError(std::string("malformed number in ") + path + ": " + e.what());
  }
}

void save_instance(const PctspInstance& inst, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw InstanceError("cannot write " + path);
  out << instance_to_json(inst).dump(2) << '\n';
}

Json tour_to_json(const Tour& tour) {
  return {{"order", tour.order},
          {"tour_cost", rational_to_json(tour.tourCost)},
          {"penalty", rational_to_json(tour.penaltyCost)},
          {"total", rational_to_json(tour.total())}};
}

Tour tour_from_json(const PctspInstance& inst, const Json& j) {
  if (!j.contains("order") || !j.at("order").is_array()) throw InstanceError("tour needs an \"order\" array");
  return make_tour(inst, j.at("order").get<std::vector<Vertex>>());
}

Json solution_to_json(const FractionalSolution& sol) {
  Json x = Json::array();
  for (const Edge& e : complete_edges(sol.size()))
    if (sgn(sol.x[e]) != 0) x.push_back({e.u, e.v, rational_to_json(sol.x[e])});
  Json y = Json::array();
  for (const auto& v : sol.y) y.push_back(rational_to_json(v));
  return {{"x", std::move(x)}, {"y", std::move(y)}, {"objective", rational_to_json(sol.objective)}};
}

FractionalSolution solution_from_json(const PctspInstance& inst, const Json& j) {
  const int n = inst.size();
  FractionalSolution sol{SymmetricMatrix<Rational>(n, Rational(0)), {}, 0};
  for (const auto& entry : j.at("x")) {
    const int u = entry.at(0).get<int>();
    const int v = entry.at(1).get<int>();
    if (u < 0 || v < 0 || u >= n || v >= n || u == v) throw InstanceError("bad edge in solution");
    sol.x.set(u, v, rational_from_json(entry.at(2)));
  }
  sol.y = rational_list(j.at("y"), "y");
  if (static_cast<int>(sol.y.size()) != n) throw InstanceError("y must have n entries");
  sol.objective = j.contains("objective") ? rational_from_json(j.at("objective")) : lp_objective(inst, sol.x, sol.y);
  return sol;
}

Json family_to_json(const WeightedTreeFamily& family) {
  Json trees = Json::array();
  for (std::size_t i = 0; i < family.size(); ++i) {
    Json edges = Json::array();
    for (const Edge& e : family.trees[i].edges()) edges.push_back({e.u, e.v});
    trees.push_back({{"weight", rational_to_json(family.weights[i])},
                     {"vertices", family.trees[i].vertices()},
                     {"edges", std::move(edges)}});
  }
  return {{"trees", std::move(trees)}};
}

Json report_to_json(const SolveReport& report) {
  Json cands = Json::array();
  for (const auto& c : report.candidates) {
    cands.push_back({{"delta", rational_to_json(c.delta)},
                     {"gamma", rational_to_json(c.gamma)},
                     {"tree", c.tree},
                     {"vertices", c.core.vertices()},
                     {"tour_cost", rational_to_json(c.tourCost)},
                     {"penalty", rational_to_json(c.penalty)}});
  }
  return {{"best", tour_to_json(report.bestTour)},
          {"lp", rational_to_json(report.lpObjective)},
          {"ratio", report.ratio},
          {"delta", rational_to_json(report.bestDelta)},
          {"candidate_count", report.candidateCount},
          {"candidates", std::move(cands)}};
}

}  // namespace pctsp

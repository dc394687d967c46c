#include <doctest.h>

#include "support.hpp"

using namespace pctsp;
using pctsp::testing::rat;

TEST_CASE("two-vertex file loads") {
  const auto inst = load_instance((testing::data_dir() / "two_vertex.json").string());
  CHECK(inst.size() == 2);
  CHECK(inst.root() == 0);
  CHECK(inst.cost(0, 1) == 1);
  CHECK(inst.penalty(1) == 3);
  CHECK(inst.penalty(0) == 0);
}

TEST_CASE("metric violation names the witness triple") {
  try {
    load_instance((testing::data_dir() / "non_metric.json").string());
    FAIL("expected a metric violation");
  } catch (const MetricViolation& e) {
    CHECK(e.u == 0);
    CHECK(e.v == 1);
    CHECK(e.w == 2);
  }
}

TEST_CASE("euclidean file costs are the grid-rounded distances") {
  const auto inst = load_instance((testing::data_dir() / "euclid8.json").string());
  REQUIRE(inst.size() == 8);
  REQUIRE(inst.coords());
  const Rational ulp(1, 1 << kGridBits);
  for (int u = 0; u < 8; ++u)
    for (int v = u + 1; v < 8; ++v) {
      const auto& [ax, ay] = (*inst.coords())[u];
      const auto& [bx, by] = (*inst.coords())[v];
      const Rational sq = (ax - bx) * (ax - bx) + (ay - by) * (ay - by);
      const Rational c = inst.cost(u, v);
      // c is a grid point with c >= true distance > c - ulp.
      CHECK(Rational(c * (1 << kGridBits)).get_den() == 1);
      CHECK(c * c >= sq);
      const Rational below = c - ulp;
      CHECK((sgn(below) < 0 || below * below < sq));
      CHECK(std::abs(to_double(c) - std::sqrt(to_double(sq))) < 1e-6);
    }
}

TEST_CASE("generator") {
  SUBCASE("single vertex") {
    const auto inst = generate_euclidean(1, 99);
    CHECK(inst.size() == 1);
    CHECK(inst.penalty(0) == 0);
  }
  SUBCASE("deterministic") { CHECK(generate_euclidean(8, 42) == generate_euclidean(8, 42)); }
  SUBCASE("seeds differ") { CHECK_FALSE(generate_euclidean(8, 42) == generate_euclidean(8, 43)); }
  SUBCASE("metric, on grid, penalties in [0,2]") {
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
      const auto inst = generate_euclidean(3 + static_cast<int>(seed % 8), seed);
      CHECK_NOTHROW(validate_metric(inst.costs()));
      CHECK(inst.penalty(inst.root()) == 0);
      for (Vertex v = 0; v < inst.size(); ++v) {
        CHECK(inst.penalty(v) >= 0);
        CHECK(inst.penalty(v) <= 2);
        const auto& [x, y] = (*inst.coords())[v];
        CHECK(x >= 0);
        CHECK(x <= 1);
        CHECK(y >= 0);
        CHECK(y <= 1);
      }
    }
  }
}

TEST_CASE("constructor rejects bad data") {
  SymmetricMatrix<Rational> c(3, Rational(0));
  c.set(0, 1, 1);
  c.set(1, 2, 1);
  c.set(0, 2, 1);
  CHECK_THROWS_AS(PctspInstance(0, c, {0, 1}), InstanceError);
  CHECK_THROWS_AS(PctspInstance(3, c, {0, 1, 1}), InstanceError);
  CHECK_THROWS_AS(PctspInstance(0, c, {0, -1, 1}), InstanceError);
  CHECK_THROWS_AS(PctspInstance(0, c, {1, 1, 1}), InstanceError);
  auto neg = c;
  neg.set(0, 1, -1);
  CHECK_THROWS_AS(PctspInstance(0, neg, {0, 1, 1}), InstanceError);
  CHECK_NOTHROW(PctspInstance(0, c, {0, 1, 1}));
}

TEST_CASE("solution cost on the two-vertex instance") {
  const auto inst = testing::int_instance({{0, 1}, {1, 0}}, {0, 3});
  CHECK(solution_cost(inst, root_only_tour(inst)) == 3);
  const Tour t = make_tour(inst, {0, 1});
  CHECK(t.tourCost == 2);
  CHECK(solution_cost(inst, t) == 2);
}

TEST_CASE("solution cost errors") {
  const auto inst = generate_euclidean(5, 3);
  Tour t = make_tour(inst, {0, 2, 4});
  t.order = {0, 2, 2};
  CHECK_THROWS_AS(solution_cost(inst, t), InstanceError);
  t.order = {1, 2};
  CHECK_THROWS_AS(solution_cost(inst, t), InstanceError);
  CHECK_THROWS_AS(make_tour(inst, {0, 5}), InstanceError);
}

TEST_CASE("solution cost matches recomputation and is rotation/reversal invariant") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    const auto inst = generate_euclidean(7, 100 + trial);
    std::vector<Vertex> order{0};
    for (Vertex v = 1; v < 7; ++v)
      if (rng() % 2) order.push_back(v);
    std::shuffle(order.begin(), order.end(), rng);

    Rational expect = 0;
    std::vector<bool> in(7, false);
    for (Vertex v : order) in[v] = true;
    if (order.size() > 1)
      for (std::size_t i = 0; i < order.size(); ++i) expect += inst.cost(order[i], order[(i + 1) % order.size()]);
    for (Vertex v = 0; v < 7; ++v)
      if (!in[v]) expect += inst.penalty(v);

    const Tour t = make_tour(inst, order);
    CHECK(t.order.front() == 0);
    CHECK(solution_cost(inst, t) == expect);
    CHECK(t.total() == expect);

    auto rotated = order;
    std::rotate(rotated.begin(), rotated.begin() + static_cast<long>(rng() % rotated.size()), rotated.end());
    CHECK(solution_cost(inst, make_tour(inst, rotated)) == expect);
    auto reversed = order;
    std::reverse(reversed.begin(), reversed.end());
    CHECK(solution_cost(inst, make_tour(inst, reversed)) == expect);
  }
}

TEST_CASE("shortcutting a random walk never increases its length") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 40; ++trial) {
    const auto inst = generate_euclidean(6, 500 + trial);
    std::vector<Vertex> walk{0};
    for (int k = 0; k < 10; ++k) walk.push_back(static_cast<Vertex>(rng() % 6));
    Rational len = 0;
    for (std::size_t i = 0; i < walk.size(); ++i) len += inst.cost(walk[i], walk[(i + 1) % walk.size()]);
    std::vector<Vertex> order;
    for (Vertex v : walk)
      if (std::find(order.begin(), order.end(), v) == order.end()) order.push_back(v);
    const Rational shortcut = order.size() < 2 ? Rational(0) : cycle_length(inst, order);
    CHECK(shortcut <= len);
  }
}

TEST_CASE("rational parsing") {
  CHECK(parse_rational("3/6") == rat(1, 2));
  CHECK(parse_rational("-0.125") == rat(-1, 8));
  CHECK(parse_rational("25e-2") == rat(1, 4));
  CHECK(parse_rational("7") == 7);
  CHECK(to_string(rat(6, 4)) == "3/2");
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("abc"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
  CHECK(std::abs(to_double(golden_delta()) - (3 - std::sqrt(5.0)) / 2) < 1e-15);
}

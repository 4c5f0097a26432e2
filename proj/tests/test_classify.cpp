#include <doctest.h>

#include <random>
#include <stdexcept>
#include <vector>

#include "geodex/classify.hpp"
#include "geodex/families.hpp"

using namespace geodex;

namespace {

Graph prism() {
  return Graph::from_edges(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {0, 3}, {1, 4}, {2, 5}});
}

bool reports_equal(const ClassificationReport& a, const ClassificationReport& b) {
  return a.n == b.n && a.valency == b.valency && a.array == b.array && a.diameter == b.diameter &&
         a.girth == b.girth && a.arc.level == b.arc.level && a.arc.unbounded == b.arc.unbounded &&
         a.arc.cap_reached == b.arc.cap_reached && a.geodesic_level == b.geodesic_level &&
         a.gt == b.gt && a.dt == b.dt && a.vt == b.vt && a.aut_order == b.aut_order &&
         a.vertex_stabilizer_order == b.vertex_stabilizer_order &&
         a.divisibility_ok == b.divisibility_ok;
}

}  // namespace

TEST_CASE("vertex and distance transitivity basics") {
  Graph pet = odd_graph(2);
  AutResult aut = automorphism_group(pet);
  CHECK(is_vertex_transitive(pet, aut.group));
  CHECK(is_distance_transitive(pet, aut.group));

  Graph p4 = Graph::from_edges(4, {{0, 1}, {1, 2}, {2, 3}});
  AutResult a4 = automorphism_group(p4);
  CHECK_FALSE(is_vertex_transitive(p4, a4.group));

  // the prism is vertex-transitive but not distance-transitive
  Graph pr = prism();
  AutResult ap = automorphism_group(pr);
  CHECK(is_vertex_transitive(pr, ap.group));
  CHECK_FALSE(is_distance_transitive(pr, ap.group));
}

TEST_CASE("classification of the prism") {
  ClassificationReport r = classify(prism(), "prism");
  CHECK(r.vt);
  CHECK_FALSE(r.dt);
  CHECK_FALSE(r.gt);
  CHECK_FALSE(r.array.has_value());
  CHECK(r.aut_order == 12);
  CHECK(r.diameter == 2);
  CHECK(r.girth == 3);
}

TEST_CASE("level-0 semantics for non-vertex-transitive graphs") {
  Graph p4 = Graph::from_edges(4, {{0, 1}, {1, 2}, {2, 3}});
  ClassificationReport r = classify(p4, "p4");
  CHECK_FALSE(r.vt);
  CHECK(r.geodesic_level == 0);
  CHECK(r.arc.level == 0);
  CHECK_FALSE(r.gt);
  CHECK_FALSE(r.dt);
}

TEST_CASE("known geodesic levels and verdicts") {
  struct Row {
    Graph g;
    int level;
    int d;
    bool gt, dt;
  };
  std::vector<Row> rows;
  rows.push_back({odd_graph(2), 2, 2, true, true});
  rows.push_back({paley(13), 1, 2, false, true});
  rows.push_back({g22_6(), 2, 3, false, true});
  rows.push_back({g64_8(), 2, 4, false, true});
  rows.push_back({hamming(3, 2), 3, 3, true, true});
  rows.push_back({complete(5), 1, 1, true, true});
  for (auto& row : rows) {
    ClassificationReport r = classify(row.g, "x");
    CHECK(r.geodesic_level == row.level);
    CHECK(r.diameter == row.d);
    CHECK(r.gt == row.gt);
    CHECK(r.dt == row.dt);
    CHECK(r.gt == (r.geodesic_level == r.diameter));
  }
}

TEST_CASE("geodesic transitivity implies distance transitivity on the suite") {
  for (const Graph& g : {complete(4), complete_bipartite(3), odd_graph(2), hamming(3, 2),
                         pg2_incidence(2), ag2_minus_parallel(3), johnson(5, 2), paley(13),
                         cycle(7), g22_6(), folded_cube(5), crown(5)}) {
    ClassificationReport r = classify(g, "x");
    if (r.gt) CHECK(r.dt);
  }
}

TEST_CASE("arc levels of reference graphs") {
  // the s entries of the published triples
  CHECK(classify(complete(4), "k4").arc.level == 2);
  CHECK(classify(odd_graph(2), "pet").arc.level == 3);
  CHECK(classify(pg2_incidence(2), "heawood").arc.level == 4);
  CHECK(classify(hamming(3, 2), "cube").arc.level == 2);
  CHECK(classify(johnson(5, 2), "j52").arc.level == 1);
  ClassificationReport c7 = classify(cycle(7), "c7");
  CHECK(c7.arc.unbounded);
  CHECK_FALSE(c7.arc.cap_reached);
  ClassificationReport k2 = classify(complete(2), "k2");
  CHECK(k2.geodesic_level == 1);
  CHECK(k2.gt);
  CHECK(k2.dt);
  CHECK(k2.aut_order == 2);
}

TEST_CASE("geodesic level equals the brute-force orbit count oracle") {
  for (const Graph& g : {odd_graph(2), johnson(5, 2), complete_bipartite(3), cycle(7), paley(13),
                         g22_6(), crown(4)}) {
    AutResult aut = automorphism_group(g);
    ClassificationReport r = classify_with_group(g, "x", aut.group);
    int d = r.diameter;
    // monotonicity: single-orbit levels are a prefix
    int oracle_level = 0;
    for (int i = 1; i <= d; ++i) {
      if (brute_force_geodesic_orbit_count(g, aut.group, i) == 1 && oracle_level == i - 1)
        oracle_level = i;
    }
    CHECK(r.geodesic_level == oracle_level);
  }
}

TEST_CASE("oracle budget is enforced") {
  Graph big = johnson(7, 3);
  AutResult aut = automorphism_group(big);
  CHECK_THROWS_AS(brute_force_geodesic_orbit_count(big, aut.group, 2, 10), std::runtime_error);
}

TEST_CASE("early exit never changes the report") {
  for (const Graph& g : {odd_graph(2), paley(13), g22_6(), hamming(3, 2), cycle(9), prism(),
                         ag2_minus_parallel(3), johnson(6, 3)}) {
    ClassificationReport fast = classify(g, "x", {true});
    ClassificationReport slow = classify(g, "x", {false});
    CHECK(reports_equal(fast, slow));
  }
}

TEST_CASE("geodesic level does not depend on the base vertex") {
  std::mt19937 rng(42);
  for (const Graph& g : {odd_graph(2), paley(13), g22_6(), johnson(6, 3)}) {
    AutResult aut = automorphism_group(g);
    int ref = geodesic_level(g, aut.group);
    for (int t = 0; t < 5; ++t) {
      int base = static_cast<int>(rng() % static_cast<unsigned>(g.order()));
      CHECK(geodesic_level(g, aut.group, true, base) == ref);
    }
  }
}

TEST_CASE("divisibility holds whenever a geodesic level is certified") {
  for (const Graph& g : {odd_graph(2), hamming(3, 2), pg2_incidence(3), ag2_minus_parallel(4),
                         johnson(6, 2), paley(17), folded_cube(6)}) {
    ClassificationReport r = classify(g, "x");
    REQUIRE(r.array.has_value());
    REQUIRE(r.divisibility_ok.has_value());
    CHECK(*r.divisibility_ok);
    CHECK(divisibility_check(*r.array, r.geodesic_level, r.vertex_stabilizer_order));
  }
}

TEST_CASE("stabilizer order times n equals the group order on vertex-transitive graphs") {
  for (const Graph& g : {odd_graph(2), paley(13), g22_6()}) {
    ClassificationReport r = classify(g, "x");
    CHECK(r.vt);
    CHECK(r.vertex_stabilizer_order * r.n == r.aut_order);
  }
}

TEST_CASE("classify_with_group matches classify") {
  Graph g = johnson(6, 2);
  AutResult aut = automorphism_group(g);
  CHECK(reports_equal(classify(g, "a"), classify_with_group(g, "a", aut.group)));
}

#ifndef GEODEX_CLASSIFY_HPP
#define GEODEX_CLASSIFY_HPP

#include <optional>
#include <string>

#include "geodex/autgroup.hpp"
#include "geodex/graph.hpp"
#include "geodex/permgroup.hpp"

namespace geodex {

// arc-transitivity level; for valency-2 graphs (cycles) every level passes,
// reported via the unbounded flag
struct ArcLevel {
  int level = 0;
  bool unbounded = false;
  // true if the level-7 cap was hit without the level-8 check failing
  bool cap_reached = false;
};

// one table row
struct ClassificationReport {
  std::string graph_id;
  int n = 0;
  int valency = 0;
  std::optional<IntersectionArray> array;  // absent when not distance-regular
  int diameter = 0;
  std::optional<int> girth;  // absent for forests
  ArcLevel arc;
  int geodesic_level = 0;
  bool gt = false;  // geodesic transitive: geodesic_level == diameter
  bool dt = false;  // distance transitive
  bool vt = false;  // vertex transitive
  BigInt aut_order = 0;
  BigInt vertex_stabilizer_order = 0;
  // Corollary-style sanity flag: b0...b_{s-1} divides |A_u| (set when the
  // geodesic level is >= 1 and an intersection array exists)
  std::optional<bool> divisibility_ok;
};

bool is_vertex_transitive(const Graph& g, const PermGroup& aut);
bool is_distance_transitive(const Graph& g, const PermGroup& aut);

// largest s <= diameter such that the group is transitive on i-geodesics
// for all i <= s, computed along one deterministic geodesic from base;
// early_exit enables the b_s <= 1 shortcut (result is unchanged)
int geodesic_level(const Graph& g, const PermGroup& aut, bool early_exit = true, int base = 0);

ArcLevel arc_level(const Graph& g, const PermGroup& aut);

// oracle: number of orbits of the group on all ordered i-geodesics; throws
// std::runtime_error when the geodesic count exceeds the budget
long long brute_force_geodesic_orbit_count(const Graph& g, const PermGroup& aut, int i,
                                           long long budget = 100000);

// b0...b_{s-1} | stabilizer order, with s = report's geodesic level
bool divisibility_check(const IntersectionArray& ia, int s, const BigInt& stab_order);

struct ClassifyOptions {
  bool early_exit = true;
};

ClassificationReport classify(const Graph& g, const std::string& id,
                              const ClassifyOptions& opts = {});

// same, reusing an already computed automorphism group
ClassificationReport classify_with_group(const Graph& g, const std::string& id,
                                         const PermGroup& aut, const ClassifyOptions& opts = {});

}  // namespace geodex

#endif

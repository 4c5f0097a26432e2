#include "geodex/classify.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace geodex {

namespace {

std::vector<int> sorted(std::vector<int> v) {
  std::sort(v.begin(), v.end());
  return v;
}

// distinct-prefix positions: chain vertex j corresponds to stabilizer level
// distinct(u_0..u_j) in a chain rebased on the deduplicated prefix
std::vector<int> dedup_prefix(const std::vector<int>& chain, std::vector<int>& level_of) {
  std::vector<int> prefix;
  level_of.clear();
  for (int v : chain) {
    if (std::find(prefix.begin(), prefix.end(), v) == prefix.end()) prefix.push_back(v);
    level_of.push_back(static_cast<int>(prefix.size()));
  }
  return prefix;
}

}  // namespace

bool is_vertex_transitive(const Graph& g, const PermGroup& aut) {
  if (g.order() == 0) return true;
  return static_cast<int>(aut.orbit(0).size()) == g.order();
}

bool is_distance_transitive(const Graph& g, const PermGroup& aut) {
  if (!is_connected(g)) throw std::invalid_argument("is_distance_transitive: disconnected graph");
  if (!is_vertex_transitive(g, aut)) return false;
  PermGroup stab = aut.pointwise_stabilizer({0});
  DistanceLayers dl = distance_layers(g, 0);
  for (std::size_t i = 1; i < dl.layers.size(); ++i) {
    if (!stab.is_transitive_on(sorted(dl.layers[i]))) return false;
  }
  return true;
}

int geodesic_level(const Graph& g, const PermGroup& aut, bool early_exit, int base) {
  if (!is_connected(g)) throw std::invalid_argument("geodesic_level: disconnected graph");
  if (!is_vertex_transitive(g, aut)) return 0;
  const int n = g.order();
  if (n == 1) return 0;

  DistanceLayers dl = distance_layers(g, base);
  const int d = dl.eccentricity();  // = diameter by vertex transitivity
  int far = *std::min_element(dl.layers.back().begin(), dl.layers.back().end());
  std::vector<int> geo = one_geodesic(g, base, far);  // x_0 = base, ..., x_d

  std::optional<IntersectionArray> ia;
  if (early_exit) {
    auto r = intersection_array(g);
    if (auto* arr = std::get_if<IntersectionArray>(&r)) ia = *arr;
  }

  std::vector<int> prefix(geo.begin(), geo.end() - 1);  // x_0..x_{d-1}
  PermGroup rebased = aut.rebased(prefix);

  for (int i = 1; i <= d; ++i) {
    // Gamma(x_{i-1}) intersected with the distance-i sphere around base
    std::vector<int> targets;
    for (int w : g.neighbors(geo[static_cast<std::size_t>(i - 1)]))
      if (dl.dist[static_cast<std::size_t>(w)] == i) targets.push_back(w);
    PermGroup stab = rebased.stabilizer_at(static_cast<std::size_t>(i));
    if (!stab.is_transitive_on(targets)) return i - 1;
    if (ia && i < d && ia->b[static_cast<std::size_t>(i)] <= 1) return d;
  }
  return d;
}

namespace {

// orbit size of the ordered pair (a, b) under the generators
long long ordered_pair_orbit_size(const Graph& g, const PermGroup& aut, int a, int b) {
  const long long n = g.order();
  std::unordered_set<long long> seen;
  std::vector<std::pair<int, int>> stack;
  seen.insert(a * n + b);
  stack.emplace_back(a, b);
  while (!stack.empty()) {
    auto [u, v] = stack.back();
    stack.pop_back();
    for (const Perm& p : aut.generators()) {
      long long key = static_cast<long long>(p[u]) * n + p[v];
      if (seen.insert(key).second) stack.emplace_back(p[u], p[v]);
    }
  }
  return static_cast<long long>(seen.size());
}

}  // namespace

ArcLevel arc_level(const Graph& g, const PermGroup& aut) {
  if (!is_connected(g)) throw std::invalid_argument("arc_level: disconnected graph");
  if (g.order() < 2 || g.min_degree() < 2) throw std::invalid_argument("arc_level: valency < 2");
  ArcLevel out;
  if (!is_vertex_transitive(g, aut)) return out;
  const int valency = g.degree(0);

  // level 1 checked directly on the arc set
  auto [e0, e1] = g.edges().front();
  if (ordered_pair_orbit_size(g, aut, e0, e1) != 2LL * g.edge_count()) return out;
  out.level = 1;

  if (valency == 2) {
    // connected vertex- and arc-transitive valency-2 graph: a cycle,
    // s-arc transitive for every s
    out.unbounded = true;
    return out;
  }

  // greedy non-backtracking chain u_0..u_7 with smallest-index choices
  std::vector<int> chain{0, g.neighbors(0).front()};
  while (chain.size() < 8) {
    int prev = chain[chain.size() - 2];
    int cur = chain.back();
    for (int w : g.neighbors(cur))
      if (w != prev) {
        chain.push_back(w);
        break;
      }
  }
  std::vector<int> level_of;
  std::vector<int> prefix = dedup_prefix(chain, level_of);
  PermGroup rebased = aut.rebased(prefix);

  for (int s = 1; s <= 7; ++s) {
    // (s+1)-arc transitivity: stabilizer of (u_0..u_s) transitive on
    // Gamma(u_s) minus the backtracking vertex
    std::vector<int> targets;
    for (int w : g.neighbors(chain[static_cast<std::size_t>(s)]))
      if (w != chain[static_cast<std::size_t>(s - 1)]) targets.push_back(w);
    PermGroup stab = rebased.stabilizer_at(static_cast<std::size_t>(level_of[static_cast<std::size_t>(s)]));
    if (!stab.is_transitive_on(targets)) break;
    if (s == 7) {
      // an 8-arc-transitive graph of valency >= 3 cannot exist; flag rather
      // than report a level we did not verify further
      out.cap_reached = true;
      break;
    }
    out.level = s + 1;
  }
  return out;
}

long long brute_force_geodesic_orbit_count(const Graph& g, const PermGroup& aut, int i,
                                           long long budget) {
  if (i < 0) throw std::invalid_argument("brute_force_geodesic_orbit_count: negative length");
  if (i > diameter(g)) throw std::invalid_argument("brute_force_geodesic_orbit_count: i > diameter");
  const int n = g.order();

  std::vector<std::vector<int>> geos;
  std::vector<int> path;
  for (int u = 0; u < n; ++u) {
    DistanceLayers dl = distance_layers(g, u);
    path.assign(1, u);
    // DFS over neighbors whose distance from u increases by one each step
    struct Frame {
      int v;
      std::size_t next = 0;
    };
    std::vector<Frame> st{{u, 0}};
    while (!st.empty()) {
      Frame& f = st.back();
      if (static_cast<int>(st.size()) - 1 == i) {
        geos.push_back(path);
        if (static_cast<long long>(geos.size()) > budget)
          throw std::runtime_error("brute_force_geodesic_orbit_count: budget exceeded");
        st.pop_back();
        path.pop_back();
        continue;
      }
      const auto& nb = g.neighbors(f.v);
      bool pushed = false;
      while (f.next < nb.size()) {
        int w = nb[f.next++];
        if (dl.dist[static_cast<std::size_t>(w)] == static_cast<int>(st.size())) {
          st.push_back({w, 0});
          path.push_back(w);
          pushed = true;
          break;
        }
      }
      if (!pushed) {
        st.pop_back();
        if (!path.empty()) path.pop_back();
      }
    }
  }

  std::unordered_map<std::string, int> id_of;
  auto key_of = [](const std::vector<int>& v) {
    return std::string(reinterpret_cast<const char*>(v.data()), v.size() * sizeof(int));
  };
  id_of.reserve(geos.size() * 2);
  for (std::size_t k = 0; k < geos.size(); ++k) id_of.emplace(key_of(geos[k]), static_cast<int>(k));

  std::vector<int> parent(geos.size());
  for (std::size_t k = 0; k < parent.size(); ++k) parent[k] = static_cast<int>(k);
  std::function<int(int)> find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] =
          parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  };
  std::vector<int> img;
  for (std::size_t k = 0; k < geos.size(); ++k) {
    for (const Perm& p : aut.generators()) {
      img.clear();
      for (int v : geos[k]) img.push_back(p[v]);
      auto it = id_of.find(key_of(img));
      if (it == id_of.end())
        throw std::logic_error("brute_force_geodesic_orbit_count: generator broke a geodesic");
      int a = find(static_cast<int>(k)), b = find(it->second);
      if (a != b) parent[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
    }
  }
  long long orbits = 0;
  for (std::size_t k = 0; k < parent.size(); ++k)
    if (find(static_cast<int>(k)) == static_cast<int>(k)) ++orbits;
  return orbits;
}

bool divisibility_check(const IntersectionArray& ia, int s, const BigInt& stab_order) {
  if (s < 1 || s > ia.d()) throw std::invalid_argument("divisibility_check: bad level");
  BigInt prod = 1;
  for (int i = 0; i < s; ++i) prod *= ia.b[static_cast<std::size_t>(i)];
  return prod != 0 && stab_order % prod == 0;
}

ClassificationReport classify_with_group(const Graph& g, const std::string& id,
                                         const PermGroup& aut, const ClassifyOptions& opts) {
  if (g.order() < 2) throw std::invalid_argument("classify: need at least 2 vertices");
  if (!is_connected(g)) throw std::invalid_argument("classify: disconnected graph");

  ClassificationReport r;
  r.graph_id = id;
  r.n = g.order();
  r.valency = g.is_regular() ? g.degree(0) : -1;
  r.diameter = diameter(g);
  r.girth = girth(g);
  auto iar = intersection_array(g);
  if (auto* arr = std::get_if<IntersectionArray>(&iar)) r.array = *arr;
  r.aut_order = aut.order();
  r.vt = is_vertex_transitive(g, aut);
  r.dt = r.vt && is_distance_transitive(g, aut);
  r.vertex_stabilizer_order = aut.pointwise_stabilizer({0}).order();

  if (r.vt) {
    r.geodesic_level = geodesic_level(g, aut, opts.early_exit);
    if (g.degree(0) >= 2) {
      r.arc = arc_level(g, aut);
    } else {
      // K2 is the only connected vertex-transitive graph of valency 1; its
      // full group swaps the lone arc's two orientations
      r.arc.level = 1;
    }
  }
  r.gt = r.vt && r.geodesic_level == r.diameter;
  if (r.array && r.geodesic_level >= 1)
    r.divisibility_ok = divisibility_check(*r.array, r.geodesic_level, r.vertex_stabilizer_order);
  return r;
}

ClassificationReport classify(const Graph& g, const std::string& id, const ClassifyOptions& opts) {
  AutResult a = automorphism_group(g);
  return classify_with_group(g, id, a.group, opts);
}

}  // namespace geodex

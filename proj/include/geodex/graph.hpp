#ifndef GEODEX_GRAPH_HPP
#define GEODEX_GRAPH_HPP

#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace geodex {

// Simple undirected graph on {0..n-1}, neighbors kept sorted.
class Graph {
 public:
  Graph() = default;
  static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges);
  static Graph from_adjacency_lists(std::vector<std::vector<int>> adj);

  int order() const { return n_; }
  long long edge_count() const { return m_; }
  int degree(int v) const { return static_cast<int>(adj_[static_cast<std::size_t>(v)].size()); }
  const std::vector<int>& neighbors(int v) const { return adj_[static_cast<std::size_t>(v)]; }
  bool adjacent(int u, int v) const;
  std::vector<std::pair<int, int>> edges() const;  // u < v, lexicographic
  int min_degree() const;
  int max_degree() const;
  bool is_regular() const { return n_ == 0 || min_degree() == max_degree(); }

  bool operator==(const Graph& o) const { return adj_ == o.adj_; }

 private:
  int n_ = 0;
  long long m_ = 0;
  std::vector<std::vector<int>> adj_;
};

// BFS spheres around a source; layers[i] lists the vertices at distance i in
// ascending order; dist is -1 off the component.
struct DistanceLayers {
  int source = 0;
  std::vector<int> dist;
  std::vector<std::vector<int>> layers;
  int eccentricity() const { return static_cast<int>(layers.size()) - 1; }
};

DistanceLayers distance_layers(const Graph& g, int u);
bool is_connected(const Graph& g);
int diameter(const Graph& g);                 // throws on disconnected input
std::optional<int> girth(const Graph& g);     // nullopt for forests

// the unique lexicographically-least shortest path: from v walk to the
// smallest-index neighbor one level closer to u
std::vector<int> one_geodesic(const Graph& g, int u, int v);

struct LocalParams {
  int c = 0, a = 0, b = 0;
};
LocalParams local_parameters(const Graph& g, int u, int v);

struct IntersectionArray {
  std::vector<int> b;  // b_0 .. b_{d-1}
  std::vector<int> c;  // c_1 .. c_d
  int d() const { return static_cast<int>(c.size()); }
  int valency() const { return b.empty() ? 0 : b.front(); }
  int a(int i) const;  // a_i = k - b_i - c_i
  std::string to_string() const;
  bool operator==(const IntersectionArray& o) const { return b == o.b && c == o.c; }
  // sphere sizes k_0..k_d implied by the array
  std::vector<long long> sphere_sizes() const;
};

// two vertex pairs at the same distance with different local parameters
struct NotDistanceRegular {
  int distance = 0;
  int u1 = 0, v1 = 0, u2 = 0, v2 = 0;
  LocalParams p1, p2;
};

std::variant<IntersectionArray, NotDistanceRegular> intersection_array(const Graph& g);

Graph complement(const Graph& g);
Graph bipartite_double_cover(const Graph& g);  // (v, side) -> v + side*n

struct TwoColoring {
  std::vector<int> side;  // 0/1 per vertex
};
struct OddCycle {
  std::vector<int> cycle;  // closed walk of odd length, first != last omitted
};
std::variant<TwoColoring, OddCycle> bipartition(const Graph& g);
bool is_bipartite(const Graph& g);

}  // namespace geodex

#endif

#include "geodex/graph.hpp"

#include <algorithm>
#include <stdexcept>

namespace geodex {

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
  if (n < 0) throw std::invalid_argument("Graph: negative order");
  Graph g;
  g.n_ = n;
  g.adj_.assign(static_cast<std::size_t>(n), {});
  for (auto [u, v] : edges) {
    if (u < 0 || u >= n || v < 0 || v >= n) throw std::invalid_argument("Graph: endpoint out of range");
    if (u == v) throw std::invalid_argument("Graph: self loop");
    g.adj_[static_cast<std::size_t>(u)].push_back(v);
    g.adj_[static_cast<std::size_t>(v)].push_back(u);
  }
  for (auto& nb : g.adj_) {
    std::sort(nb.begin(), nb.end());
    if (std::adjacent_find(nb.begin(), nb.end()) != nb.end())
      throw std::invalid_argument("Graph: duplicate edge");
  }
  g.m_ = static_cast<long long>(edges.size());
  return g;
}

Graph Graph::from_adjacency_lists(std::vector<std::vector<int>> adj) {
  const int n = static_cast<int>(adj.size());
  Graph g;
  g.n_ = n;
  g.adj_ = std::move(adj);
  long long m2 = 0;
  for (int v = 0; v < n; ++v) {
    auto& nb = g.adj_[static_cast<std::size_t>(v)];
    std::sort(nb.begin(), nb.end());
    if (std::adjacent_find(nb.begin(), nb.end()) != nb.end())
      throw std::invalid_argument("Graph: duplicate edge");
    for (int w : nb) {
      if (w < 0 || w >= n) throw std::invalid_argument("Graph: endpoint out of range");
      if (w == v) throw std::invalid_argument("Graph: self loop");
      if (!std::binary_search(g.adj_[static_cast<std::size_t>(w)].begin(),
                              g.adj_[static_cast<std::size_t>(w)].end(), v))
        throw std::invalid_argument("Graph: asymmetric adjacency");
    }
    m2 += static_cast<long long>(nb.size());
  }
  g.m_ = m2 / 2;
  return g;
}

bool Graph::adjacent(int u, int v) const {
  const auto& nb = adj_[static_cast<std::size_t>(u)];
  return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> e;
  e.reserve(static_cast<std::size_t>(m_));
  for (int u = 0; u < n_; ++u)
    for (int v : adj_[static_cast<std::size_t>(u)])
      if (u < v) e.emplace_back(u, v);
  return e;
}

int Graph::min_degree() const {
  int d = n_ == 0 ? 0 : degree(0);
  for (int v = 1; v < n_; ++v) d = std::min(d, degree(v));
  return d;
}

int Graph::max_degree() const {
  int d = n_ == 0 ? 0 : degree(0);
  for (int v = 1; v < n_; ++v) d = std::max(d, degree(v));
  return d;
}

DistanceLayers distance_layers(const Graph& g, int u) {
  const int n = g.order();
  if (u < 0 || u >= n) throw std::invalid_argument("distance_layers: source out of range");
  DistanceLayers dl;
  dl.source = u;
  dl.dist.assign(static_cast<std::size_t>(n), -1);
  dl.dist[static_cast<std::size_t>(u)] = 0;
  std::vector<int> cur{u};
  while (!cur.empty()) {
    dl.layers.push_back(cur);
    std::vector<int> next;
    for (int x : cur)
      for (int y : g.neighbors(x))
        if (dl.dist[static_cast<std::size_t>(y)] < 0) {
          dl.dist[static_cast<std::size_t>(y)] = static_cast<int>(dl.layers.size());
          next.push_back(y);
        }
    std::sort(next.begin(), next.end());
    cur = std::move(next);
  }
  return dl;
}

bool is_connected(const Graph& g) {
  if (g.order() == 0) return true;
  DistanceLayers dl = distance_layers(g, 0);
  for (int v = 0; v < g.order(); ++v)
    if (dl.dist[static_cast<std::size_t>(v)] < 0) return false;
  return true;
}

namespace {

// flat adjacency for the O(n*m) sweeps
struct Csr {
  std::vector<int> off, nbr;
  explicit Csr(const Graph& g) {
    const int n = g.order();
    off.resize(static_cast<std::size_t>(n) + 1);
    nbr.reserve(static_cast<std::size_t>(2 * g.edge_count()));
    for (int v = 0; v < n; ++v) {
      off[static_cast<std::size_t>(v)] = static_cast<int>(nbr.size());
      for (int w : g.neighbors(v)) nbr.push_back(w);
    }
    off[static_cast<std::size_t>(n)] = static_cast<int>(nbr.size());
  }
};

// BFS into a reusable dist buffer; returns eccentricity, -1 if disconnected
int bfs_dist(const Csr& a, int n, int src, std::vector<int>& dist, std::vector<int>& queue) {
  std::fill(dist.begin(), dist.end(), -1);
  queue.clear();
  queue.push_back(src);
  dist[static_cast<std::size_t>(src)] = 0;
  int ecc = 0;
  for (std::size_t h = 0; h < queue.size(); ++h) {
    int x = queue[h];
    int dx = dist[static_cast<std::size_t>(x)];
    ecc = dx;
    for (int i = a.off[static_cast<std::size_t>(x)]; i < a.off[static_cast<std::size_t>(x) + 1]; ++i) {
      int y = a.nbr[static_cast<std::size_t>(i)];
      if (dist[static_cast<std::size_t>(y)] < 0) {
        dist[static_cast<std::size_t>(y)] = dx + 1;
        queue.push_back(y);
      }
    }
  }
  return static_cast<int>(queue.size()) == n ? ecc : -1;
}

}  // namespace

int diameter(const Graph& g) {
  const int n = g.order();
  if (n == 0) throw std::invalid_argument("diameter: empty graph");
  Csr a(g);
  std::vector<int> dist(static_cast<std::size_t>(n)), queue;
  queue.reserve(static_cast<std::size_t>(n));
  int d = 0;
  for (int u = 0; u < n; ++u) {
    int ecc = bfs_dist(a, n, u, dist, queue);
    if (ecc < 0) throw std::invalid_argument("diameter: disconnected graph");
    d = std::max(d, ecc);
  }
  return d;
}

std::optional<int> girth(const Graph& g) {
  const int n = g.order();
  Csr a(g);
  std::vector<int> dist(static_cast<std::size_t>(n)), parent(static_cast<std::size_t>(n)), queue;
  int best = -1;
  for (int u = 0; u < n; ++u) {
    std::fill(dist.begin(), dist.end(), -1);
    queue.clear();
    queue.push_back(u);
    dist[static_cast<std::size_t>(u)] = 0;
    parent[static_cast<std::size_t>(u)] = -1;
    for (std::size_t h = 0; h < queue.size(); ++h) {
      int x = queue[h];
      int dx = dist[static_cast<std::size_t>(x)];
      if (best > 0 && 2 * dx >= best) break;  // deeper levels cannot improve
      for (int i = a.off[static_cast<std::size_t>(x)]; i < a.off[static_cast<std::size_t>(x) + 1]; ++i) {
        int y = a.nbr[static_cast<std::size_t>(i)];
        if (dist[static_cast<std::size_t>(y)] < 0) {
          dist[static_cast<std::size_t>(y)] = dx + 1;
          parent[static_cast<std::size_t>(y)] = x;
          queue.push_back(y);
        } else if (y != parent[static_cast<std::size_t>(x)] && x != parent[static_cast<std::size_t>(y)]) {
          int len = dx + dist[static_cast<std::size_t>(y)] + 1;
          if (best < 0 || len < best) best = len;
        }
      }
    }
    if (best == 3) return 3;
  }
  if (best < 0) return std::nullopt;
  return best;
}

std::vector<int> one_geodesic(const Graph& g, int u, int v) {
  DistanceLayers dl = distance_layers(g, u);
  if (v < 0 || v >= g.order()) throw std::invalid_argument("one_geodesic: vertex out of range");
  int dv = dl.dist[static_cast<std::size_t>(v)];
  if (dv < 0) throw std::invalid_argument("one_geodesic: unreachable pair");
  std::vector<int> path(static_cast<std::size_t>(dv) + 1);
  int x = v;
  for (int i = dv; i >= 1; --i) {
    path[static_cast<std::size_t>(i)] = x;
    int pred = -1;
    for (int y : g.neighbors(x))
      if (dl.dist[static_cast<std::size_t>(y)] == i - 1) {
        pred = y;  // neighbors sorted, first hit is the smallest
        break;
      }
    x = pred;
  }
  path[0] = u;
  return path;
}

LocalParams local_parameters(const Graph& g, int u, int v) {
  if (u == v) throw std::invalid_argument("local_parameters: u == v");
  DistanceLayers dl = distance_layers(g, u);
  int i = dl.dist[static_cast<std::size_t>(v)];
  if (i < 0) throw std::invalid_argument("local_parameters: unreachable pair");
  LocalParams p;
  for (int y : g.neighbors(v)) {
    int dy = dl.dist[static_cast<std::size_t>(y)];
    if (dy == i - 1)
      ++p.c;
    else if (dy == i)
      ++p.a;
    else if (dy == i + 1)
      ++p.b;
  }
  return p;
}

int IntersectionArray::a(int i) const {
  const int k = valency();
  int bi = (i >= 0 && i < static_cast<int>(b.size())) ? b[static_cast<std::size_t>(i)] : 0;
  int ci = i == 0 ? 0 : c[static_cast<std::size_t>(i - 1)];
  return k - bi - ci;
}

std::string IntersectionArray::to_string() const {
  std::string s = "{";
  for (std::size_t i = 0; i < b.size(); ++i) s += (i ? "," : "") + std::to_string(b[i]);
  s += ";";
  for (std::size_t i = 0; i < c.size(); ++i) s += (i ? "," : "") + std::to_string(c[i]);
  s += "}";
  return s;
}

std::vector<long long> IntersectionArray::sphere_sizes() const {
  std::vector<long long> k{1};
  for (int i = 0; i < d(); ++i)
    k.push_back(k.back() * b[static_cast<std::size_t>(i)] / c[static_cast<std::size_t>(i)]);
  return k;
}

std::variant<IntersectionArray, NotDistanceRegular> intersection_array(const Graph& g) {
  const int n = g.order();
  if (n == 0) throw std::invalid_argument("intersection_array: empty graph");
  Csr a(g);
  std::vector<int> dist(static_cast<std::size_t>(n)), queue;
  queue.reserve(static_cast<std::size_t>(n));

  int d = bfs_dist(a, n, 0, dist, queue);
  if (d < 0) throw std::invalid_argument("intersection_array: disconnected graph");
  if (n == 1) return IntersectionArray{};

  // first[i]: the pair whose parameters at distance i become the reference.
  // If eccentricities differ somewhere, a parameter clash necessarily shows
  // up in this sweep (a rim vertex has b = 0 while the reference b is
  // positive, or vice versa), so no separate eccentricity check is needed.
  std::vector<LocalParams> ref(static_cast<std::size_t>(n) + 1);
  std::vector<std::pair<int, int>> first(static_cast<std::size_t>(n) + 1, {-1, -1});

  for (int u = 0; u < n; ++u) {
    bfs_dist(a, n, u, dist, queue);
    for (int v = 0; v < n; ++v) {
      if (v == u) continue;
      int i = dist[static_cast<std::size_t>(v)];
      LocalParams p;
      for (int t = a.off[static_cast<std::size_t>(v)]; t < a.off[static_cast<std::size_t>(v) + 1]; ++t) {
        int dy = dist[static_cast<std::size_t>(a.nbr[static_cast<std::size_t>(t)])];
        p.c += dy == i - 1;
        p.a += dy == i;
        p.b += dy == i + 1;
      }
      auto& f = first[static_cast<std::size_t>(i)];
      if (f.first < 0) {
        f = {u, v};
        ref[static_cast<std::size_t>(i)] = p;
      } else if (p.c != ref[static_cast<std::size_t>(i)].c || p.a != ref[static_cast<std::size_t>(i)].a ||
                 p.b != ref[static_cast<std::size_t>(i)].b) {
        NotDistanceRegular w;
        w.distance = i;
        w.u1 = f.first;
        w.v1 = f.second;
        w.u2 = u;
        w.v2 = v;
        w.p1 = ref[static_cast<std::size_t>(i)];
        w.p2 = p;
        return w;
      }
    }
  }

  // a consistent sweep forces regularity (c+a+b at distance 1 pins every
  // vertex's degree), so b_0 is the common degree
  IntersectionArray ia;
  ia.b.push_back(g.degree(0));
  for (int i = 1; i < d; ++i) ia.b.push_back(ref[static_cast<std::size_t>(i)].b);
  for (int i = 1; i <= d; ++i) ia.c.push_back(ref[static_cast<std::size_t>(i)].c);
  return ia;
}

Graph complement(const Graph& g) {
  const int n = g.order();
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(n));
  for (int u = 0; u < n; ++u) {
    const auto& nb = g.neighbors(u);
    std::size_t p = 0;
    for (int v = 0; v < n; ++v) {
      while (p < nb.size() && nb[p] < v) ++p;
      bool adjacent = p < nb.size() && nb[p] == v;
      if (!adjacent && v != u) adj[static_cast<std::size_t>(u)].push_back(v);
    }
  }
  return Graph::from_adjacency_lists(std::move(adj));
}

Graph bipartite_double_cover(const Graph& g) {
  const int n = g.order();
  std::vector<std::pair<int, int>> e;
  e.reserve(static_cast<std::size_t>(2 * g.edge_count()));
  for (auto [u, v] : g.edges()) {
    e.emplace_back(u, v + n);
    e.emplace_back(v, u + n);
  }
  return Graph::from_edges(2 * n, e);
}

std::variant<TwoColoring, OddCycle> bipartition(const Graph& g) {
  const int n = g.order();
  std::vector<int> side(static_cast<std::size_t>(n), -1), parent(static_cast<std::size_t>(n), -1),
      depth(static_cast<std::size_t>(n), 0);
  for (int root = 0; root < n; ++root) {
    if (side[static_cast<std::size_t>(root)] >= 0) continue;
    side[static_cast<std::size_t>(root)] = 0;
    std::vector<int> queue{root};
    for (std::size_t h = 0; h < queue.size(); ++h) {
      int x = queue[h];
      for (int y : g.neighbors(x)) {
        if (side[static_cast<std::size_t>(y)] < 0) {
          side[static_cast<std::size_t>(y)] = 1 - side[static_cast<std::size_t>(x)];
          parent[static_cast<std::size_t>(y)] = x;
          depth[static_cast<std::size_t>(y)] = depth[static_cast<std::size_t>(x)] + 1;
          queue.push_back(y);
        } else if (side[static_cast<std::size_t>(y)] == side[static_cast<std::size_t>(x)]) {
          // odd cycle: climb both endpoints to their meeting point
          std::vector<int> px{x}, py{y};
          int ax = x, ay = y;
          while (depth[static_cast<std::size_t>(ax)] > depth[static_cast<std::size_t>(ay)]) {
            ax = parent[static_cast<std::size_t>(ax)];
            px.push_back(ax);
          }
          while (depth[static_cast<std::size_t>(ay)] > depth[static_cast<std::size_t>(ax)]) {
            ay = parent[static_cast<std::size_t>(ay)];
            py.push_back(ay);
          }
          while (ax != ay) {
            ax = parent[static_cast<std::size_t>(ax)];
            px.push_back(ax);
            ay = parent[static_cast<std::size_t>(ay)];
            py.push_back(ay);
          }
          OddCycle oc;
          oc.cycle = px;  // x .. meet
          for (auto it = py.rbegin() + 1; it != py.rend(); ++it) oc.cycle.push_back(*it);
          return oc;  // meet .. y, closed by edge (y, x)
        }
      }
    }
  }
  TwoColoring tc;
  tc.side = std::move(side);
  return tc;
}

bool is_bipartite(const Graph& g) { return std::holds_alternative<TwoColoring>(bipartition(g)); }

}  // namespace geodex

#include "geodex/autgroup.hpp"

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <stdexcept>

#include "geodex/bitops.hpp"

namespace geodex {

OrderedPartition OrderedPartition::unit(int n) {
  OrderedPartition p;
  if (n > 0) {
    p.cells.emplace_back();
    p.cells.back().resize(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) p.cells.back()[static_cast<std::size_t>(v)] = v;
  }
  return p;
}

int OrderedPartition::order() const {
  std::size_t n = 0;
  for (const auto& c : cells) n += c.size();
  return static_cast<int>(n);
}

bool OrderedPartition::discrete() const {
  for (const auto& c : cells)
    if (c.size() != 1) return false;
  return true;
}

void OrderedPartition::validate(int n) const {
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  for (const auto& c : cells) {
    if (c.empty()) throw std::invalid_argument("OrderedPartition: empty cell");
    for (int v : c) {
      if (v < 0 || v >= n || seen[static_cast<std::size_t>(v)])
        throw std::invalid_argument("OrderedPartition: not a partition of 0..n-1");
      seen[static_cast<std::size_t>(v)] = 1;
    }
  }
  for (char s : seen)
    if (!s) throw std::invalid_argument("OrderedPartition: missing vertex");
}

namespace {

using bitops::BitMatrix;
using bitops::Word;

struct UnionFind {
  std::vector<int> p;
  explicit UnionFind(int n) : p(static_cast<std::size_t>(n)) {
    for (int i = 0; i < n; ++i) p[static_cast<std::size_t>(i)] = i;
  }
  int find(int x) {
    while (p[static_cast<std::size_t>(x)] != x) {
      p[static_cast<std::size_t>(x)] = p[static_cast<std::size_t>(p[static_cast<std::size_t>(x)])];
      x = p[static_cast<std::size_t>(x)];
    }
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) p[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
  }
};

inline std::uint64_t mix(std::uint64_t h, std::uint64_t v) {
  h ^= v + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  return h;
}

// Partition as a permuted vertex array with cell-start marks. Cells only
// split, so a position that starts a cell keeps starting one.
struct PartitionState {
  std::vector<int> elems, pos;
  std::vector<std::uint8_t> start;  // size n+1, start[n] is a sentinel
  int ncells = 0;

  void init(const OrderedPartition& p, int n) {
    elems.clear();
    pos.assign(static_cast<std::size_t>(n), 0);
    start.assign(static_cast<std::size_t>(n) + 1, 0);
    start[static_cast<std::size_t>(n)] = 1;
    ncells = static_cast<int>(p.cells.size());
    for (const auto& c : p.cells) {
      start[elems.size()] = 1;
      for (int v : c) {
        pos[static_cast<std::size_t>(v)] = static_cast<int>(elems.size());
        elems.push_back(v);
      }
    }
  }

  int n() const { return static_cast<int>(elems.size()); }
  int cell_end(int b) const {
    int e = b + 1;
    while (!start[static_cast<std::size_t>(e)]) ++e;
    return e;
  }
  bool discrete() const { return ncells == n(); }

  OrderedPartition to_partition() const {
    OrderedPartition p;
    int b = 0;
    while (b < n()) {
      int e = cell_end(b);
      p.cells.emplace_back(elems.begin() + b, elems.begin() + e);
      b = e;
    }
    return p;
  }
};

class Refiner {
 public:
  // adj2, when given, is a second invariant relation (distance-2 adjacency)
  // used as an escalation: whenever the ordinary refinement converges without
  // reaching a discrete partition, one splitting round against adj2 runs and,
  // if it split anything, the ordinary refinement resumes. Plain counting
  // refinement cannot see it (after convergence every cell is uniform with
  // respect to direct adjacency), but for graphs like plane incidence graphs
  // the distance-2 counts carry the collinearity structure that otherwise
  // forces the search into deep blind branching.
  explicit Refiner(const BitMatrix& adj, const BitMatrix* adj2 = nullptr)
      : adj_(adj), adj2_(adj2) {}

  // equitable refinement; returns a trace hash of the split events, which is
  // relabeling-invariant (it sees only positions, sizes and counts)
  std::uint64_t run(PartitionState& ps, const std::vector<int>& active) {
    const int n = ps.n();
    std::uint64_t h = 0x243f6a8885a308d3ull;
    queued_.assign(static_cast<std::size_t>(n), 0);
    queue_.clear();
    for (int b : active) {
      queued_[static_cast<std::size_t>(b)] = 1;
      queue_.push_back(b);
    }
    cnt_.assign(static_cast<std::size_t>(n), 0);
    mask_.assign(bitops::words_for(static_cast<std::size_t>(n)), 0);
    std::size_t head = 0;
    for (;;) {
      while (head < queue_.size() && !ps.discrete()) {
        int rb = queue_[head++];
        queued_[static_cast<std::size_t>(rb)] = 0;
        build_mask(ps, rb, ps.cell_end(rb));
        h = mix(h, static_cast<std::uint64_t>(rb) * 2 + 1);
        split_all(ps, h, adj_, /*enqueue=*/true);
      }
      if (ps.discrete() || adj2_ == nullptr) break;
      if (!dist2_round(ps, h)) break;
      // resume counting refinement from scratch on the finer partition
      queue_.clear();
      head = 0;
      std::fill(queued_.begin(), queued_.end(), std::uint8_t{0});
      int b = 0;
      while (b < n) {
        queued_[static_cast<std::size_t>(b)] = 1;
        queue_.push_back(b);
        b = ps.cell_end(b);
      }
    }
    return h;
  }

 private:
  const BitMatrix& adj_;
  const BitMatrix* adj2_;
  std::vector<std::uint8_t> queued_;
  std::vector<int> queue_;
  std::vector<int> cnt_;
  std::vector<Word> mask_;

  void build_mask(const PartitionState& ps, int rb, int re) {
    std::fill(mask_.begin(), mask_.end(), Word{0});
    for (int i = rb; i < re; ++i) {
      int v = ps.elems[static_cast<std::size_t>(i)];
      mask_[static_cast<std::size_t>(v) / 64] |= Word{1} << (static_cast<std::size_t>(v) % 64);
    }
  }

  void split_all(PartitionState& ps, std::uint64_t& h, const BitMatrix& m, bool enqueue) {
    int b = 0;
    const int n = ps.n();
    while (b < n) {
      int e = ps.cell_end(b);
      if (e - b > 1) split_cell(ps, b, e, h, m, enqueue);
      b = e;
    }
  }

  // one full pass splitting by distance-2 counts against every current cell
  bool dist2_round(PartitionState& ps, std::uint64_t& h) {
    const int n = ps.n();
    std::vector<int> bounds;
    int b = 0;
    while (b < n) {
      bounds.push_back(b);
      b = ps.cell_end(b);
    }
    bounds.push_back(n);
    int before = ps.ncells;
    h = mix(h, 0x9b97f4a7c15ull);
    for (std::size_t i = 0; i + 1 < bounds.size() && !ps.discrete(); ++i) {
      // splits reorder elements only inside cell boundaries, so the original
      // extent still holds exactly the snapshot cell's vertex set
      build_mask(ps, bounds[i], bounds[i + 1]);
      h = mix(h, static_cast<std::uint64_t>(bounds[i]) * 2 + 1);
      split_all(ps, h, *adj2_, /*enqueue=*/false);
    }
    return ps.ncells > before;
  }

  void split_cell(PartitionState& ps, int b, int e, std::uint64_t& h, const BitMatrix& m,
                  bool enqueue) {
    const std::size_t w = mask_.size();
    bool uniform = true;
    int c0 = 0;
    for (int i = b; i < e; ++i) {
      int v = ps.elems[static_cast<std::size_t>(i)];
      int c = static_cast<int>(bitops::and_popcount(m.row(static_cast<std::size_t>(v)), mask_.data(), w));
      cnt_[static_cast<std::size_t>(v)] = c;
      if (i == b)
        c0 = c;
      else if (c != c0)
        uniform = false;
    }
    if (uniform) return;
    std::stable_sort(
        ps.elems.begin() + b, ps.elems.begin() + e,
        [this](int x, int y) { return cnt_[static_cast<std::size_t>(x)] < cnt_[static_cast<std::size_t>(y)]; });
    h = mix(h, static_cast<std::uint64_t>(b) * 2);
    bool parent_queued = queued_[static_cast<std::size_t>(b)] != 0;
    int largest_b = b, largest_sz = 0;
    int fb = b;
    for (int i = b + 1; i <= e; ++i) {
      bool boundary = i == e || cnt_[static_cast<std::size_t>(ps.elems[static_cast<std::size_t>(i)])] !=
                                    cnt_[static_cast<std::size_t>(ps.elems[static_cast<std::size_t>(i - 1)])];
      if (!boundary) continue;
      if (i < e) {
        ps.start[static_cast<std::size_t>(i)] = 1;
        ++ps.ncells;
      }
      h = mix(h, static_cast<std::uint64_t>(i - fb));
      h = mix(h, static_cast<std::uint64_t>(cnt_[static_cast<std::size_t>(ps.elems[static_cast<std::size_t>(fb)])]));
      if (i - fb > largest_sz) {
        largest_sz = i - fb;
        largest_b = fb;
      }
      fb = i;
    }
    for (int i = b; i < e; ++i) ps.pos[static_cast<std::size_t>(ps.elems[static_cast<std::size_t>(i)])] = i;
    if (!enqueue) return;
    // enqueue fragments: all if the parent cell was pending, else all but
    // the largest (Hopcroft)
    int i = b;
    while (i < e) {
      int j = ps.cell_end(i);
      if ((parent_queued || i != largest_b) && !queued_[static_cast<std::size_t>(i)]) {
        queued_[static_cast<std::size_t>(i)] = 1;
        queue_.push_back(i);
      }
      i = j;
    }
  }
};

std::vector<std::uint8_t> make_certificate(const Graph& g, const Perm& labeling) {
  const int n = g.order();
  std::vector<std::pair<int, int>> edges;
  edges.reserve(static_cast<std::size_t>(g.edge_count()));
  for (auto [u, v] : g.edges()) {
    int a = labeling[u], b = labeling[v];
    if (a > b) std::swap(a, b);
    edges.emplace_back(a, b);
  }
  std::sort(edges.begin(), edges.end());
  std::vector<std::uint8_t> cert;
  cert.reserve(8 + edges.size() * 8);
  auto put32 = [&cert](std::uint32_t x) {
    cert.push_back(static_cast<std::uint8_t>(x >> 24));
    cert.push_back(static_cast<std::uint8_t>(x >> 16));
    cert.push_back(static_cast<std::uint8_t>(x >> 8));
    cert.push_back(static_cast<std::uint8_t>(x));
  };
  put32(static_cast<std::uint32_t>(n));
  put32(static_cast<std::uint32_t>(edges.size()));
  for (auto [a, b] : edges) {
    put32(static_cast<std::uint32_t>(a));
    put32(static_cast<std::uint32_t>(b));
  }
  return cert;
}

// labeling maps vertex -> canonical position
Perm leaf_labeling(const PartitionState& ps) {
  std::vector<int> img(ps.elems.size());
  for (std::size_t p = 0; p < ps.elems.size(); ++p)
    img[static_cast<std::size_t>(ps.elems[p])] = static_cast<int>(p);
  return Perm(std::move(img));
}

// McKay-style search. The first leaf anchors automorphism detection; the
// best leaf (max over (invariant path, certificate)) defines the canonical
// labeling. Subtrees are pruned when their invariant path can neither reach
// the best key nor match the first path; children of first-path ancestors
// are pruned to one representative per orbit of the group found so far, and
// a discovered automorphism backjumps to the deepest first-path ancestor.
class Searcher {
 public:
  explicit Searcher(const Graph& g)
      : g_(g), n_(g.order()),
        adj_(static_cast<std::size_t>(n_), static_cast<std::size_t>(n_)),
        n2_(static_cast<std::size_t>(n_), static_cast<std::size_t>(n_)),
        refiner_(adj_, &n2_), uf_(n_) {
    for (int v = 0; v < n_; ++v)
      for (int w : g.neighbors(v)) adj_.set(static_cast<std::size_t>(v), static_cast<std::size_t>(w));
    // exact distance-2 adjacency: union of the neighbors' rows minus N[v]
    const std::size_t wpr = adj_.words_per_row();
    for (int v = 0; v < n_; ++v) {
      Word* out = n2_.row(static_cast<std::size_t>(v));
      for (int w : g.neighbors(v)) {
        const Word* nb = adj_.row(static_cast<std::size_t>(w));
        for (std::size_t k = 0; k < wpr; ++k) out[k] |= nb[k];
      }
      n2_.clear(static_cast<std::size_t>(v), static_cast<std::size_t>(v));
      for (int w : g.neighbors(v))
        n2_.clear(static_cast<std::size_t>(v), static_cast<std::size_t>(w));
    }
  }

  AutResult run(const OrderedPartition& initial) {
    PartitionState ps;
    ps.init(initial, n_);
    std::vector<int> all;
    int b = 0;
    while (b < n_) {
      all.push_back(b);
      b = ps.cell_end(b);
    }
    std::uint64_t h = refiner_.run(ps, all);
    descend(std::move(ps), h, /*on_first=*/true, /*cmp_best=*/0, /*cmp_first=*/true);
    if (std::getenv("GEODEX_SEARCH_STATS")) {
      std::fprintf(stderr,
                   "search stats: nodes=%lld leaves=%lld first_matches=%lld best_autos=%lld "
                   "best_swaps=%lld orbit_skips=%lld inv_prunes=%lld gens=%zu\n",
                   st_nodes_, st_leaves_, st_first_matches_, st_best_autos_, st_best_swaps_,
                   st_orbit_skips_, st_inv_prunes_, gens_.size());
    }
    return AutResult{PermGroup::from_generators(gens_, n_), best_label_, std::move(best_cert_)};
  }

 private:
  const Graph& g_;
  int n_;
  BitMatrix adj_;
  BitMatrix n2_;
  Refiner refiner_;
  UnionFind uf_;

  long long st_nodes_ = 0, st_leaves_ = 0, st_first_matches_ = 0, st_best_autos_ = 0,
            st_best_swaps_ = 0, st_orbit_skips_ = 0, st_inv_prunes_ = 0;

  std::vector<Perm> gens_;

  bool have_first_ = false;
  std::vector<std::uint64_t> first_inv_;
  std::vector<int> first_choice_;  // individualized vertex per depth on the first path
  std::vector<std::uint8_t> first_cert_;
  Perm first_label_;

  std::vector<std::uint64_t> best_inv_;
  std::vector<int> best_choice_;  // individualized vertex per depth on the best path
  std::vector<std::uint8_t> best_cert_;
  Perm best_label_;

  std::vector<std::uint64_t> path_;  // invariants along the current path
  std::vector<int> choices_;         // individualized vertex per depth on the current path

  // first index at which the current choice sequence diverges from other;
  // the frame at that depth is the deepest common ancestor's expansion
  int common_prefix(const std::vector<int>& other) const {
    std::size_t k = std::min(choices_.size(), other.size());
    std::size_t i = 0;
    while (i < k && choices_[i] == other[i]) ++i;
    return static_cast<int>(i);
  }

  // gamma maps the current leaf's node sequence onto the one ending at the
  // other leaf; this is the condition that makes a backjump to their deepest
  // common ancestor sound (the skipped subtree is the gamma-image of an
  // already explored one)
  bool maps_choices(const Perm& gamma, const std::vector<int>& other) const {
    if (choices_.size() != other.size()) return false;
    for (std::size_t t = 0; t < choices_.size(); ++t)
      if (gamma[choices_[t]] != other[t]) return false;
    return true;
  }

  // lexicographic compare of the current path (a leaf) against best; a
  // strict prefix orders below the longer path
  int cmp_paths_fresh() const {
    std::size_t k = std::min(path_.size(), best_inv_.size());
    for (std::size_t i = 0; i < k; ++i) {
      if (path_[i] != best_inv_[i]) return path_[i] > best_inv_[i] ? 1 : -1;
    }
    if (path_.size() == best_inv_.size()) return 0;
    return path_.size() > best_inv_.size() ? 1 : -1;
  }

  // returns a depth to unwind to, or -1 to continue
  int descend(PartitionState ps, std::uint64_t inv, bool on_first, int cmp_best, bool cmp_first) {
    const int depth = static_cast<int>(path_.size());
    ++st_nodes_;
    if (have_first_) {
      cmp_first = cmp_first && depth < static_cast<int>(first_inv_.size()) &&
                  inv == first_inv_[static_cast<std::size_t>(depth)];
      if (cmp_best == 0) {
        if (depth >= static_cast<int>(best_inv_.size()))
          cmp_best = 1;
        else if (inv != best_inv_[static_cast<std::size_t>(depth)])
          cmp_best = inv > best_inv_[static_cast<std::size_t>(depth)] ? 1 : -1;
      }
      if (cmp_best < 0 && !cmp_first) {
        ++st_inv_prunes_;
        return -1;
      }
    }

    path_.push_back(inv);
    int r = ps.discrete() ? handle_leaf(ps) : expand(ps, inv, on_first, cmp_best, cmp_first);
    path_.pop_back();
    return r;
  }

  int expand(PartitionState& ps, std::uint64_t inv, bool on_first, int cmp_best, bool cmp_first) {
    const int depth = static_cast<int>(path_.size()) - 1;
    // target cell: first largest non-singleton. Branching wide looks wrong
    // but individualizing inside a big cell is what actually breaks highly
    // regular structures (plane incidence graphs stay homogeneous for ~q
    // levels if the small fragment cells are split first), and the orbit
    // pruning plus backjumps keep the width manageable.
    int tb = -1, tsz = 1;
    int b = 0;
    while (b < n_) {
      int e = ps.cell_end(b);
      if (e - b > tsz) {
        tsz = e - b;
        tb = b;
      }
      b = e;
    }
    std::vector<int> cands(ps.elems.begin() + tb, ps.elems.begin() + tb + tsz);
    std::sort(cands.begin(), cands.end());
    if (!have_first_) first_choice_.push_back(cands.front());

    std::vector<int> tried;
    for (int v : cands) {
      if (on_first && have_first_) {
        bool dup = false;
        for (int w : tried)
          if (uf_.find(w) == uf_.find(v)) {
            dup = true;
            break;
          }
        if (dup) {
          ++st_orbit_skips_;
          continue;
        }
      }
      tried.push_back(v);

      PartitionState child = ps;
      individualize(child, tb, v);
      std::uint64_t ch = mix(mix(inv, 0xc3), refiner_.run(child, {tb}));
      bool child_on_first =
          on_first && (!have_first_ || v == first_choice_[static_cast<std::size_t>(depth)]);
      choices_.push_back(v);
      int r = descend(std::move(child), ch, child_on_first, cmp_best, cmp_first);
      choices_.pop_back();
      if (r >= 0 && r < depth) return r;
      // r == depth: an automorphism backjumped to this first-path node;
      // proceed to the next candidate under the enlarged orbit relation
    }
    return -1;
  }

  int handle_leaf(const PartitionState& ps) {
    ++st_leaves_;
    Perm label = leaf_labeling(ps);
    std::vector<std::uint8_t> cert = make_certificate(g_, label);
    if (!have_first_) {
      have_first_ = true;
      first_inv_ = path_;
      first_cert_ = cert;
      first_label_ = label;
      best_inv_ = path_;
      best_cert_ = std::move(cert);
      best_label_ = label;
      best_choice_ = choices_;
      return -1;
    }
    if (cert == first_cert_) {
      ++st_first_matches_;
      Perm gamma = compose(label, first_label_.inverse());
      record_automorphism(gamma);
      if (maps_choices(gamma, first_choice_)) return common_prefix(first_choice_);
      return -1;
    }
    int c = cmp_paths_fresh();
    if (c > 0 || (c == 0 && cert > best_cert_)) {
      ++st_best_swaps_;
      if (cert == best_cert_) record_automorphism(compose(label, best_label_.inverse()));
      best_inv_ = path_;
      best_cert_ = std::move(cert);
      best_label_ = label;
      best_choice_ = choices_;
      return -1;
    }
    if (cert == best_cert_) {
      ++st_best_autos_;
      Perm gamma = compose(label, best_label_.inverse());
      record_automorphism(gamma);
      if (maps_choices(gamma, best_choice_)) return common_prefix(best_choice_);
    }
    return -1;
  }

  void record_automorphism(const Perm& gamma) {
    if (gamma.is_identity()) return;
    for (const Perm& g : gens_)
      if (g == gamma) return;
    gens_.push_back(gamma);
    for (int x = 0; x < n_; ++x) uf_.unite(x, gamma[x]);
  }

  static void individualize(PartitionState& ps, int tb, int v) {
    int pv = ps.pos[static_cast<std::size_t>(v)];
    int u = ps.elems[static_cast<std::size_t>(tb)];
    std::swap(ps.elems[static_cast<std::size_t>(tb)], ps.elems[static_cast<std::size_t>(pv)]);
    ps.pos[static_cast<std::size_t>(u)] = pv;
    ps.pos[static_cast<std::size_t>(v)] = tb;
    ps.start[static_cast<std::size_t>(tb) + 1] = 1;
    ++ps.ncells;
  }
};

// degree partition, refined by all-pairs distance signatures when the graph
// is irregular; cell order is fixed by the (degree, signature) key so the
// partition is a graph invariant
OrderedPartition initial_partition(const Graph& g) {
  const int n = g.order();
  std::vector<std::vector<int>> key(static_cast<std::size_t>(n));
  bool regular = g.is_regular();
  for (int v = 0; v < n; ++v) key[static_cast<std::size_t>(v)].push_back(g.degree(v));
  if (!regular) {
    for (int v = 0; v < n; ++v) {
      DistanceLayers dl = distance_layers(g, v);
      auto& k = key[static_cast<std::size_t>(v)];
      int unreachable = 0;
      for (int x = 0; x < n; ++x) unreachable += dl.dist[static_cast<std::size_t>(x)] < 0;
      k.push_back(unreachable);
      for (const auto& layer : dl.layers) k.push_back(static_cast<int>(layer.size()));
    }
  }
  std::vector<int> vs(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) vs[static_cast<std::size_t>(v)] = v;
  std::stable_sort(vs.begin(), vs.end(), [&key](int x, int y) {
    return key[static_cast<std::size_t>(x)] < key[static_cast<std::size_t>(y)];
  });
  OrderedPartition p;
  for (int i = 0; i < n; ++i) {
    if (i == 0 || key[static_cast<std::size_t>(vs[static_cast<std::size_t>(i)])] !=
                      key[static_cast<std::size_t>(vs[static_cast<std::size_t>(i - 1)])])
      p.cells.emplace_back();
    p.cells.back().push_back(vs[static_cast<std::size_t>(i)]);
  }
  return p;
}

}  // namespace

OrderedPartition refine(const Graph& g, const OrderedPartition& pi) {
  pi.validate(g.order());
  const int n = g.order();
  if (n == 0) return pi;
  BitMatrix adj(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v)
    for (int w : g.neighbors(v)) adj.set(static_cast<std::size_t>(v), static_cast<std::size_t>(w));
  PartitionState ps;
  ps.init(pi, n);
  Refiner r(adj);
  std::vector<int> all;
  int b = 0;
  while (b < n) {
    all.push_back(b);
    b = ps.cell_end(b);
  }
  r.run(ps, all);
  return ps.to_partition();
}

AutResult automorphism_group(const Graph& g) {
  if (g.order() == 0) throw std::invalid_argument("automorphism_group: empty graph");
  Searcher s(g);
  return s.run(initial_partition(g));
}

std::vector<std::uint8_t> certificate(const Graph& g) { return automorphism_group(g).certificate; }

std::optional<Perm> are_isomorphic(const Graph& g1, const Graph& g2) {
  if (g1.order() != g2.order() || g1.edge_count() != g2.edge_count()) return std::nullopt;
  if (g1.order() == 0) return Perm(0);
  AutResult a1 = automorphism_group(g1);
  AutResult a2 = automorphism_group(g2);
  if (a1.certificate != a2.certificate) return std::nullopt;
  // x -> canonical position under g1 -> g2 vertex at that position
  Perm map = compose(a1.canonical_labeling, a2.canonical_labeling.inverse());
  for (auto [u, v] : g1.edges())
    if (!g2.adjacent(map[u], map[v])) return std::nullopt;  // defensive; certificates matched
  return map;
}

}  // namespace geodex

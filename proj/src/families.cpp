#include "geodex/families.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cstdlib>
#include <limits>
#include <numeric>
#include <random>

#include "geodex/field.hpp"

namespace geodex {

namespace {

void check_cap(const std::string& what, long long count, int cap) {
  int limit = cap < 0 ? default_vertex_cap() : cap;
  if (count > limit)
    throw CapExceeded(what + ": " + std::to_string(count) + " vertices exceed cap " +
                      std::to_string(limit));
}

}  // namespace

ConcreteGroup ConcreteGroup::from_table(std::vector<std::vector<int>> mul) {
  ConcreteGroup g;
  g.mul = std::move(mul);
  const int n = g.size();
  if (n == 0) throw std::invalid_argument("ConcreteGroup: empty");
  for (const auto& row : g.mul)
    if (static_cast<int>(row.size()) != n) throw std::invalid_argument("ConcreteGroup: ragged table");
  for (int a = 0; a < n; ++a)
    if (g.mul[0][static_cast<std::size_t>(a)] != a || g.mul[static_cast<std::size_t>(a)][0] != a)
      throw std::invalid_argument("ConcreteGroup: index 0 is not an identity");
  g.inv.assign(static_cast<std::size_t>(n), -1);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b)
      if (g.mul[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] == 0) {
        if (g.mul[static_cast<std::size_t>(b)][static_cast<std::size_t>(a)] != 0)
          throw std::invalid_argument("ConcreteGroup: one-sided inverse");
        g.inv[static_cast<std::size_t>(a)] = b;
        break;
      }
    if (g.inv[static_cast<std::size_t>(a)] < 0)
      throw std::invalid_argument("ConcreteGroup: element without inverse");
  }
  std::mt19937 rng(0xc0ffee);
  std::uniform_int_distribution<int> pick(0, n - 1);
  int trials = std::min(2000, n * n);
  for (int t = 0; t < trials; ++t) {
    int a = pick(rng), b = pick(rng), c = pick(rng);
    int ab = g.mul[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
    int bc = g.mul[static_cast<std::size_t>(b)][static_cast<std::size_t>(c)];
    if (g.mul[static_cast<std::size_t>(ab)][static_cast<std::size_t>(c)] !=
        g.mul[static_cast<std::size_t>(a)][static_cast<std::size_t>(bc)])
      throw std::invalid_argument("ConcreteGroup: associativity violated");
  }
  return g;
}

ConcreteGroup signed_semidirect(const SignedSemidirectSpec& spec) {
  const auto& m = spec.moduli;
  const auto& sg = spec.signs;
  if (m.size() != sg.size() || m.empty())
    throw std::invalid_argument("signed_semidirect: moduli/signs size mismatch");
  for (int mi : m)
    if (mi < 1) throw std::invalid_argument("signed_semidirect: modulus < 1");
  for (int s : sg)
    if (s != 1 && s != -1) throw std::invalid_argument("signed_semidirect: signs must be +-1");
  long long big = 2;
  for (int mi : m) {
    big *= mi;
    if (big > 100000) throw std::invalid_argument("signed_semidirect: group too large");
  }
  const int r = static_cast<int>(m.size());
  const int abelian = static_cast<int>(big / 2);
  const int n = static_cast<int>(big);

  auto decode = [&](int idx, std::vector<int>& x) {
    for (int i = 0; i < r; ++i) {
      x[static_cast<std::size_t>(i)] = idx % m[static_cast<std::size_t>(i)];
      idx /= m[static_cast<std::size_t>(i)];
    }
  };
  auto encode = [&](const std::vector<int>& x) {
    int idx = 0;
    for (int i = r - 1; i >= 0; --i) idx = idx * m[static_cast<std::size_t>(i)] + x[static_cast<std::size_t>(i)];
    return idx;
  };

  std::vector<std::vector<int>> mul(static_cast<std::size_t>(n),
                                    std::vector<int>(static_cast<std::size_t>(n)));
  std::vector<int> x(static_cast<std::size_t>(r)), y(static_cast<std::size_t>(r)),
      z(static_cast<std::size_t>(r));
  for (int a = 0; a < n; ++a) {
    int e1 = a / abelian;
    decode(a % abelian, x);
    for (int b = 0; b < n; ++b) {
      int e2 = b / abelian;
      decode(b % abelian, y);
      for (int i = 0; i < r; ++i) {
        int xi = x[static_cast<std::size_t>(i)];
        if (e2 == 1 && sg[static_cast<std::size_t>(i)] < 0)
          xi = (m[static_cast<std::size_t>(i)] - xi) % m[static_cast<std::size_t>(i)];
        z[static_cast<std::size_t>(i)] = (xi + y[static_cast<std::size_t>(i)]) % m[static_cast<std::size_t>(i)];
      }
      mul[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] =
          ((e1 + e2) % 2) * abelian + encode(z);
    }
  }
  return ConcreteGroup::from_table(std::move(mul));
}

ConcreteGroup cyclic_group(int n) {
  if (n < 1) throw std::invalid_argument("cyclic_group: n < 1");
  std::vector<std::vector<int>> mul(static_cast<std::size_t>(n),
                                    std::vector<int>(static_cast<std::size_t>(n)));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) mul[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = (a + b) % n;
  return ConcreteGroup::from_table(std::move(mul));
}

Graph cayley(const ConcreteGroup& g, const std::vector<int>& s) {
  const int n = g.size();
  std::vector<char> in_s(static_cast<std::size_t>(n), 0);
  for (int e : s) {
    if (e < 0 || e >= n) throw std::invalid_argument("cayley: connection set element out of range");
    if (e == 0) throw std::invalid_argument("cayley: connection set contains the identity");
    in_s[static_cast<std::size_t>(e)] = 1;
  }
  for (int e = 0; e < n; ++e)
    if (in_s[static_cast<std::size_t>(e)] && !in_s[static_cast<std::size_t>(g.inv[static_cast<std::size_t>(e)])])
      throw std::invalid_argument("cayley: connection set is not inverse-closed");
  // closure under S from the identity = the subgroup <S>
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    int x = stack.back();
    stack.pop_back();
    for (int e = 0; e < n; ++e) {
      if (!in_s[static_cast<std::size_t>(e)]) continue;
      int y = g.mul[static_cast<std::size_t>(e)][static_cast<std::size_t>(x)];
      if (!seen[static_cast<std::size_t>(y)]) {
        seen[static_cast<std::size_t>(y)] = 1;
        ++reached;
        stack.push_back(y);
      }
    }
  }
  if (reached != n) throw std::invalid_argument("cayley: connection set does not generate the group");

  std::vector<std::pair<int, int>> edges;
  for (int x = 0; x < n; ++x)
    for (int e = 0; e < n; ++e) {
      if (!in_s[static_cast<std::size_t>(e)]) continue;
      int y = g.mul[static_cast<std::size_t>(e)][static_cast<std::size_t>(x)];
      if (x < y) edges.emplace_back(x, y);
    }
  return Graph::from_edges(n, edges);
}

int default_vertex_cap() {
  if (const char* env = std::getenv("GEODEX_CAP")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end && *end == '\0' && v > 0 && v <= 1000000000L) return static_cast<int>(v);
    throw std::invalid_argument("GEODEX_CAP must be a positive integer");
  }
  return 5000;
}

Graph complete(int n) {
  if (n < 1) throw std::invalid_argument("complete: n < 1");
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  return Graph::from_edges(n, edges);
}

Graph complete_bipartite(int n) {
  if (n < 1) throw std::invalid_argument("complete_bipartite: n < 1");
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v) edges.emplace_back(u, n + v);
  return Graph::from_edges(2 * n, edges);
}

Graph crown(int n) {
  if (n < 2) throw std::invalid_argument("crown: n < 2");
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      if (u != v) edges.emplace_back(u, n + v);
  return Graph::from_edges(2 * n, edges);
}

Graph complete_multipartite(int m, int b) {
  if (m < 2 || b < 1) throw std::invalid_argument("complete_multipartite: need m >= 2, b >= 1");
  int n = m * b;
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (u / b != v / b) edges.emplace_back(u, v);
  return Graph::from_edges(n, edges);
}

Graph cycle(int n) {
  if (n < 3) throw std::invalid_argument("cycle: n < 3");
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n; ++u) edges.emplace_back(std::min(u, (u + 1) % n), std::max(u, (u + 1) % n));
  std::sort(edges.begin(), edges.end());
  return Graph::from_edges(n, edges);
}

Graph hamming(int d, int n) {
  if (d < 1 || n < 2) throw std::invalid_argument("hamming: need d >= 1, n >= 2");
  long long count = 1;
  for (int i = 0; i < d; ++i) {
    count *= n;
    if (count > 2000000) throw std::invalid_argument("hamming: too many vertices");
  }
  const int nv = static_cast<int>(count);
  // vertex index reads the tuple left to right, first coordinate most
  // significant, so indices follow lexicographic tuple order
  std::vector<std::pair<int, int>> edges;
  std::vector<long long> place(static_cast<std::size_t>(d));
  place[static_cast<std::size_t>(d - 1)] = 1;
  for (int i = d - 2; i >= 0; --i) place[static_cast<std::size_t>(i)] = place[static_cast<std::size_t>(i + 1)] * n;
  for (int v = 0; v < nv; ++v) {
    for (int i = 0; i < d; ++i) {
      long long pl = place[static_cast<std::size_t>(i)];
      int digit = static_cast<int>((v / pl) % n);
      for (int x = digit + 1; x < n; ++x)
        edges.emplace_back(v, v + static_cast<int>((x - digit) * pl));
    }
  }
  return Graph::from_edges(nv, edges);
}

Graph folded_cube(int d) {
  if (d < 3) throw std::invalid_argument("folded_cube: d < 3");
  if (d > 21) throw std::invalid_argument("folded_cube: too many vertices");
  // antipodal pairs {x, ~x} of the d-cube, represented by the member with
  // top bit 0; pairs are adjacent when reps differ in 1 or d-1 positions
  const int nv = 1 << (d - 1);
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < nv; ++u)
    for (int v = u + 1; v < nv; ++v) {
      int h = std::popcount(static_cast<unsigned>(u ^ v));
      if (h == 1 || h == d - 1) edges.emplace_back(u, v);
    }
  return Graph::from_edges(nv, edges);
}

namespace {

// k-subsets of {0..n-1} as bitmasks, in lexicographic order of the sorted
// element tuples
std::vector<std::uint64_t> subsets_lex(int n, int k) {
  std::vector<std::uint64_t> out;
  std::vector<int> c(static_cast<std::size_t>(k));
  std::iota(c.begin(), c.end(), 0);
  while (true) {
    std::uint64_t m = 0;
    for (int x : c) m |= std::uint64_t{1} << x;
    out.push_back(m);
    int i = k - 1;
    while (i >= 0 && c[static_cast<std::size_t>(i)] == n - k + i) --i;
    if (i < 0) break;
    ++c[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j) c[static_cast<std::size_t>(j)] = c[static_cast<std::size_t>(j - 1)] + 1;
  }
  return out;
}

}  // namespace

long long binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  long long r = 1;
  for (int i = 1; i <= k; ++i) {
    // r * (n-k+i) is exactly divisible by i, so checking the product suffices
    if (r > std::numeric_limits<long long>::max() / (n - k + i))
      throw std::overflow_error("binomial: overflow");
    r = r * (n - k + i) / i;
  }
  return r;
}

long long gaussian_binomial(int q, int n, int k) {
  if (k < 0 || k > n) return 0;
  // q-Pascal recurrence: [n k] = [n-1 k-1] + q^k [n-1 k]
  std::vector<long long> row(static_cast<std::size_t>(k) + 1, 0);
  row[0] = 1;
  const long long limit = 2000000000LL;
  for (int i = 1; i <= n; ++i) {
    for (int j = std::min(i, k); j >= 1; --j) {
      long long qk = 1;
      for (int t = 0; t < j; ++t) {
        qk *= q;
        if (qk > limit) throw std::overflow_error("gaussian_binomial: overflow");
      }
      long long v = row[static_cast<std::size_t>(j - 1)];
      long long w = row[static_cast<std::size_t>(j)];
      if (w > 0 && qk > limit / w) throw std::overflow_error("gaussian_binomial: overflow");
      long long s = v + qk * w;
      if (s > limit) throw std::overflow_error("gaussian_binomial: overflow");
      row[static_cast<std::size_t>(j)] = s;
    }
  }
  return row[static_cast<std::size_t>(k)];
}

Graph johnson(int n, int k, int cap) {
  if (k < 1 || k > n - 1) throw std::invalid_argument("johnson: need 1 <= k <= n-1");
  if (n > 62) throw std::invalid_argument("johnson: n too large");
  check_cap("johnson(" + std::to_string(n) + "," + std::to_string(k) + ")", binomial(n, k), cap);
  auto subsets = subsets_lex(n, k);
  const int nv = static_cast<int>(subsets.size());
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < nv; ++u)
    for (int v = u + 1; v < nv; ++v)
      if (std::popcount(subsets[static_cast<std::size_t>(u)] & subsets[static_cast<std::size_t>(v)]) == k - 1)
        edges.emplace_back(u, v);
  return Graph::from_edges(nv, edges);
}

Graph odd_graph(int k, int cap) {
  if (k < 2) throw std::invalid_argument("odd_graph: k < 2");
  if (2 * k + 1 > 62) throw std::invalid_argument("odd_graph: k too large");
  check_cap("odd_graph(" + std::to_string(k) + ")", binomial(2 * k + 1, k), cap);
  auto subsets = subsets_lex(2 * k + 1, k);
  const int nv = static_cast<int>(subsets.size());
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < nv; ++u)
    for (int v = u + 1; v < nv; ++v)
      if ((subsets[static_cast<std::size_t>(u)] & subsets[static_cast<std::size_t>(v)]) == 0)
        edges.emplace_back(u, v);
  return Graph::from_edges(nv, edges);
}

std::pair<int, int> factor_prime_power(int q) {
  if (q < 2) throw std::invalid_argument("not a prime power: " + std::to_string(q));
  int p = q;
  for (int d = 2; d * d <= q; ++d)
    if (q % d == 0) {
      p = d;
      break;
    }
  int f = 0, r = q;
  while (r % p == 0) {
    r /= p;
    ++f;
  }
  if (r != 1) throw std::invalid_argument("not a prime power: " + std::to_string(q));
  return {p, f};
}

namespace {

// column indices of all k-dimensional subspaces of F_q^n as RREF matrices
// (rows of length n over field indices), returned in lexicographic order of
// the flattened matrices
std::vector<std::vector<int>> rref_subspaces(const Field& F, int n, int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> pivots(static_cast<std::size_t>(k));
  std::iota(pivots.begin(), pivots.end(), 0);
  auto emit_all = [&](const std::vector<int>& piv) {
    std::vector<char> is_piv(static_cast<std::size_t>(n), 0);
    for (int c : piv) is_piv[static_cast<std::size_t>(c)] = 1;
    // free positions: row i, columns right of piv[i] that are not pivots
    std::vector<std::pair<int, int>> free_pos;
    for (int i = 0; i < k; ++i)
      for (int c = piv[static_cast<std::size_t>(i)] + 1; c < n; ++c)
        if (!is_piv[static_cast<std::size_t>(c)]) free_pos.emplace_back(i, c);
    std::vector<int> mat(static_cast<std::size_t>(k) * static_cast<std::size_t>(n), 0);
    for (int i = 0; i < k; ++i)
      mat[static_cast<std::size_t>(i) * static_cast<std::size_t>(n) +
          static_cast<std::size_t>(piv[static_cast<std::size_t>(i)])] = 1;
    std::vector<int> vals(free_pos.size(), 0);
    while (true) {
      out.push_back(mat);
      std::size_t j = free_pos.size();
      while (j > 0 && vals[j - 1] == F.q() - 1) {
        vals[j - 1] = 0;
        auto [ri, ci] = free_pos[j - 1];
        mat[static_cast<std::size_t>(ri) * static_cast<std::size_t>(n) + static_cast<std::size_t>(ci)] = 0;
        --j;
      }
      if (j == 0) break;
      ++vals[j - 1];
      auto [ri, ci] = free_pos[j - 1];
      mat[static_cast<std::size_t>(ri) * static_cast<std::size_t>(n) + static_cast<std::size_t>(ci)] =
          vals[j - 1];
    }
  };
  while (true) {
    emit_all(pivots);
    int i = k - 1;
    while (i >= 0 && pivots[static_cast<std::size_t>(i)] == n - k + i) --i;
    if (i < 0) break;
    ++pivots[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j)
      pivots[static_cast<std::size_t>(j)] = pivots[static_cast<std::size_t>(j - 1)] + 1;
  }
  std::sort(out.begin(), out.end());
  return out;
}

// rank of the rows stacked from a and b (each a flattened matrix with n
// columns) by Gaussian elimination over F
int stacked_rank(const Field& F, int n, const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<std::vector<int>> rows;
  auto push_rows = [&](const std::vector<int>& m) {
    for (std::size_t off = 0; off < m.size(); off += static_cast<std::size_t>(n))
      rows.emplace_back(m.begin() + static_cast<std::ptrdiff_t>(off),
                        m.begin() + static_cast<std::ptrdiff_t>(off) + n);
  };
  push_rows(a);
  push_rows(b);
  int rank = 0;
  for (int col = 0; col < n && rank < static_cast<int>(rows.size()); ++col) {
    int piv = -1;
    for (int r = rank; r < static_cast<int>(rows.size()); ++r)
      if (rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)] != 0) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    std::swap(rows[static_cast<std::size_t>(rank)], rows[static_cast<std::size_t>(piv)]);
    int lead = rows[static_cast<std::size_t>(rank)][static_cast<std::size_t>(col)];
    int ilead = F.inv(lead);
    for (int r = rank + 1; r < static_cast<int>(rows.size()); ++r) {
      int factor = rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)];
      if (factor == 0) continue;
      int scale = F.mul(factor, ilead);
      for (int c2 = col; c2 < n; ++c2) {
        auto& cell = rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(c2)];
        cell = F.sub(cell, F.mul(scale, rows[static_cast<std::size_t>(rank)][static_cast<std::size_t>(c2)]));
      }
    }
    ++rank;
  }
  return rank;
}

}  // namespace

Graph grassmann(int q, int n, int k, int cap) {
  auto [p, f] = factor_prime_power(q);
  if (k < 1 || k > n - 1) throw std::invalid_argument("grassmann: need 1 <= k <= n-1");
  check_cap("grassmann(" + std::to_string(q) + "," + std::to_string(n) + "," + std::to_string(k) + ")",
            gaussian_binomial(q, n, k), cap);
  Field F(p, f);
  auto subs = rref_subspaces(F, n, k);
  const int nv = static_cast<int>(subs.size());
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < nv; ++u)
    for (int v = u + 1; v < nv; ++v)
      if (stacked_rank(F, n, subs[static_cast<std::size_t>(u)], subs[static_cast<std::size_t>(v)]) == k + 1)
        edges.emplace_back(u, v);
  return Graph::from_edges(nv, edges);
}

Graph doubled_grassmann(int q, int m, int cap) {
  auto [p, f] = factor_prime_power(q);
  if (m < 1) throw std::invalid_argument("doubled_grassmann: m < 1");
  const int n = 2 * m + 1;
  long long total = gaussian_binomial(q, n, m) + gaussian_binomial(q, n, m + 1);
  check_cap("doubled_grassmann(" + std::to_string(q) + "," + std::to_string(m) + ")", total, cap);
  Field F(p, f);
  auto lo = rref_subspaces(F, n, m);
  auto hi = rref_subspaces(F, n, m + 1);
  const int nlo = static_cast<int>(lo.size());
  const int nhi = static_cast<int>(hi.size());
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < nlo; ++u)
    for (int v = 0; v < nhi; ++v)
      if (stacked_rank(F, n, lo[static_cast<std::size_t>(u)], hi[static_cast<std::size_t>(v)]) == m + 1)
        edges.emplace_back(u, nlo + v);
  return Graph::from_edges(nlo + nhi, edges);
}

namespace {

// normalized homogeneous coordinates (first nonzero entry 1) in
// lexicographic order
std::vector<std::array<int, 3>> pg2_points(const Field& F) {
  std::vector<std::array<int, 3>> pts;
  for (int a = 0; a < F.q(); ++a)
    for (int b = 0; b < F.q(); ++b)
      for (int c = 0; c < F.q(); ++c) {
        std::array<int, 3> v{a, b, c};
        int lead = v[0] != 0 ? v[0] : v[1] != 0 ? v[1] : v[2];
        if (lead != 1) continue;  // keep one representative per 1-subspace
        pts.push_back(v);
      }
  return pts;
}

}  // namespace

Graph pg2_incidence(int q) {
  auto [p, f] = factor_prime_power(q);
  Field F(p, f);
  auto pts = pg2_points(F);
  const int np = static_cast<int>(pts.size());
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < np; ++i)
    for (int j = 0; j < np; ++j) {
      int dot = 0;
      for (int t = 0; t < 3; ++t)
        dot = F.add(dot, F.mul(pts[static_cast<std::size_t>(i)][static_cast<std::size_t>(t)],
                               pts[static_cast<std::size_t>(j)][static_cast<std::size_t>(t)]));
      if (dot == 0) edges.emplace_back(i, np + j);
    }
  return Graph::from_edges(2 * np, edges);
}

Graph ag2_minus_parallel(int q) {
  auto [p, f] = factor_prime_power(q);
  Field F(p, f);
  // points (x,y) at index x*q + y; lines [m,k] at index q^2 + m*q + k,
  // where [m,k] is {(x,y) : mx + y = k} for m != 0 and {(k,y)} for m = 0
  std::vector<std::pair<int, int>> edges;
  const int q2 = q * q;
  for (int x = 0; x < q; ++x)
    for (int y = 0; y < q; ++y) {
      int pt = x * q + y;
      for (int m = 0; m < q; ++m) {
        int k = m == 0 ? x : F.add(F.mul(m, x), y);
        edges.emplace_back(pt, q2 + m * q + k);
      }
    }
  return Graph::from_edges(2 * q2, edges);
}

Graph paley(int q) {
  auto [p, f] = factor_prime_power(q);
  if (q % 4 != 1) throw std::invalid_argument("paley: q must be 1 mod 4");
  Field F(p, f);
  std::vector<std::pair<int, int>> edges;
  // u != v, and -1 is a square when q = 1 mod 4, so the relation is symmetric
  for (int u = 0; u < q; ++u)
    for (int v = u + 1; v < q; ++v)
      if (F.is_square(F.sub(u, v))) edges.emplace_back(u, v);
  return Graph::from_edges(q, edges);
}

namespace {

Graph ag2_cayley_impl(int q, const std::vector<std::pair<int, int>>& words) {
  ConcreteGroup g = signed_semidirect({{q, q}, {-1, -1}});
  std::vector<int> s;
  for (auto [i, j] : words) s.push_back(q * q + i + q * j);  // (1; i, j)
  return cayley(g, s);
}

}  // namespace

Graph ag2_cayley(int q) {
  if (q == 11) {
    return ag2_cayley_impl(
        11, {{10, 10}, {9, 10}, {2, 2}, {4, 1}, {0, 5}, {1, 6}, {3, 4}, {6, 2}, {8, 5}, {5, 4}, {7, 6}});
  }
  if (q == 13) {
    return ag2_cayley_impl(13, {{0, 12},
                                {12, 4},
                                {9, 1},
                                {4, 1},
                                {1, 4},
                                {10, 5},
                                {11, 6},
                                {3, 5},
                                {2, 6},
                                {7, 10},
                                {6, 10},
                                {8, 7},
                                {5, 7}});
  }
  throw std::invalid_argument("ag2_cayley: only q = 11 and q = 13 are defined");
}

Graph g22_6() {
  ConcreteGroup g = signed_semidirect({{11}, {-1}});
  std::vector<int> s;
  for (int i : {0, 2, 6, 7, 8, 10}) s.push_back(11 + i);  // (1; i)
  return cayley(g, s);
}

Graph g64_8() {
  ConcreteGroup g = signed_semidirect({{4, 4, 2}, {-1, -1, 1}});
  auto enc = [](int i, int j, int k) { return 32 + i + 4 * j + 16 * k; };  // (1; i, j, k)
  std::vector<int> s{enc(0, 0, 0), enc(1, 0, 0), enc(1, 1, 0), enc(1, 0, 1),
                     enc(3, 3, 1), enc(2, 3, 0), enc(0, 2, 1), enc(0, 3, 1)};
  return cayley(g, s);
}

}  // namespace geodex

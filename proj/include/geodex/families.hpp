#ifndef GEODEX_FAMILIES_HPP
#define GEODEX_FAMILIES_HPP

#include <stdexcept>
#include <string>
#include <vector>

#include "geodex/graph.hpp"

namespace geodex {

// Finite group as explicit tables, identity at index 0. Identity and inverse
// laws are verified for all elements at construction; associativity is
// spot-checked on random triples.
struct ConcreteGroup {
  std::vector<std::vector<int>> mul;  // mul[a][b] = a*b
  std::vector<int> inv;

  int size() const { return static_cast<int>(mul.size()); }
  static ConcreteGroup from_table(std::vector<std::vector<int>> mul);
};

// A = Z_{m1} x ... x Z_{mr} extended by an order-2 element acting by
// coordinatewise sign flips: elements (eps; x1..xr), with
// (e1; x)(e2; y) = (e1+e2; sigma^{e2}(x) + y), sigma(x)_i = signs_i * x_i.
struct SignedSemidirectSpec {
  std::vector<int> moduli;
  std::vector<int> signs;  // each +1 or -1
};

ConcreteGroup signed_semidirect(const SignedSemidirectSpec& spec);
ConcreteGroup cyclic_group(int n);

// Cay(G, S): x ~ y iff y x^{-1} in S. Throws std::invalid_argument with a
// distinct message when S contains the identity, is not inverse-closed, or
// does not generate G.
Graph cayley(const ConcreteGroup& g, const std::vector<int>& s);

struct CapExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// default vertex cap for the enumerating constructors; the GEODEX_CAP
// environment variable overrides the built-in 5000
int default_vertex_cap();

Graph complete(int n);
Graph complete_bipartite(int n);  // K_{n,n}
Graph crown(int n);               // K_{n,n} minus a perfect matching
Graph complete_multipartite(int m, int b);  // m parts of size b
Graph cycle(int n);

Graph hamming(int d, int n);
Graph folded_cube(int d);
Graph johnson(int n, int k, int cap = -1);
Graph odd_graph(int k, int cap = -1);  // k-subsets of a (2k+1)-set, disjointness
Graph grassmann(int q, int n, int k, int cap = -1);
Graph doubled_grassmann(int q, int m, int cap = -1);
Graph pg2_incidence(int q);       // point-line incidence graph of PG(2,q)
Graph ag2_minus_parallel(int q);  // AG(2,q) minus a parallel class
Graph paley(int q);

// the named Cayley graphs, with connection sets written in
// signed-semidirect coordinates
Graph ag2_cayley(int q);  // q = 11 or 13
Graph g22_6();
Graph g64_8();

// q = p^f with p prime, f >= 1; throws if q is not a prime power
std::pair<int, int> factor_prime_power(int q);

// binomial and Gaussian binomial, throwing on int64 overflow
long long binomial(int n, int k);
long long gaussian_binomial(int q, int n, int k);

}  // namespace geodex

#endif

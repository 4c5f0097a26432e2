#include <doctest.h>

#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "geodex/autgroup.hpp"
#include "geodex/families.hpp"
#include "geodex/field.hpp"
#include "geodex/graph.hpp"

using namespace geodex;

TEST_CASE("prime detection and checked powers") {
  CHECK(is_prime(2));
  CHECK(is_prime(13));
  CHECK_FALSE(is_prime(1));
  CHECK_FALSE(is_prime(9));
  CHECK(ipow_checked(3, 4) == 81);
  CHECK_THROWS(ipow_checked(10, 12));
}

TEST_CASE("prime power factorization") {
  CHECK(factor_prime_power(49) == std::pair<int, int>{7, 2});
  CHECK(factor_prime_power(8) == std::pair<int, int>{2, 3});
  CHECK(factor_prime_power(13) == std::pair<int, int>{13, 1});
  CHECK_THROWS_AS(factor_prime_power(12), std::invalid_argument);
  CHECK_THROWS_AS(factor_prime_power(1), std::invalid_argument);
  CHECK_THROWS_AS(factor_prime_power(0), std::invalid_argument);
}

TEST_CASE("field laws hold on full element ranges") {
  for (auto [p, f] : {std::pair<int, int>{5, 1}, {3, 2}, {2, 3}, {5, 2}}) {
    Field k(p, f);
    const int q = k.q();
    CHECK(q == ipow_checked(p, f));
    // distributivity on all triples for small fields
    for (int a = 0; a < q; ++a)
      for (int b = 0; b < q; ++b) {
        for (int c = 0; c < q && q <= 9; ++c)
          CHECK(k.mul(a, k.add(b, c)) == k.add(k.mul(a, b), k.mul(a, c)));
        CHECK(k.add(a, b) == k.add(b, a));
        CHECK(k.mul(a, b) == k.mul(b, a));
      }
    for (int a = 1; a < q; ++a) CHECK(k.mul(a, k.inv(a)) == 1);
    CHECK_THROWS(k.inv(0));
    // the primitive element has full multiplicative order
    int lam = k.primitive_element();
    int x = lam;
    int order = 1;
    while (x != 1) {
      x = k.mul(x, lam);
      ++order;
    }
    CHECK(order == q - 1);
    // squares split the nonzero elements in half for odd q
    if (p != 2) {
      int squares = 0;
      for (int a = 1; a < q; ++a)
        if (k.is_square(a)) ++squares;
      CHECK(squares == (q - 1) / 2);
    }
    CHECK(k.is_square(0));
  }
}

TEST_CASE("field modulus is the lexicographically smallest irreducible") {
  Field k(3, 2);
  // over GF(3), x^2, x^2+x, x^2+2x, x^2+2, x^2+x+1, x^2+2x+1 all factor;
  // x^2+1 is the smallest irreducible under the low-first base-3 order
  CHECK(k.modulus() == std::vector<int>{1, 0, 1});
  CHECK(Field(2, 1).modulus() == std::vector<int>{0, 1});
  CHECK(Field(5, 1).primitive_element() == 2);
}

TEST_CASE("binomials and gaussian binomials") {
  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(7, 0) == 1);
  CHECK(binomial(11, 5) == 462);
  CHECK_THROWS(binomial(70, 35));
  CHECK(gaussian_binomial(2, 4, 2) == 35);
  CHECK(gaussian_binomial(3, 4, 2) == 130);
  CHECK(gaussian_binomial(2, 2, 1) == 3);
  CHECK(gaussian_binomial(4, 3, 1) == 21);
}

TEST_CASE("basic families have the expected orders and degrees") {
  CHECK(complete(6).order() == 6);
  CHECK(complete(6).min_degree() == 5);
  CHECK(complete_bipartite(4).order() == 8);
  CHECK(complete_bipartite(4).min_degree() == 4);
  CHECK(crown(5).order() == 10);
  CHECK(crown(5).min_degree() == 4);
  CHECK(complete_multipartite(3, 2).order() == 6);
  CHECK(complete_multipartite(3, 2).min_degree() == 4);
  CHECK(cycle(9).order() == 9);
  CHECK(cycle(9).max_degree() == 2);
  CHECK_THROWS(cycle(2));
  CHECK_THROWS(complete(0));
}

TEST_CASE("crown(3) is the 6-cycle") {
  CHECK(are_isomorphic(crown(3), cycle(6)).has_value());
}

TEST_CASE("order and valency formulas across the parameter grid") {
  for (int d = 1; d <= 4; ++d)
    for (int n = 2; n <= 4; ++n) {
      Graph h = hamming(d, n);
      CHECK(h.order() == ipow_checked(n, d));
      CHECK(h.is_regular());
      CHECK(h.min_degree() == d * (n - 1));
    }
  for (int k = 2; k <= 4; ++k) {
    Graph o = odd_graph(k);
    CHECK(o.order() == binomial(2 * k + 1, k));
    CHECK(o.is_regular());
    CHECK(o.min_degree() == k + 1);
  }
  for (int d = 3; d <= 7; ++d) {
    Graph f = folded_cube(d);
    CHECK(f.order() == ipow_checked(2, d - 1));
    CHECK(f.is_regular());
    CHECK(f.min_degree() == d);
  }
  for (auto [n, k] : {std::pair<int, int>{5, 2}, {6, 2}, {6, 3}, {7, 3}}) {
    Graph j = johnson(n, k);
    CHECK(j.order() == binomial(n, k));
    CHECK(j.is_regular());
    CHECK(j.min_degree() == k * (n - k));
  }
  for (auto [q, n, k] : {std::tuple<int, int, int>{2, 4, 2}, {3, 4, 2}, {2, 5, 2}}) {
    Graph gr = grassmann(q, n, k);
    CHECK(gr.order() == gaussian_binomial(q, n, k));
    CHECK(gr.is_regular());
  }
}

TEST_CASE("grassmann and johnson coincide with their small sporadic isomorphs") {
  // J_q(n,1) is complete
  CHECK(are_isomorphic(grassmann(2, 3, 1), complete(7)).has_value());
  // doubled grassmann at q=2, m=1: subspaces of dimension 1 and 2 of F_2^3,
  // incidence by containment = Heawood graph
  CHECK(are_isomorphic(doubled_grassmann(2, 1), pg2_incidence(2)).has_value());
}

TEST_CASE("johnson(n,k) is isomorphic to johnson(n,n-k)") {
  CHECK(are_isomorphic(johnson(5, 2), johnson(5, 3)).has_value());
  CHECK(are_isomorphic(johnson(6, 2), johnson(6, 4)).has_value());
  CHECK(are_isomorphic(johnson(7, 3), johnson(7, 4)).has_value());
}

TEST_CASE("incidence families") {
  for (int q : {2, 3, 4, 5}) {
    Graph pg = pg2_incidence(q);
    CHECK(pg.order() == 2 * (q * q + q + 1));
    CHECK(pg.is_regular());
    CHECK(pg.min_degree() == q + 1);
    CHECK(girth(pg) == 6);
  }
  for (int q : {3, 4, 5, 7}) {
    Graph ag = ag2_minus_parallel(q);
    CHECK(ag.order() == 2 * q * q);
    CHECK(ag.is_regular());
    CHECK(ag.min_degree() == q);
    CHECK(girth(ag) == 6);
  }
  CHECK_THROWS_AS(pg2_incidence(6), std::invalid_argument);
  CHECK_THROWS_AS(ag2_minus_parallel(6), std::invalid_argument);
}

TEST_CASE("paley graphs") {
  CHECK(are_isomorphic(paley(5), cycle(5)).has_value());
  Graph p13 = paley(13);
  CHECK(p13.order() == 13);
  CHECK(p13.is_regular());
  CHECK(p13.min_degree() == 6);
  Graph p9 = paley(9);
  CHECK(are_isomorphic(p9, hamming(2, 3)).has_value());
  CHECK_THROWS_AS(paley(7), std::invalid_argument);   // 7 = 3 mod 4
  CHECK_THROWS_AS(paley(12), std::invalid_argument);  // not a prime power
}

TEST_CASE("concrete groups validate their tables") {
  ConcreteGroup z4 = cyclic_group(4);
  CHECK(z4.size() == 4);
  CHECK(z4.mul[1][3] == 0);
  CHECK(z4.inv[1] == 3);
  // broken table: not a latin square / wrong inverses
  CHECK_THROWS(ConcreteGroup::from_table({{0, 1}, {1, 0}, {0, 1}}));
}

TEST_CASE("signed semidirect groups satisfy the defining relations") {
  SignedSemidirectSpec spec{{11}, {-1}};  // dihedral of order 22
  ConcreteGroup d22 = signed_semidirect(spec);
  CHECK(d22.size() == 22);
  // find the reflection c = (eps=1; 0) and rotation a = (eps=0; 1);
  // element encoding is implementation detail, so verify relations by search:
  // some involution c with c a c = a^{-1} for a of order 11
  int a = -1;
  for (int x = 1; x < d22.size(); ++x) {
    int y = x, order = 1;
    while (y != 0) {
      y = d22.mul[y][x];
      ++order;
    }
    if (order == 11) {
      a = x;
      break;
    }
  }
  REQUIRE(a >= 0);
  bool found = false;
  for (int c = 1; c < d22.size() && !found; ++c) {
    if (d22.mul[c][c] != 0) continue;
    int cac = d22.mul[d22.mul[c][a]][c];
    if (cac == d22.inv[a]) found = true;
  }
  CHECK(found);
}

TEST_CASE("cayley rejects bad connection sets with distinct messages") {
  ConcreteGroup z6 = cyclic_group(6);
  std::string with_id, not_closed, not_gen;
  try {
    cayley(z6, {0, 1, 5});
  } catch (const std::invalid_argument& e) {
    with_id = e.what();
  }
  try {
    cayley(z6, {1});
  } catch (const std::invalid_argument& e) {
    not_closed = e.what();
  }
  try {
    cayley(z6, {2, 4});
  } catch (const std::invalid_argument& e) {
    not_gen = e.what();
  }
  CHECK(!with_id.empty());
  CHECK(!not_closed.empty());
  CHECK(!not_gen.empty());
  CHECK(with_id != not_closed);
  CHECK(not_closed != not_gen);
  CHECK(with_id != not_gen);
}

TEST_CASE("cayley graphs admit the right-regular representation") {
  ConcreteGroup z7 = cyclic_group(7);
  Graph c7 = cayley(z7, {1, 6});
  CHECK(are_isomorphic(c7, cycle(7)).has_value());

  // right multiplication x -> x*h permutes vertices and preserves adjacency:
  // y x^{-1} is unchanged when both are multiplied by h on the right
  ConcreteGroup d22 = signed_semidirect({{11}, {-1}});
  Graph g22 = g22_6();
  AutResult aut = automorphism_group(g22);
  CHECK(aut.group.order() == 1320);
  for (int h = 0; h < d22.size(); ++h) {
    std::vector<int> img(static_cast<std::size_t>(d22.size()));
    for (int x = 0; x < d22.size(); ++x) img[static_cast<std::size_t>(x)] = d22.mul[x][h];
    CHECK(aut.group.contains(Perm(std::move(img))));
  }
}

TEST_CASE("bespoke cayley graphs have their published shapes") {
  Graph g22 = g22_6();
  CHECK(g22.order() == 22);
  CHECK(g22.is_regular());
  CHECK(g22.min_degree() == 6);
  Graph g64 = g64_8();
  CHECK(g64.order() == 64);
  CHECK(g64.is_regular());
  CHECK(g64.min_degree() == 8);
  CHECK_THROWS_AS(ag2_cayley(7), std::invalid_argument);
  Graph a11 = ag2_cayley(11);
  CHECK(a11.order() == 242);
  CHECK(a11.min_degree() == 11);
}

TEST_CASE("vertex caps guard the enumerating constructors") {
  CHECK_THROWS_AS(johnson(7, 3, 30), CapExceeded);
  CHECK_NOTHROW(johnson(7, 3, 35));
  CHECK_THROWS_AS(odd_graph(7), CapExceeded);      // binom(15,7) = 6435 > 5000
  CHECK_THROWS_AS(grassmann(3, 8, 4, 1000), CapExceeded);
  CHECK(default_vertex_cap() == 5000);
  CHECK_THROWS_AS(johnson(40, 20), CapExceeded);   // would overflow enumeration
}

#include <doctest.h>

#include <numeric>
#include <random>
#include <stdexcept>
#include <vector>

#include "geodex/perm.hpp"

using geodex::Perm;
using geodex::compose;

namespace {

Perm random_perm(std::mt19937& rng, int n) {
  std::vector<int> img(static_cast<std::size_t>(n));
  std::iota(img.begin(), img.end(), 0);
  std::shuffle(img.begin(), img.end(), rng);
  return Perm(std::move(img));
}

}  // namespace

TEST_CASE("identity behaves like the identity") {
  Perm id = Perm::identity(5);
  CHECK(id.degree() == 5);
  CHECK(id.is_identity());
  CHECK(id.smallest_moved() == -1);
  for (int x = 0; x < 5; ++x) CHECK(id[x] == x);
}

TEST_CASE("constructor validates bijections") {
  CHECK_THROWS_AS(Perm(std::vector<int>{0, 0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(Perm(std::vector<int>{0, 3, 1}), std::invalid_argument);
  CHECK_THROWS_AS(Perm(std::vector<int>{-1, 0, 1}), std::invalid_argument);
  CHECK_NOTHROW(Perm(std::vector<int>{2, 0, 1}));
}

TEST_CASE("from_cycles builds the expected images") {
  Perm p = Perm::from_cycles(5, {{0, 1, 2}, {3, 4}});
  CHECK(p[0] == 1);
  CHECK(p[1] == 2);
  CHECK(p[2] == 0);
  CHECK(p[3] == 4);
  CHECK(p[4] == 3);
  CHECK(p.smallest_moved() == 0);
  CHECK_FALSE(p.is_identity());
}

TEST_CASE("composition is left to right") {
  // spec of compose: compose(p, q) maps x to q(p(x))
  Perm p = Perm::from_cycles(4, {{0, 1}});
  Perm q = Perm::from_cycles(4, {{1, 2}});
  Perm pq = compose(p, q);
  CHECK(pq[0] == 2);  // 0 ->p 1 ->q 2
  CHECK(pq[1] == 0);
  CHECK(pq[2] == 1);

  std::mt19937 rng(91);
  for (int t = 0; t < 50; ++t) {
    Perm a = random_perm(rng, 9);
    Perm b = random_perm(rng, 9);
    Perm c = a * b;
    for (int x = 0; x < 9; ++x) CHECK(c[x] == b[a[x]]);
  }
}

TEST_CASE("inverse undoes the permutation") {
  std::mt19937 rng(17);
  for (int t = 0; t < 50; ++t) {
    Perm a = random_perm(rng, 11);
    CHECK(compose(a, a.inverse()).is_identity());
    CHECK(compose(a.inverse(), a).is_identity());
  }
}

TEST_CASE("composition is associative") {
  std::mt19937 rng(3);
  for (int t = 0; t < 30; ++t) {
    Perm a = random_perm(rng, 8);
    Perm b = random_perm(rng, 8);
    Perm c = random_perm(rng, 8);
    CHECK((a * b) * c == a * (b * c));
  }
}

TEST_CASE("cycle_string is readable and stable") {
  CHECK(Perm::identity(4).cycle_string() == "()");
  Perm p = Perm::from_cycles(6, {{0, 1, 2}, {4, 5}});
  CHECK(p.cycle_string() == "(0 1 2)(4 5)");
}

TEST_CASE("equality compares image tables") {
  Perm a = Perm::from_cycles(4, {{0, 1}});
  Perm b = Perm::from_cycles(4, {{0, 1}});
  Perm c = Perm::from_cycles(4, {{2, 3}});
  CHECK(a == b);
  CHECK(a != c);
}

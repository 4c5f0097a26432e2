#include <doctest.h>

#include <bit>
#include <random>
#include <vector>

#include "geodex/bitops.hpp"

using namespace geodex::bitops;

namespace {

std::vector<Word> random_words(std::mt19937_64& rng, std::size_t n) {
  std::vector<Word> w(n);
  for (auto& x : w) x = rng();
  return w;
}

std::size_t naive_and_popcount(const std::vector<Word>& a, const std::vector<Word>& b) {
  std::size_t s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += static_cast<std::size_t>(std::popcount(a[i] & b[i]));
  return s;
}

}  // namespace

TEST_CASE("words_for rounds up to whole words") {
  CHECK(words_for(0) == 0);
  CHECK(words_for(1) == 1);
  CHECK(words_for(64) == 1);
  CHECK(words_for(65) == 2);
  CHECK(words_for(128) == 2);
  CHECK(words_for(129) == 3);
}

TEST_CASE("active kernel is one of the two implementations") {
  CHECK((active_kernel() == "avx2" || active_kernel() == "scalar"));
}

TEST_CASE("scalar kernels match a naive per-word oracle") {
  std::mt19937_64 rng(0x5eed);
  for (std::size_t n : {std::size_t{0}, std::size_t{1}, std::size_t{3}, std::size_t{4},
                        std::size_t{5}, std::size_t{7}, std::size_t{8}, std::size_t{31},
                        std::size_t{64}, std::size_t{129}}) {
    auto a = random_words(rng, n);
    auto b = random_words(rng, n);
    CHECK(and_popcount_scalar(a.data(), b.data(), n) == naive_and_popcount(a, b));
    std::size_t pop = 0;
    for (Word w : a) pop += static_cast<std::size_t>(std::popcount(w));
    CHECK(popcount_scalar(a.data(), n) == pop);
  }
}

TEST_CASE("dispatched kernels agree with scalar bit for bit") {
  std::mt19937_64 rng(0xb17f00d);
  for (int trial = 0; trial < 200; ++trial) {
    std::size_t n = static_cast<std::size_t>(rng() % 40);
    auto a = random_words(rng, n);
    auto b = random_words(rng, n);
    CHECK(and_popcount(a.data(), b.data(), n) == and_popcount_scalar(a.data(), b.data(), n));
    CHECK(popcount(a.data(), n) == popcount_scalar(a.data(), n));
  }
}

#if defined(GEODEX_HAVE_AVX2)
TEST_CASE("avx2 kernels agree with scalar when the cpu has avx2") {
  if (!cpu_has_avx2()) return;
  std::mt19937_64 rng2(0xa5a5);
  for (int trial = 0; trial < 500; ++trial) {
    std::size_t n = static_cast<std::size_t>(rng2() % 70);
    auto a = random_words(rng2, n);
    auto b = random_words(rng2, n);
    CHECK(and_popcount_avx2(a.data(), b.data(), n) == and_popcount_scalar(a.data(), b.data(), n));
    CHECK(popcount_avx2(a.data(), n) == popcount_scalar(a.data(), n));
  }
}
#endif

TEST_CASE("BitMatrix set, test, clear, zero_row") {
  BitMatrix m(3, 70);
  CHECK(m.rows() == 3);
  CHECK(m.cols() == 70);
  CHECK(m.words_per_row() == 2);
  CHECK_FALSE(m.test(1, 65));
  m.set(1, 65);
  m.set(1, 0);
  m.set(2, 69);
  CHECK(m.test(1, 65));
  CHECK(m.test(1, 0));
  CHECK(m.test(2, 69));
  CHECK_FALSE(m.test(0, 65));
  m.clear(1, 65);
  CHECK_FALSE(m.test(1, 65));
  CHECK(m.test(1, 0));
  m.zero_row(1);
  CHECK_FALSE(m.test(1, 0));
  CHECK(m.test(2, 69));
}

TEST_CASE("BitMatrix rows drive and_popcount as adjacency intersections") {
  // two rows with a known overlap
  BitMatrix m(2, 130);
  for (std::size_t c = 0; c < 130; c += 2) m.set(0, c);
  for (std::size_t c = 0; c < 130; c += 3) m.set(1, c);
  // multiples of 6 below 130: 0,6,...,126 -> 22 of them
  CHECK(and_popcount(m.row(0), m.row(1), m.words_per_row()) == 22);
}

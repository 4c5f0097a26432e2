// AVX2 variants of the bit-row kernels. Compiled with -mavx2 in this TU only;
// callers go through the runtime dispatch in bitops.cpp. Popcount uses the
// vpshufb nibble-lookup scheme with a horizontal add every block.

#include "geodex/bitops.hpp"

#if defined(GEODEX_HAVE_AVX2)

#include <immintrin.h>

#include <bit>

namespace geodex::bitops {

namespace {

inline __m256i popcount256(__m256i v) {
  const __m256i lut = _mm256_setr_epi8(0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4,
                                       0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4);
  const __m256i low = _mm256_set1_epi8(0x0f);
  __m256i lo = _mm256_and_si256(v, low);
  __m256i hi = _mm256_and_si256(_mm256_srli_epi32(v, 4), low);
  __m256i cnt = _mm256_add_epi8(_mm256_shuffle_epi8(lut, lo), _mm256_shuffle_epi8(lut, hi));
  // per-64-bit-lane byte sums
  return _mm256_sad_epu8(cnt, _mm256_setzero_si256());
}

inline std::size_t hsum64(__m256i acc) {
  __m128i lo = _mm256_castsi256_si128(acc);
  __m128i hi = _mm256_extracti128_si256(acc, 1);
  __m128i s = _mm_add_epi64(lo, hi);
  return static_cast<std::size_t>(_mm_cvtsi128_si64(s)) +
         static_cast<std::size_t>(_mm_extract_epi64(s, 1));
}

}  // namespace

std::size_t and_popcount_avx2(const Word* a, const Word* b, std::size_t nwords) {
  __m256i acc = _mm256_setzero_si256();
  std::size_t i = 0;
  for (; i + 4 <= nwords; i += 4) {
    __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
    __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
    acc = _mm256_add_epi64(acc, popcount256(_mm256_and_si256(va, vb)));
  }
  std::size_t c = hsum64(acc);
  for (; i < nwords; ++i) c += static_cast<std::size_t>(std::popcount(a[i] & b[i]));
  return c;
}

std::size_t popcount_avx2(const Word* a, std::size_t nwords) {
  __m256i acc = _mm256_setzero_si256();
  std::size_t i = 0;
  for (; i + 4 <= nwords; i += 4) {
    __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
    acc = _mm256_add_epi64(acc, popcount256(va));
  }
  std::size_t c = hsum64(acc);
  for (; i < nwords; ++i) c += static_cast<std::size_t>(std::popcount(a[i]));
  return c;
}

bool cpu_has_avx2() { return __builtin_cpu_supports("avx2"); }

}  // namespace geodex::bitops

#endif

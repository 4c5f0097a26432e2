#include "geodex/bitops.hpp"

#include <bit>

namespace geodex::bitops {

std::size_t and_popcount_scalar(const Word* a, const Word* b, std::size_t nwords) {
  std::size_t c = 0;
  for (std::size_t i = 0; i < nwords; ++i) c += static_cast<std::size_t>(std::popcount(a[i] & b[i]));
  return c;
}

std::size_t popcount_scalar(const Word* a, std::size_t nwords) {
  std::size_t c = 0;
  for (std::size_t i = 0; i < nwords; ++i) c += static_cast<std::size_t>(std::popcount(a[i]));
  return c;
}

namespace {

struct Dispatch {
  std::size_t (*and_popcount)(const Word*, const Word*, std::size_t) = &and_popcount_scalar;
  std::size_t (*popcount)(const Word*, std::size_t) = &popcount_scalar;
  std::string name = "scalar";

  Dispatch() {
#if defined(GEODEX_HAVE_AVX2)
    if (cpu_has_avx2()) {
      and_popcount = &and_popcount_avx2;
      popcount = &popcount_avx2;
      name = "avx2";
    }
#endif
  }
};

const Dispatch& dispatch() {
  static const Dispatch d;
  return d;
}

}  // namespace

std::size_t (*and_popcount)(const Word*, const Word*, std::size_t) = dispatch().and_popcount;
std::size_t (*popcount)(const Word*, std::size_t) = dispatch().popcount;

const std::string& active_kernel() { return dispatch().name; }

}  // namespace geodex::bitops

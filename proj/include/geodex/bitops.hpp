#ifndef GEODEX_BITOPS_HPP
#define GEODEX_BITOPS_HPP

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

// Bit-row kernels behind the refinement hot loop. A scalar reference
// implementation is always available; on x86-64 an AVX2 variant is compiled
// into its own TU and selected at startup when the CPU supports it. The two
// must agree bit for bit (see test_bitops).

namespace geodex::bitops {

using Word = std::uint64_t;
inline constexpr std::size_t kWordBits = 64;

inline std::size_t words_for(std::size_t bits) {
  return (bits + kWordBits - 1) / kWordBits;
}

// popcount(a & b) over nwords words
std::size_t and_popcount_scalar(const Word* a, const Word* b, std::size_t nwords);
std::size_t popcount_scalar(const Word* a, std::size_t nwords);

#if defined(GEODEX_HAVE_AVX2)
std::size_t and_popcount_avx2(const Word* a, const Word* b, std::size_t nwords);
std::size_t popcount_avx2(const Word* a, std::size_t nwords);
bool cpu_has_avx2();
#endif

// dispatched entry points (function pointers bound once at startup)
extern std::size_t (*and_popcount)(const Word*, const Word*, std::size_t);
extern std::size_t (*popcount)(const Word*, std::size_t);

// "avx2" or "scalar"
const std::string& active_kernel();

// row-major bit matrix with padded rows, the adjacency mirror used by the
// automorphism search
class BitMatrix {
 public:
  BitMatrix() = default;
  BitMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), wpr_(words_for(cols)), data_(rows * wpr_, 0) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t words_per_row() const { return wpr_; }

  void set(std::size_t r, std::size_t c) {
    data_[r * wpr_ + c / kWordBits] |= Word{1} << (c % kWordBits);
  }
  void clear(std::size_t r, std::size_t c) {
    data_[r * wpr_ + c / kWordBits] &= ~(Word{1} << (c % kWordBits));
  }
  bool test(std::size_t r, std::size_t c) const {
    return (data_[r * wpr_ + c / kWordBits] >> (c % kWordBits)) & 1u;
  }
  const Word* row(std::size_t r) const { return data_.data() + r * wpr_; }
  Word* row(std::size_t r) { return data_.data() + r * wpr_; }
  void zero_row(std::size_t r) {
    std::fill(data_.begin() + static_cast<std::ptrdiff_t>(r * wpr_),
              data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * wpr_), Word{0});
  }

 private:
  std::size_t rows_ = 0, cols_ = 0, wpr_ = 0;
  std::vector<Word> data_;
};

}  // namespace geodex::bitops

#endif

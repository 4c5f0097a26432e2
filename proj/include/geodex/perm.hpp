#ifndef GEODEX_PERM_HPP
#define GEODEX_PERM_HPP

#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace geodex {

// Permutation of {0..n-1} as an image table. Composition is left to right:
// compose(p, q) maps x to q(p(x)).
class Perm {
 public:
  Perm() = default;
  explicit Perm(int degree);                  // identity
  explicit Perm(std::vector<int> images);     // validates bijection
  static Perm identity(int degree) { return Perm(degree); }
  static Perm from_cycles(int degree, const std::vector<std::vector<int>>& cycles);

  int degree() const { return static_cast<int>(img_.size()); }
  int operator[](int x) const { return img_[static_cast<std::size_t>(x)]; }
  int apply(int x) const { return img_[static_cast<std::size_t>(x)]; }
  const std::vector<int>& images() const { return img_; }

  bool is_identity() const;
  // smallest moved point, or -1 if identity
  int smallest_moved() const;

  Perm inverse() const;
  friend Perm compose(const Perm& p, const Perm& q);
  Perm operator*(const Perm& q) const { return compose(*this, q); }

  bool operator==(const Perm& o) const { return img_ == o.img_; }
  bool operator!=(const Perm& o) const { return img_ != o.img_; }

  std::string cycle_string() const;

 private:
  std::vector<int> img_;
};

Perm compose(const Perm& p, const Perm& q);

}  // namespace geodex

#endif

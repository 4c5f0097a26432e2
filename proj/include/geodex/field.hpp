#ifndef GEODEX_FIELD_HPP
#define GEODEX_FIELD_HPP

#include <vector>

namespace geodex {

bool is_prime(int n);
// p^f as an int; throws on overflow
int ipow_checked(int p, int f);

// GF(p^f). Elements are the integers 0..q-1; index sum(c_i p^i) stands for
// the polynomial sum(c_i x^i) reduced modulo a fixed irreducible modulus.
// The modulus is the lexicographically smallest monic irreducible of degree
// f over GF(p), comparing coefficient vectors as base-p integers with the
// low-degree coefficient least significant. 0 and 1 are the field's 0 and 1.
class Field {
 public:
  Field(int p, int f);

  int p() const { return p_; }
  int f() const { return f_; }
  int q() const { return q_; }
  // f+1 coefficients, low degree first, leading coefficient 1
  const std::vector<int>& modulus() const { return mod_; }
  // smallest element (as an index) generating the multiplicative group
  int primitive_element() const { return prim_; }

  int add(int a, int b) const { return add_[idx(a, b)]; }
  int sub(int a, int b) const { return add(a, neg(b)); }
  int neg(int a) const { return neg_[static_cast<std::size_t>(a)]; }
  int mul(int a, int b) const { return mul_[idx(a, b)]; }
  int inv(int a) const;  // throws on a = 0
  int pow(int a, long long e) const;
  // true for 0 and for elements of the form x^2
  bool is_square(int a) const { return sq_[static_cast<std::size_t>(a)] != 0; }

 private:
  int p_, f_, q_;
  std::vector<int> mod_;
  int prim_;
  std::vector<int> add_, mul_, neg_, inv_;
  std::vector<char> sq_;

  std::size_t idx(int a, int b) const {
    return static_cast<std::size_t>(a) * static_cast<std::size_t>(q_) + static_cast<std::size_t>(b);
  }
};

}  // namespace geodex

#endif

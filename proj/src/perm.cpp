#include "geodex/perm.hpp"

#include <numeric>
#include <stdexcept>

namespace geodex {

Perm::Perm(int degree) : img_(static_cast<std::size_t>(degree)) {
  if (degree < 0) throw std::invalid_argument("Perm: negative degree");
  std::iota(img_.begin(), img_.end(), 0);
}

Perm::Perm(std::vector<int> images) : img_(std::move(images)) {
  const int n = degree();
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  for (int x : img_) {
    if (x < 0 || x >= n || seen[static_cast<std::size_t>(x)])
      throw std::invalid_argument("Perm: image table is not a bijection");
    seen[static_cast<std::size_t>(x)] = 1;
  }
}

Perm Perm::from_cycles(int degree, const std::vector<std::vector<int>>& cycles) {
  Perm p(degree);
  for (const auto& cyc : cycles) {
    for (std::size_t i = 0; i < cyc.size(); ++i) {
      int from = cyc[i];
      int to = cyc[(i + 1) % cyc.size()];
      if (from < 0 || from >= degree || to < 0 || to >= degree)
        throw std::invalid_argument("Perm::from_cycles: point out of range");
      if (p.img_[static_cast<std::size_t>(from)] != from)
        throw std::invalid_argument("Perm::from_cycles: overlapping cycles");
      p.img_[static_cast<std::size_t>(from)] = to;
    }
  }
  return Perm(std::move(p.img_));  // re-validate
}

bool Perm::is_identity() const {
  for (int x = 0; x < degree(); ++x)
    if (img_[static_cast<std::size_t>(x)] != x) return false;
  return true;
}

int Perm::smallest_moved() const {
  for (int x = 0; x < degree(); ++x)
    if (img_[static_cast<std::size_t>(x)] != x) return x;
  return -1;
}

Perm Perm::inverse() const {
  std::vector<int> inv(img_.size());
  for (int x = 0; x < degree(); ++x) inv[static_cast<std::size_t>(img_[static_cast<std::size_t>(x)])] = x;
  Perm r;
  r.img_ = std::move(inv);
  return r;
}

Perm compose(const Perm& p, const Perm& q) {
  if (p.degree() != q.degree()) throw std::invalid_argument("compose: degree mismatch");
  std::vector<int> img(p.img_.size());
  for (std::size_t x = 0; x < img.size(); ++x)
    img[x] = q.img_[static_cast<std::size_t>(p.img_[x])];
  Perm r;
  r.img_ = std::move(img);
  return r;
}

std::string Perm::cycle_string() const {
  std::vector<char> done(img_.size(), 0);
  std::string s;
  for (int x = 0; x < degree(); ++x) {
    if (done[static_cast<std::size_t>(x)] || img_[static_cast<std::size_t>(x)] == x) continue;
    s += '(';
    int y = x;
    bool first = true;
    while (!done[static_cast<std::size_t>(y)]) {
      done[static_cast<std::size_t>(y)] = 1;
      if (!first) s += ' ';
      s += std::to_string(y);
      first = false;
      y = img_[static_cast<std::size_t>(y)];
    }
    s += ')';
  }
  if (s.empty()) s = "()";
  return s;
}

}  // namespace geodex

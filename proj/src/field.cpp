#include "geodex/field.hpp"

#include <limits>
#include <stdexcept>

namespace geodex {

bool is_prime(int n) {
  if (n < 2) return false;
  for (int d = 2; static_cast<long long>(d) * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

int ipow_checked(int p, int f) {
  long long r = 1;
  for (int i = 0; i < f; ++i) {
    r *= p;
    if (r > std::numeric_limits<int>::max()) throw std::overflow_error("ipow_checked: overflow");
  }
  return static_cast<int>(r);
}

namespace {

// polynomials over GF(p) as coefficient vectors, low degree first, no
// trailing zeros
using Poly = std::vector<int>;

Poly trim(Poly a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
  return a;
}

Poly poly_mul(const Poly& a, const Poly& b, int p) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
  return trim(std::move(r));
}

// remainder of a mod m, m monic
Poly poly_mod(Poly a, const Poly& m, int p) {
  a = trim(std::move(a));
  while (a.size() >= m.size()) {
    int lead = a.back();
    std::size_t shift = a.size() - m.size();
    for (std::size_t i = 0; i < m.size(); ++i) {
      a[shift + i] = ((a[shift + i] - lead * m[i]) % p + p) % p;
    }
    a = trim(std::move(a));
  }
  return a;
}

bool divides(const Poly& d, const Poly& a, int p) { return poly_mod(a, d, p).empty(); }

// irreducibility by trial division over all monic polynomials of degree
// 1..deg/2; fine for the small degrees in scope
bool poly_irreducible(const Poly& m, int p) {
  int deg = static_cast<int>(m.size()) - 1;
  if (deg == 1) return true;
  for (int dd = 1; 2 * dd <= deg; ++dd) {
    long long count = 1;
    for (int i = 0; i < dd; ++i) count *= p;
    for (long long code = 0; code < count; ++code) {
      Poly d(static_cast<std::size_t>(dd) + 1, 0);
      long long c = code;
      for (int i = 0; i < dd; ++i) {
        d[static_cast<std::size_t>(i)] = static_cast<int>(c % p);
        c /= p;
      }
      d[static_cast<std::size_t>(dd)] = 1;
      if (divides(d, m, p)) return false;
    }
  }
  return true;
}

Poly smallest_irreducible(int p, int f) {
  long long count = 1;
  for (int i = 0; i < f; ++i) count *= p;
  for (long long code = 0; code < count; ++code) {
    Poly m(static_cast<std::size_t>(f) + 1, 0);
    long long c = code;
    for (int i = 0; i < f; ++i) {
      m[static_cast<std::size_t>(i)] = static_cast<int>(c % p);
      c /= p;
    }
    m[static_cast<std::size_t>(f)] = 1;
    if (poly_irreducible(m, p)) return m;
  }
  throw std::logic_error("no irreducible polynomial found");  // unreachable
}

int encode(const Poly& a, int p) {
  int v = 0;
  for (std::size_t i = a.size(); i-- > 0;) v = v * p + a[i];
  return v;
}

Poly decode(int v, int p, int f) {
  Poly a(static_cast<std::size_t>(f), 0);
  for (int i = 0; i < f; ++i) {
    a[static_cast<std::size_t>(i)] = v % p;
    v /= p;
  }
  return trim(std::move(a));
}

}  // namespace

Field::Field(int p, int f) : p_(p), f_(f) {
  if (!is_prime(p)) throw std::invalid_argument("Field: p must be prime");
  if (f < 1) throw std::invalid_argument("Field: f must be >= 1");
  q_ = ipow_checked(p, f);
  // dense q x q tables back the arithmetic, so keep q modest
  if (q_ > 1024) throw std::invalid_argument("Field: order too large (limit 1024)");
  mod_ = smallest_irreducible(p, f);

  const int q = q_;
  add_.resize(static_cast<std::size_t>(q) * static_cast<std::size_t>(q));
  mul_.resize(static_cast<std::size_t>(q) * static_cast<std::size_t>(q));
  neg_.resize(static_cast<std::size_t>(q));
  inv_.assign(static_cast<std::size_t>(q), -1);
  sq_.assign(static_cast<std::size_t>(q), 0);

  std::vector<Poly> elems(static_cast<std::size_t>(q));
  for (int a = 0; a < q; ++a) elems[static_cast<std::size_t>(a)] = decode(a, p, f);
  for (int a = 0; a < q; ++a) {
    const Poly& pa = elems[static_cast<std::size_t>(a)];
    {
      Poly na = pa;
      for (int& c : na) c = (p - c) % p;
      neg_[static_cast<std::size_t>(a)] = encode(trim(std::move(na)), p);
    }
    for (int b = 0; b < q; ++b) {
      const Poly& pb = elems[static_cast<std::size_t>(b)];
      Poly s(static_cast<std::size_t>(f), 0);
      for (int i = 0; i < f; ++i) {
        int ca = i < static_cast<int>(pa.size()) ? pa[static_cast<std::size_t>(i)] : 0;
        int cb = i < static_cast<int>(pb.size()) ? pb[static_cast<std::size_t>(i)] : 0;
        s[static_cast<std::size_t>(i)] = (ca + cb) % p;
      }
      add_[idx(a, b)] = encode(trim(std::move(s)), p);
      mul_[idx(a, b)] = encode(poly_mod(poly_mul(pa, pb, p), mod_, p), p);
    }
  }
  for (int a = 1; a < q; ++a) {
    sq_[static_cast<std::size_t>(mul_[idx(a, a)])] = 1;
    if (inv_[static_cast<std::size_t>(a)] < 0) {
      for (int b = 1; b < q; ++b)
        if (mul_[idx(a, b)] == 1) {
          inv_[static_cast<std::size_t>(a)] = b;
          inv_[static_cast<std::size_t>(b)] = a;
          break;
        }
    }
  }
  sq_[0] = 1;

  // smallest generator of the cyclic multiplicative group
  prim_ = 1;
  for (int a = 1; a < q; ++a) {
    int x = a, ord = 1;
    while (x != 1) {
      x = mul_[idx(x, a)];
      ++ord;
    }
    if (ord == q - 1) {
      prim_ = a;
      break;
    }
  }
}

int Field::inv(int a) const {
  if (a == 0) throw std::domain_error("Field::inv: zero has no inverse");
  return inv_[static_cast<std::size_t>(a)];
}

int Field::pow(int a, long long e) const {
  if (e < 0) {
    a = inv(a);
    e = -e;
  }
  int r = 1;
  while (e > 0) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

}  // namespace geodex

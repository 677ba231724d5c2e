#ifndef FEQ_CARRIER_HPP_
#define FEQ_CARRIER_HPP_

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace feq {

class CarrierError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class EvenCharacteristic : public CarrierError {
 public:
  EvenCharacteristic()
      : CarrierError("field carrier must have odd characteristic") {}
};

class EvenOrder : public CarrierError {
 public:
  EvenOrder() : CarrierError("group carrier must have odd order") {}
};

// A finite coefficient structure with exact table arithmetic: either a
// finite field of odd characteristic or an odd-order cyclic group.  Odd
// order makes 2 invertible, so halving is total and unique.
struct Carrier {
  enum class Kind { Field, ZMod };

  Kind kind = Kind::ZMod;
  int order = 0;
  int characteristic = 0;  // p for fields, n for zmod
  int zero = 0;
  int one = 0;  // index of the multiplicative unit (0 in the trivial group)
  std::vector<int> add_t;   // order * order
  std::vector<int> neg_t;   // order
  std::vector<int> half_t;  // order
  std::vector<int> mul_t;   // order * order; Field only
  std::vector<int> inv_t;   // order; Field only, inv_t[0] == -1

  bool is_field() const {
    return kind == Kind::Field;
  }
  int add(int a, int b) const {
    return add_t[static_cast<size_t>(a) * order + b];
  }
  int neg(int a) const {
    return neg_t[a];
  }
  int sub(int a, int b) const {
    return add(a, neg(b));
  }
  int halve(int a) const {
    return half_t[a];
  }
  int quarter(int a) const {
    return half_t[half_t[a]];
  }
  int twice(int a) const {
    return add(a, a);
  }
  int mul(int a, int b) const {
    return mul_t[static_cast<size_t>(a) * order + b];
  }
  int inv(int a) const {
    return inv_t[a];
  }
};

namespace detail {

inline void fill_derived_tables(Carrier& c) {
  const int q = c.order;
  c.neg_t.assign(q, -1);
  c.half_t.assign(q, -1);
  for (int a = 0; a < q; ++a) {
    for (int b = 0; b < q; ++b) {
      if (c.add(a, b) == c.zero) {
        c.neg_t[a] = b;
      }
      if (c.add(b, b) == a) {
        c.half_t[a] = b;
      }
    }
  }
  for (int a = 0; a < q; ++a) {
    if (c.neg_t[a] < 0 || c.half_t[a] < 0) {
      throw CarrierError("carrier arithmetic tables are not a 2-divisible group");
    }
  }
  if (c.is_field()) {
    c.inv_t.assign(q, -1);
    for (int a = 1; a < q; ++a) {
      for (int b = 1; b < q; ++b) {
        if (c.mul(a, b) == c.one) {
          c.inv_t[a] = b;
          break;
        }
      }
      if (c.inv_t[a] < 0) {
        throw CarrierError("nonzero element without inverse");
      }
    }
  }
}

// F_p polynomial helpers; a polynomial is a coefficient vector, low degree
// first, with trailing zeros allowed.
inline int poly_deg(const std::vector<int>& f) {
  for (int i = static_cast<int>(f.size()) - 1; i >= 0; --i) {
    if (f[i] != 0) {
      return i;
    }
  }
  return -1;
}

inline std::vector<int> poly_mul_mod(const std::vector<int>& f,
                                     const std::vector<int>& g,
                                     const std::vector<int>& m,
                                     int p) {
  const int k = poly_deg(m);
  std::vector<int> r(f.size() + g.size(), 0);
  for (size_t i = 0; i < f.size(); ++i) {
    for (size_t j = 0; j < g.size(); ++j) {
      r[i + j] = (r[i + j] + f[i] * g[j]) % p;
    }
  }
  // reduce mod the monic modulus m
  for (int d = static_cast<int>(r.size()) - 1; d >= k; --d) {
    int c = r[d];
    if (c == 0) {
      continue;
    }
    for (int i = 0; i <= k; ++i) {
      r[d - k + i] = ((r[d - k + i] - c * m[i]) % p + p) % p;
    }
  }
  r.resize(k);
  return r;
}

inline bool poly_divides(const std::vector<int>& d, std::vector<int> f, int p) {
  // d monic; returns true iff d | f over F_p
  const int dd = poly_deg(d);
  for (int top = poly_deg(f); top >= dd; top = poly_deg(f)) {
    int c = f[top];
    for (int i = 0; i <= dd; ++i) {
      f[top - dd + i] = ((f[top - dd + i] - c * d[i]) % p + p) % p;
    }
  }
  return poly_deg(f) < 0;
}

inline bool poly_irreducible(const std::vector<int>& f, int p) {
  const int k = poly_deg(f);
  // trial division by every monic polynomial of degree 1..k/2
  for (int d = 1; 2 * d <= k; ++d) {
    int count = 1;
    for (int i = 0; i < d; ++i) {
      count *= p;
    }
    for (int code = 0; code < count; ++code) {
      std::vector<int> g(d + 1, 0);
      int c = code;
      for (int i = 0; i < d; ++i) {
        g[i] = c % p;
        c /= p;
      }
      g[d] = 1;
      if (poly_divides(g, f, p)) {
        return false;
      }
    }
  }
  return true;
}

}  // namespace detail

// Z_n under addition, n odd.
inline Carrier make_zmod(int n) {
  if (n < 1) {
    throw CarrierError("order must be positive");
  }
  if (n % 2 == 0) {
    throw EvenOrder();
  }
  Carrier c;
  c.kind = Carrier::Kind::ZMod;
  c.order = n;
  c.characteristic = n;
  c.zero = 0;
  c.one = n > 1 ? 1 : 0;
  c.add_t.resize(static_cast<size_t>(n) * n);
  c.mul_t.resize(static_cast<size_t>(n) * n);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      c.add_t[static_cast<size_t>(a) * n + b] = (a + b) % n;
      c.mul_t[static_cast<size_t>(a) * n + b] = (a * b) % n;
    }
  }
  detail::fill_derived_tables(c);
  return c;
}

// F_q for q = p^k with p an odd prime.  Elements are indexed by their
// coordinate vector over F_p in base p (coefficient of t^i at digit i);
// for k > 1 arithmetic is modulo the first irreducible monic polynomial
// of degree k in lexicographic order.
inline Carrier make_gf(int q) {
  if (q < 2) {
    throw CarrierError("field order must be at least 2");
  }
  int p = 0;
  for (int d = 2; d * d <= q; ++d) {
    if (q % d == 0) {
      p = d;
      break;
    }
  }
  if (p == 0) {
    p = q;  // q itself prime
  }
  int k = 0;
  int m = q;
  while (m % p == 0) {
    m /= p;
    ++k;
  }
  if (m != 1) {
    throw CarrierError("field order must be a prime power");
  }
  if (p == 2) {
    throw EvenCharacteristic();
  }

  Carrier c;
  c.kind = Carrier::Kind::Field;
  c.order = q;
  c.characteristic = p;
  c.zero = 0;
  c.one = 1;
  c.add_t.resize(static_cast<size_t>(q) * q);
  c.mul_t.resize(static_cast<size_t>(q) * q);

  auto decode = [&](int idx) {
    std::vector<int> f(k, 0);
    for (int i = 0; i < k; ++i) {
      f[i] = idx % p;
      idx /= p;
    }
    return f;
  };
  auto encode = [&](const std::vector<int>& f) {
    int idx = 0;
    for (int i = k - 1; i >= 0; --i) {
      idx = idx * p + f[i];
    }
    return idx;
  };

  std::vector<int> modulus(k + 1, 0);
  modulus[k] = 1;
  if (k > 1) {
    bool found = false;
    int count = 1;
    for (int i = 0; i < k; ++i) {
      count *= p;
    }
    for (int code = 0; code < count && !found; ++code) {
      int cc = code;
      for (int i = 0; i < k; ++i) {
        modulus[i] = cc % p;
        cc /= p;
      }
      found = detail::poly_irreducible(modulus, p);
    }
    if (!found) {
      throw CarrierError("no irreducible modulus found");  // unreachable
    }
  }

  for (int a = 0; a < q; ++a) {
    auto fa = decode(a);
    for (int b = 0; b < q; ++b) {
      auto fb = decode(b);
      std::vector<int> s(k);
      for (int i = 0; i < k; ++i) {
        s[i] = (fa[i] + fb[i]) % p;
      }
      c.add_t[static_cast<size_t>(a) * q + b] = encode(s);
      c.mul_t[static_cast<size_t>(a) * q + b] =
          encode(detail::poly_mul_mod(fa, fb, modulus, p));
    }
  }
  detail::fill_derived_tables(c);
  return c;
}

// The quadratic extension of a finite field carrier, built as F_q(t) with
// t^2 = gamma for a fixed non-square gamma.  Elements are indexed
// lo + q * hi for the element lo + hi * t, so base-field elements keep
// their index and the inclusion map is the identity on [0, q).
inline Carrier quadratic_extension(const Carrier& base) {
  if (!base.is_field()) {
    throw CarrierError("quadratic extension requires a field carrier");
  }
  const int q = base.order;
  std::vector<bool> square(q, false);
  for (int a = 0; a < q; ++a) {
    square[base.mul(a, a)] = true;
  }
  int gamma = -1;
  for (int a = 1; a < q; ++a) {
    if (!square[a]) {
      gamma = a;
      break;
    }
  }
  if (gamma < 0) {
    throw CarrierError("no non-square in base field");  // impossible for odd q
  }

  Carrier c;
  c.kind = Carrier::Kind::Field;
  c.order = q * q;
  c.characteristic = base.characteristic;
  c.zero = 0;
  c.one = 1;
  const int Q = c.order;
  c.add_t.resize(static_cast<size_t>(Q) * Q);
  c.mul_t.resize(static_cast<size_t>(Q) * Q);
  for (int a = 0; a < Q; ++a) {
    const int a0 = a % q, a1 = a / q;
    for (int b = 0; b < Q; ++b) {
      const int b0 = b % q, b1 = b / q;
      c.add_t[static_cast<size_t>(a) * Q + b] =
          base.add(a0, b0) + q * base.add(a1, b1);
      // (a0 + a1 t)(b0 + b1 t) = a0 b0 + gamma a1 b1 + (a0 b1 + a1 b0) t
      const int lo = base.add(base.mul(a0, b0), base.mul(gamma, base.mul(a1, b1)));
      const int hi = base.add(base.mul(a0, b1), base.mul(a1, b0));
      c.mul_t[static_cast<size_t>(a) * Q + b] = lo + q * hi;
    }
  }
  detail::fill_derived_tables(c);
  return c;
}

// Smallest y with y * y == x, if any.
inline std::optional<int> sqrt_in(const Carrier& field, int x) {
  for (int y = 0; y < field.order; ++y) {
    if (field.mul(y, y) == x) {
      return y;
    }
  }
  return std::nullopt;
}

}  // namespace feq

#endif  // FEQ_CARRIER_HPP_

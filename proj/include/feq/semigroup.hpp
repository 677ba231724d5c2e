#ifndef FEQ_SEMIGROUP_HPP_
#define FEQ_SEMIGROUP_HPP_

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace feq {

class SemigroupError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NotAssociative : public SemigroupError {
 public:
  int a, b, c;
  NotAssociative(int a_, int b_, int c_)
      : SemigroupError("not associative at (" + std::to_string(a_) + ", "
                       + std::to_string(b_) + ", " + std::to_string(c_) + ")"),
        a(a_),
        b(b_),
        c(c_) {}
};

class NotCommutative : public SemigroupError {
 public:
  int a, b;
  NotCommutative(int a_, int b_)
      : SemigroupError("not commutative at (" + std::to_string(a_) + ", "
                       + std::to_string(b_) + ")"),
        a(a_),
        b(b_) {}
};

// A commutative semigroup on {0, ..., size - 1} given by its Cayley table.
struct FiniteSemigroup {
  int size = 0;
  std::vector<int> op;  // row-major, size * size entries
  bool is_group = false;
  std::optional<int> identity;

  int at(int a, int b) const {
    return op[static_cast<size_t>(a) * size + b];
  }
};

// Validates the table exhaustively and detects group structure.
inline FiniteSemigroup build_semigroup(int n, std::vector<int> table) {
  if (n < 1) {
    throw SemigroupError("size must be positive");
  }
  if (table.size() != static_cast<size_t>(n) * n) {
    throw SemigroupError("table has wrong shape");
  }
  for (int v : table) {
    if (v < 0 || v >= n) {
      throw SemigroupError("table entry out of range");
    }
  }
  auto at = [&](int a, int b) { return table[static_cast<size_t>(a) * n + b]; };
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      if (at(a, b) != at(b, a)) {
        throw NotCommutative(a, b);
      }
    }
  }
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      for (int c = 0; c < n; ++c) {
        if (at(at(a, b), c) != at(a, at(b, c))) {
          throw NotAssociative(a, b, c);
        }
      }
    }
  }
  FiniteSemigroup S;
  S.size = n;
  S.op = std::move(table);
  for (int e = 0; e < n; ++e) {
    bool neutral = true;
    for (int a = 0; a < n; ++a) {
      if (S.at(e, a) != a) {
        neutral = false;
        break;
      }
    }
    if (neutral) {
      S.identity = e;
      break;
    }
  }
  if (S.identity) {
    bool all_invertible = true;
    for (int a = 0; a < n && all_invertible; ++a) {
      bool has_inverse = false;
      for (int b = 0; b < n; ++b) {
        if (S.at(a, b) == *S.identity) {
          has_inverse = true;
          break;
        }
      }
      all_invertible = has_inverse;
    }
    S.is_group = all_invertible;
  }
  return S;
}

// Z_n under addition mod n.
inline FiniteSemigroup cyclic(int n) {
  std::vector<int> table(static_cast<size_t>(n) * n);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      table[static_cast<size_t>(a) * n + b] = (a + b) % n;
    }
  }
  return build_semigroup(n, std::move(table));
}

// The semigroup {1, ..., m} with a + b := min(a + b, m), encoded as
// indices 0..m-1 for the values 1..m.  Has no neutral element for m > 1.
inline FiniteSemigroup truncated_addition(int m) {
  std::vector<int> table(static_cast<size_t>(m) * m);
  for (int a = 0; a < m; ++a) {
    for (int b = 0; b < m; ++b) {
      table[static_cast<size_t>(a) * m + b] = std::min(a + b + 1, m - 1);
    }
  }
  return build_semigroup(m, std::move(table));
}

// An involutive endomorphism of a FiniteSemigroup, stored as a map table.
struct Involution {
  std::vector<int> map;

  int operator()(int x) const {
    return map[x];
  }
  bool operator==(const Involution&) const = default;
};

inline bool is_involution(const FiniteSemigroup& S, const std::vector<int>& m) {
  if (m.size() != static_cast<size_t>(S.size)) {
    return false;
  }
  for (int x = 0; x < S.size; ++x) {
    if (m[x] < 0 || m[x] >= S.size || m[m[x]] != x) {
      return false;
    }
  }
  for (int x = 0; x < S.size; ++x) {
    for (int y = 0; y < S.size; ++y) {
      if (m[S.at(x, y)] != S.at(m[x], m[y])) {
        return false;
      }
    }
  }
  return true;
}

inline Involution identity_involution(const FiniteSemigroup& S) {
  Involution sigma;
  sigma.map.resize(S.size);
  for (int x = 0; x < S.size; ++x) {
    sigma.map[x] = x;
  }
  return sigma;
}

// x -> -x; only defined when S is a group.
inline Involution negation_involution(const FiniteSemigroup& S) {
  if (!S.is_group) {
    throw SemigroupError("negation requires a group");
  }
  Involution sigma;
  sigma.map.resize(S.size);
  for (int x = 0; x < S.size; ++x) {
    for (int y = 0; y < S.size; ++y) {
      if (S.at(x, y) == *S.identity) {
        sigma.map[x] = y;
        break;
      }
    }
  }
  return sigma;
}

// All involutive endomorphisms, by depth-first assignment of images with
// early rejection, in lexicographic order of the map table.
inline std::vector<Involution> enumerate_involutions(const FiniteSemigroup& S) {
  const int n = S.size;
  std::vector<Involution> out;
  std::vector<int> m(n, -1);
  auto consistent = [&](int x) {
    // involution law on the assigned prefix
    int y = m[x];
    if (y <= x && m[y] != x) {
      return false;
    }
    if (y > x && m[y] != -1 && m[y] != x) {
      return false;
    }
    for (int z = 0; z < x; ++z) {
      if (m[z] == x && y != z) {
        return false;
      }
    }
    // endomorphism law wherever all referenced images are known
    for (int a = 0; a <= x; ++a) {
      for (int b = 0; b <= x; ++b) {
        int p = S.at(a, b);
        if (p <= x && m[p] != S.at(m[a], m[b])) {
          return false;
        }
      }
    }
    return true;
  };
  auto rec = [&](auto&& self, int x) -> void {
    if (x == n) {
      out.push_back(Involution{m});
      return;
    }
    for (int y = 0; y < n; ++y) {
      m[x] = y;
      if (consistent(x)) {
        self(self, x + 1);
      }
    }
    m[x] = -1;
  };
  rec(rec, 0);
  return out;
}

// The product semigroup S x S with pair index x * |S| + z, row-major.
inline FiniteSemigroup pair_semigroup(const FiniteSemigroup& S) {
  const int n = S.size;
  const int N = n * n;
  FiniteSemigroup P;
  P.size = N;
  P.op.resize(static_cast<size_t>(N) * N);
  for (int u = 0; u < N; ++u) {
    for (int v = 0; v < N; ++v) {
      int x = S.at(u / n, v / n);
      int z = S.at(u % n, v % n);
      P.op[static_cast<size_t>(u) * N + v] = x * n + z;
    }
  }
  P.is_group = S.is_group;
  if (S.identity) {
    P.identity = *S.identity * n + *S.identity;
  }
  return P;
}

// The componentwise map (x, z) -> (sigma(x), tau(z)) on pair indices.
inline std::vector<int> square_pair_involution(const FiniteSemigroup& S,
                                               const Involution& sigma,
                                               const Involution& tau) {
  const int n = S.size;
  std::vector<int> m(static_cast<size_t>(n) * n);
  for (int x = 0; x < n; ++x) {
    for (int z = 0; z < n; ++z) {
      m[static_cast<size_t>(x) * n + z] = sigma(x) * n + tau(z);
    }
  }
  return m;
}

}  // namespace feq

#endif  // FEQ_SEMIGROUP_HPP_

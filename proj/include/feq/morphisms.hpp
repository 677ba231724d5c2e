#ifndef FEQ_MORPHISMS_HPP_
#define FEQ_MORPHISMS_HPP_

#include <cstdint>
#include <vector>

#include "carrier.hpp"
#include "instance.hpp"
#include "semigroup.hpp"
#include "table_search.hpp"

namespace feq {

struct MultiplicativeFun {
  TableFun2 underlying;
};

enum class AdditiveFilter { None, Antisym, Sym };

struct AdditiveFun {
  TableFun2 underlying;
  AdditiveFilter filter = AdditiveFilter::None;
};

// B : (S x S) x (S x S) -> H as a flat table over pair indices,
// index u * |S|^2 + v.
struct BiadditiveForm {
  int domain_size = 0;  // |S|
  std::vector<int> values;
  bool symmetric = false;
  bool sign_condition = false;

  int pairs() const {
    return domain_size * domain_size;
  }
  int at(int u, int v) const {
    return values[static_cast<size_t>(u) * pairs() + v];
  }
  int& at(int u, int v) {
    return values[static_cast<size_t>(u) * pairs() + v];
  }
  auto operator<=>(const BiadditiveForm&) const = default;
};

namespace detail {

// A constraint over table cells; all cells are assigned by the time the
// constraint triggers (at its maximal cell in assignment order).
struct Rel {
  enum class Type {
    BinOp,  // val[t] = val[a] . val[b]  (carrier add or mul)
    Unary,  // val[t] = val[a] or -val[a]
    Zero,   // val[t] = 0
  };
  Type type;
  int t = 0;
  int a = 0;
  int b = 0;
  bool negate = false;
};

inline std::vector<std::vector<int>> enumerate_tables(int cells,
                                                      const Carrier& C,
                                                      bool multiplicative,
                                                      const std::vector<Rel>& rels,
                                                      std::uint64_t budget = 0) {
  auto op = [&](int x, int y) {
    return multiplicative ? C.mul(x, y) : C.add(x, y);
  };
  std::vector<std::vector<int>> checks(cells);   // rel indices by trigger cell
  std::vector<std::vector<int>> dets(cells);     // rel indices usable as forcings
  for (size_t i = 0; i < rels.size(); ++i) {
    const Rel& r = rels[i];
    int trigger = r.t;
    if (r.type == Rel::Type::BinOp) {
      trigger = std::max({r.t, r.a, r.b});
    } else if (r.type == Rel::Type::Unary) {
      trigger = std::max(r.t, r.a);
    }
    checks[trigger].push_back(static_cast<int>(i));
    switch (r.type) {
      case Rel::Type::BinOp:
        if (r.t > r.a && r.t > r.b) {
          dets[r.t].push_back(static_cast<int>(i));
        } else if (!multiplicative && r.a > r.t && r.a > r.b) {
          dets[r.a].push_back(static_cast<int>(i));
        } else if (!multiplicative && r.b > r.t && r.b > r.a) {
          dets[r.b].push_back(static_cast<int>(i));
        }
        break;
      case Rel::Type::Unary:
        if (r.t != r.a) {
          dets[std::max(r.t, r.a)].push_back(static_cast<int>(i));
        }
        break;
      case Rel::Type::Zero:
        dets[r.t].push_back(static_cast<int>(i));
        break;
    }
  }

  auto forced_value = [&](const Rel& r, int cell, const std::vector<int>& a) {
    switch (r.type) {
      case Rel::Type::BinOp:
        if (r.t == cell) {
          return op(a[r.a], a[r.b]);
        }
        // additive only: solve for the operand
        return r.a == cell ? C.sub(a[r.t], a[r.b]) : C.sub(a[r.t], a[r.a]);
      case Rel::Type::Unary: {
        int other = r.t == cell ? a[r.a] : a[r.t];
        return r.negate ? C.neg(other) : other;
      }
      default:
        return C.zero;
    }
  };

  auto candidates = [&, dets](int cell, const std::vector<int>& a,
                              std::vector<int>& out) {
    if (!dets[cell].empty()) {
      out.push_back(forced_value(rels[dets[cell][0]], cell, a));
      return;
    }
    for (int v = 0; v < C.order; ++v) {
      out.push_back(v);
    }
  };
  auto consistent = [&, checks](int cell, const std::vector<int>& a) {
    for (int i : checks[cell]) {
      const Rel& r = rels[i];
      switch (r.type) {
        case Rel::Type::BinOp:
          if (a[r.t] != op(a[r.a], a[r.b])) {
            return false;
          }
          break;
        case Rel::Type::Unary:
          if (a[r.t] != (r.negate ? C.neg(a[r.a]) : a[r.a])) {
            return false;
          }
          break;
        case Rel::Type::Zero:
          if (a[r.t] != C.zero) {
            return false;
          }
          break;
      }
    }
    return true;
  };

  CellSearch search(cells, C.order, candidates, consistent);
  return search.run(budget);
}

// Homomorphism relations val[u . v] = val[u] op val[v] over a semigroup.
inline std::vector<Rel> hom_rels(const FiniteSemigroup& P) {
  std::vector<Rel> rels;
  for (int u = 0; u < P.size; ++u) {
    for (int v = u; v < P.size; ++v) {
      rels.push_back(Rel{Rel::Type::BinOp, P.at(u, v), u, v, false});
    }
  }
  return rels;
}

// val[inv(u)] = sign * val[u] for an involutive map on cell indices.
inline void append_involution_rels(std::vector<Rel>& rels,
                                   const std::vector<int>& inv, bool negate) {
  for (int u = 0; u < static_cast<int>(inv.size()); ++u) {
    int s = inv[u];
    if (s == u) {
      if (negate) {
        // 2 val[u] = 0 forces val[u] = 0 in odd order
        rels.push_back(Rel{Rel::Type::Zero, u, 0, 0, false});
      }
      continue;
    }
    if (s < u) {
      continue;  // handled from the partner
    }
    rels.push_back(Rel{Rel::Type::Unary, s, u, 0, negate});
  }
}

}  // namespace detail

// --- defining-law verifiers (no pruning, usable as independent re-checks) ---

inline bool satisfies_multiplicative_law(const FiniteSemigroup& P,
                                         const Carrier& K,
                                         const std::vector<int>& val) {
  for (int u = 0; u < P.size; ++u) {
    for (int v = 0; v < P.size; ++v) {
      if (val[P.at(u, v)] != K.mul(val[u], val[v])) {
        return false;
      }
    }
  }
  return true;
}

inline bool satisfies_additive_law(const FiniteSemigroup& P, const Carrier& G,
                                   const std::vector<int>& val) {
  for (int u = 0; u < P.size; ++u) {
    for (int v = 0; v < P.size; ++v) {
      if (val[P.at(u, v)] != G.add(val[u], val[v])) {
        return false;
      }
    }
  }
  return true;
}

inline bool satisfies_biadditive_law(const FiniteSemigroup& P, const Carrier& H,
                                     const std::vector<int>& val) {
  const int N = P.size;
  auto at = [&](int u, int v) { return val[static_cast<size_t>(u) * N + v]; };
  for (int u = 0; u < N; ++u) {
    for (int v = 0; v < N; ++v) {
      for (int w = 0; w < N; ++w) {
        if (at(P.at(u, v), w) != H.add(at(u, w), at(v, w))) {
          return false;
        }
        if (at(u, P.at(v, w)) != H.add(at(u, v), at(u, w))) {
          return false;
        }
      }
    }
  }
  return true;
}

// --- enumerators ---

// All multiplicative chi : S^2 -> K in lexicographic table order.
inline std::vector<MultiplicativeFun> enumerate_multiplicative(
    const FiniteSemigroup& S, const Carrier& K, std::uint64_t budget = 0) {
  FiniteSemigroup P = pair_semigroup(S);
  auto tables = detail::enumerate_tables(P.size, K, true, detail::hom_rels(P),
                                         budget);
  std::vector<MultiplicativeFun> out;
  out.reserve(tables.size());
  for (auto& t : tables) {
    out.push_back(MultiplicativeFun{TableFun2{S.size, std::move(t)}});
  }
  return out;
}

// All additive a : S^2 -> G with the requested involution filter, in
// lexicographic table order.  sigma/tau are only read when a filter is set.
inline std::vector<AdditiveFun> enumerate_additive(
    const FiniteSemigroup& S, const Carrier& G,
    AdditiveFilter filter = AdditiveFilter::None,
    const Involution* sigma = nullptr, const Involution* tau = nullptr,
    std::uint64_t budget = 0) {
  FiniteSemigroup P = pair_semigroup(S);
  auto rels = detail::hom_rels(P);
  if (filter != AdditiveFilter::None) {
    auto pinv = square_pair_involution(S, *sigma, *tau);
    detail::append_involution_rels(rels, pinv, filter == AdditiveFilter::Antisym);
  }
  auto tables = detail::enumerate_tables(P.size, G, false, rels, budget);
  std::vector<AdditiveFun> out;
  out.reserve(tables.size());
  for (auto& t : tables) {
    out.push_back(AdditiveFun{TableFun2{S.size, std::move(t)}, filter});
  }
  return out;
}

// All biadditive B : S^2 x S^2 -> H subject to the requested symmetry and
// sign-condition constraints, in lexicographic table order.
inline std::vector<BiadditiveForm> enumerate_biadditive(
    const FiniteSemigroup& S, const Carrier& H, bool require_symmetric,
    const Involution* sigma = nullptr, const Involution* tau = nullptr,
    std::uint64_t budget = 0) {
  FiniteSemigroup P = pair_semigroup(S);
  const int N = P.size;
  const bool require_sign = sigma != nullptr;
  auto cell = [&](int u, int v) { return u * N + v; };

  std::vector<detail::Rel> rels;
  for (int u = 0; u < N; ++u) {
    for (int v = u; v < N; ++v) {
      for (int w = 0; w < N; ++w) {
        rels.push_back(detail::Rel{detail::Rel::Type::BinOp,
                                   cell(P.at(u, v), w), cell(u, w), cell(v, w),
                                   false});
        rels.push_back(detail::Rel{detail::Rel::Type::BinOp,
                                   cell(w, P.at(u, v)), cell(w, u), cell(w, v),
                                   false});
      }
    }
  }
  if (require_symmetric) {
    for (int u = 0; u < N; ++u) {
      for (int v = u + 1; v < N; ++v) {
        rels.push_back(
            detail::Rel{detail::Rel::Type::Unary, cell(v, u), cell(u, v), 0,
                        false});
      }
    }
  }
  if (require_sign) {
    auto pinv = square_pair_involution(S, *sigma, *tau);
    std::vector<int> cell_inv(static_cast<size_t>(N) * N);
    for (int u = 0; u < N; ++u) {
      for (int v = 0; v < N; ++v) {
        cell_inv[cell(u, v)] = cell(pinv[u], v);
      }
    }
    detail::append_involution_rels(rels, cell_inv, true);
  }

  auto tables = detail::enumerate_tables(N * N, H, false, rels, budget);
  std::vector<BiadditiveForm> out;
  out.reserve(tables.size());
  for (auto& t : tables) {
    out.push_back(BiadditiveForm{S.size, std::move(t), require_symmetric,
                                 require_sign});
  }
  return out;
}

// The diagonal m(x) := chi(x, x), multiplicative on S when chi is
// multiplicative on S^2.
inline std::vector<int> diagonal_of(const TableFun2& f) {
  std::vector<int> m(f.domain_size);
  for (int x = 0; x < f.domain_size; ++x) {
    m[x] = f.at(x, x);
  }
  return m;
}

}  // namespace feq

#endif  // FEQ_MORPHISMS_HPP_

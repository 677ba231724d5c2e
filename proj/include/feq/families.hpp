#ifndef FEQ_FAMILIES_HPP_
#define FEQ_FAMILIES_HPP_

#include <algorithm>
#include <vector>

#include "instance.hpp"
#include "morphisms.hpp"

namespace feq {

namespace detail {

inline std::vector<TableFun2> sorted_dedup(std::vector<TableFun2> fs) {
  std::sort(fs.begin(), fs.end());
  fs.erase(std::unique(fs.begin(), fs.end()), fs.end());
  return fs;
}

}  // namespace detail

// f(x, z) = (chi(x, z) + chi(sigma(x), tau(z))) / 2 over all multiplicative
// chi, as a deduplicated ordered set of value tables.
inline std::vector<TableFun2> dalembert_family(const EquationInstance& inst) {
  const int n = inst.S.size;
  const Carrier& K = inst.carrier;
  std::vector<TableFun2> out;
  for (const auto& chi : enumerate_multiplicative(inst.S, K)) {
    TableFun2 f = constant_fun(n, K.zero);
    for (int u = 0; u < n * n; ++u) {
      f.values[u] = K.halve(
          K.add(chi.underlying.values[u], chi.underlying.values[inst.pair_inv[u]]));
    }
    out.push_back(std::move(f));
  }
  return detail::sorted_dedup(std::move(out));
}

// f = a + c over all additive a with a(sigma(x), tau(z)) = -a(x, z) and all
// constants c.
inline std::vector<TableFun2> jensen_family(const EquationInstance& inst) {
  const int n = inst.S.size;
  const Carrier& G = inst.carrier;
  std::vector<TableFun2> out;
  auto as = enumerate_additive(inst.S, G, AdditiveFilter::Antisym, &inst.sigma,
                               &inst.tau);
  for (const auto& a : as) {
    for (int c = 0; c < G.order; ++c) {
      TableFun2 f = a.underlying;
      for (int& v : f.values) {
        v = G.add(v, c);
      }
      out.push_back(std::move(f));
    }
  }
  return detail::sorted_dedup(std::move(out));
}

// f(u) = B(u, u) + T(u) over all symmetric biadditive B with the sign
// condition and all additive T with T(sigma(x), tau(z)) = T(x, z).
inline std::vector<TableFun2> quadratic_family(const EquationInstance& inst) {
  const int n = inst.S.size;
  const int N = n * n;
  const Carrier& H = inst.carrier;
  auto bs = enumerate_biadditive(inst.S, H, true, &inst.sigma, &inst.tau);
  auto ts = enumerate_additive(inst.S, H, AdditiveFilter::Sym, &inst.sigma,
                               &inst.tau);
  std::vector<TableFun2> out;
  out.reserve(bs.size() * ts.size());
  for (const auto& B : bs) {
    for (const auto& T : ts) {
      TableFun2 f = constant_fun(n, H.zero);
      for (int u = 0; u < N; ++u) {
        f.values[u] = H.add(B.at(u, u), T.underlying.values[u]);
      }
      out.push_back(std::move(f));
    }
  }
  return detail::sorted_dedup(std::move(out));
}

inline std::vector<TableFun2> solution_family(const EquationInstance& inst) {
  switch (inst.kind) {
    case EquationKind::Dalembert:
      return dalembert_family(inst);
    case EquationKind::Jensen:
      return jensen_family(inst);
    default:
      return quadratic_family(inst);
  }
}

}  // namespace feq

#endif  // FEQ_FAMILIES_HPP_

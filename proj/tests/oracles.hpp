// Test-only brute-force oracles: full-table odometer scans with naive
// filtering, independent of the pruned search paths they cross-check.

#ifndef FEQ_TESTS_ORACLES_HPP_
#define FEQ_TESTS_ORACLES_HPP_

#include <functional>
#include <vector>

#include <feq/carrier.hpp>
#include <feq/instance.hpp>
#include <feq/semigroup.hpp>

namespace feq::oracles {

// Every table in {0..values-1}^cells passing `keep`, in lexicographic order.
inline std::vector<std::vector<int>> scan_tables(
    int cells, int values,
    const std::function<bool(const std::vector<int>&)>& keep) {
  std::vector<std::vector<int>> out;
  std::vector<int> t(cells, 0);
  while (true) {
    if (keep(t)) {
      out.push_back(t);
    }
    int i = cells - 1;
    while (i >= 0 && t[i] == values - 1) {
      t[i] = 0;
      --i;
    }
    if (i < 0) {
      break;
    }
    ++t[i];
  }
  return out;
}

// Direct transcription of the three equations, for filtering full scans.
inline bool solves_equation(const EquationInstance& inst,
                            const std::vector<int>& val) {
  const int n = inst.S.size;
  const Carrier& C = inst.carrier;
  auto f = [&](int x, int z) { return val[x * n + z]; };
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      for (int z = 0; z < n; ++z) {
        for (int w = 0; w < n; ++w) {
          int lhs = C.add(f(inst.S.at(x, y), inst.S.at(z, w)),
                          f(inst.S.at(x, inst.sigma(y)),
                            inst.S.at(z, inst.tau(w))));
          int rhs = 0;
          switch (inst.kind) {
            case EquationKind::Dalembert:
              rhs = C.twice(C.mul(f(x, z), f(y, w)));
              break;
            case EquationKind::Jensen:
              rhs = C.twice(f(x, z));
              break;
            case EquationKind::Quadratic:
              rhs = C.add(C.twice(f(x, z)), C.twice(f(y, w)));
              break;
          }
          if (lhs != rhs) {
            return false;
          }
        }
      }
    }
  }
  return true;
}

inline std::vector<std::vector<int>> scan_solutions(
    const EquationInstance& inst) {
  const int cells = inst.S.size * inst.S.size;
  return scan_tables(cells, inst.carrier.order,
                     [&](const std::vector<int>& t) {
                       return solves_equation(inst, t);
                     });
}

// All involutive endomorphisms by scanning every map table.
inline std::vector<std::vector<int>> scan_involutions(
    const FiniteSemigroup& S) {
  return scan_tables(S.size, S.size, [&](const std::vector<int>& m) {
    for (int x = 0; x < S.size; ++x) {
      if (m[m[x]] != x) {
        return false;
      }
      for (int y = 0; y < S.size; ++y) {
        if (m[S.at(x, y)] != S.at(m[x], m[y])) {
          return false;
        }
      }
    }
    return true;
  });
}

}  // namespace feq::oracles

#endif  // FEQ_TESTS_ORACLES_HPP_

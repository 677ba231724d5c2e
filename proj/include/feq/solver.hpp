#ifndef FEQ_SOLVER_HPP_
#define FEQ_SOLVER_HPP_

#include <algorithm>
#include <array>
#include <cstdint>
#include <numeric>
#include <set>
#include <vector>

#include "instance.hpp"
#include "table_search.hpp"

namespace feq {

struct SolveStats {
  std::uint64_t nodes = 0;
  int classes = 0;  // distinct cells searched (after any seeding merges)
};

namespace detail {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) {
      parent[std::max(a, b)] = std::min(a, b);
    }
  }
};

// One equation constraint on solution cells, in class coordinates:
// val[l1] + val[l2] = rhs(val[r1], val[r2]), where rhs is 2ab, 2a, or 2a+2b.
struct EqConstraint {
  int l1, l2, r1, r2;
  auto operator<=>(const EqConstraint&) const = default;
};

inline std::vector<TableFun2> solve_instance(const EquationInstance& inst,
                                             bool seeded, std::uint64_t budget,
                                             SolveStats* stats) {
  const int n = inst.S.size;
  const int cells = n * n;
  const Carrier& C = inst.carrier;
  const EquationKind kind = inst.kind;

  // Seeding merges cells identified by consequences of the equation:
  // f(y, w) = f(sigma(y), tau(w)) for the d'Alembert and quadratic types,
  // translation invariance f(x+y+sigma(y), z+w+tau(w)) = f(x, z) for Jensen.
  UnionFind uf(cells);
  if (seeded) {
    if (kind == EquationKind::Jensen) {
      for (int x = 0; x < n; ++x) {
        for (int z = 0; z < n; ++z) {
          for (int y = 0; y < n; ++y) {
            for (int w = 0; w < n; ++w) {
              int xs = inst.S.at(inst.S.at(x, y), inst.sigma(y));
              int zs = inst.S.at(inst.S.at(z, w), inst.tau(w));
              uf.unite(inst.cell(xs, zs), inst.cell(x, z));
            }
          }
        }
      }
    } else {
      for (int u = 0; u < cells; ++u) {
        uf.unite(u, inst.pair_inv[u]);
      }
    }
  }

  // Class ids ordered by least member cell, so lexicographic DFS over the
  // classes is lexicographic on the expanded tables.
  std::vector<int> class_of(cells, -1);
  std::vector<int> reps;
  for (int u = 0; u < cells; ++u) {
    int r = uf.find(u);
    if (class_of[r] < 0) {
      class_of[r] = static_cast<int>(reps.size());
      reps.push_back(r);
    }
    class_of[u] = class_of[r];
  }
  const int num_classes = static_cast<int>(reps.size());

  std::set<EqConstraint> cset;
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      for (int z = 0; z < n; ++z) {
        for (int w = 0; w < n; ++w) {
          EqConstraint c;
          c.l1 = class_of[inst.cell(inst.S.at(x, y), inst.S.at(z, w))];
          c.l2 = class_of[inst.cell(inst.S.at(x, inst.sigma(y)),
                                    inst.S.at(z, inst.tau(w)))];
          c.r1 = class_of[inst.cell(x, z)];
          c.r2 = class_of[inst.cell(y, w)];
          if (c.l1 > c.l2) {
            std::swap(c.l1, c.l2);
          }
          if (kind == EquationKind::Jensen) {
            c.r2 = -1;  // right side ignores (y, w)
          } else if (c.r1 > c.r2) {
            std::swap(c.r1, c.r2);  // rhs symmetric for the other two kinds
          }
          cset.insert(c);
        }
      }
    }
  }
  std::vector<EqConstraint> constraints(cset.begin(), cset.end());

  auto rhs = [&](int a, int b) {
    switch (kind) {
      case EquationKind::Dalembert:
        return C.twice(C.mul(a, b));
      case EquationKind::Jensen:
        return C.twice(a);
      default:
        return C.add(C.twice(a), C.twice(b));
    }
  };

  std::vector<std::vector<int>> checks(num_classes);
  for (size_t i = 0; i < constraints.size(); ++i) {
    const EqConstraint& c = constraints[i];
    int trigger = std::max({c.l1, c.l2, c.r1, c.r2});
    checks[trigger].push_back(static_cast<int>(i));
  }

  // A constraint forces its trigger cell when the cell sits in a slot that
  // is solvable from the other (already assigned) slots.
  auto forced = [&](const EqConstraint& c, int cell, const std::vector<int>& a,
                    int& out) {
    const bool in_l1 = c.l1 == cell, in_l2 = c.l2 == cell;
    const bool in_r1 = c.r1 == cell, in_r2 = c.r2 == cell;
    if ((in_l1 || in_l2) && !in_r1 && !in_r2) {
      if (in_l1 && in_l2) {
        out = C.halve(rhs(a[c.r1], c.r2 < 0 ? 0 : a[c.r2]));
      } else {
        int other = in_l1 ? a[c.l2] : a[c.l1];
        out = C.sub(rhs(a[c.r1], c.r2 < 0 ? 0 : a[c.r2]), other);
      }
      return true;
    }
    if (!in_l1 && !in_l2 && (in_r1 || in_r2)) {
      int lhs = C.add(a[c.l1], a[c.l2]);
      switch (kind) {
        case EquationKind::Jensen:
          out = C.halve(lhs);
          return true;
        case EquationKind::Quadratic:
          if (in_r1 && in_r2) {
            out = C.quarter(lhs);
          } else {
            out = C.sub(C.halve(lhs), in_r1 ? a[c.r2] : a[c.r1]);
          }
          return true;
        default: {  // d'Alembert: 2 val r1 r2, solvable when the partner != 0
          if (in_r1 && in_r2) {
            return false;  // would need a square root
          }
          int other = in_r1 ? a[c.r2] : a[c.r1];
          if (other == C.zero) {
            return false;
          }
          out = C.mul(C.halve(lhs), C.inv(other));
          return true;
        }
      }
    }
    return false;
  };

  auto candidates = [&](int cell, const std::vector<int>& a,
                        std::vector<int>& out) {
    for (int i : checks[cell]) {
      int v;
      if (forced(constraints[i], cell, a, v)) {
        out.push_back(v);
        return;
      }
    }
    for (int v = 0; v < C.order; ++v) {
      out.push_back(v);
    }
  };
  auto consistent = [&](int cell, const std::vector<int>& a) {
    for (int i : checks[cell]) {
      const EqConstraint& c = constraints[i];
      if (C.add(a[c.l1], a[c.l2]) != rhs(a[c.r1], c.r2 < 0 ? 0 : a[c.r2])) {
        return false;
      }
    }
    return true;
  };

  CellSearch search(num_classes, C.order, candidates, consistent);
  std::vector<TableFun2> out;
  try {
    auto tables = search.run(budget);
    out.reserve(tables.size());
    for (const auto& t : tables) {
      TableFun2 f;
      f.domain_size = n;
      f.values.resize(cells);
      for (int u = 0; u < cells; ++u) {
        f.values[u] = t[class_of[u]];
      }
      out.push_back(std::move(f));
    }
  } catch (const BudgetExceeded&) {
    if (stats != nullptr) {
      stats->nodes = search.nodes();
      stats->classes = num_classes;
    }
    throw;
  }
  if (stats != nullptr) {
    stats->nodes = search.nodes();
    stats->classes = num_classes;
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace detail

// The complete solution set of the instance, lexicographically ordered.
// A nonzero budget bounds the search node count; overruns throw
// BudgetExceeded with the partial solution count.
inline std::vector<TableFun2> brute_force(const EquationInstance& inst,
                                          std::uint64_t budget = 0,
                                          SolveStats* stats = nullptr) {
  return detail::solve_instance(inst, false, budget, stats);
}

// Same output as brute_force, after first merging cells identified by the
// derived identities of each equation, which shrinks the search space.
inline std::vector<TableFun2> seeded_brute_force(const EquationInstance& inst,
                                                 std::uint64_t budget = 0,
                                                 SolveStats* stats = nullptr) {
  return detail::solve_instance(inst, true, budget, stats);
}

// Number of distinct cells a seeded search would explore; used to decide
// whether an instance is tractable before launching it.
inline int seeded_class_count(const EquationInstance& inst) {
  SolveStats stats;
  try {
    detail::solve_instance(inst, true, 1, &stats);
  } catch (const BudgetExceeded&) {
  }
  return stats.classes;
}

}  // namespace feq

#endif  // FEQ_SOLVER_HPP_

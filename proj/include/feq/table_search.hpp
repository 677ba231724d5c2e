#ifndef FEQ_TABLE_SEARCH_HPP_
#define FEQ_TABLE_SEARCH_HPP_

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <vector>

namespace feq {

class BudgetExceeded : public std::runtime_error {
 public:
  std::uint64_t partial_count;
  explicit BudgetExceeded(std::uint64_t found)
      : std::runtime_error("search budget exceeded"),
        partial_count(found) {}
};

// Depth-first enumeration of all total assignments of `cells` cells, each
// holding a value in [0, values), subject to constraints supplied by the
// caller as two callables:
//
//   candidates(cell, partial, out) — values to try at `cell`, ascending and
//     duplicate-free; callers use this to propagate forced values (a single
//     candidate) instead of scanning the whole value range.
//   consistent(cell, partial)      — checks every constraint whose last
//     referenced cell in assignment order is `cell`.
//
// Assignment order is cell index ascending, so the emitted tables come out
// in lexicographic order.  Each attempted assignment counts as one node;
// a nonzero budget bounds the node count and overruns throw BudgetExceeded
// rather than returning a silently incomplete set.
class CellSearch {
 public:
  using CandidateFn =
      std::function<void(int, const std::vector<int>&, std::vector<int>&)>;
  using ConsistentFn = std::function<bool(int, const std::vector<int>&)>;

  CellSearch(int cells, int values, CandidateFn candidates,
             ConsistentFn consistent)
      : cells_(cells),
        values_(values),
        candidates_(std::move(candidates)),
        consistent_(std::move(consistent)) {}

  std::vector<std::vector<int>> run(std::uint64_t budget = 0) {
    nodes_ = 0;
    std::vector<std::vector<int>> out;
    std::vector<int> a(cells_, -1);
    std::vector<std::vector<int>> scratch(cells_ + 1);
    auto rec = [&](auto&& self, int cell) -> void {
      if (cell == cells_) {
        out.push_back(a);
        return;
      }
      auto& cand = scratch[cell];
      cand.clear();
      candidates_(cell, a, cand);
      for (int v : cand) {
        ++nodes_;
        if (budget != 0 && nodes_ > budget) {
          throw BudgetExceeded(out.size());
        }
        a[cell] = v;
        if (consistent_(cell, a)) {
          self(self, cell + 1);
        }
      }
      a[cell] = -1;
    };
    if (cells_ == 0) {
      out.emplace_back();
    } else {
      rec(rec, 0);
    }
    return out;
  }

  std::uint64_t nodes() const {
    return nodes_;
  }

  // Candidate generator that scans the full value range.
  static CandidateFn all_values(int values) {
    return [values](int, const std::vector<int>&, std::vector<int>& out) {
      out.resize(values);
      for (int v = 0; v < values; ++v) {
        out[v] = v;
      }
    };
  }

 private:
  int cells_;
  int values_;
  CandidateFn candidates_;
  ConsistentFn consistent_;
  std::uint64_t nodes_ = 0;
};

}  // namespace feq

#endif  // FEQ_TABLE_SEARCH_HPP_

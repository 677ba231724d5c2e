#ifndef FEQ_REPORT_HPP_
#define FEQ_REPORT_HPP_

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "families.hpp"
#include "instance.hpp"
#include "solver.hpp"
#include "verify.hpp"

namespace feq {

enum class SetRelation {
  Equal,
  EqualViaExtension,  // family over the base field is a proper subset, but
                      // every solver solution has an extension-field witness
  FamilyProperSubset,
  SolverProperSubset,
  Incomparable,
};

inline const char* relation_name(SetRelation r) {
  switch (r) {
    case SetRelation::Equal:
      return "equal";
    case SetRelation::EqualViaExtension:
      return "equal-with-extension";
    case SetRelation::FamilyProperSubset:
      return "family-proper-subset";
    case SetRelation::SolverProperSubset:
      return "solver-proper-subset";
    default:
      return "incomparable";
  }
}

struct InstanceReport {
  std::string name;
  EquationKind kind = EquationKind::Dalembert;
  bool skipped = false;  // solver budget exhausted
  std::uint64_t solver_count = 0;
  std::uint64_t family_count = 0;
  std::uint64_t intersection = 0;
  SetRelation relation = SetRelation::Equal;
  // d'Alembert membership statistics over the solver output
  std::uint64_t membership_checked = 0;
  std::uint64_t membership_found = 0;
  std::uint64_t extension_witnesses = 0;
  // proof-identity tallies over the solver output
  std::uint64_t identity_checks = 0;
  std::uint64_t identity_failures = 0;
};

namespace detail {

inline SetRelation classify(const std::vector<TableFun2>& solver_set,
                            const std::vector<TableFun2>& family_set,
                            std::uint64_t& intersection) {
  std::vector<TableFun2> common;
  std::set_intersection(solver_set.begin(), solver_set.end(),
                        family_set.begin(), family_set.end(),
                        std::back_inserter(common));
  intersection = common.size();
  const bool family_in_solver = intersection == family_set.size();
  const bool solver_in_family = intersection == solver_set.size();
  if (family_in_solver && solver_in_family) {
    return SetRelation::Equal;
  }
  if (family_in_solver) {
    return SetRelation::FamilyProperSubset;
  }
  if (solver_in_family) {
    return SetRelation::SolverProperSubset;
  }
  return SetRelation::Incomparable;
}

}  // namespace detail

// Runs the solve / family / verify pipeline on one instance.  The proof
// identities applicable to the instance's equation are tallied over the
// whole solver output.
inline InstanceReport analyze_instance(const EquationInstance& inst,
                                       const std::string& name,
                                       std::uint64_t budget = 0,
                                       bool seeded = true,
                                       bool allow_extension = true) {
  InstanceReport rep;
  rep.name = name;
  rep.kind = inst.kind;

  std::vector<TableFun2> solutions;
  try {
    solutions = seeded ? seeded_brute_force(inst, budget)
                       : brute_force(inst, budget);
  } catch (const BudgetExceeded&) {
    rep.skipped = true;
    return rep;
  }
  auto family = solution_family(inst);
  rep.solver_count = solutions.size();
  rep.family_count = family.size();
  rep.relation = detail::classify(solutions, family, rep.intersection);

  for (const auto& f : solutions) {
    switch (inst.kind) {
      case EquationKind::Dalembert: {
        ++rep.identity_checks;
        if (!check_solution_symmetry(inst, f)) {
          ++rep.identity_failures;
        }
        ++rep.membership_checked;
        auto m = membership_dalembert(inst, f, allow_extension);
        if (m.found) {
          ++rep.membership_found;
          if (m.used_extension) {
            ++rep.extension_witnesses;
          }
        }
        break;
      }
      case EquationKind::Jensen:
        ++rep.identity_checks;
        if (!check_jensen_invariance(inst, f)) {
          ++rep.identity_failures;
        }
        break;
      case EquationKind::Quadratic: {
        ++rep.identity_checks;
        if (!check_solution_symmetry(inst, f)) {
          ++rep.identity_failures;
        }
        ++rep.identity_checks;
        auto d = quadratic_decompose(inst, f);
        if (d.residual != 0 || !d.b_biadditive || !d.b_symmetric
            || !d.b_sign_condition || !d.t_additive || !d.t_symmetric) {
          ++rep.identity_failures;
        }
        break;
      }
    }
  }
  if (inst.kind == EquationKind::Dalembert
      && rep.relation == SetRelation::FamilyProperSubset
      && rep.membership_found == rep.membership_checked) {
    rep.relation = SetRelation::EqualViaExtension;
  }
  return rep;
}

}  // namespace feq

#endif  // FEQ_REPORT_HPP_

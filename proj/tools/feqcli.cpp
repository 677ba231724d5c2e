// Batch front end: parse instance files, run the solve / family / verify
// pipelines and emit deterministic line-oriented reports.

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <feq/feq.hpp>

namespace {

constexpr int kExitFailure = 1;
constexpr int kExitParse = 2;
constexpr int kExitBudget = 3;

feq::EquationInstance load_instance(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw feq::ParseError(0, "cannot open '" + path + "'");
  }
  return feq::parse_instance(in);
}

void print_rows(const std::vector<feq::TableFun2>& fs, std::ostream& os) {
  for (const auto& f : fs) {
    for (size_t i = 0; i < f.values.size(); ++i) {
      os << (i ? " " : "") << f.values[i];
    }
    os << "\n";
  }
}

int cmd_solve(const std::string& path, std::uint64_t budget, bool seeded,
              bool quiet) {
  feq::EquationInstance inst;
  try {
    inst = load_instance(path);
  } catch (const feq::ParseError& e) {
    std::cerr << "error: " << path << ": " << e.what() << "\n";
    return kExitParse;
  }
  std::vector<feq::TableFun2> solutions;
  try {
    solutions = seeded ? feq::seeded_brute_force(inst, budget)
                       : feq::brute_force(inst, budget);
  } catch (const feq::BudgetExceeded& e) {
    std::cerr << "error: budget exceeded after " << e.partial_count
              << " solutions\n";
    return kExitBudget;
  }
  std::cout << "solutions: " << solutions.size() << "\n";
  if (!quiet) {
    print_rows(solutions, std::cout);
  }
  return 0;
}

int cmd_verify(const std::string& inst_path, const std::string& rows_path,
               bool allow_extension, bool quiet) {
  feq::EquationInstance inst;
  try {
    inst = load_instance(inst_path);
  } catch (const feq::ParseError& e) {
    std::cerr << "error: " << inst_path << ": " << e.what() << "\n";
    return kExitParse;
  }
  std::ifstream in(rows_path);
  if (!in) {
    std::cerr << "error: cannot open '" << rows_path << "'\n";
    return kExitParse;
  }
  const int cells = inst.S.size * inst.S.size;
  std::vector<feq::TableFun2> rows;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) {
      line.erase(hash);
    }
    std::istringstream ls(line);
    std::vector<int> vals;
    int v;
    while (ls >> v) {
      vals.push_back(v);
    }
    if (vals.empty()) {
      continue;
    }
    if (static_cast<int>(vals.size()) != cells) {
      std::cerr << "error: " << rows_path << ": line " << lineno << ": row has "
                << vals.size() << " values, expected " << cells << "\n";
      return kExitParse;
    }
    for (int x : vals) {
      if (x < 0 || x >= inst.carrier.order) {
        std::cerr << "error: " << rows_path << ": line " << lineno
                  << ": value out of carrier range\n";
        return kExitParse;
      }
    }
    rows.push_back(feq::TableFun2{inst.S.size, std::move(vals)});
  }

  bool any_failure = false;
  for (size_t i = 0; i < rows.size(); ++i) {
    const auto& f = rows[i];
    auto violations = feq::check_equation(inst, f);
    if (!violations.empty()) {
      any_failure = true;
      const auto& q = violations.front();
      std::cout << "row " << i << ": FAIL equation at quadruple (" << q[0]
                << ", " << q[1] << ", " << q[2] << ", " << q[3] << "), "
                << violations.size() << " violation(s)\n";
      continue;
    }
    std::vector<std::string> failed;
    switch (inst.kind) {
      case feq::EquationKind::Dalembert: {
        if (!feq::check_solution_symmetry(inst, f)) {
          failed.push_back("solution-symmetry");
        }
        feq::ProofWitnessF F = feq::proof_witness_f(inst, f, 0, 0);
        if (!feq::check_f_antisymmetry(inst, F)) {
          failed.push_back("F-antisymmetry");
        }
        for (int y0 = 0; y0 < inst.S.size; ++y0) {
          for (int w0 = 0; w0 < inst.S.size; ++w0) {
            if (feq::check_sine_addition(inst, f, y0, w0)
                == feq::CheckStatus::Fail) {
              failed.push_back("sine-addition");
              y0 = inst.S.size;
              break;
            }
          }
        }
        auto m = feq::membership_dalembert(inst, f, allow_extension);
        if (!m.found) {
          failed.push_back("multiplicative-witness");
        }
        break;
      }
      case feq::EquationKind::Jensen:
        if (!feq::check_jensen_invariance(inst, f)) {
          failed.push_back("translation-invariance");
        }
        break;
      case feq::EquationKind::Quadratic: {
        if (!feq::check_solution_symmetry(inst, f)) {
          failed.push_back("solution-symmetry");
        }
        auto d = feq::quadratic_decompose(inst, f);
        if (d.residual != 0 || !d.b_biadditive || !d.b_symmetric
            || !d.b_sign_condition || !d.t_additive || !d.t_symmetric) {
          failed.push_back("quadratic-decomposition");
        }
        break;
      }
    }
    if (failed.empty()) {
      if (!quiet) {
        std::cout << "row " << i << ": pass\n";
      }
    } else {
      any_failure = true;
      std::cout << "row " << i << ": FAIL";
      for (const auto& name : failed) {
        std::cout << " " << name;
      }
      std::cout << "\n";
    }
  }
  std::cout << "verified: " << rows.size() << " row(s), "
            << (any_failure ? "failures present" : "all pass") << "\n";
  return any_failure ? kExitFailure : 0;
}

int cmd_report(const std::string& dir, std::uint64_t budget, bool seeded,
               bool allow_extension) {
  namespace fs = std::filesystem;
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(dir)) {
    if (entry.is_regular_file()) {
      files.push_back(entry.path());
    }
  }
  std::sort(files.begin(), files.end());
  for (const auto& path : files) {
    const std::string name = path.filename().string();
    feq::EquationInstance inst;
    try {
      inst = load_instance(path.string());
    } catch (const feq::ParseError& e) {
      std::cout << name << " skipped (parse: " << e.what() << ")\n";
      continue;
    }
    auto rep =
        feq::analyze_instance(inst, name, budget, seeded, allow_extension);
    if (rep.skipped) {
      std::cout << name << " skipped (budget exceeded)\n";
      continue;
    }
    std::cout << name << " kind=" << feq::kind_name(rep.kind)
              << " solver=" << rep.solver_count
              << " family=" << rep.family_count
              << " relation=" << feq::relation_name(rep.relation)
              << " identities=" << (rep.identity_checks - rep.identity_failures)
              << "/" << rep.identity_checks;
    if (rep.kind == feq::EquationKind::Dalembert) {
      std::cout << " membership=" << rep.membership_found << "/"
                << rep.membership_checked
                << " ext-witnesses=" << rep.extension_witnesses;
    }
    std::cout << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"functional equation solver over finite semigroups"};
  app.require_subcommand(1);
  app.fallthrough();  // accept the global flags after the subcommand too

  std::uint64_t budget = 10'000'000;
  bool seeded = false;
  bool extension = false;
  bool quiet = false;
  app.add_option("--budget", budget, "search node limit (0 = unlimited)");
  app.add_flag("--seeded", seeded, "propagate derived identities before search");
  app.add_flag("--extension", extension,
               "allow quadratic-extension membership witnesses");
  app.add_flag("--quiet", quiet, "suppress per-row output");

  std::string inst_path, rows_path, dir_path;
  auto* solve = app.add_subcommand("solve", "enumerate all solutions");
  solve->add_option("instance", inst_path, "instance file")->required();
  auto* verify = app.add_subcommand("verify", "check solution rows");
  verify->add_option("instance", inst_path, "instance file")->required();
  verify->add_option("solutions", rows_path, "solutions file")->required();
  auto* report = app.add_subcommand("report", "aggregate completeness report");
  report->add_option("directory", dir_path, "directory of instance files")
      ->required();

  CLI11_PARSE(app, argc, argv);

  if (solve->parsed()) {
    return cmd_solve(inst_path, budget, seeded, quiet);
  }
  if (verify->parsed()) {
    return cmd_verify(inst_path, rows_path, extension, quiet);
  }
  return cmd_report(dir_path, budget, seeded, extension);
}

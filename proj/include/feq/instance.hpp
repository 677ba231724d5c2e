#ifndef FEQ_INSTANCE_HPP_
#define FEQ_INSTANCE_HPP_

#include <compare>
#include <istream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "carrier.hpp"
#include "semigroup.hpp"

namespace feq {

// A total function f : S x S -> Carrier as a flat table, index x * |S| + z.
struct TableFun2 {
  int domain_size = 0;
  std::vector<int> values;

  int at(int x, int z) const {
    return values[static_cast<size_t>(x) * domain_size + z];
  }
  int& at(int x, int z) {
    return values[static_cast<size_t>(x) * domain_size + z];
  }
  auto operator<=>(const TableFun2&) const = default;
};

inline TableFun2 constant_fun(int n, int value) {
  return TableFun2{n, std::vector<int>(static_cast<size_t>(n) * n, value)};
}

enum class EquationKind { Dalembert, Jensen, Quadratic };

inline const char* kind_name(EquationKind k) {
  switch (k) {
    case EquationKind::Dalembert:
      return "dalembert";
    case EquationKind::Jensen:
      return "jensen";
    default:
      return "quadratic";
  }
}

class InstanceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// One equation over one structure: the semigroup, the involution pair, the
// coefficient carrier and which of the three equations is meant.  The pair
// semigroup S^2 and the componentwise involution are cached because every
// downstream search works on pair indices.
struct EquationInstance {
  FiniteSemigroup S;
  Involution sigma;
  Involution tau;
  Carrier carrier;
  EquationKind kind = EquationKind::Dalembert;

  FiniteSemigroup pairS;       // S x S under the componentwise operation
  std::vector<int> pair_inv;   // (x, z) -> (sigma(x), tau(z)) on pair indices

  int cell(int x, int z) const {
    return x * S.size + z;
  }
};

inline EquationInstance make_instance(FiniteSemigroup S, Involution sigma,
                                      Involution tau, Carrier carrier,
                                      EquationKind kind) {
  if (!is_involution(S, sigma.map)) {
    throw InstanceError("sigma is not an involutive endomorphism");
  }
  if (!is_involution(S, tau.map)) {
    throw InstanceError("tau is not an involutive endomorphism");
  }
  if (kind == EquationKind::Dalembert && !carrier.is_field()) {
    throw InstanceError("the d'Alembert type equation needs a field carrier");
  }
  EquationInstance inst;
  inst.S = std::move(S);
  inst.sigma = std::move(sigma);
  inst.tau = std::move(tau);
  inst.carrier = std::move(carrier);
  inst.kind = kind;
  inst.pairS = pair_semigroup(inst.S);
  inst.pair_inv = square_pair_involution(inst.S, inst.sigma, inst.tau);
  return inst;
}

class ParseError : public std::runtime_error {
 public:
  int line;
  ParseError(int line_, const std::string& what)
      : std::runtime_error("line " + std::to_string(line_) + ": " + what),
        line(line_) {}
};

// Instance text format, one directive per line, '#' starts a comment:
//
//   semigroup <n>     followed by n lines of n space-separated indices
//   cyclic <n>
//   sigma identity | sigma negation | sigma <n indices>
//   tau   <same forms>
//   carrier gf <q> | carrier zmod <n>
//   equation dalembert | jensen | quadratic
inline EquationInstance parse_instance(std::istream& in) {
  FiniteSemigroup S;
  bool have_s = false, have_sigma = false, have_tau = false;
  bool have_carrier = false, have_kind = false;
  Involution sigma, tau;
  Carrier carrier;
  EquationKind kind = EquationKind::Dalembert;

  std::string raw;
  int lineno = 0;
  auto next_tokens = [&](std::vector<std::string>& tok) {
    while (std::getline(in, raw)) {
      ++lineno;
      auto hash = raw.find('#');
      if (hash != std::string::npos) {
        raw.erase(hash);
      }
      std::istringstream ls(raw);
      tok.clear();
      std::string t;
      while (ls >> t) {
        tok.push_back(t);
      }
      if (!tok.empty()) {
        return true;
      }
    }
    return false;
  };
  auto to_int = [&](const std::string& t) {
    try {
      size_t pos = 0;
      int v = std::stoi(t, &pos);
      if (pos != t.size()) {
        throw std::invalid_argument(t);
      }
      return v;
    } catch (const std::exception&) {
      throw ParseError(lineno, "expected an integer, got '" + t + "'");
    }
  };
  auto parse_map = [&](const std::vector<std::string>& tok) {
    if (!have_s) {
      throw ParseError(lineno, "involution given before the semigroup");
    }
    Involution iv;
    if (tok.size() == 2 && tok[1] == "identity") {
      iv = identity_involution(S);
    } else if (tok.size() == 2 && tok[1] == "negation") {
      if (!S.is_group) {
        throw ParseError(lineno, "negation needs a group semigroup");
      }
      iv = negation_involution(S);
    } else {
      if (static_cast<int>(tok.size()) != S.size + 1) {
        throw ParseError(lineno, "involution needs " + std::to_string(S.size)
                                     + " indices");
      }
      for (size_t i = 1; i < tok.size(); ++i) {
        iv.map.push_back(to_int(tok[i]));
      }
      if (!is_involution(S, iv.map)) {
        throw ParseError(lineno, "map is not an involutive endomorphism");
      }
    }
    return iv;
  };

  std::vector<std::string> tok;
  while (next_tokens(tok)) {
    const std::string& head = tok[0];
    if (head == "semigroup") {
      if (tok.size() != 2) {
        throw ParseError(lineno, "usage: semigroup <n>");
      }
      int n = to_int(tok[1]);
      if (n < 1) {
        throw ParseError(lineno, "semigroup size must be positive");
      }
      std::vector<int> table;
      table.reserve(static_cast<size_t>(n) * n);
      for (int r = 0; r < n; ++r) {
        std::vector<std::string> row;
        if (!next_tokens(row)) {
          throw ParseError(lineno, "missing Cayley table row");
        }
        if (static_cast<int>(row.size()) != n) {
          throw ParseError(lineno, "Cayley table row needs " + std::to_string(n)
                                       + " entries");
        }
        for (const auto& t : row) {
          int v = to_int(t);
          if (v < 0 || v >= n) {
            throw ParseError(lineno, "table entry out of range");
          }
          table.push_back(v);
        }
      }
      try {
        S = build_semigroup(n, std::move(table));
      } catch (const SemigroupError& e) {
        throw ParseError(lineno, e.what());
      }
      have_s = true;
    } else if (head == "cyclic") {
      if (tok.size() != 2) {
        throw ParseError(lineno, "usage: cyclic <n>");
      }
      int n = to_int(tok[1]);
      if (n < 1) {
        throw ParseError(lineno, "cyclic order must be positive");
      }
      S = cyclic(n);
      have_s = true;
    } else if (head == "sigma") {
      sigma = parse_map(tok);
      have_sigma = true;
    } else if (head == "tau") {
      tau = parse_map(tok);
      have_tau = true;
    } else if (head == "carrier") {
      if (tok.size() != 3) {
        throw ParseError(lineno, "usage: carrier gf <q> | carrier zmod <n>");
      }
      int v = to_int(tok[2]);
      try {
        if (tok[1] == "gf") {
          carrier = make_gf(v);
        } else if (tok[1] == "zmod") {
          carrier = make_zmod(v);
        } else {
          throw ParseError(lineno, "unknown carrier kind '" + tok[1] + "'");
        }
      } catch (const CarrierError& e) {
        throw ParseError(lineno, e.what());
      }
      have_carrier = true;
    } else if (head == "equation") {
      if (tok.size() != 2) {
        throw ParseError(lineno, "usage: equation <kind>");
      }
      if (tok[1] == "dalembert") {
        kind = EquationKind::Dalembert;
      } else if (tok[1] == "jensen") {
        kind = EquationKind::Jensen;
      } else if (tok[1] == "quadratic") {
        kind = EquationKind::Quadratic;
      } else {
        throw ParseError(lineno, "unknown equation '" + tok[1] + "'");
      }
      have_kind = true;
    } else {
      throw ParseError(lineno, "unknown directive '" + head + "'");
    }
  }
  if (!have_s) {
    throw ParseError(lineno, "missing semigroup");
  }
  if (!have_carrier) {
    throw ParseError(lineno, "missing carrier");
  }
  if (!have_kind) {
    throw ParseError(lineno, "missing equation");
  }
  if (!have_sigma) {
    sigma = identity_involution(S);
  }
  if (!have_tau) {
    tau = identity_involution(S);
  }
  try {
    return make_instance(std::move(S), std::move(sigma), std::move(tau),
                         std::move(carrier), kind);
  } catch (const InstanceError& e) {
    throw ParseError(lineno, e.what());
  }
}

}  // namespace feq

#endif  // FEQ_INSTANCE_HPP_

#include <doctest.h>

#include <algorithm>

#include <feq/morphisms.hpp>

#include "oracles.hpp"

using namespace feq;

namespace {

std::vector<std::vector<int>> tables_of(const std::vector<MultiplicativeFun>& fs) {
  std::vector<std::vector<int>> out;
  for (const auto& f : fs) {
    out.push_back(f.underlying.values);
  }
  return out;
}

std::vector<std::vector<int>> tables_of(const std::vector<AdditiveFun>& fs) {
  std::vector<std::vector<int>> out;
  for (const auto& f : fs) {
    out.push_back(f.underlying.values);
  }
  return out;
}

}  // namespace

TEST_CASE("multiplicative functions on Z_2^2 over F_3") {
  auto S = cyclic(2);
  auto K = make_gf(3);
  auto chis = enumerate_multiplicative(S, K);
  // the zero function plus the four homomorphisms (Z_2)^2 -> {1, 2}
  CHECK(chis.size() == 5);

  auto P = pair_semigroup(S);
  std::vector<int> zero(4, 0), one(4, 1);
  bool has_zero = false, has_one = false;
  for (const auto& chi : chis) {
    CHECK(satisfies_multiplicative_law(P, K, chi.underlying.values));
    has_zero = has_zero || chi.underlying.values == zero;
    has_one = has_one || chi.underlying.values == one;
  }
  CHECK(has_zero);
  CHECK(has_one);

  auto expect = oracles::scan_tables(4, 3, [&](const std::vector<int>& t) {
    return satisfies_multiplicative_law(P, K, t);
  });
  CHECK(tables_of(chis) == expect);
}

TEST_CASE("multiplicative enumeration matches the naive scan on Z_3^2") {
  auto S = cyclic(3);
  auto P = pair_semigroup(S);
  for (int q : {3, 5}) {
    auto K = make_gf(q);
    auto got = tables_of(enumerate_multiplicative(S, K));
    auto expect = oracles::scan_tables(9, q, [&](const std::vector<int>& t) {
      return satisfies_multiplicative_law(P, K, t);
    });
    CHECK(got == expect);
  }
}

TEST_CASE("additive functions on Z_3^2 over Z_3") {
  auto S = cyclic(3);
  auto G = make_zmod(3);
  auto P = pair_semigroup(S);

  auto as = enumerate_additive(S, G);
  CHECK(as.size() == 9);  // a(x, z) = px + qz
  for (const auto& a : as) {
    CHECK(satisfies_additive_law(P, G, a.underlying.values));
  }
  auto expect = oracles::scan_tables(9, 3, [&](const std::vector<int>& t) {
    return satisfies_additive_law(P, G, t);
  });
  CHECK(tables_of(as) == expect);

  auto id = identity_involution(S);
  auto antisym = enumerate_additive(S, G, AdditiveFilter::Antisym, &id, &id);
  REQUIRE(antisym.size() == 1);  // 2a = 0 forces a = 0 in odd order
  CHECK(antisym[0].underlying.values == std::vector<int>(9, 0));

  auto neg = negation_involution(S);
  auto all_anti = enumerate_additive(S, G, AdditiveFilter::Antisym, &neg, &neg);
  CHECK(all_anti.size() == 9);  // every additive map is odd under negation
}

TEST_CASE("filtered additive enumeration equals naive post-filtering") {
  auto S = cyclic(3);
  auto G = make_zmod(3);
  auto neg = negation_involution(S);
  auto id = identity_involution(S);
  auto pinv = square_pair_involution(S, neg, id);

  auto filtered =
      tables_of(enumerate_additive(S, G, AdditiveFilter::Antisym, &neg, &id));
  std::vector<std::vector<int>> expect;
  for (const auto& a : enumerate_additive(S, G)) {
    bool anti = true;
    for (int u = 0; u < 9; ++u) {
      if (a.underlying.values[pinv[u]] != G.neg(a.underlying.values[u])) {
        anti = false;
        break;
      }
    }
    if (anti) {
      expect.push_back(a.underlying.values);
    }
  }
  CHECK(filtered == expect);

  auto sym_filtered =
      tables_of(enumerate_additive(S, G, AdditiveFilter::Sym, &neg, &id));
  expect.clear();
  for (const auto& a : enumerate_additive(S, G)) {
    bool sym = true;
    for (int u = 0; u < 9; ++u) {
      if (a.underlying.values[pinv[u]] != a.underlying.values[u]) {
        sym = false;
        break;
      }
    }
    if (sym) {
      expect.push_back(a.underlying.values);
    }
  }
  CHECK(sym_filtered == expect);
}

TEST_CASE("symmetric biadditive forms on Z_3") {
  auto S = cyclic(3);
  auto H = make_zmod(3);
  auto P = pair_semigroup(S);

  auto forms = enumerate_biadditive(S, H, true);
  CHECK(forms.size() == 27);  // three free parameters on a rank-2 module
  for (const auto& B : forms) {
    CHECK(satisfies_biadditive_law(P, H, B.values));
    for (int u = 0; u < 9; ++u) {
      for (int v = 0; v < 9; ++v) {
        CHECK(B.at(u, v) == B.at(v, u));
      }
    }
  }

  // under sigma = tau = negation every biadditive form has the sign property
  auto neg = negation_involution(S);
  auto signed_forms = enumerate_biadditive(S, H, true, &neg, &neg);
  CHECK(signed_forms.size() == 27);
}

TEST_CASE("sign filter equals naive post-filtering of the unsigned set") {
  auto S = cyclic(3);
  auto H = make_zmod(3);
  auto neg = negation_involution(S);
  auto id = identity_involution(S);
  auto pinv = square_pair_involution(S, neg, id);

  auto filtered = enumerate_biadditive(S, H, true, &neg, &id);
  std::vector<std::vector<int>> expect;
  for (const auto& B : enumerate_biadditive(S, H, true)) {
    bool ok = true;
    for (int u = 0; u < 9 && ok; ++u) {
      for (int v = 0; v < 9; ++v) {
        if (B.at(pinv[u], v) != H.neg(B.at(u, v))) {
          ok = false;
          break;
        }
      }
    }
    if (ok) {
      expect.push_back(B.values);
    }
  }
  REQUIRE(filtered.size() == expect.size());
  for (size_t i = 0; i < filtered.size(); ++i) {
    CHECK(filtered[i].values == expect[i]);
  }
}

TEST_CASE("biadditive enumeration matches the naive scan on Z_2") {
  auto S = cyclic(2);
  auto H = make_zmod(3);
  auto P = pair_semigroup(S);
  auto got = enumerate_biadditive(S, H, false);
  auto expect = oracles::scan_tables(16, 3, [&](const std::vector<int>& t) {
    return satisfies_biadditive_law(P, H, t);
  });
  REQUIRE(got.size() == expect.size());
  for (size_t i = 0; i < got.size(); ++i) {
    CHECK(got[i].values == expect[i]);
  }
}

TEST_CASE("diagonal of a multiplicative function is multiplicative on S") {
  auto S = cyclic(3);
  auto K = make_gf(5);
  for (const auto& chi : enumerate_multiplicative(S, K)) {
    auto m = diagonal_of(chi.underlying);
    for (int x = 0; x < 3; ++x) {
      for (int y = 0; y < 3; ++y) {
        CHECK(m[S.at(x, y)] == K.mul(m[x], m[y]));
      }
    }
  }
}

TEST_CASE("enumeration works over a semigroup without identity") {
  auto S = truncated_addition(3);
  auto K = make_gf(3);
  auto P = pair_semigroup(S);
  auto chis = enumerate_multiplicative(S, K);
  CHECK(!chis.empty());
  for (const auto& chi : chis) {
    CHECK(satisfies_multiplicative_law(P, K, chi.underlying.values));
  }
  auto expect = oracles::scan_tables(9, 3, [&](const std::vector<int>& t) {
    return satisfies_multiplicative_law(P, K, t);
  });
  CHECK(tables_of(chis) == expect);
}

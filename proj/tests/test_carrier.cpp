#include <doctest.h>

#include <feq/carrier.hpp>

using namespace feq;

namespace {

void check_group_laws(const Carrier& c) {
  const int q = c.order;
  for (int a = 0; a < q; ++a) {
    CHECK(c.add(a, c.zero) == a);
    CHECK(c.add(a, c.neg(a)) == c.zero);
    CHECK(c.halve(c.add(a, a)) == a);
    for (int b = 0; b < q; ++b) {
      CHECK(c.add(a, b) == c.add(b, a));
      // 2-cancellativity
      if (a != b) {
        CHECK(c.twice(a) != c.twice(b));
      }
    }
  }
}

void check_field_laws(const Carrier& c) {
  check_group_laws(c);
  const int q = c.order;
  for (int a = 0; a < q; ++a) {
    CHECK(c.mul(a, c.one) == a);
    CHECK(c.mul(a, c.zero) == c.zero);
    if (a != c.zero) {
      CHECK(c.mul(a, c.inv(a)) == c.one);
    }
    for (int b = 0; b < q; ++b) {
      CHECK(c.mul(a, b) == c.mul(b, a));
      for (int d = 0; d < q; ++d) {
        CHECK(c.mul(c.mul(a, b), d) == c.mul(a, c.mul(b, d)));
        CHECK(c.mul(a, c.add(b, d)) == c.add(c.mul(a, b), c.mul(a, d)));
      }
    }
  }
}

}  // namespace

TEST_CASE("even orders and characteristics are rejected") {
  CHECK_THROWS_AS(make_zmod(4), EvenOrder);
  CHECK_THROWS_AS(make_zmod(2), EvenOrder);
  CHECK_THROWS_AS(make_gf(2), EvenCharacteristic);
  CHECK_THROWS_AS(make_gf(4), EvenCharacteristic);
  CHECK_THROWS_AS(make_gf(8), EvenCharacteristic);
  CHECK_THROWS_AS(make_gf(6), CarrierError);  // not a prime power
}

TEST_CASE("zmod 5 halving") {
  auto c = make_zmod(5);
  CHECK(c.halve(1) == 3);  // 3 + 3 = 6 = 1 (mod 5)
  check_group_laws(c);
}

TEST_CASE("trivial and small zmod carriers") {
  check_group_laws(make_zmod(1));
  check_group_laws(make_zmod(3));
  check_group_laws(make_zmod(9));
}

TEST_CASE("prime fields") {
  for (int p : {3, 5, 7}) {
    auto c = make_gf(p);
    CHECK(c.order == p);
    CHECK(c.characteristic == p);
    check_field_laws(c);
  }
}

TEST_CASE("GF(9) satisfies the field axioms") {
  auto c = make_gf(9);
  CHECK(c.order == 9);
  CHECK(c.characteristic == 3);
  check_field_laws(c);
  // 2 is invertible
  int two = c.add(c.one, c.one);
  CHECK(c.mul(two, c.inv(two)) == c.one);
}

TEST_CASE("GF(27) satisfies the field axioms") {
  auto c = make_gf(27);
  CHECK(c.characteristic == 3);
  check_field_laws(c);
}

TEST_CASE("quadratic extension embeds the base field identically") {
  for (int q : {3, 5, 9}) {
    auto base = make_gf(q);
    auto ext = quadratic_extension(base);
    CHECK(ext.order == q * q);
    check_field_laws(ext);
    for (int a = 0; a < q; ++a) {
      for (int b = 0; b < q; ++b) {
        CHECK(ext.add(a, b) == base.add(a, b));
        CHECK(ext.mul(a, b) == base.mul(a, b));
      }
    }
  }
}

TEST_CASE("every base element has a square root in the quadratic extension") {
  for (int q : {3, 5, 7, 9}) {
    auto ext = quadratic_extension(make_gf(q));
    for (int a = 0; a < q; ++a) {
      CHECK(sqrt_in(ext, a).has_value());
    }
  }
}

#include <doctest.h>

#include <sstream>

#include <feq/instance.hpp>

using namespace feq;

namespace {

EquationInstance parse(const std::string& text) {
  std::istringstream in(text);
  return parse_instance(in);
}

}  // namespace

TEST_CASE("cyclic instance with named involutions") {
  auto inst = parse(
      "# comment line\n"
      "cyclic 3\n"
      "sigma negation\n"
      "tau identity\n"
      "carrier gf 5\n"
      "equation dalembert\n");
  CHECK(inst.S.size == 3);
  CHECK(inst.sigma.map == std::vector<int>{0, 2, 1});
  CHECK(inst.tau.map == std::vector<int>{0, 1, 2});
  CHECK(inst.carrier.order == 5);
  CHECK(inst.carrier.is_field());
  CHECK(inst.kind == EquationKind::Dalembert);
}

TEST_CASE("explicit Cayley table and involution map") {
  auto inst = parse(
      "semigroup 3\n"
      "1 2 2   # truncated addition on {1,2,3}\n"
      "2 2 2\n"
      "2 2 2\n"
      "sigma 0 1 2\n"
      "tau 0 1 2\n"
      "carrier zmod 3\n"
      "equation jensen\n");
  CHECK(inst.S.size == 3);
  CHECK(!inst.S.is_group);
  CHECK(inst.kind == EquationKind::Jensen);
}

TEST_CASE("involutions default to the identity") {
  auto inst = parse("cyclic 2\ncarrier gf 3\nequation dalembert\n");
  CHECK(inst.sigma.map == std::vector<int>{0, 1});
  CHECK(inst.tau.map == std::vector<int>{0, 1});
}

TEST_CASE("even carrier orders are parse errors with a line number") {
  try {
    parse("cyclic 3\nsigma identity\ntau identity\ncarrier zmod 4\nequation jensen\n");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line == 4);
    CHECK(std::string(e.what()).find("odd order") != std::string::npos);
  }
  CHECK_THROWS_AS(parse("cyclic 2\ncarrier gf 4\nequation dalembert\n"),
                  ParseError);
}

TEST_CASE("malformed input is rejected") {
  CHECK_THROWS_AS(parse("cyclic 3\ncarrier gf 5\n"), ParseError);  // no equation
  CHECK_THROWS_AS(parse("carrier gf 5\nequation dalembert\n"), ParseError);
  CHECK_THROWS_AS(parse("cyclic 3\nfrobnicate 1\n"), ParseError);
  CHECK_THROWS_AS(parse("cyclic 3\nsigma 0 1\ncarrier gf 3\nequation dalembert\n"),
                  ParseError);
  // x -> x+1 is a permutation but not an endomorphism
  CHECK_THROWS_AS(parse("cyclic 3\nsigma 1 2 0\ncarrier gf 3\nequation dalembert\n"),
                  ParseError);
  // negation needs a group
  CHECK_THROWS_AS(parse("semigroup 2\n1 1\n1 1\nsigma negation\ncarrier gf 3\n"
                        "equation dalembert\n"),
                  ParseError);
  // non-commutative table
  CHECK_THROWS_AS(parse("semigroup 2\n0 0\n1 1\ncarrier gf 3\nequation dalembert\n"),
                  ParseError);
  // d'Alembert needs a field carrier
  CHECK_THROWS_AS(parse("cyclic 3\ncarrier zmod 9\nequation dalembert\n"),
                  ParseError);
}

#include <doctest.h>

#include <random>

#include "monhecke/errors.hpp"
#include "monhecke/laurent.hpp"

using namespace monhecke;

namespace {

LaurentPoly random_poly(std::mt19937_64& rng) {
  LaurentPoly p;
  int nterms = static_cast<int>(rng() % 5);
  for (int i = 0; i < nterms; ++i) {
    int exp = static_cast<int>(rng() % 17) - 8;
    long coeff = static_cast<long>(rng() % 19) - 9;
    p += LaurentPoly::monomial(coeff, exp);
  }
  return p;
}

}  // namespace

TEST_CASE("laurent arithmetic examples") {
  LaurentPoly v = LaurentPoly::v_pow(1);
  CHECK(v + LaurentPoly(1) + LaurentPoly(-1) == v);
  CHECK(LaurentPoly() + v == v);
  CHECK(LaurentPoly::v_pow(2) - LaurentPoly(1) + LaurentPoly(1) == LaurentPoly::v_pow(2));

  CHECK(v * LaurentPoly::v_pow(-1) == LaurentPoly(1));
  LaurentPoly s = v + LaurentPoly::v_pow(-1);
  LaurentPoly expect = LaurentPoly::v_pow(2) + LaurentPoly(2) + LaurentPoly::v_pow(-2);
  CHECK(s * s == expect);
  std::mt19937_64 rng(1);
  CHECK(random_poly(rng) * LaurentPoly() == LaurentPoly());
}

TEST_CASE("laurent bar involution") {
  CHECK(LaurentPoly::v_pow(2).bar() == LaurentPoly::v_pow(-2));
  LaurentPoly p = LaurentPoly(1) + LaurentPoly::v_pow(1);
  CHECK(p.bar() == LaurentPoly(1) + LaurentPoly::v_pow(-1));
  std::mt19937_64 rng(42);
  for (int i = 0; i < 1000; ++i) {
    LaurentPoly q = random_poly(rng);
    CHECK(q.bar().bar() == q);
  }
}

TEST_CASE("laurent ring identities on random triples") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 300; ++i) {
    LaurentPoly a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a * b) * c == a * (b * c));
    CHECK((a * b).bar() == a.bar() * b.bar());
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
  }
}

TEST_CASE("laurent canonical form stores no zeros") {
  LaurentPoly p = LaurentPoly::monomial(3, 2) + LaurentPoly::monomial(-3, 2);
  CHECK(p.is_zero());
  CHECK(p.terms().empty());
}

TEST_CASE("laurent text round trip") {
  std::mt19937_64 rng(99);
  for (int i = 0; i < 200; ++i) {
    LaurentPoly p = random_poly(rng);
    CHECK(LaurentPoly::parse(p.str()) == p);
  }
  CHECK(LaurentPoly::parse("v^-2 + 2 + v^2") ==
        LaurentPoly::v_pow(-2) + LaurentPoly(2) + LaurentPoly::v_pow(2));
  CHECK(LaurentPoly::parse("-3*v + 1") == LaurentPoly::monomial(-3, 1) + LaurentPoly(1));
  CHECK(LaurentPoly::parse("0") == LaurentPoly());
  CHECK_THROWS_AS(LaurentPoly::parse("v^"), MhError);
  CHECK_THROWS_AS(LaurentPoly::parse("2 2"), MhError);
}

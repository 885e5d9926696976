#include <doctest.h>

#include "monhecke/zlin.hpp"

using namespace monhecke;

TEST_CASE("zrank and independent columns") {
  CHECK(zrank({{2, -2}, {-2, 2}}) == 1);
  CHECK(zrank({{2, -1}, {-1, 2}}) == 2);
  CHECK(zrank({}) == 0);
  auto idx = independent_columns({{2, -2}, {-2, 2}, {0, 1}});
  CHECK(idx == std::vector<int>{0, 2});
}

TEST_CASE("integer kernel basics") {
  // x + 2y = 0 over Z^2: kernel generated by (2, -1) up to sign.
  auto k = zkernel({{Int(1), Int(2)}}, 2);
  REQUIRE(k.size() == 1);
  CHECK(k[0][0] * 1 + k[0][1] * 2 == 0);
  CHECK((abs(k[0][0]) == 2 && abs(k[0][1]) == 1));

  // invertible matrix: trivial kernel
  CHECK(zkernel({{Int(2), Int(1)}, {Int(1), Int(1)}}, 2).empty());

  // zero matrix: full kernel
  CHECK(zkernel({{Int(0), Int(0)}}, 2).size() == 2);
}

TEST_CASE("matrix product and apply") {
  ZMat a(2, 2);
  a.at(0, 0) = 1;
  a.at(0, 1) = 2;
  a.at(1, 0) = 3;
  a.at(1, 1) = 4;
  ZVec v{1, 1};
  CHECK(a.apply(v) == ZVec{3, 7});
  ZMat i = ZMat::identity(2);
  CHECK(a.mul(i) == a);
  CHECK(i.mul(a) == a);
  CHECK(a.transpose().at(0, 1) == 3);
}

#include "doctest.h"
#include "tausilt/errors.hpp"
#include "tausilt/matrix.hpp"

using namespace tausilt;

namespace {

RatMatrix make(int rows, int cols, std::vector<long> vals) {
  RatMatrix m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m.at(i, j) = Rational(vals[i * cols + j]);
  return m;
}

IntMatrix make_int(int rows, int cols, std::vector<long> vals) {
  IntMatrix m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m.at(i, j) = Int(vals[i * cols + j]);
  return m;
}

}  // namespace

TEST_CASE("kernel of a rank-1 symmetric matrix") {
  auto ker = kernel_basis(make(2, 2, {1, 1, 1, 1}));
  REQUIRE(ker.size() == 1);
  CHECK(ker[0][0] == Rational(1));
  CHECK(ker[0][1] == Rational(-1));
}

TEST_CASE("kernel of the identity is empty") {
  CHECK(kernel_basis(RatMatrix::identity(3)).empty());
}

TEST_CASE("kernel of a zero 2x3 matrix is the standard basis") {
  auto ker = kernel_basis(RatMatrix(2, 3));
  REQUIRE(ker.size() == 3);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) CHECK(ker[i][j] == Rational(i == j ? 1 : 0));
}

TEST_CASE("kernel vectors are annihilated and counted by rank") {
  RatMatrix m = make(3, 4, {1, 2, 3, 4, 2, 4, 6, 8, 0, 1, 1, 0});
  auto ker = kernel_basis(m);
  CHECK(static_cast<int>(ker.size()) == 4 - rank(m));
  for (const auto& v : ker) {
    RatVec img = m.apply(v);
    for (const auto& x : img) CHECK(x == Rational(0));
  }
}

TEST_CASE("solve against the identity") {
  SolveResult s = solve(RatMatrix::identity(2), {Rational(2), Rational(3)});
  REQUIRE(s.solvable);
  CHECK(s.particular[0] == Rational(2));
  CHECK(s.particular[1] == Rational(3));
  CHECK(s.kernel.empty());
}

TEST_CASE("solve an underdetermined system") {
  SolveResult s = solve(make(1, 2, {1, 1}), {Rational(5)});
  REQUIRE(s.solvable);
  CHECK(s.particular[0] == Rational(5));
  CHECK(s.particular[1] == Rational(0));
  REQUIRE(s.kernel.size() == 1);
  CHECK(s.kernel[0][0] == Rational(1));
  CHECK(s.kernel[0][1] == Rational(-1));
}

TEST_CASE("solve detects inconsistency") {
  SolveResult s = solve(make(1, 1, {0}), {Rational(1)});
  CHECK(!s.solvable);
}

TEST_CASE("particular solutions reproduce b exactly") {
  RatMatrix m = make(3, 3, {2, 1, 0, 0, 3, 1, 2, 4, 1});
  RatVec b{Rational(1), Rational(-2), Rational(-1)};
  SolveResult s = solve(m, b);
  REQUIRE(s.solvable);
  RatVec img = m.apply(s.particular);
  for (int i = 0; i < 3; ++i) CHECK(img[i] == b[i]);
}

TEST_CASE("smith normal form of [[2,4],[6,8]]") {
  IntMatrix m = make_int(2, 2, {2, 4, 6, 8});
  SmithResult s = smith_normal_form(m);
  CHECK(s.D.at(0, 0) == 2);
  CHECK(s.D.at(1, 1) == 4);
  CHECK(s.D.at(0, 1) == 0);
  CHECK(s.D.at(1, 0) == 0);
  CHECK(s.U * m * s.V == s.D);
  CHECK(abs(det(s.U)) == 1);
  CHECK(abs(det(s.V)) == 1);
}

TEST_CASE("smith normal form fixes the identity and zero") {
  SmithResult id = smith_normal_form(IntMatrix::identity(3));
  CHECK(id.D == IntMatrix::identity(3));
  SmithResult z = smith_normal_form(IntMatrix(2, 2));
  CHECK(z.D.at(0, 0) == 0);
  CHECK(z.D.at(1, 1) == 0);
}

TEST_CASE("smith normal form has a divisibility chain") {
  IntMatrix m = make_int(3, 3, {2, 0, 0, 0, 3, 0, 0, 0, 5});
  SmithResult s = smith_normal_form(m);
  CHECK(s.U * m * s.V == s.D);
  Int prev = s.D.at(0, 0);
  for (int i = 1; i < 3; ++i) {
    const Int& cur = s.D.at(i, i);
    if (sgn(prev) != 0) CHECK(sgn(cur % prev) == 0);
    prev = cur;
  }
}

TEST_CASE("integer inverse of unimodular matrices") {
  CHECK(int_inverse(IntMatrix::identity(2)) == IntMatrix::identity(2));
  IntMatrix m = make_int(2, 2, {1, 1, 0, 1});
  IntMatrix inv = int_inverse(m);
  CHECK(inv == make_int(2, 2, {1, -1, 0, 1}));
  CHECK(m * inv == IntMatrix::identity(2));
}

TEST_CASE("int_inverse rejects non-unimodular input") {
  CHECK_THROWS_AS(int_inverse(make_int(2, 2, {2, 0, 0, 1})), NotUnimodular);
}

TEST_CASE("rational parsing") {
  CHECK(parse_rational("3/4") == Rational(3, 4));
  CHECK(parse_rational("-2") == Rational(-2));
  CHECK(parse_rational("6/4") == Rational(3, 2));
  CHECK_THROWS_AS(parse_rational("abc"), ParseError);
}

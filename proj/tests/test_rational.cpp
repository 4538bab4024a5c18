#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "qhb/rational.hpp"
#include "support/random_algebras.hpp"

using namespace qhb;

TEST_CASE("BigInt arithmetic round trips through strings") {
  BigInt a = BigInt::from_string("123456789012345678901234567890");
  BigInt b = BigInt::from_string("-987654321098765432109876543210");
  CHECK((a + b).to_string() == "-864197532086419753208641975320");
  CHECK((a * b).to_string() ==
        "-121932631137021795226185032733622923332237463801111263526900");
  CHECK((b / a).to_string() == "-8");
  CHECK((b % a).to_string() == "-9000000000900000000090");
  CHECK(BigInt::gcd(a, b).to_string() == "9000000000900000000090");
}

TEST_CASE("BigInt division agrees with multiplication") {
  testing::Rng rng(42);
  for (int trial = 0; trial < 200; ++trial) {
    long long x = static_cast<long long>(rng.next() % 2000000000ull) - 1000000000;
    long long y = static_cast<long long>(rng.next() % 100000ull) - 50000;
    if (y == 0) continue;
    BigInt bx(x), by(y);
    BigInt q = bx / by;
    BigInt r = bx % by;
    CHECK(q * by + r == bx);
    CHECK(q == BigInt(x / y));
    CHECK(r == BigInt(x % y));
  }
}

TEST_CASE("rationals reduce and print as num/den") {
  Rational half(BigInt(2), BigInt(4));
  CHECK(half.to_string() == "1/2");
  CHECK((half + half).to_string() == "1");
  CHECK((half - Rational(2)).to_string() == "-3/2");
  CHECK((Rational(3) / Rational(-6)).to_string() == "-1/2");
  CHECK(Rational::from_string("-10/4").to_string() == "-5/2");
  CHECK(Rational::from_string("7") == Rational(7));
}

TEST_CASE("rank by fraction-free elimination") {
  RationalMatrix m(3, 3);
  // rows: (1,2,3), (2,4,6), (0,1,1) -> rank 2
  int vals[3][3] = {{1, 2, 3}, {2, 4, 6}, {0, 1, 1}};
  for (int r = 0; r < 3; ++r) {
    for (int c = 0; c < 3; ++c) m.at(r, c) = Rational(vals[r][c]);
  }
  CHECK(m.rank() == 2);

  RationalMatrix id(4, 4);
  for (int k = 0; k < 4; ++k) id.at(k, k) = Rational(1);
  CHECK(id.rank() == 4);
  CHECK(RationalMatrix(0, 5).rank() == 0);
}

TEST_CASE("rank agrees with the RREF route on random 0/1 matrices") {
  testing::Rng rng(7);
  for (int trial = 0; trial < 60; ++trial) {
    int rows = 1 + rng.below(8);
    int cols = 1 + rng.below(8);
    RationalMatrix m(rows, cols);
    for (int r = 0; r < rows; ++r) {
      for (int c = 0; c < cols; ++c) m.at(r, c) = Rational(rng.below(2));
    }
    RationalMatrix copy = m;
    CHECK(m.rank() == copy.reduce_to_rref());
  }
}

TEST_CASE("row spans: membership, growth, equality") {
  RowSpan span(3);
  CHECK(span.dimension() == 0);
  CHECK(span.add({Rational(1), Rational(0), Rational(1)}));
  CHECK(span.add({Rational(0), Rational(1), Rational(1)}));
  CHECK(!span.add({Rational(1), Rational(1), Rational(2)}));  // dependent
  CHECK(span.dimension() == 2);
  CHECK(span.contains({Rational(2), Rational(-1), Rational(1)}));
  CHECK(!span.contains({Rational(0), Rational(0), Rational(1)}));

  RowSpan other(3);
  other.add({Rational(1), Rational(1), Rational(2)});
  other.add({Rational(1), Rational(-1), Rational(0)});
  CHECK(span == other);
}

TEST_CASE("rational pivots survive exactly") {
  // a matrix whose float elimination would drift: Hilbert-like 5x5
  RationalMatrix m(5, 5);
  for (int r = 0; r < 5; ++r) {
    for (int c = 0; c < 5; ++c) m.at(r, c) = Rational(BigInt(1), BigInt(r + c + 1));
  }
  CHECK(m.rank() == 5);
}

#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "qhb/errors.hpp"

namespace qhb {

// Arbitrary-precision signed integer (sign + base-2^32 magnitude).  Only the
// operations needed for exact rational elimination are provided.
class BigInt {
 public:
  BigInt() = default;
  BigInt(long long v);
  static BigInt from_string(std::string_view digits);

  bool is_zero() const { return limbs_.empty(); }
  int sign() const { return limbs_.empty() ? 0 : (negative_ ? -1 : 1); }
  BigInt negated() const;
  BigInt abs() const;

  friend BigInt operator+(const BigInt& a, const BigInt& b);
  friend BigInt operator-(const BigInt& a, const BigInt& b);
  friend BigInt operator*(const BigInt& a, const BigInt& b);
  // Truncated division; throws on division by zero.
  friend BigInt operator/(const BigInt& a, const BigInt& b);
  friend BigInt operator%(const BigInt& a, const BigInt& b);

  friend bool operator==(const BigInt& a, const BigInt& b) {
    return a.negative_ == b.negative_ && a.limbs_ == b.limbs_;
  }
  friend std::strong_ordering operator<=>(const BigInt& a, const BigInt& b);

  std::string to_string() const;

  static BigInt gcd(BigInt a, BigInt b);

 private:
  bool negative_ = false;
  std::vector<uint32_t> limbs_;  // little-endian, no trailing zeros

  void trim();
  static int compare_magnitude(const BigInt& a, const BigInt& b);
  static BigInt add_magnitude(const BigInt& a, const BigInt& b);
  static BigInt sub_magnitude(const BigInt& a, const BigInt& b);  // |a| >= |b|
  static void divmod(const BigInt& a, const BigInt& b, BigInt& quot, BigInt& rem);
};

// Exact rational with reduced representation and positive denominator.
class Rational {
 public:
  Rational() : num_(0), den_(1) {}
  Rational(long long v) : num_(v), den_(1) {}
  Rational(BigInt num, BigInt den);
  // Parses "a" or "a/b".
  static Rational from_string(std::string_view text);

  const BigInt& num() const { return num_; }
  const BigInt& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);
  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  // "a" when the denominator is one, otherwise "a/b".
  std::string to_string() const;

 private:
  BigInt num_;
  BigInt den_;
  void reduce();
};

// Dense matrix of exact rationals; rank via fraction-free (Bareiss)
// elimination, reduced row echelon form via rational Gauss-Jordan.
class RationalMatrix {
 public:
  RationalMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Rational& at(int r, int c) { return data_[r * cols_ + c]; }
  const Rational& at(int r, int c) const { return data_[r * cols_ + c]; }

  int rank() const;
  // In-place reduced row echelon form; returns the rank.
  int reduce_to_rref();

  void append_row(const std::vector<Rational>& row);

 private:
  int rows_;
  int cols_;
  std::vector<Rational> data_;
};

// Row-span helper built on RREF: membership and span comparison.
class RowSpan {
 public:
  explicit RowSpan(int cols) : rref_(0, cols) {}
  explicit RowSpan(RationalMatrix m) : rref_(std::move(m)) { compact(); }

  int dimension() const { return rref_.rows(); }
  int cols() const { return rref_.cols(); }
  bool contains(const std::vector<Rational>& vec) const;
  // Adds a vector to the span; returns true when the dimension grew.
  bool add(const std::vector<Rational>& vec);
  bool operator==(const RowSpan& other) const;
  std::vector<std::vector<Rational>> basis() const;

 private:
  RationalMatrix rref_;
  void compact();
};

}  // namespace qhb

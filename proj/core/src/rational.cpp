#include "qhb/rational.hpp"

#include <algorithm>

namespace qhb {

// ---------------------------------------------------------------------------
// BigInt

BigInt::BigInt(long long v) {
  negative_ = v < 0;
  unsigned long long mag = negative_ ? -static_cast<unsigned long long>(v)
                                     : static_cast<unsigned long long>(v);
  while (mag) {
    limbs_.push_back(static_cast<uint32_t>(mag & 0xffffffffu));
    mag >>= 32;
  }
}

BigInt BigInt::from_string(std::string_view digits) {
  BigInt out;
  bool neg = false;
  std::size_t k = 0;
  if (k < digits.size() && (digits[k] == '-' || digits[k] == '+')) {
    neg = digits[k] == '-';
    ++k;
  }
  if (k == digits.size()) throw Error("BigInt: empty digit string");
  for (; k < digits.size(); ++k) {
    char c = digits[k];
    if (c < '0' || c > '9') throw Error("BigInt: invalid digit");
    out = out * BigInt(10) + BigInt(c - '0');
  }
  out.negative_ = neg && !out.limbs_.empty();
  return out;
}

void BigInt::trim() {
  while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
  if (limbs_.empty()) negative_ = false;
}

BigInt BigInt::negated() const {
  BigInt out = *this;
  if (!out.limbs_.empty()) out.negative_ = !out.negative_;
  return out;
}

BigInt BigInt::abs() const {
  BigInt out = *this;
  out.negative_ = false;
  return out;
}

int BigInt::compare_magnitude(const BigInt& a, const BigInt& b) {
  if (a.limbs_.size() != b.limbs_.size()) {
    return a.limbs_.size() < b.limbs_.size() ? -1 : 1;
  }
  for (std::size_t k = a.limbs_.size(); k-- > 0;) {
    if (a.limbs_[k] != b.limbs_[k]) return a.limbs_[k] < b.limbs_[k] ? -1 : 1;
  }
  return 0;
}

BigInt BigInt::add_magnitude(const BigInt& a, const BigInt& b) {
  BigInt out;
  out.limbs_.resize(std::max(a.limbs_.size(), b.limbs_.size()) + 1, 0);
  uint64_t carry = 0;
  for (std::size_t k = 0; k < out.limbs_.size(); ++k) {
    uint64_t sum = carry;
    if (k < a.limbs_.size()) sum += a.limbs_[k];
    if (k < b.limbs_.size()) sum += b.limbs_[k];
    out.limbs_[k] = static_cast<uint32_t>(sum & 0xffffffffu);
    carry = sum >> 32;
  }
  out.trim();
  return out;
}

BigInt BigInt::sub_magnitude(const BigInt& a, const BigInt& b) {
  BigInt out;
  out.limbs_.resize(a.limbs_.size(), 0);
  int64_t borrow = 0;
  for (std::size_t k = 0; k < a.limbs_.size(); ++k) {
    int64_t diff = static_cast<int64_t>(a.limbs_[k]) - borrow -
                   (k < b.limbs_.size() ? static_cast<int64_t>(b.limbs_[k]) : 0);
    if (diff < 0) {
      diff += (int64_t(1) << 32);
      borrow = 1;
    } else {
      borrow = 0;
    }
    out.limbs_[k] = static_cast<uint32_t>(diff);
  }
  out.trim();
  return out;
}

BigInt operator+(const BigInt& a, const BigInt& b) {
  if (a.negative_ == b.negative_) {
    BigInt out = BigInt::add_magnitude(a, b);
    out.negative_ = a.negative_ && !out.limbs_.empty();
    return out;
  }
  int cmp = BigInt::compare_magnitude(a, b);
  if (cmp == 0) return BigInt();
  BigInt out = cmp > 0 ? BigInt::sub_magnitude(a, b) : BigInt::sub_magnitude(b, a);
  out.negative_ = (cmp > 0 ? a.negative_ : b.negative_) && !out.limbs_.empty();
  return out;
}

BigInt operator-(const BigInt& a, const BigInt& b) { return a + b.negated(); }

BigInt operator*(const BigInt& a, const BigInt& b) {
  if (a.is_zero() || b.is_zero()) return BigInt();
  BigInt out;
  out.limbs_.assign(a.limbs_.size() + b.limbs_.size(), 0);
  for (std::size_t i = 0; i < a.limbs_.size(); ++i) {
    uint64_t carry = 0;
    for (std::size_t j = 0; j < b.limbs_.size(); ++j) {
      uint64_t cur = static_cast<uint64_t>(a.limbs_[i]) * b.limbs_[j] +
                     out.limbs_[i + j] + carry;
      out.limbs_[i + j] = static_cast<uint32_t>(cur & 0xffffffffu);
      carry = cur >> 32;
    }
    out.limbs_[i + b.limbs_.size()] += static_cast<uint32_t>(carry);
  }
  out.negative_ = a.negative_ != b.negative_;
  out.trim();
  return out;
}

void BigInt::divmod(const BigInt& a, const BigInt& b, BigInt& quot, BigInt& rem) {
  if (b.is_zero()) throw Error("BigInt: division by zero");
  quot = BigInt();
  rem = BigInt();
  if (compare_magnitude(a, b) < 0) {
    rem = a;
    rem.negative_ = a.negative_ && !rem.limbs_.empty();
    return;
  }
  // Schoolbook bit-by-bit long division on magnitudes.
  const BigInt bmag = b.abs();
  BigInt r;
  std::vector<uint32_t> qlimbs(a.limbs_.size(), 0);
  for (std::size_t bit = a.limbs_.size() * 32; bit-- > 0;) {
    // r = 2r + bit(a)
    uint32_t carry = (a.limbs_[bit / 32] >> (bit % 32)) & 1u;
    for (std::size_t k = 0; k < r.limbs_.size(); ++k) {
      uint32_t next = r.limbs_[k] >> 31;
      r.limbs_[k] = (r.limbs_[k] << 1) | carry;
      carry = next;
    }
    if (carry) r.limbs_.push_back(carry);
    if (compare_magnitude(r, bmag) >= 0) {
      r = sub_magnitude(r, bmag);
      qlimbs[bit / 32] |= (1u << (bit % 32));
    }
  }
  quot.limbs_ = std::move(qlimbs);
  quot.trim();
  rem = r;
  rem.trim();
  quot.negative_ = (a.negative_ != b.negative_) && !quot.limbs_.empty();
  rem.negative_ = a.negative_ && !rem.limbs_.empty();
}

BigInt operator/(const BigInt& a, const BigInt& b) {
  BigInt q, r;
  BigInt::divmod(a, b, q, r);
  return q;
}

BigInt operator%(const BigInt& a, const BigInt& b) {
  BigInt q, r;
  BigInt::divmod(a, b, q, r);
  return r;
}

std::strong_ordering operator<=>(const BigInt& a, const BigInt& b) {
  if (a.sign() != b.sign()) return a.sign() <=> b.sign();
  int cmp = BigInt::compare_magnitude(a, b);
  if (a.sign() < 0) cmp = -cmp;
  return cmp <=> 0;
}

std::string BigInt::to_string() const {
  if (is_zero()) return "0";
  BigInt cur = abs();
  std::string digits;
  const BigInt ten(10);
  while (!cur.is_zero()) {
    BigInt q, r;
    divmod(cur, ten, q, r);
    digits += static_cast<char>('0' + (r.limbs_.empty() ? 0 : r.limbs_[0]));
    cur = q;
  }
  if (negative_) digits += '-';
  std::reverse(digits.begin(), digits.end());
  return digits;
}

BigInt BigInt::gcd(BigInt a, BigInt b) {
  a.negative_ = false;
  b.negative_ = false;
  while (!b.is_zero()) {
    BigInt r = a % b;
    a = b;
    b = r;
  }
  return a;
}

// ---------------------------------------------------------------------------
// Rational

Rational::Rational(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw Error("Rational: zero denominator");
  reduce();
}

void Rational::reduce() {
  if (num_.is_zero()) {
    den_ = BigInt(1);
    return;
  }
  if (den_.sign() < 0) {
    num_ = num_.negated();
    den_ = den_.negated();
  }
  BigInt g = BigInt::gcd(num_, den_);
  num_ = num_ / g;
  den_ = den_ / g;
}

Rational Rational::from_string(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    return Rational(BigInt::from_string(text), BigInt(1));
  }
  return Rational(BigInt::from_string(text.substr(0, slash)),
                  BigInt::from_string(text.substr(slash + 1)));
}

Rational operator+(const Rational& a, const Rational& b) {
  return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

Rational operator-(const Rational& a, const Rational& b) {
  return Rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

Rational operator*(const Rational& a, const Rational& b) {
  return Rational(a.num_ * b.num_, a.den_ * b.den_);
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.is_zero()) throw Error("Rational: division by zero");
  return Rational(a.num_ * b.den_, a.den_ * b.num_);
}

std::string Rational::to_string() const {
  if (den_ == BigInt(1)) return num_.to_string();
  return num_.to_string() + "/" + den_.to_string();
}

// ---------------------------------------------------------------------------
// RationalMatrix

void RationalMatrix::append_row(const std::vector<Rational>& row) {
  if (static_cast<int>(row.size()) != cols_) throw Error("append_row: wrong width");
  data_.insert(data_.end(), row.begin(), row.end());
  ++rows_;
}

int RationalMatrix::rank() const {
  // Fraction-free Bareiss elimination on a common-denominator integer copy.
  if (rows_ == 0 || cols_ == 0) return 0;
  std::vector<std::vector<BigInt>> m(rows_, std::vector<BigInt>(cols_));
  for (int r = 0; r < rows_; ++r) {
    BigInt lcm(1);
    for (int c = 0; c < cols_; ++c) {
      const BigInt& den = at(r, c).den();
      lcm = lcm / BigInt::gcd(lcm, den) * den;
    }
    for (int c = 0; c < cols_; ++c) {
      m[r][c] = at(r, c).num() * (lcm / at(r, c).den());
    }
  }

  int rank = 0;
  BigInt prev_pivot(1);
  for (int col = 0; col < cols_ && rank < rows_; ++col) {
    int pivot = -1;
    for (int r = rank; r < rows_; ++r) {
      if (!m[r][col].is_zero()) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) continue;
    std::swap(m[rank], m[pivot]);
    for (int r = rank + 1; r < rows_; ++r) {
      for (int c = col + 1; c < cols_; ++c) {
        m[r][c] = (m[rank][col] * m[r][c] - m[r][col] * m[rank][c]) / prev_pivot;
      }
      m[r][col] = BigInt(0);
    }
    prev_pivot = m[rank][col];
    ++rank;
  }
  return rank;
}

int RationalMatrix::reduce_to_rref() {
  int lead = 0;
  for (int col = 0; col < cols_ && lead < rows_; ++col) {
    int pivot = -1;
    for (int r = lead; r < rows_; ++r) {
      if (!at(r, col).is_zero()) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) continue;
    for (int c = 0; c < cols_; ++c) std::swap(at(lead, c), at(pivot, c));
    Rational inv = Rational(1) / at(lead, col);
    for (int c = col; c < cols_; ++c) at(lead, c) = at(lead, c) * inv;
    for (int r = 0; r < rows_; ++r) {
      if (r == lead || at(r, col).is_zero()) continue;
      Rational factor = at(r, col);
      for (int c = col; c < cols_; ++c) {
        at(r, c) = at(r, c) - factor * at(lead, c);
      }
    }
    ++lead;
  }
  return lead;
}

// ---------------------------------------------------------------------------
// RowSpan

void RowSpan::compact() {
  rref_.reduce_to_rref();
  RationalMatrix kept(0, rref_.cols());
  for (int r = 0; r < rref_.rows(); ++r) {
    std::vector<Rational> row(rref_.cols());
    bool zero = true;
    for (int c = 0; c < rref_.cols(); ++c) {
      row[c] = rref_.at(r, c);
      if (!row[c].is_zero()) zero = false;
    }
    if (!zero) kept.append_row(row);
  }
  rref_ = std::move(kept);
}

bool RowSpan::contains(const std::vector<Rational>& vec) const {
  if (static_cast<int>(vec.size()) != rref_.cols()) throw Error("RowSpan: wrong width");
  std::vector<Rational> residue = vec;
  for (int r = 0; r < rref_.rows(); ++r) {
    int pivot = -1;
    for (int c = 0; c < rref_.cols(); ++c) {
      if (!rref_.at(r, c).is_zero()) {
        pivot = c;
        break;
      }
    }
    if (pivot < 0 || residue[pivot].is_zero()) continue;
    Rational factor = residue[pivot];
    for (int c = pivot; c < rref_.cols(); ++c) {
      residue[c] = residue[c] - factor * rref_.at(r, c);
    }
  }
  for (const Rational& x : residue) {
    if (!x.is_zero()) return false;
  }
  return true;
}

bool RowSpan::add(const std::vector<Rational>& vec) {
  if (contains(vec)) return false;
  rref_.append_row(vec);
  compact();
  return true;
}

bool RowSpan::operator==(const RowSpan& other) const {
  if (cols() != other.cols()) return false;
  if (dimension() != other.dimension()) return false;
  for (const auto& row : other.basis()) {
    if (!contains(row)) return false;
  }
  return true;
}

std::vector<std::vector<Rational>> RowSpan::basis() const {
  std::vector<std::vector<Rational>> out;
  for (int r = 0; r < rref_.rows(); ++r) {
    std::vector<Rational> row(rref_.cols());
    for (int c = 0; c < rref_.cols(); ++c) row[c] = rref_.at(r, c);
    out.push_back(std::move(row));
  }
  return out;
}

}  // namespace qhb

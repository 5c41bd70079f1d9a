#include "brauer/bigint.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <stdexcept>

namespace brauer {

namespace {
constexpr std::uint64_t kLimbBase = std::uint64_t{1} << 32;
}

BigInt::BigInt(std::int64_t value) {
  negative_ = value < 0;
  // Avoid overflow on INT64_MIN.
  std::uint64_t magnitude =
      negative_ ? ~static_cast<std::uint64_t>(value) + 1 : static_cast<std::uint64_t>(value);
  while (magnitude != 0) {
    limbs_.push_back(static_cast<std::uint32_t>(magnitude & 0xFFFFFFFFu));
    magnitude >>= 32;
  }
  if (limbs_.empty()) negative_ = false;
}

BigInt BigInt::from_decimal(std::string_view text) {
  BigInt result;
  bool negative = false;
  std::size_t start = 0;
  if (!text.empty() && (text[0] == '-' || text[0] == '+')) {
    negative = text[0] == '-';
    start = 1;
  }
  if (start == text.size()) throw std::invalid_argument("empty integer literal");
  for (std::size_t i = start; i < text.size(); ++i) {
    char c = text[i];
    if (c < '0' || c > '9') throw std::invalid_argument("invalid digit in integer literal");
    result *= BigInt(10);
    result += BigInt(c - '0');
  }
  if (negative && !result.is_zero()) result.negative_ = true;
  return result;
}

void BigInt::trim() {
  while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
  if (limbs_.empty()) negative_ = false;
}

int BigInt::compare_magnitude(const BigInt& rhs) const noexcept {
  if (limbs_.size() != rhs.limbs_.size())
    return limbs_.size() < rhs.limbs_.size() ? -1 : 1;
  for (std::size_t i = limbs_.size(); i-- > 0;) {
    if (limbs_[i] != rhs.limbs_[i]) return limbs_[i] < rhs.limbs_[i] ? -1 : 1;
  }
  return 0;
}

void BigInt::add_magnitude(const BigInt& rhs) {
  std::uint64_t carry = 0;
  std::size_t n = std::max(limbs_.size(), rhs.limbs_.size());
  limbs_.resize(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    std::uint64_t sum = carry + limbs_[i] + (i < rhs.limbs_.size() ? rhs.limbs_[i] : 0);
    limbs_[i] = static_cast<std::uint32_t>(sum & 0xFFFFFFFFu);
    carry = sum >> 32;
  }
  if (carry != 0) limbs_.push_back(static_cast<std::uint32_t>(carry));
}

void BigInt::subtract_magnitude(const BigInt& rhs) {
  std::int64_t borrow = 0;
  for (std::size_t i = 0; i < limbs_.size(); ++i) {
    std::int64_t diff = static_cast<std::int64_t>(limbs_[i]) - borrow -
                        (i < rhs.limbs_.size() ? static_cast<std::int64_t>(rhs.limbs_[i]) : 0);
    if (diff < 0) {
      diff += static_cast<std::int64_t>(kLimbBase);
      borrow = 1;
    } else {
      borrow = 0;
    }
    limbs_[i] = static_cast<std::uint32_t>(diff);
  }
  trim();
}

BigInt BigInt::operator-() const {
  BigInt result = *this;
  if (!result.is_zero()) result.negative_ = !result.negative_;
  return result;
}

BigInt BigInt::abs() const {
  BigInt result = *this;
  result.negative_ = false;
  return result;
}

BigInt& BigInt::operator+=(const BigInt& rhs) {
  if (negative_ == rhs.negative_) {
    add_magnitude(rhs);
  } else if (compare_magnitude(rhs) >= 0) {
    subtract_magnitude(rhs);
  } else {
    BigInt tmp = rhs;
    tmp.subtract_magnitude(*this);
    *this = std::move(tmp);
  }
  trim();
  return *this;
}

BigInt& BigInt::operator-=(const BigInt& rhs) { return *this += -rhs; }

BigInt& BigInt::operator*=(const BigInt& rhs) {
  if (is_zero() || rhs.is_zero()) {
    *this = BigInt();
    return *this;
  }
  std::vector<std::uint32_t> product(limbs_.size() + rhs.limbs_.size(), 0);
  for (std::size_t i = 0; i < limbs_.size(); ++i) {
    std::uint64_t carry = 0;
    for (std::size_t j = 0; j < rhs.limbs_.size(); ++j) {
      std::uint64_t cur = product[i + j] +
                          static_cast<std::uint64_t>(limbs_[i]) * rhs.limbs_[j] + carry;
      product[i + j] = static_cast<std::uint32_t>(cur & 0xFFFFFFFFu);
      carry = cur >> 32;
    }
    std::size_t k = i + rhs.limbs_.size();
    while (carry != 0) {
      std::uint64_t cur = product[k] + carry;
      product[k] = static_cast<std::uint32_t>(cur & 0xFFFFFFFFu);
      carry = cur >> 32;
      ++k;
    }
  }
  negative_ = negative_ != rhs.negative_;
  limbs_ = std::move(product);
  trim();
  return *this;
}

std::size_t BigInt::bit_length() const noexcept {
  if (limbs_.empty()) return 0;
  std::uint32_t top = limbs_.back();
  std::size_t bits = (limbs_.size() - 1) * 32;
  while (top != 0) {
    ++bits;
    top >>= 1;
  }
  return bits;
}

bool BigInt::bit(std::size_t index) const noexcept {
  std::size_t limb = index / 32;
  if (limb >= limbs_.size()) return false;
  return (limbs_[limb] >> (index % 32)) & 1u;
}

void BigInt::set_bit(std::size_t index) {
  std::size_t limb = index / 32;
  if (limb >= limbs_.size()) limbs_.resize(limb + 1, 0);
  limbs_[limb] |= std::uint32_t{1} << (index % 32);
}

void BigInt::shift_left_one() {
  std::uint32_t carry = 0;
  for (auto& limb : limbs_) {
    std::uint32_t next_carry = limb >> 31;
    limb = (limb << 1) | carry;
    carry = next_carry;
  }
  if (carry != 0) limbs_.push_back(carry);
}

std::pair<BigInt, BigInt> BigInt::divmod(const BigInt& num, const BigInt& den) {
  if (den.is_zero()) throw std::domain_error("BigInt division by zero");
  BigInt quotient;
  BigInt remainder;
  // Restoring binary long division on magnitudes; sizes here are small
  // enough that the bit loop is never a bottleneck.
  std::size_t bits = num.bit_length();
  for (std::size_t i = bits; i-- > 0;) {
    remainder.shift_left_one();
    if (num.bit(i)) {
      if (remainder.limbs_.empty()) remainder.limbs_.push_back(1);
      else remainder.limbs_[0] |= 1u;
    }
    if (remainder.compare_magnitude(den) >= 0) {
      remainder.subtract_magnitude(den);
      quotient.set_bit(i);
    }
  }
  quotient.trim();
  remainder.trim();
  if (!quotient.is_zero()) quotient.negative_ = num.negative_ != den.negative_;
  if (!remainder.is_zero()) remainder.negative_ = num.negative_;
  return {std::move(quotient), std::move(remainder)};
}

BigInt BigInt::pow(const BigInt& base, unsigned exponent) {
  BigInt result(1);
  BigInt factor = base;
  while (exponent != 0) {
    if (exponent & 1u) result *= factor;
    exponent >>= 1;
    if (exponent != 0) factor *= factor;
  }
  return result;
}

BigInt BigInt::gcd(BigInt a, BigInt b) {
  a.negative_ = false;
  b.negative_ = false;
  while (!b.is_zero()) {
    BigInt r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

bool BigInt::operator==(const BigInt& rhs) const noexcept {
  return negative_ == rhs.negative_ && limbs_ == rhs.limbs_;
}

std::strong_ordering BigInt::operator<=>(const BigInt& rhs) const noexcept {
  if (negative_ != rhs.negative_)
    return negative_ ? std::strong_ordering::less : std::strong_ordering::greater;
  int cmp = compare_magnitude(rhs);
  if (negative_) cmp = -cmp;
  if (cmp < 0) return std::strong_ordering::less;
  if (cmp > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string BigInt::to_string() const {
  if (is_zero()) return "0";
  std::string digits;
  BigInt value = abs();
  const BigInt chunk_div(1000000000);
  while (!value.is_zero()) {
    auto [q, r] = divmod(value, chunk_div);
    std::uint64_t chunk = r.limbs_.empty() ? 0 : r.limbs_[0];
    if (r.limbs_.size() > 1) chunk |= static_cast<std::uint64_t>(r.limbs_[1]) << 32;
    std::string part = std::to_string(chunk);
    if (!q.is_zero()) part.insert(0, 9 - part.size(), '0');
    digits.insert(0, part);
    value = std::move(q);
  }
  if (negative_) digits.insert(digits.begin(), '-');
  return digits;
}

namespace {
// Top min(64, bits) bits of |v| as a double, i.e. floor(|v| / 2^(bits - 64))
// (for bits <= 64 this is |v| itself).
double top_bits(const BigInt& v, std::size_t bits) {
  std::uint64_t mantissa = 0;
  std::size_t shift = bits > 64 ? bits - 64 : 0;
  std::size_t take = bits > 64 ? 64 : bits;
  for (std::size_t i = 0; i < take; ++i)
    if (v.bit(shift + i)) mantissa |= std::uint64_t{1} << i;
  return static_cast<double>(mantissa);
}
}  // namespace

double BigInt::to_double() const {
  if (is_zero()) return 0.0;
  std::size_t bits = bit_length();
  double value = std::ldexp(top_bits(*this, bits), bits > 64 ? static_cast<int>(bits - 64) : 0);
  return negative_ ? -value : value;
}

Rational::Rational(BigInt numerator, BigInt denominator)
    : num_(std::move(numerator)), den_(std::move(denominator)) {
  if (den_.is_zero()) throw std::domain_error("Rational with zero denominator");
  normalize();
}

void Rational::normalize() {
  if (den_.sign() < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  if (num_.is_zero()) {
    den_ = BigInt(1);
    return;
  }
  BigInt g = BigInt::gcd(num_, den_);
  if (g > BigInt(1)) {
    num_ = BigInt::divmod(num_, g).first;
    den_ = BigInt::divmod(den_, g).first;
  }
}

Rational Rational::operator-() const {
  Rational result = *this;
  result.num_ = -result.num_;
  return result;
}

Rational& Rational::operator+=(const Rational& rhs) {
  num_ = num_ * rhs.den_ + rhs.num_ * den_;
  den_ *= rhs.den_;
  normalize();
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) { return *this += -rhs; }

Rational& Rational::operator*=(const Rational& rhs) {
  num_ *= rhs.num_;
  den_ *= rhs.den_;
  normalize();
  return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.is_zero()) throw std::domain_error("Rational division by zero");
  num_ *= rhs.den_;
  den_ *= rhs.num_;
  normalize();
  return *this;
}

Rational Rational::pow(const Rational& base, unsigned exponent) {
  return Rational(BigInt::pow(base.num_, exponent), BigInt::pow(base.den_, exponent));
}

bool Rational::operator==(const Rational& rhs) const noexcept {
  return num_ == rhs.num_ && den_ == rhs.den_;
}

std::strong_ordering Rational::operator<=>(const Rational& rhs) const noexcept {
  return (num_ * rhs.den_) <=> (rhs.num_ * den_);
}

std::string Rational::to_string() const {
  if (den_ == BigInt(1)) return num_.to_string();
  return num_.to_string() + "/" + den_.to_string();
}

double Rational::to_double() const {
  if (num_.is_zero()) return 0.0;
  double n = num_.to_double();
  double d = den_.to_double();
  if (std::isfinite(n) && std::isfinite(d)) return n / d;
  // One side overflowed double range: divide the top-64-bit mantissas and
  // restore the binary exponent difference.
  std::size_t nb = num_.bit_length();
  std::size_t db = den_.bit_length();
  double mn = top_bits(num_, nb);
  double md = top_bits(den_, db);
  double value = (mn / md) *
                 std::exp2(static_cast<double>(nb > 64 ? nb - 64 : 0) -
                           static_cast<double>(db > 64 ? db - 64 : 0));
  return num_.sign() < 0 ? -value : value;
}

}  // namespace brauer

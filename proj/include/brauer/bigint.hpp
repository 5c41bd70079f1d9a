#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace brauer {

/// Arbitrary-precision signed integer, sign-magnitude with base-2^32 limbs.
/// Sized for exact Gram-matrix entries, normalization products and design
/// constraints; not tuned for numbers beyond a few thousand bits.
class BigInt {
 public:
  BigInt() = default;
  BigInt(std::int64_t value);  // NOLINT(google-explicit-constructor)

  static BigInt from_decimal(std::string_view text);

  bool is_zero() const noexcept { return limbs_.empty(); }
  /// -1, 0 or +1.
  int sign() const noexcept { return limbs_.empty() ? 0 : (negative_ ? -1 : 1); }

  BigInt operator-() const;
  BigInt abs() const;

  BigInt& operator+=(const BigInt& rhs);
  BigInt& operator-=(const BigInt& rhs);
  BigInt& operator*=(const BigInt& rhs);

  friend BigInt operator+(BigInt lhs, const BigInt& rhs) { return lhs += rhs; }
  friend BigInt operator-(BigInt lhs, const BigInt& rhs) { return lhs -= rhs; }
  friend BigInt operator*(BigInt lhs, const BigInt& rhs) { return lhs *= rhs; }

  /// Truncated division: quotient rounds toward zero, remainder has the
  /// dividend's sign. Throws std::domain_error on division by zero.
  static std::pair<BigInt, BigInt> divmod(const BigInt& num, const BigInt& den);

  static BigInt pow(const BigInt& base, unsigned exponent);
  /// Non-negative gcd; gcd(0, 0) = 0.
  static BigInt gcd(BigInt a, BigInt b);

  bool operator==(const BigInt& rhs) const noexcept;
  std::strong_ordering operator<=>(const BigInt& rhs) const noexcept;

  std::string to_string() const;
  /// Nearest double; values past the double range saturate to +/-inf.
  double to_double() const;

  /// Number of significant bits of |x|; 0 for x = 0.
  std::size_t bit_length() const noexcept;
  /// Bit of |x| at the given position (0 = least significant).
  bool bit(std::size_t index) const noexcept;

 private:
  void set_bit(std::size_t index);
  void shift_left_one();
  void trim();
  // |this| vs |rhs|
  int compare_magnitude(const BigInt& rhs) const noexcept;
  void add_magnitude(const BigInt& rhs);
  // requires |this| >= |rhs|
  void subtract_magnitude(const BigInt& rhs);

  bool negative_ = false;
  std::vector<std::uint32_t> limbs_;  // little-endian, no trailing zeros
};

/// Exact rational with normalized sign (denominator always positive) and
/// reduced terms.
class Rational {
 public:
  Rational() : num_(0), den_(1) {}
  Rational(std::int64_t value) : num_(value), den_(1) {}  // NOLINT
  Rational(BigInt numerator, BigInt denominator);

  const BigInt& num() const noexcept { return num_; }
  const BigInt& den() const noexcept { return den_; }

  bool is_zero() const noexcept { return num_.is_zero(); }
  int sign() const noexcept { return num_.sign(); }

  Rational operator-() const;
  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }

  static Rational pow(const Rational& base, unsigned exponent);

  bool operator==(const Rational& rhs) const noexcept;
  std::strong_ordering operator<=>(const Rational& rhs) const noexcept;

  /// "num/den", or just "num" when den == 1.
  std::string to_string() const;
  double to_double() const;

 private:
  void normalize();

  BigInt num_;
  BigInt den_;
};

}  // namespace brauer

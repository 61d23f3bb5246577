// Copyright 2026 The Combcontract Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Exact rational arithmetic over arbitrary-precision integers.
//
// Every probability, cost, contract and utility in the library is a Rational.
// Values are always kept in reduced form with a positive denominator, so
// structural equality coincides with numeric equality.

#ifndef COMBCONTRACT_RATIONAL_H_
#define COMBCONTRACT_RATIONAL_H_

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>

namespace combcontract {

using BigInt = mpz_class;

class Rational {
 public:
  Rational() = default;
  Rational(int64_t value);  // NOLINT(google-explicit-constructor)
  explicit Rational(const BigInt& value);

  // Builds num/den in reduced form. Throws kDivisionByZero when den == 0.
  static Rational Reduce(const BigInt& num, const BigInt& den);
  static Rational Reduce(int64_t num, int64_t den);

  // 2^-bits.
  static Rational PowerOfHalf(int bits);

  BigInt numerator() const { return value_.get_num(); }
  BigInt denominator() const { return value_.get_den(); }

  bool IsZero() const { return sgn(value_) == 0; }
  bool IsInteger() const { return value_.get_den() == 1; }
  int Sign() const { return sgn(value_); }

  BigInt Floor() const;
  BigInt Ceil() const;

  Rational Abs() const;
  Rational Inverse() const;
  Rational Pow(unsigned exponent) const;

  // "a/b" in reduced form, or "a" when integral.
  std::string ToString() const;
  // Decimal rendering rounded half away from zero to `digits` places; display
  // only, never fed back into a computation.
  std::string ToDecimal(int digits) const;

  Rational& operator+=(const Rational& other);
  Rational& operator-=(const Rational& other);
  Rational& operator*=(const Rational& other);
  Rational& operator/=(const Rational& other);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  Rational operator-() const;

  friend bool operator==(const Rational& a, const Rational& b) {
    return cmp(a.value_, b.value_) == 0;
  }
  friend std::strong_ordering operator<=>(const Rational& a,
                                          const Rational& b) {
    const int c = cmp(a.value_, b.value_);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  const mpq_class& raw() const { return value_; }

 private:
  explicit Rational(mpq_class value) : value_(std::move(value)) {}

  mpq_class value_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

Rational Min(const Rational& a, const Rational& b);
Rational Max(const Rational& a, const Rational& b);

// Number of bits k such that values are multiples of 2^-k.
class BitPrecision {
 public:
  explicit BitPrecision(int bits);
  int bits() const { return bits_; }
  // 2^k as an integer.
  BigInt Scale() const;
  friend bool operator==(BitPrecision, BitPrecision) = default;

 private:
  int bits_;
};

// True iff r * 2^k is an integer.
bool IsKValid(const Rational& r, BitPrecision k);

// True iff r = a/b in lowest terms with 1 <= a, b <= 2^k. Throws kDomain for
// r <= 0.
bool InBoundedSet(const Rational& r, BitPrecision k);

// Parses "a/b", "a", or a decimal "0.375". Decimals are only accepted when a
// precision is supplied and the value is a multiple of 2^-k.
Rational ParseRational(std::string_view text,
                       std::optional<BitPrecision> k = std::nullopt);

}  // namespace combcontract

#endif  // COMBCONTRACT_RATIONAL_H_

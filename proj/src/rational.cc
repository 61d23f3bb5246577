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

#include "combcontract/rational.h"

#include <cctype>
#include <string>

#include "combcontract/error.h"

namespace combcontract {

std::string_view ErrorKindName(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kDivisionByZero:
      return "division-by-zero";
    case ErrorKind::kDomain:
      return "domain";
    case ErrorKind::kPrecondition:
      return "precondition";
    case ErrorKind::kResource:
      return "resource";
    case ErrorKind::kUnsupportedClass:
      return "unsupported-class";
    case ErrorKind::kNotFound:
      return "not-found";
    case ErrorKind::kDegenerateInstance:
      return "degenerate-instance";
    case ErrorKind::kInvariantViolation:
      return "invariant-violation";
    case ErrorKind::kParse:
      return "parse";
    case ErrorKind::kValidation:
      return "validation";
  }
  return "unknown";
}

namespace {

BigInt ParseInteger(std::string_view text) {
  std::string digits(text);
  if (!digits.empty() && digits.front() == '+') digits.erase(0, 1);
  const size_t first_digit = (!digits.empty() && digits.front() == '-') ? 1 : 0;
  if (digits.size() == first_digit) {
    Fail(ErrorKind::kParse, "empty integer in '" + std::string(text) + "'");
  }
  for (size_t i = first_digit; i < digits.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(digits[i]))) {
      Fail(ErrorKind::kParse, "malformed integer '" + std::string(text) + "'");
    }
  }
  return BigInt(digits, 10);
}

std::string_view Trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
    s.remove_prefix(1);
  }
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
    s.remove_suffix(1);
  }
  return s;
}

}  // namespace

Rational::Rational(int64_t value) : value_(static_cast<long>(value)) {}

Rational::Rational(const BigInt& value) : value_(value) {}

Rational Rational::Reduce(const BigInt& num, const BigInt& den) {
  if (den == 0) Fail(ErrorKind::kDivisionByZero, "zero denominator");
  mpq_class q(num, den);
  q.canonicalize();
  return Rational(std::move(q));
}

Rational Rational::Reduce(int64_t num, int64_t den) {
  return Reduce(BigInt(static_cast<long>(num)), BigInt(static_cast<long>(den)));
}

Rational Rational::PowerOfHalf(int bits) {
  BigInt den;
  mpz_ui_pow_ui(den.get_mpz_t(), 2, static_cast<unsigned long>(bits));
  return Reduce(BigInt(1), den);
}

BigInt Rational::Floor() const {
  BigInt q;
  mpz_fdiv_q(q.get_mpz_t(), value_.get_num_mpz_t(), value_.get_den_mpz_t());
  return q;
}

BigInt Rational::Ceil() const {
  BigInt q;
  mpz_cdiv_q(q.get_mpz_t(), value_.get_num_mpz_t(), value_.get_den_mpz_t());
  return q;
}

Rational Rational::Abs() const { return Rational(mpq_class(abs(value_))); }

Rational Rational::Inverse() const {
  if (IsZero()) Fail(ErrorKind::kDivisionByZero, "inverse of zero");
  return Reduce(value_.get_den(), value_.get_num());
}

Rational Rational::Pow(unsigned exponent) const {
  BigInt num;
  BigInt den;
  mpz_pow_ui(num.get_mpz_t(), value_.get_num_mpz_t(), exponent);
  mpz_pow_ui(den.get_mpz_t(), value_.get_den_mpz_t(), exponent);
  return Reduce(num, den);
}

std::string Rational::ToString() const {
  if (IsInteger()) return value_.get_num().get_str();
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

std::string Rational::ToDecimal(int digits) const {
  BigInt scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
  const BigInt num = abs(value_.get_num()) * scale;
  const BigInt den = value_.get_den();
  BigInt rounded;
  const BigInt twice = 2 * num + den;
  const BigInt twice_den = 2 * den;
  mpz_fdiv_q(rounded.get_mpz_t(), twice.get_mpz_t(), twice_den.get_mpz_t());

  std::string text = rounded.get_str();
  if (digits > 0) {
    if (text.size() <= static_cast<size_t>(digits)) {
      text.insert(0, static_cast<size_t>(digits) + 1 - text.size(), '0');
    }
    text.insert(text.size() - static_cast<size_t>(digits), ".");
  }
  if (Sign() < 0 && rounded != 0) text.insert(0, "-");
  return text;
}

Rational& Rational::operator+=(const Rational& other) {
  value_ += other.value_;
  return *this;
}

Rational& Rational::operator-=(const Rational& other) {
  value_ -= other.value_;
  return *this;
}

Rational& Rational::operator*=(const Rational& other) {
  value_ *= other.value_;
  return *this;
}

Rational& Rational::operator/=(const Rational& other) {
  if (other.IsZero()) Fail(ErrorKind::kDivisionByZero, "division by zero");
  value_ /= other.value_;
  return *this;
}

Rational Rational::operator-() const { return Rational(mpq_class(-value_)); }

std::ostream& operator<<(std::ostream& os, const Rational& r) {
  return os << r.ToString();
}

Rational Min(const Rational& a, const Rational& b) { return b < a ? b : a; }
Rational Max(const Rational& a, const Rational& b) { return a < b ? b : a; }

BitPrecision::BitPrecision(int bits) : bits_(bits) {
  if (bits <= 0) {
    Fail(ErrorKind::kDomain, "bit precision must be positive, got " +
                                 std::to_string(bits));
  }
}

BigInt BitPrecision::Scale() const {
  BigInt scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 2, static_cast<unsigned long>(bits_));
  return scale;
}

bool IsKValid(const Rational& r, BitPrecision k) {
  // r * 2^k is integral iff the reduced denominator divides 2^k.
  const BigInt den = r.denominator();
  return mpz_divisible_p(k.Scale().get_mpz_t(), den.get_mpz_t()) != 0;
}

bool InBoundedSet(const Rational& r, BitPrecision k) {
  if (r.Sign() <= 0) {
    Fail(ErrorKind::kDomain,
         "bounded-set membership needs r > 0, got " + r.ToString());
  }
  const BigInt limit = k.Scale();
  return r.numerator() <= limit && r.denominator() <= limit;
}

Rational ParseRational(std::string_view text, std::optional<BitPrecision> k) {
  const std::string_view s = Trim(text);
  if (s.empty()) Fail(ErrorKind::kParse, "empty rational");
  if (const size_t slash = s.find('/'); slash != std::string_view::npos) {
    return Rational::Reduce(ParseInteger(Trim(s.substr(0, slash))),
                            ParseInteger(Trim(s.substr(slash + 1))));
  }
  const size_t dot = s.find('.');
  if (dot == std::string_view::npos) return Rational(ParseInteger(s));

  if (!k.has_value()) {
    Fail(ErrorKind::kParse, "decimal '" + std::string(s) +
                                "' needs a declared bit precision k");
  }
  const std::string_view whole = s.substr(0, dot);
  const std::string_view frac = s.substr(dot + 1);
  const bool negative = !whole.empty() && whole.front() == '-';
  const std::string_view whole_digits =
      (negative || (!whole.empty() && whole.front() == '+')) ? whole.substr(1)
                                                              : whole;
  std::string digits = std::string(whole_digits) + std::string(frac);
  if (digits.empty()) Fail(ErrorKind::kParse, "malformed decimal");
  BigInt num = ParseInteger(digits);
  if (negative) num = -num;
  BigInt den;
  mpz_ui_pow_ui(den.get_mpz_t(), 10, static_cast<unsigned long>(frac.size()));
  const Rational value = Rational::Reduce(num, den);
  if (!IsKValid(value, *k)) {
    Fail(ErrorKind::kParse, "decimal '" + std::string(s) +
                                "' is not a multiple of 2^-" +
                                std::to_string(k->bits()));
  }
  return value;
}

}  // namespace combcontract

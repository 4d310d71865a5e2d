// Copyright 2026 The netcreate Authors
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

#ifndef NETCREATE_RATIONAL_HPP_
#define NETCREATE_RATIONAL_HPP_

#include <compare>
#include <concepts>
#include <cstddef>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>

#include <boost/multiprecision/cpp_int.hpp>

#include "netcreate/errors.hpp"

namespace netcreate {

using BigInt = boost::multiprecision::cpp_int;

// Arbitrary-precision rational, always in lowest terms with a positive
// denominator. Holds the edge price and every cost value.
class Rational {
 public:
  Rational() = default;

  template <std::integral I>
  Rational(I value) : value_(value) {}  // NOLINT(google-explicit-constructor)

  Rational(const BigInt& numerator, const BigInt& denominator) {
    if (denominator == 0) throw InvalidInput("rational with zero denominator");
    value_ = boost::multiprecision::cpp_rational(numerator, denominator);
  }

  // Accepts "p" or "p/q" with an optional leading '-'. Decimal points,
  // exponents and whitespace are rejected so that the integral/non-integral
  // distinction is never lost to floating-point parsing.
  static Rational parse(std::string_view text) {
    auto fail = [&] {
      return InvalidInput("expected an exact rational 'p/q' or integer, got '" +
                          std::string(text) + "'");
    };
    auto is_digits = [](std::string_view s) {
      if (s.empty()) return false;
      for (char c : s) {
        if (c < '0' || c > '9') return false;
      }
      return true;
    };
    std::string_view body = text;
    bool negative = false;
    if (!body.empty() && body.front() == '-') {
      negative = true;
      body.remove_prefix(1);
    }
    auto slash = body.find('/');
    std::string_view num = body.substr(0, slash);
    std::string_view den =
        slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
    if (!is_digits(num) || !is_digits(den)) throw fail();
    BigInt n{std::string(num)};
    BigInt d{std::string(den)};
    if (d == 0) throw fail();
    if (negative) n = -n;
    return Rational(n, d);
  }

  BigInt numerator() const { return boost::multiprecision::numerator(value_); }
  BigInt denominator() const { return boost::multiprecision::denominator(value_); }

  bool is_integer() const { return denominator() == 1; }
  bool is_negative() const { return value_ < 0; }

  BigInt floor() const {
    BigInt num = numerator();
    BigInt den = denominator();
    BigInt q = num / den;  // truncates toward zero
    if (num < 0 && q * den != num) q -= 1;
    return q;
  }

  // alpha - floor(alpha), in [0, 1).
  Rational fractional_part() const { return *this - Rational(floor(), 1); }

  double to_double() const { return value_.convert_to<double>(); }

  std::string to_string() const {
    if (is_integer()) return numerator().str();
    return numerator().str() + "/" + denominator().str();
  }

  friend Rational operator+(const Rational& a, const Rational& b) {
    return Rational(a.value_ + b.value_);
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    return Rational(a.value_ - b.value_);
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return Rational(a.value_ * b.value_);
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.value_ == 0) throw PreconditionError("division by zero rational");
    return Rational(a.value_ / b.value_);
  }
  Rational operator-() const { return Rational(-value_); }
  Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
  Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
  Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.value_ == b.value_;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    if (a.value_ < b.value_) return std::strong_ordering::less;
    if (a.value_ == b.value_) return std::strong_ordering::equal;
    return std::strong_ordering::greater;
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.to_string();
  }

 private:
  explicit Rational(boost::multiprecision::cpp_rational v) : value_(std::move(v)) {}

  boost::multiprecision::cpp_rational value_;
};

}  // namespace netcreate

#endif  // NETCREATE_RATIONAL_HPP_

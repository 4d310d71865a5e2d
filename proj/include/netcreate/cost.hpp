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

#ifndef NETCREATE_COST_HPP_
#define NETCREATE_COST_HPP_

#include <compare>
#include <ostream>
#include <string>
#include <utility>

#include "netcreate/errors.hpp"
#include "netcreate/rational.hpp"

namespace netcreate {

// An exact cost or the Infinite sentinel. Infinite sorts above every finite
// value and absorbs addition.
class Cost {
 public:
  Cost() = default;
  Cost(Rational value) : value_(std::move(value)) {}  // NOLINT(google-explicit-constructor)

  static Cost infinite() {
    Cost c;
    c.infinite_ = true;
    return c;
  }

  bool is_infinite() const { return infinite_; }
  bool is_finite() const { return !infinite_; }

  const Rational& value() const {
    if (infinite_) throw PreconditionError("value() of an infinite cost");
    return value_;
  }

  std::string to_string() const { return infinite_ ? "inf" : value_.to_string(); }

  friend Cost operator+(const Cost& a, const Cost& b) {
    if (a.infinite_ || b.infinite_) return infinite();
    return Cost(a.value_ + b.value_);
  }

  friend bool operator==(const Cost& a, const Cost& b) {
    if (a.infinite_ || b.infinite_) return a.infinite_ == b.infinite_;
    return a.value_ == b.value_;
  }
  friend std::strong_ordering operator<=>(const Cost& a, const Cost& b) {
    if (a.infinite_ || b.infinite_) return a.infinite_ <=> b.infinite_;
    return a.value_ <=> b.value_;
  }

  friend std::ostream& operator<<(std::ostream& os, const Cost& c) {
    return os << c.to_string();
  }

 private:
  bool infinite_ = false;
  Rational value_;
};

}  // namespace netcreate

#endif  // NETCREATE_COST_HPP_

// Copyright 2026 The vgame Authors
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

#ifndef VGAME_TYPES_HPP_
#define VGAME_TYPES_HPP_

#include <compare>
#include <cstdint>
#include <limits>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/rational.hpp>

namespace vgame {

using Vertex = std::uint32_t;

// Exact arithmetic for payoffs, shares and restricted costs.
using Rational = boost::rational<std::int64_t>;

// "3", "5/2", "-1/3".
std::string to_string(const Rational& value);

// Inverse of to_string; accepts "p/q" or a plain integer.
Rational parse_rational(const std::string& text);

// Malformed input: bad instance, bad profile, violated precondition.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// An exhaustive computation would exceed its work budget.
class BudgetExceeded : public std::runtime_error {
 public:
  BudgetExceeded(const std::string& what, std::uint64_t required,
                 std::uint64_t budget)
      : std::runtime_error(what), required_(required), budget_(budget) {}

  std::uint64_t required() const { return required_; }
  std::uint64_t budget() const { return budget_; }

 private:
  std::uint64_t required_;
  std::uint64_t budget_;
};

// Shortest-path length in edges, or infinity between components.
//
// The sentinel is private: callers see an option type and must ask
// is_finite() before value(). Infinity compares greater than every
// finite distance.
class Distance {
 public:
  constexpr Distance() = default;
  constexpr explicit Distance(std::uint32_t edges) : raw_(edges) {
    if (edges == kInfinite) throw std::out_of_range("distance too large");
  }

  static constexpr Distance infinite() {
    Distance d;
    d.raw_ = kInfinite;
    return d;
  }

  constexpr bool is_finite() const { return raw_ != kInfinite; }

  std::uint32_t value() const {
    if (!is_finite()) throw std::logic_error("value() of infinite distance");
    return raw_;
  }

  friend constexpr auto operator<=>(Distance, Distance) = default;

 private:
  static constexpr std::uint32_t kInfinite =
      std::numeric_limits<std::uint32_t>::max();
  std::uint32_t raw_ = 0;
};

std::ostream& operator<<(std::ostream& os, Distance d);

// A value of T or +infinity. Infinity is greater than every finite value
// and equal only to itself.
template <typename T>
class Extended {
 public:
  Extended() = default;
  Extended(T value) : value_(std::move(value)), finite_(true) {}  // NOLINT

  static Extended infinite() {
    Extended e;
    e.finite_ = false;
    return e;
  }

  bool is_finite() const { return finite_; }

  const T& value() const {
    if (!finite_) throw std::logic_error("value() of infinite quantity");
    return value_;
  }

  friend bool operator==(const Extended& a, const Extended& b) {
    if (a.finite_ != b.finite_) return false;
    return !a.finite_ || a.value_ == b.value_;
  }

  friend bool operator<(const Extended& a, const Extended& b) {
    if (!a.finite_) return false;
    if (!b.finite_) return true;
    return a.value_ < b.value_;
  }
  friend bool operator>(const Extended& a, const Extended& b) { return b < a; }
  friend bool operator<=(const Extended& a, const Extended& b) {
    return !(b < a);
  }
  friend bool operator>=(const Extended& a, const Extended& b) {
    return !(a < b);
  }

 private:
  T value_{};
  bool finite_ = true;
};

// Social cost: a weighted distance sum, infinite when some positive-weight
// customer cannot reach any facility.
using Cost = Extended<std::int64_t>;
using ExtendedRational = Extended<Rational>;

std::string to_string(const Cost& cost);
std::string to_string(const ExtendedRational& value);

}  // namespace vgame

#endif  // VGAME_TYPES_HPP_

// Copyright 2026 The Urysohn Authors
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

#ifndef URYSOHN_RATIONAL_H_
#define URYSOHN_RATIONAL_H_

#include <compare>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace urysohn {

/// Exact rational number in lowest terms with a positive denominator.
///
/// Zero is always 0/1. Arithmetic is carried out in 128-bit intermediates and
/// throws std::overflow_error if the reduced result does not fit in 64 bits;
/// no operation ever rounds.
class Rat {
 public:
  constexpr Rat() = default;
  constexpr Rat(std::int64_t value) : num_(value) {}  // NOLINT: implicit on purpose
  /// Throws std::domain_error when den == 0.
  Rat(std::int64_t num, std::int64_t den);

  constexpr std::int64_t num() const { return num_; }
  constexpr std::int64_t den() const { return den_; }

  constexpr bool is_zero() const { return num_ == 0; }
  constexpr bool is_positive() const { return num_ > 0; }
  constexpr bool is_negative() const { return num_ < 0; }
  /// Largest integer not greater than this value.
  std::int64_t floor() const;

  Rat operator-() const;
  Rat& operator+=(const Rat& rhs);
  Rat& operator-=(const Rat& rhs);
  Rat& operator*=(const Rat& rhs);
  Rat& operator/=(const Rat& rhs);

  friend Rat operator+(Rat lhs, const Rat& rhs) { return lhs += rhs; }
  friend Rat operator-(Rat lhs, const Rat& rhs) { return lhs -= rhs; }
  friend Rat operator*(Rat lhs, const Rat& rhs) { return lhs *= rhs; }
  friend Rat operator/(Rat lhs, const Rat& rhs) { return lhs /= rhs; }

  friend constexpr bool operator==(const Rat& lhs, const Rat& rhs) {
    return lhs.num_ == rhs.num_ && lhs.den_ == rhs.den_;
  }
  friend constexpr std::strong_ordering operator<=>(const Rat& lhs,
                                                    const Rat& rhs) {
    if (lhs.den_ == rhs.den_) return lhs.num_ <=> rhs.num_;
    const __int128 l = static_cast<__int128>(lhs.num_) * rhs.den_;
    const __int128 r = static_cast<__int128>(rhs.num_) * lhs.den_;
    return l <=> r;
  }

  /// Canonical "num/den" text, e.g. "3/1", "-1/2".
  std::string to_string() const;

  /// Accepts "n", "n/d" and "-n/d"; non-reduced input is normalized.
  /// Throws std::invalid_argument on malformed text or a zero denominator.
  static Rat parse(std::string_view text);

 private:
  static Rat from_wide(__int128 num, __int128 den);

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

Rat abs(const Rat& value);

std::ostream& operator<<(std::ostream& os, const Rat& value);

/// Calkin-Wilf enumeration of the positive rationals: 1, 1/2, 2, 1/3, 3/2, ...
/// Every positive rational appears exactly once.
class CalkinWilf {
 public:
  /// Current term; the sequence starts at 1.
  const Rat& current() const { return current_; }
  /// Advances to the next term and returns it.
  const Rat& next();

 private:
  Rat current_ = 1;
};

/// Index-addressable memo over CalkinWilf (index 0 is 1).
class RationalEnumeration {
 public:
  const Rat& at(std::size_t index);

 private:
  CalkinWilf cursor_;
  std::vector<Rat> terms_;
};

}  // namespace urysohn

template <>
struct std::hash<urysohn::Rat> {
  std::size_t operator()(const urysohn::Rat& r) const noexcept {
    return std::hash<std::int64_t>{}(r.num()) * 1000003u ^
           std::hash<std::int64_t>{}(r.den());
  }
};

#endif  // URYSOHN_RATIONAL_H_

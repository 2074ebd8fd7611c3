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

#include "urysohn/rational.h"

#include <charconv>
#include <limits>
#include <ostream>
#include <stdexcept>

namespace urysohn {
namespace {

__int128 wide_gcd(__int128 a, __int128 b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    const __int128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

bool fits(__int128 v) {
  return v >= std::numeric_limits<std::int64_t>::min() &&
         v <= std::numeric_limits<std::int64_t>::max();
}

bool parse_int(std::string_view text, std::int64_t& out) {
  if (text.empty()) return false;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(first, last, out);
  return ec == std::errc() && ptr == last;
}

}  // namespace

Rat::Rat(std::int64_t num, std::int64_t den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  *this = from_wide(num, den);
}

Rat Rat::from_wide(__int128 num, __int128 den) {
  if (den == 0) throw std::domain_error("division by zero");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  if (num == 0) return Rat();
  const __int128 g = wide_gcd(num, den);
  num /= g;
  den /= g;
  if (!fits(num) || !fits(den)) {
    throw std::overflow_error("rational out of 64-bit range");
  }
  Rat r;
  r.num_ = static_cast<std::int64_t>(num);
  r.den_ = static_cast<std::int64_t>(den);
  return r;
}

std::int64_t Rat::floor() const {
  std::int64_t q = num_ / den_;
  if (num_ % den_ != 0 && num_ < 0) --q;
  return q;
}

Rat Rat::operator-() const {
  return from_wide(-static_cast<__int128>(num_), den_);
}

Rat& Rat::operator+=(const Rat& rhs) {
  if (den_ == rhs.den_) {
    *this = from_wide(static_cast<__int128>(num_) + rhs.num_, den_);
  } else {
    *this = from_wide(static_cast<__int128>(num_) * rhs.den_ +
                          static_cast<__int128>(rhs.num_) * den_,
                      static_cast<__int128>(den_) * rhs.den_);
  }
  return *this;
}

Rat& Rat::operator-=(const Rat& rhs) { return *this += -rhs; }

Rat& Rat::operator*=(const Rat& rhs) {
  *this = from_wide(static_cast<__int128>(num_) * rhs.num_,
                    static_cast<__int128>(den_) * rhs.den_);
  return *this;
}

Rat& Rat::operator/=(const Rat& rhs) {
  if (rhs.num_ == 0) throw std::domain_error("division by zero");
  *this = from_wide(static_cast<__int128>(num_) * rhs.den_,
                    static_cast<__int128>(den_) * rhs.num_);
  return *this;
}

std::string Rat::to_string() const {
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Rat Rat::parse(std::string_view text) {
  const auto slash = text.find('/');
  std::int64_t num = 0;
  std::int64_t den = 1;
  bool ok = false;
  if (slash == std::string_view::npos) {
    ok = parse_int(text, num);
  } else {
    const auto den_text = text.substr(slash + 1);
    // A sign is only allowed on the numerator.
    ok = parse_int(text.substr(0, slash), num) && !den_text.empty() &&
         den_text.front() != '-' && den_text.front() != '+' &&
         parse_int(den_text, den);
  }
  if (!ok) {
    throw std::invalid_argument("malformed rational '" + std::string(text) +
                                "'");
  }
  if (den == 0) {
    throw std::invalid_argument("zero denominator in '" + std::string(text) +
                                "'");
  }
  return Rat(num, den);
}

Rat abs(const Rat& value) { return value.is_negative() ? -value : value; }

std::ostream& operator<<(std::ostream& os, const Rat& value) {
  return os << value.to_string();
}

// Successor map x -> 1 / (2*floor(x) - x + 1).
const Rat& CalkinWilf::next() {
  const Rat fl = current_.floor();
  current_ = Rat(1) / (Rat(2) * fl - current_ + Rat(1));
  return current_;
}

const Rat& RationalEnumeration::at(std::size_t index) {
  if (terms_.empty()) terms_.push_back(cursor_.current());
  while (terms_.size() <= index) terms_.push_back(cursor_.next());
  return terms_[index];
}

}  // namespace urysohn

// Copyright 2026 The fklens Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cmath>
#include <compare>
#include <complex>
#include <cstdlib>
#include <ostream>
#include <string>
#include <string_view>

#include "fklens/errors.hpp"

namespace fklens {

/// Exact integer or half-integer, stored as twice its value.
///
/// Angular-momentum labels (j, m, μ, κ) and Cartesian positions q are
/// half-integers whenever N = 2j+1 is even; keeping them as doubled integers
/// makes index arithmetic and parity tests exact.
class HalfInt {
 public:
  constexpr HalfInt() = default;
  constexpr explicit HalfInt(int value) : twice_(2 * value) {}

  static constexpr HalfInt from_twice(int twice) {
    HalfInt h;
    h.twice_ = twice;
    return h;
  }

  /// Accepts "3", "-2", "3/2", "-1/2", "1.5", "2.0".
  static HalfInt parse(std::string_view text);

  constexpr int twice() const { return twice_; }
  constexpr bool is_integer() const { return twice_ % 2 == 0; }
  constexpr double value() const { return 0.5 * twice_; }

  int as_int() const {
    if (!is_integer()) {
      throw DomainError("HalfInt " + to_string() + " is not an integer");
    }
    return twice_ / 2;
  }

  std::string to_string() const {
    if (is_integer()) return std::to_string(twice_ / 2);
    return std::to_string(twice_) + "/2";
  }

  constexpr HalfInt operator-() const { return from_twice(-twice_); }
  constexpr HalfInt& operator+=(HalfInt o) {
    twice_ += o.twice_;
    return *this;
  }
  constexpr HalfInt& operator-=(HalfInt o) {
    twice_ -= o.twice_;
    return *this;
  }
  friend constexpr HalfInt operator+(HalfInt a, HalfInt b) { return a += b; }
  friend constexpr HalfInt operator-(HalfInt a, HalfInt b) { return a -= b; }
  friend constexpr HalfInt operator+(HalfInt a, int b) { return a += HalfInt(b); }
  friend constexpr HalfInt operator-(HalfInt a, int b) { return a -= HalfInt(b); }
  friend constexpr auto operator<=>(HalfInt, HalfInt) = default;

  friend std::ostream& operator<<(std::ostream& os, HalfInt h) {
    return os << h.to_string();
  }

 private:
  int twice_ = 0;
};

constexpr HalfInt abs(HalfInt h) { return h.twice() < 0 ? -h : h; }

/// (-1)^x for integer x.
inline int sign_power(HalfInt x) { return (x.as_int() % 2 == 0) ? 1 : -1; }
inline int sign_power(int x) { return (x % 2 == 0) ? 1 : -1; }

/// e^{iπx}, which is (-1)^x for integer x and ±i for half-integer x.
inline std::complex<double> phase_pi(HalfInt x) {
  switch (((x.twice() % 4) + 4) % 4) {
    case 0: return {1.0, 0.0};
    case 1: return {0.0, 1.0};
    case 2: return {-1.0, 0.0};
    default: return {0.0, -1.0};
  }
}

inline HalfInt HalfInt::parse(std::string_view text) {
  std::string s(text);
  auto fail = [&]() -> HalfInt {
    throw DomainError("cannot parse '" + s + "' as an integer or half-integer");
  };
  if (s.empty()) return fail();
  char* end = nullptr;
  if (auto slash = s.find('/'); slash != std::string::npos) {
    long num = std::strtol(s.c_str(), &end, 10);
    if (end != s.c_str() + slash) return fail();
    long den = std::strtol(s.c_str() + slash + 1, &end, 10);
    if (*end != '\0') return fail();
    if (den == 1) return HalfInt(static_cast<int>(num));
    if (den != 2) return fail();
    return from_twice(static_cast<int>(num));
  }
  double v = std::strtod(s.c_str(), &end);
  if (*end != '\0' || !std::isfinite(v)) return fail();
  double twice = 2.0 * v;
  if (std::abs(twice - std::round(twice)) > 1e-9) return fail();
  return from_twice(static_cast<int>(std::lround(twice)));
}

}  // namespace fklens

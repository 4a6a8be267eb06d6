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
#include <numbers>
#include <string>

#include "fklens/errors.hpp"

namespace fklens {

/// An angle in radians. Never reduced modulo a period: callers decide
/// whether 2π and 0 mean the same thing for their group element.
class AngleRad {
 public:
  constexpr AngleRad() = default;
  explicit AngleRad(double radians) : value_(radians) {
    if (!std::isfinite(radians)) {
      throw DomainError("angle must be finite");
    }
  }

  static AngleRad degrees(double deg) {
    return AngleRad(deg * std::numbers::pi / 180.0);
  }

  constexpr double value() const { return value_; }

  friend AngleRad operator+(AngleRad a, AngleRad b) { return AngleRad(a.value_ + b.value_); }
  friend AngleRad operator-(AngleRad a) { return AngleRad(-a.value_); }
  friend AngleRad operator*(double s, AngleRad a) { return AngleRad(s * a.value_); }

 private:
  double value_ = 0.0;
};

/// Parses "0.5", "0.5rad", "30deg". A bare number is radians.
AngleRad parse_angle(const std::string& text);

}  // namespace fklens

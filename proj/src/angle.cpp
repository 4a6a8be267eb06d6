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

#include <cstdlib>
#include <string>

#include "fklens/angle.hpp"

namespace fklens {

AngleRad parse_angle(const std::string& text) {
  std::string body = text;
  double scale = 1.0;
  auto ends_with = [&](const std::string& suffix) {
    return body.size() > suffix.size() &&
           body.compare(body.size() - suffix.size(), suffix.size(), suffix) == 0;
  };
  if (ends_with("deg")) {
    body.resize(body.size() - 3);
    scale = std::numbers::pi / 180.0;
  } else if (ends_with("rad")) {
    body.resize(body.size() - 3);
  }
  char* end = nullptr;
  const double v = std::strtod(body.c_str(), &end);
  if (body.empty() || end == body.c_str() || *end != '\0') {
    throw DomainError("cannot parse angle '" + text + "'");
  }
  return AngleRad(v * scale);
}

}  // namespace fklens

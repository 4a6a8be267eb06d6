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

#include <string>
#include <vector>

#include "fklens/half_int.hpp"

namespace fklens {

struct CheckResult {
  std::string group;
  std::string name;
  bool pass = false;
  double value = 0.0;      ///< measured residual
  double tolerance = 0.0;  ///< pass iff value < tolerance
  std::string detail;
};

struct VerifyOptions {
  HalfInt j{2};
  /// Perturbs the rotation kernel before comparing it with the oracle.
  bool inject_fault = false;
};

/// Runs the invariant groups (special functions, su(2)/so(4) algebra,
/// spectra, bases, kernels, group laws, grid map) at one j. Oracle groups
/// are reported as skipped when N exceeds the oracle cap.
std::vector<CheckResult> run_verification(const VerifyOptions& options);

}  // namespace fklens

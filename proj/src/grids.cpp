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

#include "fklens/grids.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "fklens/specfun.hpp"

namespace fklens {

namespace {

HalfInt checked_label(HalfInt j) {
  if (j.twice() < 0) throw DomainError("grid label j must be non-negative");
  if (j > kMaxJ) {
    throw PrecisionError("grid label j = " + j.to_string() + " exceeds " +
                         kMaxJ.to_string());
  }
  return j;
}

}  // namespace

GridSpec::GridSpec(HalfInt j) : j_(checked_label(j)), ring_offsets_(j.twice() + 1, 0.0) {}

GridSpec GridSpec::from_size(int n) {
  if (n < 1) throw DomainError("grid size N must be at least 1");
  return GridSpec(HalfInt::from_twice(n - 1));
}

GridSpec GridSpec::with_ring_offsets(std::vector<double> offsets) const {
  if (static_cast<int>(offsets.size()) != size()) {
    throw DimensionError("expected " + std::to_string(size()) + " ring offsets, got " +
                         std::to_string(offsets.size()));
  }
  for (double v : offsets) {
    if (!std::isfinite(v)) throw DomainError("ring offsets must be finite");
  }
  GridSpec copy = *this;
  copy.ring_offsets_ = std::move(offsets);
  return copy;
}

double GridSpec::ring_offset(int rho) const {
  if (rho < 0 || rho >= size()) throw DomainError("radius out of range");
  return ring_offsets_[rho];
}

bool GridSpec::has_default_offsets() const {
  return std::all_of(ring_offsets_.begin(), ring_offsets_.end(),
                     [](double v) { return v == 0.0; });
}

double GridSpec::phi(int rho, int k) const {
  if (rho < 0 || rho >= size() || std::abs(k) > rho) {
    throw DomainError("(" + std::to_string(rho) + ", " + std::to_string(k) +
                      ") is not a polar point");
  }
  return 2.0 * std::numbers::pi * k / (2.0 * rho + 1.0) + ring_offsets_[rho];
}

int GridSpec::row_width(int n) const {
  if (n < 0 || n > max_mode()) throw DomainError("total mode out of range");
  return std::min(n, max_mode() - n) + 1;
}

std::vector<CartPoint> enumerate_cartesian(const GridSpec& spec) {
  const int n = spec.size();
  const int tj = spec.j().twice();
  std::vector<CartPoint> out;
  out.reserve(spec.points());
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      out.push_back({HalfInt::from_twice(2 * a - tj), HalfInt::from_twice(2 * b - tj)});
    }
  }
  return out;
}

std::vector<PolarPoint> enumerate_polar(const GridSpec& spec) {
  std::vector<PolarPoint> out;
  out.reserve(spec.points());
  for (int rho = 0; rho < spec.size(); ++rho) {
    for (int k = -rho; k <= rho; ++k) out.push_back({rho, k, spec.phi(rho, k)});
  }
  return out;
}

std::vector<ModeIndex> enumerate_ma_rhombus(const GridSpec& spec) {
  std::vector<ModeIndex> out;
  out.reserve(spec.points());
  for (int n = 0; n <= spec.max_mode(); ++n) {
    const int top = spec.row_width(n) - 1;
    for (int m = -top; m <= top; m += 2) out.push_back({n, HalfInt(m)});
  }
  return out;
}

std::vector<CartMode> enumerate_cart_modes(const GridSpec& spec) {
  std::vector<CartMode> out;
  out.reserve(spec.points());
  for (int nx = 0; nx < spec.size(); ++nx) {
    for (int ny = 0; ny < spec.size(); ++ny) out.push_back({nx, ny});
  }
  return out;
}

std::vector<ModeIndex> enumerate_cart_rhombus(const GridSpec& spec) {
  std::vector<ModeIndex> out;
  out.reserve(spec.points());
  const int two_j = spec.j().twice();
  for (int n = 0; n <= spec.max_mode(); ++n) {
    for (int nx = std::max(0, n - two_j); nx <= std::min(n, two_j); ++nx) {
      out.push_back({n, HalfInt::from_twice(2 * nx - n)});
    }
  }
  return out;
}

bool is_position(const GridSpec& spec, HalfInt q) {
  return abs(q) <= spec.j() && (q - spec.j()).is_integer();
}

int cart_index(const GridSpec& spec, HalfInt qx, HalfInt qy) {
  if (!is_position(spec, qx) || !is_position(spec, qy)) {
    throw DomainError("(" + qx.to_string() + ", " + qy.to_string() +
                      ") is not a Cartesian grid point");
  }
  return (qx + spec.j()).as_int() * spec.size() + (qy + spec.j()).as_int();
}

int polar_index(const GridSpec& spec, int rho, int k) {
  if (rho < 0 || rho >= spec.size() || std::abs(k) > rho) {
    throw DomainError("(" + std::to_string(rho) + ", " + std::to_string(k) +
                      ") is not a polar point");
  }
  return rho * rho + k + rho;
}

bool in_ma_rhombus(const GridSpec& spec, int n, HalfInt m) {
  if (n < 0 || n > spec.max_mode() || !m.is_integer()) return false;
  const int mi = m.as_int();
  return std::abs(mi) <= spec.row_width(n) - 1 && (n + mi) % 2 == 0;
}

int ma_index(const GridSpec& spec, int n, HalfInt m) {
  if (!in_ma_rhombus(spec, n, m)) {
    throw DomainError("(" + std::to_string(n) + ", " + m.to_string() +
                      ") is outside the MA rhombus");
  }
  int offset = 0;
  for (int r = 0; r < n; ++r) offset += spec.row_width(r);
  return offset + (m.as_int() + spec.row_width(n) - 1) / 2;
}

int mode_index(const GridSpec& spec, int nx, int ny) {
  if (nx < 0 || ny < 0 || nx >= spec.size() || ny >= spec.size()) {
    throw DomainError("Cartesian mode out of range");
  }
  return nx * spec.size() + ny;
}

}  // namespace fklens

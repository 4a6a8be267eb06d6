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

#include <vector>

#include "fklens/half_int.hpp"

namespace fklens {

/// Representation label j of a screen and everything derived from it.
///
/// Owns every index range used in the library:
///   Cartesian positions  q_x, q_y ∈ {−j, …, j}                   (N² points)
///   polar positions      ρ ∈ {0, …, 2j}, k ∈ {−ρ, …, ρ}          (N² points)
///   Cartesian modes      n_x, n_y ∈ {0, …, 2j}
///   MA rhombus           (n, m), n ∈ {0, …, 4j}, |m| ≤ min(n, 4j−n), n+m even
///
/// Polar angles are φ_k = 2πk/(2ρ+1) + ψ_ρ with per-ring offsets ψ_ρ that
/// default to zero.
class GridSpec {
 public:
  explicit GridSpec(HalfInt j);
  /// j = (N−1)/2.
  static GridSpec from_size(int n);

  /// Copy with ring offsets ψ_ρ, one per ρ = 0…2j.
  GridSpec with_ring_offsets(std::vector<double> offsets) const;

  HalfInt j() const { return j_; }
  /// N = 2j + 1.
  int size() const { return j_.twice() + 1; }
  /// N², the dimension of every image space and kernel.
  int points() const { return size() * size(); }

  double ring_offset(int rho) const;
  bool has_default_offsets() const;
  double phi(int rho, int k) const;

  /// Number of MA labels m (equivalently Cartesian modes) with total mode n.
  int row_width(int n) const;
  /// Spin of rhombus row n: min(n, 4j−n)/2.
  HalfInt row_spin(int n) const { return HalfInt::from_twice(row_width(n) - 1); }
  /// 4j, the largest total mode number.
  int max_mode() const { return 2 * j_.twice(); }

  friend bool operator==(const GridSpec&, const GridSpec&) = default;

 private:
  HalfInt j_;
  std::vector<double> ring_offsets_;
};

struct CartPoint {
  HalfInt qx;
  HalfInt qy;
  friend bool operator==(const CartPoint&, const CartPoint&) = default;
};

struct PolarPoint {
  int rho = 0;
  int k = 0;
  double phi = 0.0;
};

/// (n, m) for MA labels, or (n, μ) with μ = (n_x − n_y)/2 for Cartesian-mode
/// labels.
struct ModeIndex {
  int n = 0;
  HalfInt m_or_mu;
  friend bool operator==(const ModeIndex&, const ModeIndex&) = default;
};

struct CartMode {
  int nx = 0;
  int ny = 0;
  int n() const { return nx + ny; }
  HalfInt mu() const { return HalfInt::from_twice(nx - ny); }
  friend bool operator==(const CartMode&, const CartMode&) = default;
};

/// Row-major: q_x slowest, q_y fastest, both ascending.
std::vector<CartPoint> enumerate_cartesian(const GridSpec& spec);
/// ρ ascending, then k ascending.
std::vector<PolarPoint> enumerate_polar(const GridSpec& spec);
/// n ascending, then m ascending in steps of 2.
std::vector<ModeIndex> enumerate_ma_rhombus(const GridSpec& spec);
/// n_x slowest, n_y fastest; matches the Kronecker product of 1D tables.
std::vector<CartMode> enumerate_cart_modes(const GridSpec& spec);
/// Cartesian-mode rhombus as (n, μ), n ascending then μ ascending.
std::vector<ModeIndex> enumerate_cart_rhombus(const GridSpec& spec);

int cart_index(const GridSpec& spec, HalfInt qx, HalfInt qy);
int polar_index(const GridSpec& spec, int rho, int k);
int ma_index(const GridSpec& spec, int n, HalfInt m);
int mode_index(const GridSpec& spec, int nx, int ny);

bool in_ma_rhombus(const GridSpec& spec, int n, HalfInt m);
bool is_position(const GridSpec& spec, HalfInt q);

}  // namespace fklens

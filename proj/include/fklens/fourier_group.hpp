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

#include <array>
#include <cstdint>
#include <string>

#include "fklens/angle.hpp"
#include "fklens/grids.hpp"
#include "fklens/linalg.hpp"

namespace fklens {

/// U(2) element e^{−i(n−2j)ω} D(φ, θ, ψ) in z-y-z Euler angles.
struct EulerParams {
  AngleRad omega;
  AngleRad phi;
  AngleRad theta;
  AngleRad psi;
};

/// Codes are part of the cache file format; never renumber.
enum class KernelKind : std::uint8_t {
  rot_cart = 0,
  aniso = 1,
  gyration = 2,
  iso = 3,
  u2_cart = 4,
  rot_polar = 5,
  u2_polar = 6,
  map_U = 7,
};

std::string to_string(KernelKind kind);

enum class GridKind {
  cartesian,      ///< Cartesian rows and columns
  polar,          ///< polar rows and columns
  cart_to_polar,  ///< polar rows, Cartesian columns
};

GridKind grid_kind_of(KernelKind kind);

/// Dense N²×N² unitary matrix. Rows and columns follow enumerate_cartesian()
/// or enumerate_polar() according to `grid`. Single-angle kinds store their
/// angle in params[0] and zeros elsewhere; U(2) kinds store (ω, φ, θ, ψ).
struct Kernel {
  GridSpec spec;
  GridKind grid;
  KernelKind kind;
  std::array<double, 4> params{};
  CMatrix values;
};

/// Build-time unitarity threshold on max |K†K − I|.
inline constexpr double kUnitarityTolerance = 1e-10;

/// Throws UnitarityError if the kernel fails the threshold.
void check_unitary(const Kernel& kernel, double tol = kUnitarityTolerance);

// Angle bookkeeping. Every Cartesian kernel is T B Tᵀ with T the real Ψ□ table
// and B block-diagonal over total mode n (rows of spin J_n = min(n, 4j−n)/2,
// magnetic label μ = (n_x−n_y)/2):
//
//   kernel                  block B_n
//   rotation R(θ)           d^{J_n}(2θ)
//   anisotropic A(φ)        diag e^{−4iφμ}        (= e^{−2iφ(n_x−n_y)})
//   gyration G(ψ)           A(π/8) R(ψ) A(π/8)⁻¹
//   isotropic K(ω)          e^{−2iωn}
//   U(2) D(ω; φ, θ, ψ)      e^{−i(n−2j)ω} D^{J_n}(φ, θ, ψ)
//                           = e^{2ijω} K(ω/2) A(φ/4) R(θ/2) A(ψ/4)
//
// so D(0; 0, 2θ, 0) = R(θ). Polar kernels act on rings, and the polar
// rotation by θ shifts ring ρ by l pixels at θ = 2πl/(2ρ+1).

Kernel kernel_rotation_cart(const GridSpec& spec, AngleRad theta);
Kernel kernel_aniso(const GridSpec& spec, AngleRad phi);
/// Matrix product A(π/8) R(ψ) A(−π/8).
Kernel kernel_gyration(const GridSpec& spec, AngleRad psi);
/// Same element from a single sum over modes with phases e^{∓iπμ/2} around
/// d^{J_n}(2ψ).
Kernel kernel_gyration_explicit(const GridSpec& spec, AngleRad psi);
Kernel kernel_isotropic(const GridSpec& spec, AngleRad omega);
/// Factorized route: product of the four mode-space factors.
Kernel kernel_u2_cart(const GridSpec& spec, const EulerParams& p);
/// Direct route: Big-D blocks evaluated entry by entry.
Kernel kernel_u2_cart_direct(const GridSpec& spec, const EulerParams& p);
/// Block-diagonal over rings, entries sin[(ρ+½)Δ] / ((2ρ+1) sin[Δ/2]) with
/// Δ = θ − φ_k + φ_{k'}.
Kernel kernel_rotation_polar(const GridSpec& spec, AngleRad theta);
/// U · D□(p) · U†.
Kernel kernel_u2_polar(const GridSpec& spec, const EulerParams& p);

/// Parameters of the product: D(compose(a, b)) = D(a) D(b).
EulerParams compose(const EulerParams& a, const EulerParams& b);

/// Mode-space block matrix B (rows and columns enumerate_cart_modes) of the
/// U(2) element; exposed for tests and the oracle comparison.
CMatrix u2_mode_matrix(const GridSpec& spec, const EulerParams& p);

/// T B Tᵀ for a real T, fixed summation order.
CMatrix sandwich(const RMatrix& t, const CMatrix& b);

}  // namespace fklens

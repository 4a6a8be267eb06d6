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

#include "fklens/angle.hpp"
#include "fklens/half_int.hpp"
#include "fklens/linalg.hpp"

namespace fklens {

/// Largest representation label evaluated before PrecisionError is raised.
inline constexpr HalfInt kMaxJ{64};

/// Wigner little-d function d^j_{m1,m2}(β) = <j m1| exp(−iβJ_y) |j m2>.
///
/// Evaluated through the Jacobi-polynomial form with a log-domain prefactor
/// and the forward three-term recurrence; valid for every finite β. The
/// alternating trigonometric sum in wigner_little_d_sum() is algebraically
/// identical but loses digits near β = π/2 once j exceeds ~10.
double wigner_little_d(HalfInt j, HalfInt m1, HalfInt m2, AngleRad beta);

/// The explicit finite trigonometric sum over
/// max(0, m2−m1) ≤ k ≤ min(j−m1, j+m2), factorials in log domain with
/// sign tracking. Kept as an independent route for cross-checks.
double wigner_little_d_sum(HalfInt j, HalfInt m1, HalfInt m2, AngleRad beta);

/// Full (2j+1)×(2j+1) little-d matrix; rows m1 and columns m2 both run
/// from −j to j ascending.
RMatrix wigner_little_d_matrix(HalfInt j, AngleRad beta);

/// e^{−iιω} e^{−iμφ} d^ι_{μ,μ'}(θ) e^{−iμ'ψ}.
cplx wigner_big_D(HalfInt iota, HalfInt mu, HalfInt mu2, AngleRad omega,
                  AngleRad phi, AngleRad theta, AngleRad psi);

/// Kravchuk function Ψ_n(q), the normalized eigenvector of the pseudo-energy
/// matrix with eigenvalue n−j, with sign fixed by Ψ_n(−j) > 0.
///
/// Convention: Ψ_n(q) = d^j_{q, j−n}(π/2) = (−1)^n d^j_{n−j, q}(π/2). This is
/// self-dual, Ψ_n(q) = Ψ_{q+j}(n−j), and Ψ_0 is the discrete Gaussian
/// 2^{−j} √C(2j, q+j).
double kravchuk_psi(HalfInt j, int n, HalfInt q);

/// (−1)^n 2^{−j} √(C(2j,n) C(2j,q+j)) K_n(q+j; ½, 2j) with the symmetric
/// Kravchuk polynomial as a terminating ₂F₁. Equals (−1)^n kravchuk_psi().
/// Plain double summation; intended for j ≤ 16.
double kravchuk_psi_binomial(HalfInt j, int n, HalfInt q);

/// N×N table with rows q = −j…j and columns n = 0…2j.
RMatrix kravchuk_table(HalfInt j);

/// Condon–Shortley Clebsch–Gordan coefficient <j1 m1; j2 m2 | J M>.
///
/// Racah's single sum: the prefactor is assembled from log-factorials and
/// the alternating sum is carried out exactly in integer arithmetic, so the
/// result carries only the final rounding. Returns 0 when M ≠ m1+m2.
double clebsch_gordan(HalfInt j1, HalfInt m1, HalfInt j2, HalfInt m2, HalfInt J,
                      HalfInt M);

/// Phase between radius–angular-momentum and mode–angular-momentum states,
/// (−1)^{j+ρ} exp[iπ(κ+|m|−m)/2]. For half-integer j the sign factor is
/// e^{iπ(j+ρ)}.
cplx ra_ma_phase(HalfInt j, int rho, HalfInt kappa, HalfInt m);

namespace detail {
/// log(n!) for 0 ≤ n < 600, tabulated once.
double log_factorial(int n);
}  // namespace detail

}  // namespace fklens

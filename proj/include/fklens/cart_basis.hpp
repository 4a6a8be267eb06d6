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

#include <memory>

#include "fklens/grids.hpp"
#include "fklens/linalg.hpp"

namespace fklens {

enum class BasisKind {
  cart_mode,  ///< columns Ψ□_{n_x,n_y}, ordered as enumerate_cart_modes()
  ma,         ///< columns Λ□_{n,m}, ordered as enumerate_ma_rhombus()
  polar,      ///< columns Ψ°_{n,m} on polar rows, ordered as enumerate_ma_rhombus()
};

/// Square N²×N² table: rows are grid points in canonical order, columns are
/// basis functions.
struct BasisTable {
  GridSpec spec;
  BasisKind kind;
  CMatrix values;
};

/// Ψ_{n_x}(q_x) Ψ_{n_y}(q_y).
double psi_square(const GridSpec& spec, int nx, int ny, HalfInt qx, HalfInt qy);

/// Mode/angular-momentum function Λ□_{n,m}(q_x, q_y) on the square grid.
///
/// For n ≤ 2j:
///   Λ_{n,m} = e^{−iπn/4} Σ_{n_x+n_y=n} e^{iπ(n_x−n_y)/4} d^{n/2}_{m/2,μ}(π/2) Ψ□_{n_x,n_y}
/// with μ = (n_x−n_y)/2, and for n > 2j
///   Λ_{n,m}(q) = (−i)^m (−1)^{q_x+q_y} Λ_{4j−n,−m}(q).
/// The two branches agree on n = 2j. Each column is an eigenvector of the
/// imported angular momentum with eigenvalue m, Λ_{n,−m} = Λ_{n,m}*, and
/// Λ_{n,m}(−q) = (−1)^n Λ_{n,m}(q).
cplx lambda_square(const GridSpec& spec, int n, HalfInt m, HalfInt qx, HalfInt qy);

/// Real N²×N² table of Ψ□ (rows enumerate_cartesian, columns
/// enumerate_cart_modes). Built once per j and shared.
std::shared_ptr<const RMatrix> psi_square_table(const GridSpec& spec);

/// Coefficients expressing each Λ□_{n,m} in the Cartesian mode basis: rows
/// enumerate_cart_modes, columns enumerate_ma_rhombus. Unitary and
/// block-diagonal in n. Built once per j and shared.
std::shared_ptr<const CMatrix> ma_coefficients(const GridSpec& spec);

/// Cached table for BasisKind::cart_mode or BasisKind::ma.
std::shared_ptr<const BasisTable> cart_basis_table(const GridSpec& spec, BasisKind kind);

}  // namespace fklens

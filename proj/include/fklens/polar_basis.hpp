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

#include "fklens/cart_basis.hpp"
#include "fklens/grids.hpp"
#include "fklens/linalg.hpp"

namespace fklens {

/// <radius ρ, angular momentum m | total mode κ = n−2j, angular momentum m>
/// = φ(j, ρ, κ, m) · C^{j,j,ρ}_{(m+κ)/2,(m−κ)/2,m}.
///
/// Zero when |m| > ρ. Throws DomainError when (m±κ)/2 are not magnetic
/// numbers of spin j or ρ is outside 0…2j.
cplx ra_ma_overlap(const GridSpec& spec, int rho, HalfInt kappa, HalfInt m);

/// Polar oscillator wavefunction Ψ°_{n,m}(ρ, φ_k) =
/// e^{imφ_k} / √(2ρ+1) · ra_ma_overlap(ρ, n−2j, m).
cplx psi_circ(const GridSpec& spec, int n, HalfInt m, int rho, int k);

/// N²×N² table of Ψ°: rows enumerate_polar, columns enumerate_ma_rhombus.
/// Cached per j when the ring offsets are all zero.
std::shared_ptr<const BasisTable> polar_basis_table(const GridSpec& spec);

}  // namespace fklens

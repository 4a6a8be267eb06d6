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
#include <string_view>
#include <utility>
#include <vector>

#include "fklens/grids.hpp"
#include "fklens/linalg.hpp"

namespace fklens {

// Brute-force reference constructions. Nothing here calls the closed-form
// special functions; Kravchuk vectors come from diagonalizing K directly.

enum class SpaceTag {
  position_1d,
  position_2d,  ///< index (q_x + j) N + (q_y + j)
  mode_2d,      ///< index n_x N + n_y
};

struct GeneratorMatrix {
  GridSpec spec;
  SpaceTag space;
  std::string name;
  CMatrix values;
};

/// Largest N the oracle accepts for two-dimensional constructions.
inline constexpr int kOracleMaxSize = 17;

struct Su2Matrices {
  CMatrix Q;  ///< diag(−j, …, j)
  CMatrix P;
  CMatrix K;  ///< pseudo-energy, spectrum n − j with Gaussian ground state
};

/// Spin-j position, momentum and pseudo-energy matrices, rows m = −j…j,
/// satisfying [K,Q] = −iP, [K,P] = iQ, [Q,P] = −iK.
Su2Matrices build_su2_matrices(HalfInt j);

/// Identity-padded x/y copies ("Qx", "Px", "Kx", "Qy", "Py", "Ky"), the
/// antisymmetric so(4) generators "J12" … "J34" of the Cartesian pattern
///   J12 = Kx+Ky, J13 = −(Px+Py), J14 = Qx−Qy,
///   J23 = Qx+Qy, J24 = Px−Py,    J34 = Kx−Ky,
/// the polar-pattern aliases "K" = J12, "Pcirc_x" = −J13, "Pcirc_y" = −J14,
/// "Qcirc_x" = J23, "Qcirc_y" = J24, "M_pattern" = J34, and
/// "R_casimir" = J23² + J24² + J34², all in the 2D position basis.
std::vector<GeneratorMatrix> build_so4_generators(const GridSpec& spec);

const GeneratorMatrix& find_generator(const std::vector<GeneratorMatrix>& set,
                                      std::string_view name);

/// J_{ab} for 1 ≤ a, b ≤ 4 from a generator set, with J_{ba} = −J_{ab} and
/// J_{aa} = 0.
CMatrix so4_element(const std::vector<GeneratorMatrix>& set, int a, int b);

/// Imported angular momentum on the Cartesian mode basis:
///   n ≤ 2j: M|n_x,n_y> = −i√(n_y(n_x+1)) |n_x+1,n_y−1> + i√(n_x(n_y+1)) |n_x−1,n_y+1>
///   n > 2j: the same ladder with n_x → 2j−n_y, n_y → 2j−n_x in the radicands.
GeneratorMatrix build_imported_M_modes(const GridSpec& spec);

/// Imported M conjugated to the position basis with oracle Kravchuk vectors.
GeneratorMatrix build_imported_M(const GridSpec& spec);

/// Kravchuk vectors by diagonalizing K: rows q = −j…j, column n has
/// eigenvalue n − j and a positive first component.
RMatrix oracle_kravchuk(HalfInt j);

/// exp(−itG) for Hermitian G via eigendecomposition. Throws DomainError when
/// G is not Hermitian to 1e−13.
CMatrix numeric_expm_hermitian(const CMatrix& g, double t);
CMatrix numeric_expm_hermitian(const GeneratorMatrix& g, double t);

/// Eigenvalue clusters (within tol) with their orthogonal projectors,
/// eigenvalues ascending.
std::vector<std::pair<double, CMatrix>> spectral_projectors(const CMatrix& h, double tol = 1e-8);

/// Ascending eigenvalues of a Hermitian matrix.
Eigen::VectorXd hermitian_spectrum(const CMatrix& h);

double hermitian_defect(const CMatrix& h);

}  // namespace fklens

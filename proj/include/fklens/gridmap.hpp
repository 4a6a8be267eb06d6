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

#include "fklens/fourier_group.hpp"
#include "fklens/grids.hpp"
#include "fklens/linalg.hpp"

namespace fklens {

struct CartImage {
  GridSpec spec;
  CVector pixels;  ///< enumerate_cartesian() order
};

struct PolarImage {
  GridSpec spec;
  CVector pixels;  ///< enumerate_polar() order
};

/// U = (polar table) · (MA table)†, polar rows × Cartesian columns.
///
/// With the default ring offsets U is real up to rounding. `values` always
/// holds the full complex product; `is_real` records max |Im U| < 1e−12.
struct MapMatrix {
  bool is_real = false;
  RMatrix real;     ///< real part, set when is_real
  CMatrix values;   ///< always set, never truncated
};

MapMatrix map_matrix(const GridSpec& spec);

/// Cartesian → polar kernel U.
Kernel kernel_U(const GridSpec& spec);
/// Polar → Cartesian kernel V = U†. Tagged map_U; rows Cartesian.
Kernel kernel_V(const GridSpec& spec);

PolarImage cart_to_polar(const CartImage& img);
PolarImage cart_to_polar(const CartImage& img, const Kernel& u);
CartImage polar_to_cart(const PolarImage& img);
CartImage polar_to_cart(const PolarImage& img, const Kernel& u);

/// Applies a square kernel to an image vector after checking dimensions.
CVector apply_kernel(const Kernel& kernel, const CVector& pixels);

}  // namespace fklens

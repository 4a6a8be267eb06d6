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

#include "fklens/gridmap.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <string>

#include "fklens/cart_basis.hpp"
#include "fklens/polar_basis.hpp"

namespace fklens {

namespace {

MapMatrix build_map(const GridSpec& spec) {
  const auto polar_owner = polar_basis_table(spec);
  const BasisTable& polar = *polar_owner;
  const auto ma_owner = cart_basis_table(spec, BasisKind::ma);
  const BasisTable& ma = *ma_owner;
  MapMatrix out;
  out.values = polar.values * ma.values.adjoint();
  if (spec.has_default_offsets() && out.values.imag().cwiseAbs().maxCoeff() < 1e-12) {
    out.is_real = true;
    out.real = out.values.real();
  }
  return out;
}

void check_spec(const GridSpec& a, const GridSpec& b) {
  if (a.j() != b.j()) {
    throw DimensionError("image has j = " + a.j().to_string() + " but kernel has j = " +
                         b.j().to_string());
  }
}

}  // namespace

MapMatrix map_matrix(const GridSpec& spec) {
  if (!spec.has_default_offsets()) return build_map(spec);
  static std::mutex mutex;
  static std::map<int, std::shared_ptr<const MapMatrix>> maps;
  const int key = spec.j().twice();
  {
    std::lock_guard lock(mutex);
    if (auto it = maps.find(key); it != maps.end()) return *it->second;
  }
  auto built = std::make_shared<const MapMatrix>(build_map(spec));
  std::lock_guard lock(mutex);
  return *maps.emplace(key, std::move(built)).first->second;
}

Kernel kernel_U(const GridSpec& spec) {
  Kernel k{spec, GridKind::cart_to_polar, KernelKind::map_U, {}, map_matrix(spec).values};
  check_unitary(k);
  return k;
}

Kernel kernel_V(const GridSpec& spec) {
  Kernel k = kernel_U(spec);
  k.values.adjointInPlace();
  return k;
}

CVector apply_kernel(const Kernel& kernel, const CVector& pixels) {
  if (pixels.size() != kernel.values.cols()) {
    throw DimensionError("image has " + std::to_string(pixels.size()) + " pixels, kernel expects " +
                         std::to_string(kernel.values.cols()));
  }
  return kernel.values * pixels;
}

PolarImage cart_to_polar(const CartImage& img) { return cart_to_polar(img, kernel_U(img.spec)); }

PolarImage cart_to_polar(const CartImage& img, const Kernel& u) {
  check_spec(img.spec, u.spec);
  return PolarImage{u.spec, apply_kernel(u, img.pixels)};
}

CartImage polar_to_cart(const PolarImage& img) { return polar_to_cart(img, kernel_U(img.spec)); }

CartImage polar_to_cart(const PolarImage& img, const Kernel& u) {
  check_spec(img.spec, u.spec);
  if (img.pixels.size() != u.values.rows()) {
    throw DimensionError("polar image has " + std::to_string(img.pixels.size()) + " pixels");
  }
  return CartImage{GridSpec(u.spec.j()), u.values.adjoint() * img.pixels};
}

}  // namespace fklens

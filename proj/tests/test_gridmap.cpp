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

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "fklens/cart_basis.hpp"
#include "fklens/errors.hpp"
#include "fklens/gridmap.hpp"
#include "fklens/image_io.hpp"
#include "fklens/polar_basis.hpp"
#include "support/oracles.hpp"

using namespace fklens;
namespace ts = testing_support;

namespace {

constexpr double kPi = std::numbers::pi;

HalfInt H(int twice) { return HalfInt::from_twice(twice); }

CVector random_pixels(int size, bool real) {
  CVector v(size);
  for (int i = 0; i < size; ++i) v(i) = cplx(ts::uniform(-1, 1), real ? 0.0 : ts::uniform(-1, 1));
  return v;
}

CartImage letter_r() {
  const LoadedImage img = read_image(FKLENS_TEST_DATA "/letter_R_17.pgm", std::nullopt);
  return CartImage{img.spec, img.pixels / 255.0};
}

}  // namespace

TEST(MapU, UnitaryBothWays) {
  const GridSpec spec(HalfInt(2));
  const CMatrix u = kernel_U(spec).values;
  const CMatrix id = CMatrix::Identity(25, 25);
  EXPECT_LT(max_abs_diff(u * u.adjoint(), id), 1e-10);
  EXPECT_LT(max_abs_diff(kernel_V(spec).values * u, id), 1e-10);
  for (int tj = 0; tj <= 12; ++tj) EXPECT_LT(unitarity_defect(kernel_U(GridSpec(H(tj))).values), 1e-10) << tj;
}

TEST(MapU, InverseIsAdjoint) {
  const GridSpec spec(HalfInt(2));
  const Kernel u = kernel_U(spec), v = kernel_V(spec);
  EXPECT_EQ(v.values, u.values.adjoint().eval());
  EXPECT_EQ(u.grid, GridKind::cart_to_polar);
  EXPECT_EQ(u.kind, KernelKind::map_U);
}

TEST(MapU, CarriesMaColumnsToPolarColumns) {
  for (int tj = 0; tj <= 8; ++tj) {
    const GridSpec spec(H(tj));
    const auto lam_owner = cart_basis_table(spec, BasisKind::ma);
    const CMatrix& lam = lam_owner->values;
    const auto circ_owner = polar_basis_table(spec);
    const CMatrix& circ = circ_owner->values;
    EXPECT_LT(max_abs_diff(kernel_U(spec).values * lam, circ), 1e-10) << tj;
  }
}

TEST(MapU, RealWithDefaultOffsets) {
  for (int tj = 0; tj <= 10; ++tj) {
    const MapMatrix m = map_matrix(GridSpec(H(tj)));
    EXPECT_TRUE(m.is_real) << tj;
    EXPECT_LT(m.values.imag().cwiseAbs().maxCoeff(), 1e-12);
    EXPECT_EQ(m.real, m.values.real());
  }
}

TEST(MapU, ComplexWithRingOffsets) {
  std::vector<double> offsets(5, 0.0);
  offsets[2] = 0.4;
  const GridSpec spec = GridSpec(HalfInt(2)).with_ring_offsets(offsets);
  const MapMatrix m = map_matrix(spec);
  EXPECT_FALSE(m.is_real);
  EXPECT_LT(unitarity_defect(m.values), 1e-10);
}

TEST(MapU, EntryCountAtSize32) {
  const GridSpec spec = GridSpec::from_size(32);
  const Kernel u = kernel_U(spec);
  EXPECT_EQ(u.values.size(), 1 << 20);
  EXPECT_LT(unitarity_defect(u.values), 1e-10);
}

TEST(CartToPolar, ZeroMapsToZero) {
  const GridSpec spec(HalfInt(2));
  const PolarImage p = cart_to_polar(CartImage{spec, CVector::Zero(25)});
  EXPECT_EQ(p.pixels, CVector::Zero(25));
  const CartImage c = polar_to_cart(PolarImage{spec, CVector::Zero(25)});
  EXPECT_EQ(c.pixels, CVector::Zero(25));
}

TEST(CartToPolar, PreservesNorm) {
  const GridSpec spec(HalfInt(3));
  for (int trial = 0; trial < 20; ++trial) {
    const CVector f = random_pixels(49, trial % 2 == 0);
    EXPECT_NEAR(cart_to_polar(CartImage{spec, f}).pixels.norm(), f.norm(), 1e-12);
  }
}

TEST(CartToPolar, RealImagesStayReal) {
  const GridSpec spec(HalfInt(2));
  const CVector f = random_pixels(25, true);
  const PolarImage p = cart_to_polar(CartImage{spec, f});
  EXPECT_LT(p.pixels.imag().cwiseAbs().maxCoeff(), 1e-10);
  const CartImage back = polar_to_cart(PolarImage{spec, random_pixels(25, true)});
  EXPECT_LT(back.pixels.imag().cwiseAbs().maxCoeff(), 1e-10);
}

TEST(CartToPolar, LetterRoundTrip) {
  const CartImage r = letter_r();
  ASSERT_EQ(r.spec.size(), 17);
  EXPECT_EQ(r.pixels.real().maxCoeff(), 1.0);
  const CartImage back = polar_to_cart(cart_to_polar(r));
  EXPECT_LT((back.pixels - r.pixels).cwiseAbs().maxCoeff(), 1e-10);
}

TEST(CartToPolar, DimensionAndSpecMismatch) {
  const GridSpec spec(HalfInt(2));
  EXPECT_THROW(cart_to_polar(CartImage{spec, CVector::Zero(24)}), DimensionError);
  EXPECT_THROW(cart_to_polar(CartImage{spec, CVector::Zero(25)}, kernel_U(GridSpec(HalfInt(1)))), DimensionError);
  EXPECT_THROW(polar_to_cart(PolarImage{spec, CVector::Zero(9)}), DimensionError);
}

TEST(Intertwining, PolarU2IsConjugatedCartesian) {
  for (int tj = 0; tj <= 6; ++tj) {
    const GridSpec spec(H(tj));
    const EulerParams p{AngleRad(0.3), AngleRad(-1.0), AngleRad(2.2), AngleRad(0.5)};
    const CMatrix u = kernel_U(spec).values;
    EXPECT_LT(max_abs_diff(u * kernel_u2_cart(spec, p).values * u.adjoint(), kernel_u2_polar(spec, p).values), 1e-9);
    const double theta = ts::uniform(-kPi, kPi);
    EXPECT_LT(max_abs_diff(u * kernel_rotation_cart(spec, AngleRad(theta)).values * u.adjoint(),
                           kernel_rotation_polar(spec, AngleRad(theta)).values),
              1e-9)
        << tj;
  }
}

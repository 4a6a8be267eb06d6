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

#include "fklens/fourier_group.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <vector>

#include "fklens/cart_basis.hpp"
#include "fklens/gridmap.hpp"
#include "fklens/specfun.hpp"

namespace fklens {

namespace {

// One rhombus row: modes with n_x + n_y = n in ascending μ.
struct ModeRow {
  int n;
  HalfInt spin;
  std::vector<int> modes;
  std::vector<HalfInt> mu;
};

std::vector<ModeRow> mode_rows(const GridSpec& spec) {
  const int two_j = spec.j().twice();
  std::vector<ModeRow> rows;
  for (int n = 0; n <= spec.max_mode(); ++n) {
    ModeRow row{n, spec.row_spin(n), {}, {}};
    for (int nx = std::max(0, n - two_j); nx <= std::min(n, two_j); ++nx) {
      row.modes.push_back(mode_index(spec, nx, n - nx));
      row.mu.push_back(HalfInt::from_twice(2 * nx - n));
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

CMatrix block_matrix(const GridSpec& spec, const std::function<CMatrix(const ModeRow&)>& block) {
  CMatrix b = CMatrix::Zero(spec.points(), spec.points());
  for (const ModeRow& row : mode_rows(spec)) {
    const CMatrix blk = block(row);
    const int w = static_cast<int>(row.modes.size());
    for (int r = 0; r < w; ++r) {
      for (int c = 0; c < w; ++c) b(row.modes[r], row.modes[c]) = blk(r, c);
    }
  }
  return b;
}

CMatrix mu_phases(const ModeRow& row, double rate) {
  CMatrix d = CMatrix::Zero(row.modes.size(), row.modes.size());
  for (std::size_t i = 0; i < row.mu.size(); ++i) d(i, i) = std::polar(1.0, -rate * row.mu[i].value());
  return d;
}

CMatrix rotation_block(const ModeRow& row, double beta) {
  const auto w = static_cast<Eigen::Index>(row.modes.size());
  if (beta == 0.0) return CMatrix::Identity(w, w);
  return wigner_little_d_matrix(row.spin, AngleRad(beta)).cast<cplx>();
}

Kernel finish(const GridSpec& spec, GridKind grid, KernelKind kind, std::array<double, 4> params,
              CMatrix values) {
  Kernel k{spec, grid, kind, params, std::move(values)};
  check_unitary(k);
  return k;
}

Kernel cart_kernel(const GridSpec& spec, KernelKind kind, std::array<double, 4> params,
                   const CMatrix& mode_matrix) {
  const GridSpec plain(spec.j());
  // The identity element is exactly the identity matrix, not T·Tᵀ.
  CMatrix values = mode_matrix.isIdentity(0.0) ? CMatrix::Identity(plain.points(), plain.points())
                                               : sandwich(*psi_square_table(plain), mode_matrix);
  return finish(plain, GridKind::cartesian, kind, params, std::move(values));
}

CMatrix aniso_modes(const GridSpec& spec, double phi) {
  return block_matrix(spec, [&](const ModeRow& row) { return mu_phases(row, 4.0 * phi); });
}

CMatrix rotation_modes(const GridSpec& spec, double theta) {
  return block_matrix(spec, [&](const ModeRow& row) { return rotation_block(row, 2.0 * theta); });
}

// 2×2 SU(2) element e^{−iφσz/2} e^{−iθσy/2} e^{−iψσz/2}.
Eigen::Matrix2cd su2(const EulerParams& p) {
  const double c = std::cos(p.theta.value() / 2), s = std::sin(p.theta.value() / 2);
  const cplx ephi = std::polar(1.0, -p.phi.value() / 2);
  const cplx epsi = std::polar(1.0, -p.psi.value() / 2);
  Eigen::Matrix2cd g;
  g << ephi * c * epsi, -ephi * s * std::conj(epsi),
       std::conj(ephi) * s * epsi, std::conj(ephi) * c * std::conj(epsi);
  return g;
}

}  // namespace

std::string to_string(KernelKind kind) {
  switch (kind) {
    case KernelKind::rot_cart: return "rot_cart";
    case KernelKind::aniso: return "aniso";
    case KernelKind::gyration: return "gyration";
    case KernelKind::iso: return "iso";
    case KernelKind::u2_cart: return "u2_cart";
    case KernelKind::rot_polar: return "rot_polar";
    case KernelKind::u2_polar: return "u2_polar";
    case KernelKind::map_U: return "map_U";
  }
  return "unknown";
}

GridKind grid_kind_of(KernelKind kind) {
  switch (kind) {
    case KernelKind::rot_polar:
    case KernelKind::u2_polar: return GridKind::polar;
    case KernelKind::map_U: return GridKind::cart_to_polar;
    default: return GridKind::cartesian;
  }
}

void check_unitary(const Kernel& kernel, double tol) {
  const CMatrix& v = kernel.values;
  if (v.rows() != kernel.spec.points() || v.cols() != kernel.spec.points()) {
    throw DimensionError("kernel is not N²×N²");
  }
  double defect;
  if (v.imag().isZero(0.0)) {
    RMatrix g = v.real().transpose() * v.real();
    g.diagonal().array() -= 1.0;
    defect = g.cwiseAbs().maxCoeff();
  } else {
    defect = unitarity_defect(v);
  }
  if (!(defect < tol)) {
    throw UnitarityError(to_string(kernel.kind) + " kernel at j = " + kernel.spec.j().to_string() +
                         " has unitarity defect " + std::to_string(defect));
  }
}

CMatrix sandwich(const RMatrix& t, const CMatrix& b) {
  const RMatrix tt = t.transpose();
  RMatrix left = t * b.real();
  RMatrix re = left * tt;
  if (b.imag().isZero(0.0)) return re.cast<cplx>();
  left.noalias() = t * b.imag();
  RMatrix im = left * tt;
  CMatrix out(re.rows(), re.cols());
  out.real() = re;
  out.imag() = im;
  return out;
}

Kernel kernel_rotation_cart(const GridSpec& spec, AngleRad theta) {
  return cart_kernel(spec, KernelKind::rot_cart, {theta.value(), 0, 0, 0},
                     rotation_modes(spec, theta.value()));
}

Kernel kernel_aniso(const GridSpec& spec, AngleRad phi) {
  return cart_kernel(spec, KernelKind::aniso, {phi.value(), 0, 0, 0},
                     aniso_modes(spec, phi.value()));
}

Kernel kernel_gyration(const GridSpec& spec, AngleRad psi) {
  const double eighth = std::numbers::pi / 8.0;
  const Kernel a = kernel_aniso(spec, AngleRad(eighth));
  const Kernel a_inv = kernel_aniso(spec, AngleRad(-eighth));
  const Kernel r = kernel_rotation_cart(spec, psi);
  if (r.values.isIdentity(0.0)) {
    return finish(r.spec, GridKind::cartesian, KernelKind::gyration, {psi.value(), 0, 0, 0}, r.values);
  }
  CMatrix ar = a.values * r.values.real();
  return finish(a.spec, GridKind::cartesian, KernelKind::gyration, {psi.value(), 0, 0, 0},
                ar * a_inv.values);
}

Kernel kernel_gyration_explicit(const GridSpec& spec, AngleRad psi) {
  const double quarter_turn = std::numbers::pi / 2.0;
  CMatrix modes = block_matrix(spec, [&](const ModeRow& row) {
    return CMatrix(mu_phases(row, quarter_turn) * rotation_block(row, 2.0 * psi.value()) *
                   mu_phases(row, -quarter_turn));
  });
  return cart_kernel(spec, KernelKind::gyration, {psi.value(), 0, 0, 0}, modes);
}

Kernel kernel_isotropic(const GridSpec& spec, AngleRad omega) {
  CMatrix modes = block_matrix(spec, [&](const ModeRow& row) {
    const int w = static_cast<int>(row.modes.size());
    return CMatrix(CMatrix::Identity(w, w) * std::polar(1.0, -2.0 * omega.value() * row.n));
  });
  return cart_kernel(spec, KernelKind::iso, {omega.value(), 0, 0, 0}, modes);
}

CMatrix u2_mode_matrix(const GridSpec& spec, const EulerParams& p) {
  const double w = p.omega.value();
  const cplx global = std::polar(1.0, spec.j().twice() * w);
  return block_matrix(spec, [&](const ModeRow& row) {
    const int size = static_cast<int>(row.modes.size());
    const CMatrix iso = CMatrix::Identity(size, size) * std::polar(1.0, -w * row.n);
    // K(ω/2) A(φ/4) R(θ/2) A(ψ/4)
    return CMatrix(global * iso * mu_phases(row, p.phi.value()) *
                   rotation_block(row, p.theta.value()) * mu_phases(row, p.psi.value()));
  });
}

Kernel kernel_u2_cart(const GridSpec& spec, const EulerParams& p) {
  return cart_kernel(spec, KernelKind::u2_cart,
                     {p.omega.value(), p.phi.value(), p.theta.value(), p.psi.value()},
                     u2_mode_matrix(spec, p));
}

Kernel kernel_u2_cart_direct(const GridSpec& spec, const EulerParams& p) {
  const AngleRad zero(0.0);
  const int two_j = spec.j().twice();
  CMatrix modes = block_matrix(spec, [&](const ModeRow& row) {
    const int size = static_cast<int>(row.modes.size());
    const cplx iso = std::polar(1.0, -(row.n - two_j) * p.omega.value());
    CMatrix blk(size, size);
    for (int r = 0; r < size; ++r) {
      for (int c = 0; c < size; ++c) {
        blk(r, c) = iso * wigner_big_D(row.spin, row.mu[r], row.mu[c], zero, p.phi, p.theta, p.psi);
      }
    }
    return blk;
  });
  return cart_kernel(spec, KernelKind::u2_cart,
                     {p.omega.value(), p.phi.value(), p.theta.value(), p.psi.value()}, modes);
}

Kernel kernel_rotation_polar(const GridSpec& spec, AngleRad theta) {
  RMatrix v = RMatrix::Zero(spec.points(), spec.points());
  if (theta.value() == 0.0) {
    return finish(spec, GridKind::polar, KernelKind::rot_polar, {0, 0, 0, 0},
                  CMatrix::Identity(spec.points(), spec.points()));
  }
  for (int rho = 0; rho < spec.size(); ++rho) {
    const double width = 2.0 * rho + 1.0;
    const double half = rho + 0.5;
    for (int k = -rho; k <= rho; ++k) {
      for (int k2 = -rho; k2 <= rho; ++k2) {
        const double delta = theta.value() - spec.phi(rho, k) + spec.phi(rho, k2);
        const double den = std::sin(0.5 * delta);
        const double value =
            std::abs(den) < 1e-9 * half ? 1.0 : std::sin(half * delta) / (width * den);
        v(polar_index(spec, rho, k), polar_index(spec, rho, k2)) = value;
      }
    }
  }
  return finish(spec, GridKind::polar, KernelKind::rot_polar, {theta.value(), 0, 0, 0},
                v.cast<cplx>());
}

Kernel kernel_u2_polar(const GridSpec& spec, const EulerParams& p) {
  const Kernel cart = kernel_u2_cart(spec, p);
  const MapMatrix map = map_matrix(spec);
  CMatrix values;
  if (cart.values.isIdentity(0.0)) {
    values = cart.values;
  } else if (map.is_real) {
    values = sandwich(map.real, cart.values);
  } else {
    CMatrix left = map.values * cart.values;
    values = left * map.values.adjoint();
  }
  return finish(spec, GridKind::polar, KernelKind::u2_polar, cart.params, std::move(values));
}

EulerParams compose(const EulerParams& a, const EulerParams& b) {
  const Eigen::Matrix2cd g = su2(a) * su2(b);
  const cplx top = g(0, 0);
  const cplx off = -g(0, 1);
  const double theta = 2.0 * std::atan2(std::abs(off), std::abs(top));
  const double arg_top = std::abs(top) == 0.0 ? 0.0 : std::arg(top);
  const double arg_off = std::abs(off) == 0.0 ? 0.0 : std::arg(off);
  return EulerParams{a.omega + b.omega, AngleRad(-arg_top - arg_off), AngleRad(theta),
                     AngleRad(-arg_top + arg_off)};
}

}  // namespace fklens

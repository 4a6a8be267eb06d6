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

#include "fklens/cart_basis.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numbers>
#include <utility>

#include "fklens/specfun.hpp"

namespace fklens {

namespace {

struct TableCache {
  std::mutex mutex;
  std::map<int, std::shared_ptr<const RMatrix>> psi;
  std::map<int, std::shared_ptr<const CMatrix>> coeff;
  std::map<std::pair<int, int>, std::shared_ptr<const BasisTable>> tables;
};

TableCache& cache() {
  static TableCache c;
  return c;
}

RMatrix build_psi_square(const GridSpec& spec) {
  const RMatrix one = kravchuk_table(spec.j());
  const int n = spec.size();
  RMatrix t(n * n, n * n);
  for (int ix = 0; ix < n; ++ix) {
    for (int iy = 0; iy < n; ++iy) {
      const int row = ix * n + iy;
      for (int nx = 0; nx < n; ++nx) {
        const double a = one(ix, nx);
        for (int ny = 0; ny < n; ++ny) t(row, nx * n + ny) = a * one(iy, ny);
      }
    }
  }
  return t;
}

// Lower-half column (n ≤ 2j) of Λ in the mode basis, written into `out`.
void lower_column(const GridSpec& spec, int n, int m, int col, CMatrix& out) {
  const double quarter = std::numbers::pi / 4.0;
  const AngleRad half_pi(std::numbers::pi / 2.0);
  const int two_j = spec.j().twice();
  for (int nx = std::max(0, n - two_j); nx <= std::min(n, two_j); ++nx) {
    const int ny = n - nx;
    const double d = wigner_little_d(HalfInt::from_twice(n), HalfInt::from_twice(m),
                                     HalfInt::from_twice(nx - ny), half_pi);
    out(mode_index(spec, nx, ny), col) = std::polar(d, quarter * (nx - ny - n));
  }
}

CMatrix build_coefficients(const GridSpec& spec) {
  const int size = spec.points();
  const int two_j = spec.j().twice();
  CMatrix c = CMatrix::Zero(size, size);
  const auto labels = enumerate_ma_rhombus(spec);
  for (int col = 0; col < size; ++col) {
    const int n = labels[col].n;
    const int m = labels[col].m_or_mu.as_int();
    if (n <= two_j) {
      lower_column(spec, n, m, col, c);
      continue;
    }
    // (−1)^{q_x+q_y} Ψ□_{a,b} = (−1)^{2j} Ψ□_{2j−a,2j−b}, so the upper
    // column is the lower (4j−n, −m) column with reflected mode labels.
    CMatrix lower = CMatrix::Zero(size, 1);
    lower_column(spec, spec.max_mode() - n, -m, 0, lower);
    const cplx phase = phase_pi(HalfInt::from_twice(-m)) * double(sign_power(two_j));
    for (int a = 0; a <= two_j; ++a) {
      for (int b = 0; b <= two_j; ++b) {
        const cplx v = lower(mode_index(spec, a, b), 0);
        if (v != cplx{}) c(mode_index(spec, two_j - a, two_j - b), col) = phase * v;
      }
    }
  }
  return c;
}

}  // namespace

double psi_square(const GridSpec& spec, int nx, int ny, HalfInt qx, HalfInt qy) {
  const HalfInt j = spec.j();
  return kravchuk_psi(j, nx, qx) * kravchuk_psi(j, ny, qy);
}

cplx lambda_square(const GridSpec& spec, int n, HalfInt m, HalfInt qx, HalfInt qy) {
  if (!in_ma_rhombus(spec, n, m)) {
    throw DomainError("(" + std::to_string(n) + ", " + m.to_string() +
                      ") is outside the MA rhombus");
  }
  const int row = cart_index(spec, qx, qy);
  const int col = ma_index(spec, n, m);
  const auto psi_owner = psi_square_table(spec);
  const RMatrix& psi = *psi_owner;
  const auto coeff_owner = ma_coefficients(spec);
  const CMatrix& coeff = *coeff_owner;
  cplx sum{};
  for (int k = 0; k < spec.points(); ++k) {
    if (coeff(k, col) != cplx{}) sum += psi(row, k) * coeff(k, col);
  }
  return sum;
}

std::shared_ptr<const RMatrix> psi_square_table(const GridSpec& spec) {
  auto& c = cache();
  const int key = spec.j().twice();
  {
    std::lock_guard lock(c.mutex);
    if (auto it = c.psi.find(key); it != c.psi.end()) return it->second;
  }
  auto built = std::make_shared<const RMatrix>(build_psi_square(spec));
  std::lock_guard lock(c.mutex);
  return c.psi.emplace(key, std::move(built)).first->second;
}

std::shared_ptr<const CMatrix> ma_coefficients(const GridSpec& spec) {
  auto& c = cache();
  const int key = spec.j().twice();
  {
    std::lock_guard lock(c.mutex);
    if (auto it = c.coeff.find(key); it != c.coeff.end()) return it->second;
  }
  auto built = std::make_shared<const CMatrix>(build_coefficients(spec));
  std::lock_guard lock(c.mutex);
  return c.coeff.emplace(key, std::move(built)).first->second;
}

std::shared_ptr<const BasisTable> cart_basis_table(const GridSpec& spec, BasisKind kind) {
  if (kind == BasisKind::polar) {
    throw DomainError("polar tables are built by polar_basis_table()");
  }
  auto& c = cache();
  const std::pair key{spec.j().twice(), static_cast<int>(kind)};
  {
    std::lock_guard lock(c.mutex);
    if (auto it = c.tables.find(key); it != c.tables.end()) return it->second;
  }
  const GridSpec plain(spec.j());
  const auto psi_owner = psi_square_table(plain);
  const RMatrix& psi = *psi_owner;
  CMatrix values;
  if (kind == BasisKind::cart_mode) {
    values = psi.cast<cplx>();
  } else {
    const auto coeff_owner = ma_coefficients(plain);
    const CMatrix& coeff = *coeff_owner;
    values = psi * coeff.real() + kI * (psi * coeff.imag());
  }
  auto built = std::make_shared<const BasisTable>(BasisTable{plain, kind, std::move(values)});
  std::lock_guard lock(c.mutex);
  return c.tables.emplace(key, std::move(built)).first->second;
}

}  // namespace fklens

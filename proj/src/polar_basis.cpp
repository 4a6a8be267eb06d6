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

#include "fklens/polar_basis.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <string>

#include "fklens/specfun.hpp"

namespace fklens {

namespace {

void check_polar_point(const GridSpec& spec, int rho, int k) {
  if (rho < 0 || rho >= spec.size() || std::abs(k) > rho) {
    throw DomainError("(" + std::to_string(rho) + ", " + std::to_string(k) +
                      ") is not a polar point");
  }
}

BasisTable build_polar(const GridSpec& spec) {
  const int size = spec.points();
  const auto rows = enumerate_polar(spec);
  const auto cols = enumerate_ma_rhombus(spec);
  CMatrix values = CMatrix::Zero(size, size);
  for (int c = 0; c < size; ++c) {
    const HalfInt m = cols[c].m_or_mu;
    const HalfInt kappa(cols[c].n - spec.j().twice());
    int r = 0;
    for (int rho = 0; rho < spec.size(); ++rho) {
      const cplx overlap = ra_ma_overlap(spec, rho, kappa, m) / std::sqrt(2.0 * rho + 1.0);
      for (int k = -rho; k <= rho; ++k, ++r) {
        if (overlap == cplx{}) continue;
        values(r, c) = overlap * std::polar(1.0, m.value() * rows[r].phi);
      }
    }
  }
  return BasisTable{spec, BasisKind::polar, std::move(values)};
}

}  // namespace

cplx ra_ma_overlap(const GridSpec& spec, int rho, HalfInt kappa, HalfInt m) {
  const HalfInt j = spec.j();
  if (rho < 0 || rho >= spec.size()) throw DomainError("radius out of range");
  // (m ± κ)/2 must be magnetic numbers of spin j.
  const int sum = m.twice() + kappa.twice();
  const int diff = m.twice() - kappa.twice();
  auto magnetic = [&](int twice_twice) {
    const int t = twice_twice / 2;
    return std::abs(t) <= j.twice() && (t - j.twice()) % 2 == 0;
  };
  if (sum % 2 != 0 || !magnetic(sum) || !magnetic(diff)) {
    throw DomainError("(kappa, m) = (" + kappa.to_string() + ", " + m.to_string() +
                      ") has no spin-" + j.to_string() + " components");
  }
  if (abs(m) > HalfInt(rho)) return {};
  const HalfInt mx = HalfInt::from_twice(sum / 2);
  const HalfInt my = HalfInt::from_twice(diff / 2);
  return ra_ma_phase(j, rho, kappa, m) * clebsch_gordan(j, mx, j, my, HalfInt(rho), m);
}

cplx psi_circ(const GridSpec& spec, int n, HalfInt m, int rho, int k) {
  if (!in_ma_rhombus(spec, n, m)) {
    throw DomainError("(" + std::to_string(n) + ", " + m.to_string() +
                      ") is outside the MA rhombus");
  }
  check_polar_point(spec, rho, k);
  const cplx overlap = ra_ma_overlap(spec, rho, HalfInt(n - spec.j().twice()), m);
  return overlap * std::polar(1.0 / std::sqrt(2.0 * rho + 1.0), m.value() * spec.phi(rho, k));
}

std::shared_ptr<const BasisTable> polar_basis_table(const GridSpec& spec) {
  if (!spec.has_default_offsets()) {
    return std::make_shared<const BasisTable>(build_polar(spec));
  }
  static std::mutex mutex;
  static std::map<int, std::shared_ptr<const BasisTable>> tables;
  const int key = spec.j().twice();
  {
    std::lock_guard lock(mutex);
    if (auto it = tables.find(key); it != tables.end()) return it->second;
  }
  auto built = std::make_shared<const BasisTable>(build_polar(spec));
  std::lock_guard lock(mutex);
  return tables.emplace(key, std::move(built)).first->second;
}

}  // namespace fklens

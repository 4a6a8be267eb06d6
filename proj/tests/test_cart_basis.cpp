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
#include <thread>

#include "fklens/cart_basis.hpp"
#include "fklens/specfun.hpp"
#include "support/oracles.hpp"

using namespace fklens;
namespace ts = testing_support;

namespace {

constexpr double kPi = std::numbers::pi;

HalfInt H(int twice) { return HalfInt::from_twice(twice); }

// Position-basis Ψ□ table from the oracle Kravchuk vectors.
}  // namespace

TEST(PsiSquare, Separable) {
  const GridSpec spec(HalfInt(3));
  for (int trial = 0; trial < 100; ++trial) {
    const int nx = ts::uniform_int(0, 6), ny = ts::uniform_int(0, 6);
    const HalfInt qx(ts::uniform_int(-3, 3)), qy(ts::uniform_int(-3, 3));
    EXPECT_EQ(psi_square(spec, nx, ny, qx, qy), kravchuk_psi(spec.j(), nx, qx) * kravchuk_psi(spec.j(), ny, qy));
  }
}

TEST(PsiSquare, Orthonormal) {
  const GridSpec spec(HalfInt(2));
  for (int a = 0; a < 25; ++a)
    for (int b = 0; b < 25; ++b) {
      double s = 0;
      for (const auto& p : enumerate_cartesian(spec))
        s += psi_square(spec, a / 5, a % 5, p.qx, p.qy) * psi_square(spec, b / 5, b % 5, p.qx, p.qy);
      EXPECT_NEAR(s, a == b ? 1.0 : 0.0, 1e-14);
    }
}

TEST(PsiSquare, Parity) {
  const GridSpec spec(HalfInt(2));
  for (int nx = 0; nx <= 4; ++nx)
    for (int ny = 0; ny <= 4; ++ny)
      for (const auto& p : enumerate_cartesian(spec))
        EXPECT_NEAR(psi_square(spec, nx, ny, -p.qx, -p.qy), sign_power(nx + ny) * psi_square(spec, nx, ny, p.qx, p.qy),
                    1e-14);
}

TEST(PsiSquare, MatchesOracleTable) {
  for (int tj = 0; tj <= 12; ++tj) {
    const auto t_owner = psi_square_table(GridSpec(H(tj)));
    const RMatrix& t = *t_owner;
    EXPECT_LT((t - ts::psi_square_oracle(tj)).cwiseAbs().maxCoeff(), 1e-12);
  }
}

TEST(LambdaSquare, Conjugation) {
  const GridSpec spec(HalfInt(2));
  for (const auto& l : enumerate_ma_rhombus(spec))
    for (const auto& p : enumerate_cartesian(spec))
      EXPECT_NEAR(std::abs(lambda_square(spec, l.n, -l.m_or_mu, p.qx, p.qy) -
                           std::conj(lambda_square(spec, l.n, l.m_or_mu, p.qx, p.qy))),
                  0.0, 1e-13);
}

TEST(LambdaSquare, PointReflectionHasParityOfN) {
  for (int tj = 1; tj <= 6; ++tj) {
    const GridSpec spec(H(tj));
    for (const auto& l : enumerate_ma_rhombus(spec))
      for (const auto& p : enumerate_cartesian(spec))
        EXPECT_NEAR(std::abs(lambda_square(spec, l.n, l.m_or_mu, -p.qx, -p.qy) -
                             double(sign_power(l.n)) * lambda_square(spec, l.n, l.m_or_mu, p.qx, p.qy)),
                    0.0, 1e-13);
  }
}

TEST(LambdaSquare, EigenvectorsOfImportedM) {
  for (int tj = 0; tj <= 8; ++tj) {
    const GridSpec spec(H(tj));
    const RMatrix t = ts::psi_square_oracle(tj);
    const CMatrix m_pos = t.cast<cplx>() * ts::imported_M_modes(tj) * t.transpose().cast<cplx>();
    const auto lam_owner = cart_basis_table(spec, BasisKind::ma);
    const CMatrix& lam = lam_owner->values;
    const auto labels = enumerate_ma_rhombus(spec);
    double worst = 0;
    for (std::size_t c = 0; c < labels.size(); ++c) {
      worst = std::max(worst, (m_pos * lam.col(c) - labels[c].m_or_mu.value() * lam.col(c)).cwiseAbs().maxCoeff());
    }
    EXPECT_LT(worst, 1e-10) << "2j=" << tj;
  }
}

TEST(LambdaSquare, LowerHalfIsPhasedLittleDSum) {
  for (int tj = 0; tj <= 8; ++tj) {
    const GridSpec spec(H(tj));
    const int n = tj + 1;
    const RMatrix psi = ts::psi_square_oracle(tj);
    const auto lam_owner = cart_basis_table(spec, BasisKind::ma);
    const CMatrix& lam = lam_owner->values;
    for (int total = 0; total <= tj; ++total) {
      const RMatrix d = ts::little_d(total, kPi / 2);  // spin total/2
      for (int m = -total; m <= total; m += 2) {
        CVector expected = CVector::Zero(n * n);
        for (int nx = 0; nx <= total; ++nx) {
          const int ny = total - nx;
          const cplx phase = std::polar(1.0, kPi / 4 * (nx - ny - total));
          expected += phase * d((m + total) / 2, nx) * psi.col(nx * n + ny).cast<cplx>();
        }
        const CVector got = lam.col(ma_index(spec, total, HalfInt(m)));
        EXPECT_LT((got - expected).cwiseAbs().maxCoeff(), 1e-12) << tj << ' ' << total << ' ' << m;
      }
    }
  }
}

TEST(LambdaSquare, UpperHalfReflectionIdentity) {
  // Λ_{4j−n,−m}(q) = i^m (−1)^{q_x+q_y} Λ_{n,m}(q) for every row, including n = 2j.
  for (int tj = 0; tj <= 8; ++tj) {
    const GridSpec spec(H(tj));
    for (const auto& l : enumerate_ma_rhombus(spec)) {
      const int m = l.m_or_mu.as_int();
      const cplx im = std::polar(1.0, kPi / 2 * m);
      for (const auto& p : enumerate_cartesian(spec)) {
        const double sign = sign_power(p.qx + p.qy);
        const cplx lhs = lambda_square(spec, 2 * tj - l.n, HalfInt(-m), p.qx, p.qy);
        const cplx rhs = im * sign * lambda_square(spec, l.n, l.m_or_mu, p.qx, p.qy);
        EXPECT_NEAR(std::abs(lhs), std::abs(rhs), 1e-13);
        EXPECT_NEAR(std::abs(lhs - rhs), 0.0, 1e-13);
      }
    }
  }
}

TEST(LambdaSquare, CoordinateSumIsInteger) {
  for (int tj = 0; tj <= 5; ++tj)
    for (const auto& p : enumerate_cartesian(GridSpec(H(tj)))) EXPECT_TRUE((p.qx + p.qy).is_integer());
}

TEST(BasisTables, Unitary) {
  for (int tj = 0; tj <= 16; ++tj) {
    const GridSpec spec(H(tj));
    EXPECT_LT(unitarity_defect(cart_basis_table(spec, BasisKind::cart_mode)->values), 1e-11) << tj;
    EXPECT_LT(unitarity_defect(cart_basis_table(spec, BasisKind::ma)->values), 1e-11) << tj;
  }
}

TEST(BasisTables, CoefficientsBlockDiagonalInN) {
  for (int tj = 0; tj <= 6; ++tj) {
    const GridSpec spec(H(tj));
    const auto c_owner = ma_coefficients(spec);
    const CMatrix& c = *c_owner;
    const auto modes = enumerate_cart_modes(spec);
    const auto labels = enumerate_ma_rhombus(spec);
    for (std::size_t r = 0; r < modes.size(); ++r)
      for (std::size_t k = 0; k < labels.size(); ++k)
        if (modes[r].n() != labels[k].n) EXPECT_EQ(c(r, k), cplx(0.0));
    EXPECT_LT(unitarity_defect(c), 1e-13);
  }
}

TEST(BasisTables, CachedAndThreadSafe) {
  const GridSpec spec(HalfInt(5));
  std::vector<std::shared_ptr<const BasisTable>> got(6);
  std::vector<std::thread> threads;
  for (int t = 0; t < 6; ++t)
    threads.emplace_back([&, t] { got[t] = cart_basis_table(spec, BasisKind::ma); });
  for (auto& th : threads) th.join();
  for (const auto& p : got) EXPECT_EQ(p->values, got[0]->values);
  EXPECT_EQ(cart_basis_table(spec, BasisKind::ma).get(), cart_basis_table(spec, BasisKind::ma).get());
}

TEST(BasisTables, Errors) {
  const GridSpec spec(HalfInt(1));
  EXPECT_THROW(lambda_square(spec, 1, HalfInt(0), HalfInt(0), HalfInt(0)), DomainError);
  EXPECT_THROW(lambda_square(spec, 0, HalfInt(0), HalfInt(2), HalfInt(0)), DomainError);
  EXPECT_THROW(psi_square(spec, 3, 0, HalfInt(0), HalfInt(0)), DomainError);
  EXPECT_THROW(cart_basis_table(spec, BasisKind::polar), DomainError);
}

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

// Independent reference constructions for tests. Built from textbook
// angular-momentum ladders and dense eigensolvers only; none of these call
// into the closed-form special functions under test.

#include <cmath>
#include <complex>
#include <filesystem>
#include <map>
#include <random>
#include <string>
#include <tuple>

#include <Eigen/Dense>

namespace testing_support {

using cplx = std::complex<double>;
using CMat = Eigen::MatrixXcd;
using RMat = Eigen::MatrixXd;

// Spin matrices for spin tj/2, basis m = −j…j ascending.
struct Spin {
  CMat jz, jp, jm, jx, jy;
};

inline Spin spin(int tj) {
  const int n = tj + 1;
  const double j = 0.5 * tj;
  Spin s{CMat::Zero(n, n), CMat::Zero(n, n), CMat::Zero(n, n), {}, {}};
  for (int r = 0; r < n; ++r) {
    const double m = -j + r;
    s.jz(r, r) = m;
    if (r + 1 < n) s.jp(r + 1, r) = std::sqrt(j * (j + 1) - m * (m + 1));
    if (r > 0) s.jm(r - 1, r) = std::sqrt(j * (j + 1) - m * (m - 1));
  }
  s.jx = 0.5 * (s.jp + s.jm);
  s.jy = cplx(0, -0.5) * (s.jp - s.jm);
  return s;
}

// exp(−itH) for Hermitian H.
inline CMat expm_herm(const CMat& h, double t) {
  Eigen::SelfAdjointEigenSolver<CMat> es(h);
  Eigen::VectorXcd ph(h.rows());
  for (int i = 0; i < h.rows(); ++i) ph(i) = std::polar(1.0, -t * es.eigenvalues()(i));
  return es.eigenvectors() * ph.asDiagonal() * es.eigenvectors().adjoint();
}

// d^j(β) = exp(−iβ J_y), rows m1 and columns m2 ascending.
inline RMat little_d(int tj, double beta) { return expm_herm(spin(tj).jy, beta).real(); }

// Kravchuk vectors: eigenvectors of −J_x (eigenvalue n − j), first entry > 0.
// Rows q = −j…j, columns n.
inline RMat kravchuk(int tj) {
  const int n = tj + 1;
  if (n == 1) return RMat::Ones(1, 1);
  Eigen::SelfAdjointEigenSolver<RMat> es(-spin(tj).jx.real());
  RMat v = es.eigenvectors();
  for (int c = 0; c < n; ++c)
    if (v(0, c) < 0) v.col(c) *= -1;
  return v;
}

// Condon–Shortley Clebsch–Gordan table from the product space: highest
// weight states by orthogonalization, then repeated lowering. Key is the
// doubled (m1, m2, J, M).
using CgTable = std::map<std::tuple<int, int, int, int>, double>;

inline CgTable clebsch_gordan_table(int tj1, int tj2) {
  const int n1 = tj1 + 1, n2 = tj2 + 1, dim = n1 * n2;
  const Spin a = spin(tj1), b = spin(tj2);
  CMat lower = CMat::Zero(dim, dim);
  for (int i1 = 0; i1 < n1; ++i1)
    for (int i2 = 0; i2 < n2; ++i2)
      for (int k1 = 0; k1 < n1; ++k1)
        for (int k2 = 0; k2 < n2; ++k2) {
          cplx v = 0;
          if (i2 == k2) v += a.jm(i1, k1);
          if (i1 == k1) v += b.jm(i2, k2);
          lower(i1 * n2 + i2, k1 * n2 + k2) = v;
        }
  auto twice_m = [&](int idx) { return std::pair{2 * (idx / n2) - tj1, 2 * (idx % n2) - tj2}; };
  std::map<std::pair<int, int>, Eigen::VectorXd> states;
  CgTable table;
  for (int tJ = tj1 + tj2; tJ >= std::abs(tj1 - tj2); tJ -= 2) {
    // Highest weight: the M = J direction orthogonal to all larger J.
    Eigen::VectorXd best;
    double best_norm = -1;
    for (int idx = 0; idx < dim; ++idx) {
      auto [t1, t2] = twice_m(idx);
      if (t1 + t2 != tJ) continue;
      Eigen::VectorXd v = Eigen::VectorXd::Unit(dim, idx);
      for (int tK = tj1 + tj2; tK > tJ; tK -= 2) {
        const Eigen::VectorXd& w = states.at({tK, tJ});
        v -= w.dot(v) * w;
      }
      if (v.norm() > best_norm) best = v, best_norm = v.norm();
    }
    best /= best.norm();
    // Condon–Shortley: <j1 j1; j2 J−j1 | J J> > 0.
    for (int idx = dim - 1; idx >= 0; --idx) {
      if (twice_m(idx).first == tj1 && std::abs(best(idx)) > 1e-12) {
        if (best(idx) < 0) best = -best;
        break;
      }
    }
    Eigen::VectorXd cur = best;
    for (int tM = tJ; tM >= -tJ; tM -= 2) {
      states[{tJ, tM}] = cur;
      for (int idx = 0; idx < dim; ++idx) {
        if (std::abs(cur(idx)) > 1e-15) {
          auto [t1, t2] = twice_m(idx);
          table[{t1, t2, tJ, tM}] = cur(idx);
        }
      }
      if (tM > -tJ) {
        const double J = 0.5 * tJ, M = 0.5 * tM;
        cur = (lower.real() * cur) / std::sqrt(J * (J + 1) - M * (M - 1));
      }
    }
  }
  return table;
}

inline double cg_lookup(const CgTable& t, int tm1, int tm2, int tJ, int tM) {
  auto it = t.find({tm1, tm2, tJ, tM});
  return it == t.end() ? 0.0 : it->second;
}

// Separable Cartesian table Ψ□ from oracle Kravchuk vectors. Rows are points
// (q_x+j)N + (q_y+j), columns modes n_x N + n_y.
inline RMat psi_square_oracle(int tj) {
  const RMat one = kravchuk(tj);
  const int n = tj + 1;
  RMat t(n * n, n * n);
  for (int a = 0; a < n * n; ++a)
    for (int b = 0; b < n * n; ++b) t(a, b) = one(a / n, b / n) * one(a % n, b % n);
  return t;
}

// Block-diagonal mode-space operators. Row n of the rhombus is a spin
// min(n, 4j−n)/2 multiplet with magnetic label μ = (n_x − n_y)/2.
struct ModeOperators {
  CMat jz, jy, jx, total;
};

inline ModeOperators mode_operators(int tj) {
  const int n = tj + 1;
  ModeOperators ops{CMat::Zero(n * n, n * n), CMat::Zero(n * n, n * n), CMat::Zero(n * n, n * n),
                    CMat::Zero(n * n, n * n)};
  for (int total = 0; total <= 2 * tj; ++total) {
    const int tspin = std::min(total, 2 * tj - total);
    const Spin s = spin(tspin);
    const int nx0 = std::max(0, total - tj);
    for (int r = 0; r <= tspin; ++r) {
      const int ra = nx0 + r;
      ops.total(ra * n + (total - ra), ra * n + (total - ra)) = total;
      for (int c = 0; c <= tspin; ++c) {
        const int ca = nx0 + c;
        const int ri = ra * n + (total - ra), ci = ca * n + (total - ca);
        ops.jz(ri, ci) = s.jz(r, c);
        ops.jy(ri, ci) = s.jy(r, c);
        ops.jx(ri, ci) = s.jx(r, c);
      }
    }
  }
  return ops;
}

// Imported angular momentum on modes: 2 J_y on each row.
inline CMat imported_M_modes(int tj) { return 2.0 * mode_operators(tj).jy; }

// Seeded generator shared by the property tests.
inline std::mt19937_64& rng() {
  static std::mt19937_64 g(0x5eed2026);
  return g;
}

inline double uniform(double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng());
}

inline int uniform_int(int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng());
}

// Fresh empty directory under the system temp path.
inline std::filesystem::path temp_dir(const std::string& tag) {
  const auto base = std::filesystem::temp_directory_path() /
                    ("fklens-test-" + tag + "-" + std::to_string(std::random_device{}()));
  std::filesystem::remove_all(base);
  std::filesystem::create_directories(base);
  return base;
}

}  // namespace testing_support

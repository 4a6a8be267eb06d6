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

#include "fklens/oracle.hpp"

#include <cmath>
#include <string>

namespace fklens {

namespace {

constexpr double kHermitianTolerance = 1e-13;

void check_oracle_size(const GridSpec& spec) {
  if (spec.size() > kOracleMaxSize) {
    throw DomainError("oracle is limited to N <= " + std::to_string(kOracleMaxSize) + ", got N = " +
                      std::to_string(spec.size()));
  }
}

CMatrix kron(const CMatrix& a, const CMatrix& b) {
  CMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index k = 0; k < a.cols(); ++k) {
      out.block(i * b.rows(), k * b.cols(), b.rows(), b.cols()) = a(i, k) * b;
    }
  }
  return out;
}

GeneratorMatrix make(const GridSpec& spec, SpaceTag space, std::string name, CMatrix values) {
  if (hermitian_defect(values) > kHermitianTolerance) {
    throw UnitarityError("oracle generator " + name + " is not Hermitian");
  }
  return GeneratorMatrix{spec, space, std::move(name), std::move(values)};
}

}  // namespace

double hermitian_defect(const CMatrix& h) {
  if (h.rows() != h.cols()) throw DimensionError("matrix is not square");
  if (h.size() == 0) return 0.0;
  return (h - h.adjoint()).cwiseAbs().maxCoeff();
}

Su2Matrices build_su2_matrices(HalfInt j) {
  if (j.twice() < 1) throw DomainError("su(2) matrices need j >= 1/2");
  const int n = j.twice() + 1;
  Su2Matrices s{CMatrix::Zero(n, n), CMatrix::Zero(n, n), CMatrix::Zero(n, n)};
  const double jj = j.value();
  for (int r = 0; r < n; ++r) {
    const double m = -jj + r;
    s.Q(r, r) = m;
    if (r + 1 < n) {
      const double up = 0.5 * std::sqrt((jj - m) * (jj + m + 1));
      s.P(r, r + 1) = -kI * up;
      s.K(r, r + 1) = -up;
    }
    if (r > 0) {
      const double down = 0.5 * std::sqrt((jj + m) * (jj - m + 1));
      s.P(r, r - 1) = kI * down;
      s.K(r, r - 1) = -down;
    }
  }
  return s;
}

std::vector<GeneratorMatrix> build_so4_generators(const GridSpec& spec) {
  check_oracle_size(spec);
  std::vector<GeneratorMatrix> out;
  const int n = spec.size();
  const CMatrix id = CMatrix::Identity(n, n);
  CMatrix qx, px, kx, qy, py, ky;
  if (n == 1) {
    qx = px = kx = qy = py = ky = CMatrix::Zero(1, 1);
  } else {
    const Su2Matrices s = build_su2_matrices(spec.j());
    qx = kron(s.Q, id), px = kron(s.P, id), kx = kron(s.K, id);
    qy = kron(id, s.Q), py = kron(id, s.P), ky = kron(id, s.K);
  }
  const SpaceTag pos = SpaceTag::position_2d;
  out.push_back(make(spec, pos, "Qx", qx));
  out.push_back(make(spec, pos, "Px", px));
  out.push_back(make(spec, pos, "Kx", kx));
  out.push_back(make(spec, pos, "Qy", qy));
  out.push_back(make(spec, pos, "Py", py));
  out.push_back(make(spec, pos, "Ky", ky));
  const CMatrix j12 = kx + ky, j13 = -(px + py), j14 = qx - qy;
  const CMatrix j23 = qx + qy, j24 = px - py, j34 = kx - ky;
  out.push_back(make(spec, pos, "J12", j12));
  out.push_back(make(spec, pos, "J13", j13));
  out.push_back(make(spec, pos, "J14", j14));
  out.push_back(make(spec, pos, "J23", j23));
  out.push_back(make(spec, pos, "J24", j24));
  out.push_back(make(spec, pos, "J34", j34));
  out.push_back(make(spec, pos, "K", j12));
  out.push_back(make(spec, pos, "Pcirc_x", -j13));
  out.push_back(make(spec, pos, "Pcirc_y", -j14));
  out.push_back(make(spec, pos, "Qcirc_x", j23));
  out.push_back(make(spec, pos, "Qcirc_y", j24));
  out.push_back(make(spec, pos, "M_pattern", j34));
  CMatrix casimir = j23 * j23 + j24 * j24 + j34 * j34;
  casimir = 0.5 * (casimir + casimir.adjoint()).eval();
  out.push_back(make(spec, pos, "R_casimir", casimir));
  return out;
}

const GeneratorMatrix& find_generator(const std::vector<GeneratorMatrix>& set,
                                      std::string_view name) {
  for (const auto& g : set) {
    if (g.name == name) return g;
  }
  throw DomainError("no generator named " + std::string(name));
}

CMatrix so4_element(const std::vector<GeneratorMatrix>& set, int a, int b) {
  if (a < 1 || a > 4 || b < 1 || b > 4) throw DomainError("so(4) indices run 1..4");
  const Eigen::Index dim = set.front().values.rows();
  if (a == b) return CMatrix::Zero(dim, dim);
  if (a > b) return -so4_element(set, b, a);
  return find_generator(set, "J" + std::to_string(a) + std::to_string(b)).values;
}

GeneratorMatrix build_imported_M_modes(const GridSpec& spec) {
  check_oracle_size(spec);
  const int n = spec.size();
  const int two_j = spec.j().twice();
  CMatrix m = CMatrix::Zero(n * n, n * n);
  for (int nx = 0; nx < n; ++nx) {
    for (int ny = 0; ny < n; ++ny) {
      const bool lower = nx + ny <= two_j;
      // Radicand factors (a, b) play the role of (n_x, n_y) on the lower half.
      const double a = lower ? nx : two_j - ny;
      const double b = lower ? ny : two_j - nx;
      const int col = nx * n + ny;
      if (nx + 1 < n && ny >= 1) m((nx + 1) * n + ny - 1, col) = -kI * std::sqrt(b * (a + 1));
      if (nx >= 1 && ny + 1 < n) m((nx - 1) * n + ny + 1, col) = kI * std::sqrt(a * (b + 1));
    }
  }
  return make(spec, SpaceTag::mode_2d, "M_imported", m);
}

GeneratorMatrix build_imported_M(const GridSpec& spec) {
  const GeneratorMatrix modes = build_imported_M_modes(spec);
  const RMatrix one = oracle_kravchuk(spec.j());
  const int n = spec.size();
  RMatrix t(n * n, n * n);
  for (int a = 0; a < n * n; ++a) {
    for (int b = 0; b < n * n; ++b) t(a, b) = one(a / n, b / n) * one(a % n, b % n);
  }
  CMatrix pos = t.cast<cplx>() * modes.values * t.transpose().cast<cplx>();
  pos = 0.5 * (pos + pos.adjoint()).eval();
  return make(spec, SpaceTag::position_2d, "M_imported", pos);
}

RMatrix oracle_kravchuk(HalfInt j) {
  const int n = j.twice() + 1;
  if (n == 1) return RMatrix::Ones(1, 1);
  const RMatrix k = build_su2_matrices(j).K.real();
  Eigen::SelfAdjointEigenSolver<RMatrix> solver(k);
  RMatrix v = solver.eigenvectors();
  for (int c = 0; c < n; ++c) {
    if (v(0, c) < 0) v.col(c) *= -1.0;
  }
  return v;
}

CMatrix numeric_expm_hermitian(const CMatrix& g, double t) {
  if (hermitian_defect(g) > kHermitianTolerance) {
    throw DomainError("numeric_expm_hermitian needs a Hermitian matrix");
  }
  Eigen::SelfAdjointEigenSolver<CMatrix> solver(g);
  const CMatrix& v = solver.eigenvectors();
  CVector phases(v.cols());
  for (Eigen::Index i = 0; i < v.cols(); ++i) phases(i) = std::polar(1.0, -t * solver.eigenvalues()(i));
  return v * phases.asDiagonal() * v.adjoint();
}

CMatrix numeric_expm_hermitian(const GeneratorMatrix& g, double t) {
  return numeric_expm_hermitian(g.values, t);
}

Eigen::VectorXd hermitian_spectrum(const CMatrix& h) {
  if (hermitian_defect(h) > 1e-10) throw DomainError("matrix is not Hermitian");
  Eigen::SelfAdjointEigenSolver<CMatrix> solver(h, Eigen::EigenvaluesOnly);
  return solver.eigenvalues();
}

std::vector<std::pair<double, CMatrix>> spectral_projectors(const CMatrix& h, double tol) {
  if (hermitian_defect(h) > 1e-10) throw DomainError("matrix is not Hermitian");
  Eigen::SelfAdjointEigenSolver<CMatrix> solver(h);
  const auto& vals = solver.eigenvalues();
  const CMatrix& vecs = solver.eigenvectors();
  std::vector<std::pair<double, CMatrix>> out;
  Eigen::Index start = 0;
  while (start < vals.size()) {
    Eigen::Index end = start + 1;
    while (end < vals.size() && vals(end) - vals(end - 1) < tol) ++end;
    const CMatrix block = vecs.middleCols(start, end - start);
    out.emplace_back(vals.segment(start, end - start).mean(), block * block.adjoint());
    start = end;
  }
  return out;
}

}  // namespace fklens

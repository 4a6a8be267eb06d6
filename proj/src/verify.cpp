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

#include "fklens/verify.hpp"

#include <cmath>
#include <functional>
#include <numbers>
#include <random>

#include "fklens/cart_basis.hpp"
#include "fklens/fourier_group.hpp"
#include "fklens/gridmap.hpp"
#include "fklens/oracle.hpp"
#include "fklens/polar_basis.hpp"
#include "fklens/specfun.hpp"

namespace fklens {

namespace {

constexpr double kPi = std::numbers::pi;

class Suite {
 public:
  explicit Suite(std::vector<CheckResult>& out) : out_(out) {}

  void check(const std::string& group, const std::string& name, double tol,
             const std::function<double()>& residual) {
    CheckResult r{group, name, false, 0.0, tol, ""};
    try {
      r.value = residual();
      r.pass = r.value < tol;
    } catch (const std::exception& e) {
      r.value = INFINITY;
      r.detail = e.what();
    }
    out_.push_back(std::move(r));
  }

  void skip(const std::string& group, const std::string& name, const std::string& why) {
    out_.push_back(CheckResult{group, name, true, 0.0, 0.0, "skipped: " + why});
  }

 private:
  std::vector<CheckResult>& out_;
};

double defect_vs_identity(const CMatrix& a) {
  return max_abs_diff(a, CMatrix::Identity(a.rows(), a.cols()));
}

CMatrix reflection(int points) {
  CMatrix p = CMatrix::Zero(points, points);
  for (int i = 0; i < points; ++i) p(points - 1 - i, i) = 1.0;
  return p;
}

}  // namespace

std::vector<CheckResult> run_verification(const VerifyOptions& options) {
  std::vector<CheckResult> results;
  Suite suite(results);
  const GridSpec spec(options.j);
  const HalfInt j = spec.j();
  const int n = spec.size();
  const bool oracle_ok = n <= kOracleMaxSize;
  std::mt19937_64 rng(20260418);
  std::uniform_real_distribution<double> angle(-kPi, kPi);

  // Special functions.
  suite.check("specfun", "little-d orthogonality", 1e-12, [&] {
    double worst = 0;
    for (double beta : {0.1, kPi / 3, kPi / 2, 2.9}) {
      const RMatrix d = wigner_little_d_matrix(j, AngleRad(beta));
      worst = std::max(worst, (d.transpose() * d - RMatrix::Identity(n, n)).cwiseAbs().maxCoeff());
    }
    return worst;
  });
  suite.check("specfun", "Kravchuk completeness", 1e-12, [&] {
    const RMatrix t = kravchuk_table(j);
    return (t * t.transpose() - RMatrix::Identity(n, n)).cwiseAbs().maxCoeff();
  });
  suite.check("specfun", "Clebsch-Gordan orthogonality", 1e-12, [&] {
    RMatrix c = RMatrix::Zero(n * n, n * n);
    int col = 0;
    for (int big = 0; big <= 2 * j.twice(); big += 2) {
      const HalfInt jj = HalfInt::from_twice(big);
      for (int mm = -big; mm <= big; mm += 2, ++col) {
        for (int a = 0; a < n; ++a) {
          const int b2 = mm - (2 * a - j.twice());
          if (std::abs(b2) > j.twice()) continue;
          const int b = (b2 + j.twice()) / 2;
          c(a * n + b, col) = clebsch_gordan(j, HalfInt::from_twice(2 * a - j.twice()), j,
                                             HalfInt::from_twice(b2), jj, HalfInt::from_twice(mm));
        }
      }
    }
    return (c.transpose() * c - RMatrix::Identity(n * n, n * n)).cwiseAbs().maxCoeff();
  });

  // Oracle algebra and spectra.
  if (!oracle_ok) {
    suite.skip("oracle", "all oracle groups", "N exceeds oracle cap");
  } else {
    if (n > 1) {
      suite.check("oracle", "Kravchuk equals diagonalized K", 1e-12, [&] {
        return (kravchuk_table(j) - oracle_kravchuk(j)).cwiseAbs().maxCoeff();
      });
      suite.check("oracle", "su(2) commutators and Casimir", 1e-12, [&] {
        const Su2Matrices s = build_su2_matrices(j);
        double worst = max_abs_diff(s.K * s.Q - s.Q * s.K, -kI * s.P);
        worst = std::max(worst, max_abs_diff(s.K * s.P - s.P * s.K, kI * s.Q));
        worst = std::max(worst, max_abs_diff(s.Q * s.P - s.P * s.Q, -kI * s.K));
        const CMatrix c = s.Q * s.Q + s.P * s.P + s.K * s.K;
        return std::max(worst, max_abs_diff(c, j.value() * (j.value() + 1) * CMatrix::Identity(n, n)));
      });
    }
    const auto gens = build_so4_generators(spec);
    suite.check("oracle", "so(4) commutation relations", 1e-12, [&] {
      double worst = 0;
      auto delta = [](int a, int b) { return a == b ? 1.0 : 0.0; };
      for (int i = 1; i <= 4; ++i)
        for (int i2 = i + 1; i2 <= 4; ++i2)
          for (int k = 1; k <= 4; ++k)
            for (int k2 = k + 1; k2 <= 4; ++k2) {
              const CMatrix a = so4_element(gens, i, i2), b = so4_element(gens, k, k2);
              const CMatrix expected =
                  kI * (delta(i2, k) * so4_element(gens, i, k2) + delta(i, k2) * so4_element(gens, i2, k) +
                        delta(k, i) * so4_element(gens, k2, i2) + delta(k2, i2) * so4_element(gens, k, i));
              worst = std::max(worst, max_abs_diff(a * b - b * a, expected));
            }
      return worst;
    });
    suite.check("oracle", "radius Casimir spectrum rho(rho+1)", 1e-9, [&] {
      const Eigen::VectorXd ev = hermitian_spectrum(find_generator(gens, "R_casimir").values);
      Eigen::VectorXd expected(n * n);
      int at = 0;
      for (int rho = 0; rho < n; ++rho)
        for (int k = 0; k <= 2 * rho; ++k) expected(at++) = rho * (rho + 1.0);
      return (ev - expected).cwiseAbs().maxCoeff();
    });
    const GeneratorMatrix m_imp = build_imported_M(spec);
    suite.check("oracle", "rotation kernel equals expm(-i theta M)", 1e-9, [&] {
      double worst = 0;
      for (double theta : {0.3, 0.7, 2.0}) {
        CMatrix r = kernel_rotation_cart(spec, AngleRad(theta)).values;
        if (options.inject_fault) r(0, 0) += 1e-6;
        worst = std::max(worst, max_abs_diff(r, numeric_expm_hermitian(m_imp, theta)));
      }
      return worst;
    });
    suite.check("bases", "MA columns are M eigenvectors", 1e-10, [&] {
      const auto ma_owner = cart_basis_table(spec, BasisKind::ma);
      const BasisTable& ma = *ma_owner;
      const auto labels = enumerate_ma_rhombus(spec);
      CVector m(labels.size());
      for (std::size_t i = 0; i < labels.size(); ++i) m(i) = labels[i].m_or_mu.value();
      return (m_imp.values * ma.values - ma.values * m.asDiagonal()).cwiseAbs().maxCoeff();
    });
  }

  // Bases.
  suite.check("bases", "Cartesian mode table unitary", 1e-11,
              [&] { return unitarity_defect(cart_basis_table(spec, BasisKind::cart_mode)->values); });
  suite.check("bases", "MA table unitary", 1e-11,
              [&] { return unitarity_defect(cart_basis_table(spec, BasisKind::ma)->values); });
  suite.check("bases", "polar table unitary", 1e-11,
              [&] { return unitarity_defect(polar_basis_table(spec)->values); });
  suite.check("bases", "polar columns diagonalize ring rotation", 1e-10, [&] {
    const auto p_owner = polar_basis_table(spec);
    const CMatrix& p = p_owner->values;
    const auto labels = enumerate_ma_rhombus(spec);
    const double theta = 0.9;
    CVector phase(labels.size());
    for (std::size_t i = 0; i < labels.size(); ++i)
      phase(i) = std::polar(1.0, -labels[i].m_or_mu.value() * theta);
    const CMatrix r = kernel_rotation_polar(spec, AngleRad(theta)).values;
    return (r * p - p * phase.asDiagonal()).cwiseAbs().maxCoeff();
  });

  // Kernels.
  const double a1 = angle(rng), a2 = angle(rng);
  const EulerParams p1{AngleRad(angle(rng)), AngleRad(angle(rng)), AngleRad(std::abs(angle(rng))),
                       AngleRad(angle(rng))};
  const EulerParams p2{AngleRad(angle(rng)), AngleRad(angle(rng)), AngleRad(std::abs(angle(rng))),
                       AngleRad(angle(rng))};
  suite.check("kernels", "every kernel builds unitary", kUnitarityTolerance, [&] {
    double worst = 0;
    for (const Kernel& k :
         {kernel_rotation_cart(spec, AngleRad(a1)), kernel_aniso(spec, AngleRad(a1)),
          kernel_gyration(spec, AngleRad(a1)), kernel_isotropic(spec, AngleRad(a1)),
          kernel_u2_cart(spec, p1), kernel_rotation_polar(spec, AngleRad(a1)),
          kernel_u2_polar(spec, p1), kernel_U(spec)}) {
      worst = std::max(worst, unitarity_defect(k.values));
    }
    return worst;
  });
  suite.check("kernels", "R(pi) is point reflection, R(2pi) identity", 1e-10, [&] {
    const double refl = max_abs_diff(kernel_rotation_cart(spec, AngleRad(kPi)).values, reflection(n * n));
    return std::max(refl, defect_vs_identity(kernel_rotation_cart(spec, AngleRad(2 * kPi)).values));
  });
  suite.check("kernels", "gyration product and explicit sum agree", 1e-10, [&] {
    return max_abs_diff(kernel_gyration(spec, AngleRad(a1)).values,
                        kernel_gyration_explicit(spec, AngleRad(a1)).values);
  });
  suite.check("kernels", "U(2) factorized and Big-D routes agree", 1e-9, [&] {
    return max_abs_diff(kernel_u2_cart(spec, p1).values, kernel_u2_cart_direct(spec, p1).values);
  });
  suite.check("kernels", "polar U(2) rotation equals ring rotation", 1e-9, [&] {
    const EulerParams rot{AngleRad(0), AngleRad(0), AngleRad(2 * a1), AngleRad(0)};
    return max_abs_diff(kernel_u2_polar(spec, rot).values, kernel_rotation_polar(spec, AngleRad(a1)).values);
  });

  // Group laws.
  using Family = std::function<Kernel(const GridSpec&, AngleRad)>;
  const std::vector<std::pair<std::string, Family>> families{
      {"rotation", kernel_rotation_cart}, {"anisotropic", kernel_aniso},
      {"gyration", kernel_gyration},      {"isotropic", kernel_isotropic},
      {"polar rotation", kernel_rotation_polar}};
  for (const auto& [name, family] : families) {
    suite.check("group laws", name + " one-parameter law", 1e-9, [&] {
      const CMatrix lhs = family(spec, AngleRad(a1)).values * family(spec, AngleRad(a2)).values;
      return max_abs_diff(lhs, family(spec, AngleRad(a1 + a2)).values);
    });
  }
  suite.check("group laws", "U(2) composition", 1e-9, [&] {
    const CMatrix lhs = kernel_u2_cart(spec, p1).values * kernel_u2_cart(spec, p2).values;
    return max_abs_diff(lhs, kernel_u2_cart(spec, compose(p1, p2)).values);
  });

  // Grid map.
  suite.check("gridmap", "U real and unitary", 1e-10, [&] {
    const CMatrix u = kernel_U(spec).values;
    return std::max(unitarity_defect(u), u.imag().cwiseAbs().maxCoeff());
  });
  suite.check("gridmap", "round trip", 1e-10, [&] {
    std::uniform_real_distribution<double> pix(0.0, 1.0);
    CVector f(n * n);
    for (auto& v : f) v = pix(rng);
    const CartImage back = polar_to_cart(cart_to_polar(CartImage{spec, f}));
    return (back.pixels - f).cwiseAbs().maxCoeff();
  });
  return results;
}

}  // namespace fklens

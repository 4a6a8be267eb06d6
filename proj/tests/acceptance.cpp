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

// Acceptance report: one PASS/FAIL line per criterion, nonzero exit on any
// failure. Every tolerance is fixed here.
//
//   acceptance                          run all criteria
//   acceptance --write-letter-support F write the letter-R polar support
//                                       reference used by criterion 7
#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <map>
#include <numbers>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "fklens/cart_basis.hpp"
#include "fklens/fourier_group.hpp"
#include "fklens/gridmap.hpp"
#include "fklens/image_io.hpp"
#include "fklens/kernel_cache.hpp"
#include "fklens/oracle.hpp"
#include "fklens/polar_basis.hpp"
#include "support/oracles.hpp"

using namespace fklens;
namespace fs = std::filesystem;
namespace ts = testing_support;

namespace {

constexpr double kPi = std::numbers::pi;

// Tolerances and limits.
constexpr double kUnitaryTol = 1e-10;
constexpr double kUnitarySeconds = 60.0;
constexpr double kOracleTol = 1e-9;
constexpr double kSpectrumTol = 1e-9;
constexpr double kEigenTol = 1e-10;
constexpr double kGroupTol = 1e-9;
constexpr double kShiftTol = 1e-12;
constexpr double kRoundTripTol = 1e-9;
constexpr double kSupportFraction = 0.25;
constexpr double kSupportOverlap = 0.90;
constexpr double kParityTol = 1e-10;
constexpr int kScaleN = 32;
constexpr double kScaleMegabytes = 16.8;
constexpr double kScaleRelTol = 0.01;  // for the ≈16.8 MB and ≈10⁶ figures

const fs::path kLetter = FKLENS_TEST_DATA "/letter_R_17.pgm";
const fs::path kLetterSupport = FKLENS_TEST_DATA "/letter_R_17_polar_support.txt";

HalfInt H(int twice) { return HalfInt::from_twice(twice); }

struct Outcome {
  bool pass;
  std::string detail;
};

std::string sci(double v) {
  std::ostringstream os;
  os << std::scientific << std::setprecision(2) << v;
  return os.str();
}

EulerParams random_euler() {
  return {AngleRad(ts::uniform(-kPi, kPi)), AngleRad(ts::uniform(-kPi, kPi)), AngleRad(ts::uniform(0, kPi)),
          AngleRad(ts::uniform(-kPi, kPi))};
}

CMatrix point_reflection(const GridSpec& spec) {
  const int n = spec.size();
  CMatrix p = CMatrix::Zero(spec.points(), spec.points());
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) p((n - 1 - a) * n + (n - 1 - b), a * n + b) = 1.0;
  return p;
}

// 1. Every kernel family unitary at five random parameter sets per j.
Outcome unitarity() {
  const auto t0 = std::chrono::steady_clock::now();
  double worst = 0;
  int kernels = 0;
  for (int tj : {1, 2, 3, 4, 6}) {
    const GridSpec spec(H(tj));
    auto take = [&](const CMatrix& k) {
      worst = std::max(worst, unitarity_defect(k));
      ++kernels;
    };
    take(kernel_U(spec).values);
    for (int set = 0; set < 5; ++set) {
      const EulerParams p = random_euler();
      take(kernel_rotation_cart(spec, p.theta).values);
      take(kernel_aniso(spec, p.phi).values);
      take(kernel_gyration(spec, p.psi).values);
      take(kernel_isotropic(spec, p.omega).values);
      take(kernel_u2_cart(spec, p).values);
      take(kernel_rotation_polar(spec, p.theta).values);
      take(kernel_u2_polar(spec, p).values);
    }
  }
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return {worst < kUnitaryTol && seconds < kUnitarySeconds,
          std::to_string(kernels) + " kernels, max |K^H K - I| = " + sci(worst) + " (tol " + sci(kUnitaryTol) +
              "), " + sci(seconds) + " s (limit " + std::to_string(int(kUnitarySeconds)) + " s)"};
}

// 2. Rotation kernel against the exponential of the imported generator.
Outcome oracle_equivalence() {
  double worst = 0;
  for (int tj = 1; tj <= 4; ++tj) {
    const GridSpec spec(H(tj));
    const GeneratorMatrix m = build_imported_M(spec);
    for (double theta : {0.3, 0.7, 2.0})
      worst = std::max(worst, max_abs_diff(kernel_rotation_cart(spec, AngleRad(theta)).values,
                                           numeric_expm_hermitian(m, theta)));
  }
  return {worst < kOracleTol, "j = 1/2..2, theta in {0.3, 0.7, 2.0}: max entry diff " + sci(worst) + " (tol " +
                                  sci(kOracleTol) + ")"};
}

// 3. Radius Casimir spectrum and point count.
Outcome spectral() {
  bool ok = true;
  double worst = 0;
  for (int tj : {2, 3, 4}) {
    const GridSpec spec(H(tj));
    const auto set = build_so4_generators(spec);
    const Eigen::VectorXd ev = hermitian_spectrum(find_generator(set, "R_casimir").values);
    std::map<int, int> mult;
    for (int i = 0; i < ev.size(); ++i) {
      const double r = std::round(ev(i));
      worst = std::max(worst, std::abs(ev(i) - r));
      ++mult[static_cast<int>(r)];
    }
    std::map<int, int> expected;
    int points = 0;
    for (int rho = 0; rho <= tj; ++rho) {
      expected[rho * (rho + 1)] = 2 * rho + 1;
      points += 2 * rho + 1;
    }
    ok = ok && mult == expected && points == spec.points() &&
         static_cast<int>(enumerate_polar(spec).size()) == spec.points();
  }
  ok = ok && worst < kSpectrumTol;
  return {ok, "j in {1, 3/2, 2}: R(R+1) eigenvalues rho(rho+1) x (2rho+1), max distance to integer " + sci(worst) +
                  " (tol " + sci(kSpectrumTol) + "), sum(2rho+1) = N^2"};
}

// 4. Λ□ columns are eigenvectors of M; Ψ° columns diagonalize polar rotation.
Outcome eigenbasis() {
  double worst_m = 0, worst_r = 0;
  for (int tj = 1; tj <= 6; ++tj) {
    const GridSpec spec(H(tj));
    const CMatrix m = build_imported_M(spec).values;
    const auto lam = cart_basis_table(spec, BasisKind::ma);
    const auto circ = polar_basis_table(spec);
    const auto labels = enumerate_ma_rhombus(spec);
    for (double theta : {0.37, 1.9}) {
      const CMatrix r = kernel_rotation_polar(spec, AngleRad(theta)).values;
      for (std::size_t c = 0; c < labels.size(); ++c) {
        const double mval = labels[c].m_or_mu.value();
        worst_m = std::max(worst_m, (m * lam->values.col(c) - mval * lam->values.col(c)).cwiseAbs().maxCoeff());
        worst_r = std::max(worst_r, (r * circ->values.col(c) - std::polar(1.0, -mval * theta) * circ->values.col(c))
                                        .cwiseAbs()
                                        .maxCoeff());
      }
    }
  }
  return {worst_m < kEigenTol && worst_r < kEigenTol, "j = 1/2..3: M residual " + sci(worst_m) +
                                                          ", polar rotation residual " + sci(worst_r) + " (tol " +
                                                          sci(kEigenTol) + ")"};
}

// 5. One-parameter laws for five families and the U(2) composition law.
Outcome group_laws() {
  using Family = std::function<Kernel(const GridSpec&, AngleRad)>;
  const std::vector<Family> families{kernel_rotation_cart, kernel_aniso, kernel_gyration, kernel_isotropic,
                                     kernel_rotation_polar};
  double worst_one = 0, worst_u2 = 0;
  for (int tj = 0; tj <= 6; ++tj) {
    const GridSpec spec(H(tj));
    for (const auto& make : families) {
      const double a = ts::uniform(-kPi, kPi), b = ts::uniform(-kPi, kPi);
      worst_one = std::max(worst_one, max_abs_diff(make(spec, AngleRad(a)).values * make(spec, AngleRad(b)).values,
                                                   make(spec, AngleRad(a + b)).values));
    }
    for (int trial = 0; trial < 2; ++trial) {
      const EulerParams a = random_euler(), b = random_euler();
      worst_u2 = std::max(worst_u2, max_abs_diff(kernel_u2_cart(spec, a).values * kernel_u2_cart(spec, b).values,
                                                 kernel_u2_cart(spec, compose(a, b)).values));
    }
  }
  return {worst_one < kGroupTol && worst_u2 < kGroupTol, "j = 0..3: one-parameter " + sci(worst_one) + ", U(2) " +
                                                             sci(worst_u2) + " (tol " + sci(kGroupTol) + ")"};
}

// 6. Polar rotation by 2πl/(2ρ+1) is a cyclic shift of ring ρ.
Outcome circulant() {
  double worst = 0;
  for (int tj = 0; tj <= 8; ++tj) {
    const GridSpec spec(H(tj));
    for (int rho = 0; rho <= tj; ++rho) {
      const int w = 2 * rho + 1;
      for (int l = 0; l < w; ++l) {
        const CMatrix r = kernel_rotation_polar(spec, AngleRad(2 * kPi * l / w)).values;
        for (int k = -rho; k <= rho; ++k)
          for (int kp = -rho; kp <= rho; ++kp) {
            const double expected = ((k - kp - l) % w + w) % w == 0 ? 1.0 : 0.0;
            worst = std::max(worst, std::abs(r(polar_index(spec, rho, k), polar_index(spec, rho, kp)) - expected));
          }
      }
    }
  }
  return {worst < kShiftTol, "j = 0..4, all rings and l: max deviation from 0/1 pattern " + sci(worst) + " (tol " +
                                 sci(kShiftTol) + ")"};
}

std::set<std::pair<int, int>> polar_support(const PolarImage& img) {
  const double top = img.pixels.cwiseAbs().maxCoeff();
  std::set<std::pair<int, int>> out;
  const auto points = enumerate_polar(img.spec);
  for (std::size_t i = 0; i < points.size(); ++i)
    if (std::abs(img.pixels(i)) >= kSupportFraction * top) out.insert({points[i].rho, points[i].k});
  return out;
}

PolarImage letter_polar() {
  const LoadedImage img = read_image(kLetter, std::nullopt);
  return cart_to_polar(CartImage{img.spec, img.pixels / 255.0});
}

// 7. Letter-R round trip and polar support against the committed reference.
Outcome letter() {
  const LoadedImage img = read_image(kLetter, std::nullopt);
  const CartImage cart{img.spec, img.pixels / 255.0};
  const PolarImage polar = cart_to_polar(cart);
  const double dev = (polar_to_cart(polar).pixels - cart.pixels).cwiseAbs().maxCoeff();

  std::ifstream f(kLetterSupport);
  if (!f) return {false, "missing reference " + kLetterSupport.string()};
  std::set<std::pair<int, int>> ref;
  for (std::string line; std::getline(f, line);) {
    if (line.empty() || line[0] == '#') continue;
    int rho = 0, k = 0;
    char comma = 0;
    std::istringstream(line) >> rho >> comma >> k;
    ref.insert({rho, k});
  }
  const auto now = polar_support(polar);
  std::size_t common = 0;
  for (const auto& p : now) common += ref.count(p);
  const std::size_t unite = now.size() + ref.size() - common;
  const double overlap = unite == 0 ? 0.0 : double(common) / double(unite);
  std::ostringstream os;
  os << "N = 17: round trip max deviation " << sci(dev) << " (tol " << sci(kRoundTripTol) << "), support "
     << now.size() << " points, overlap with reference " << std::fixed << std::setprecision(3) << overlap
     << " (min " << kSupportOverlap << ")";
  return {dev < kRoundTripTol && overlap >= kSupportOverlap, os.str()};
}

// 8. Half turn is the point reflection; full turn is the identity.
Outcome parity() {
  double worst = 0;
  for (int tj = 0; tj <= 6; ++tj) {
    const GridSpec spec(H(tj));
    worst = std::max(worst, max_abs_diff(kernel_rotation_cart(spec, AngleRad(kPi)).values, point_reflection(spec)));
    worst = std::max(worst, max_abs_diff(kernel_rotation_cart(spec, AngleRad(2 * kPi)).values,
                                         CMatrix::Identity(spec.points(), spec.points())));
  }
  return {worst < kParityTol, "j = 0..3: max deviation " + sci(worst) + " (tol " + sci(kParityTol) + ")"};
}

// 9. Storage and apply cost at N = 32; build time is reported only.
Outcome scale() {
  const GridSpec spec = GridSpec::from_size(kScaleN);
  const fs::path dir = ts::temp_dir("acceptance-scale");
  const auto t0 = std::chrono::steady_clock::now();
  const Kernel k = kernel_rotation_cart(spec, AngleRad(0.5));
  const auto t1 = std::chrono::steady_clock::now();
  const CVector out = apply_kernel(k, CVector::Ones(spec.points()));
  const auto t2 = std::chrono::steady_clock::now();
  const fs::path file = store(CacheKey::of(k), k, dir);
  const auto bytes = fs::file_size(file);
  fs::remove_all(dir);
  const double n4 = std::pow(double(kScaleN), 4);
  const long long madds = static_cast<long long>(k.values.rows()) * k.values.cols();
  const bool size_ok = bytes == cache_file_size(kScaleN) && bytes == 52 + 16 * static_cast<std::uintmax_t>(n4) &&
                       std::abs(bytes / 1e6 - kScaleMegabytes) / kScaleMegabytes < kScaleRelTol;
  const bool cost_ok = madds == static_cast<long long>(n4) && std::abs(madds / 1e6 - 1.0) < 0.05 &&
                       out.size() == spec.points();
  std::ostringstream os;
  os << "N = 32: file " << bytes << " bytes (" << std::fixed << std::setprecision(1) << bytes / 1e6
     << " MB), apply " << madds << " multiply-adds; build " << std::setprecision(2)
     << std::chrono::duration<double>(t1 - t0).count() << " s, apply "
     << std::chrono::duration<double>(t2 - t1).count() * 1e3 << " ms (reported, not asserted)";
  return {size_ok && cost_ok, os.str()};
}

int write_letter_support(const fs::path& path) {
  const auto support = polar_support(letter_polar());
  std::ofstream f(path, std::ios::trunc);
  f << "# Regression reference, not ground truth: polar points (rho,k) where the\n"
       "# letter-R image mapped to the polar screen has |value| >= 0.25 max.\n";
  for (const auto& [rho, k] : support) f << rho << ',' << k << '\n';
  if (!f) {
    std::cerr << "cannot write " << path << '\n';
    return 1;
  }
  std::cout << "wrote " << support.size() << " points to " << path << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc == 3 && std::string(argv[1]) == "--write-letter-support") return write_letter_support(argv[2]);
  if (argc != 1) {
    std::cerr << "usage: acceptance [--write-letter-support FILE]\n";
    return 2;
  }
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"unitarity", unitarity}, {"oracle equivalence", oracle_equivalence},
      {"spectra", spectral},    {"eigenbases", eigenbasis},
      {"group laws", group_laws}, {"ring shifts", circulant},
      {"letter R", letter},     {"parity", parity},
      {"scale", scale},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    if (!o.pass) ++failed;
    std::cout << (o.pass ? "PASS " : "FAIL ") << i + 1 << ' ' << criteria[i].first << ": " << o.detail << std::endl;
  }
  std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria failed") << std::endl;
  return failed == 0 ? 0 : 1;
}

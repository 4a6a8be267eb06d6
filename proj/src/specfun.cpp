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

#include "fklens/specfun.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace fklens {

namespace detail {

double log_factorial(int n) {
  static const auto table = [] {
    std::array<double, 600> t{};
    for (int i = 0; i < static_cast<int>(t.size()); ++i) {
      t[i] = std::lgamma(static_cast<double>(i) + 1.0);
    }
    return t;
  }();
  if (n < 0 || n >= static_cast<int>(table.size())) {
    throw PrecisionError("log_factorial argument out of tabulated range: " +
                         std::to_string(n));
  }
  return table[n];
}

}  // namespace detail

namespace {

using detail::log_factorial;

double log_binomial(int n, int k) {
  return log_factorial(n) - log_factorial(k) - log_factorial(n - k);
}

void check_precision(HalfInt j) {
  if (j > kMaxJ) {
    throw PrecisionError("j = " + j.to_string() + " exceeds the supported maximum " +
                         kMaxJ.to_string());
  }
}

void check_magnetic(HalfInt j, HalfInt m, const char* what) {
  if (j.twice() < 0) throw DomainError("negative representation label j = " + j.to_string());
  if (abs(m) > j || !(j - m).is_integer()) {
    throw DomainError(std::string(what) + " = " + m.to_string() +
                      " is not a magnetic label of j = " + j.to_string());
  }
}

// x^p tracked as (log|x|·p, sign); p ≥ 0. Returns false when the power is 0.
bool signed_log_pow(double x, int p, double& log_acc, int& sign) {
  if (p == 0) return true;
  if (x == 0.0) return false;
  log_acc += p * std::log(std::abs(x));
  if (x < 0.0 && (p % 2 != 0)) sign = -sign;
  return true;
}

// P_n^{(a,b)}(x) by the standard forward recurrence in n.
double jacobi_p(int n, int a, int b, double x) {
  double p0 = 1.0;
  if (n == 0) return p0;
  double p1 = (a + 1) + 0.5 * (a + b + 2) * (x - 1.0);
  for (int k = 2; k <= n; ++k) {
    const double s = 2.0 * k + a + b;
    const double c0 = 2.0 * k * (k + a + b) * (s - 2.0);
    const double c1 = (s - 1.0) * (s * (s - 2.0) * x + static_cast<double>(a) * a -
                                   static_cast<double>(b) * b);
    const double c2 = 2.0 * (k + a - 1.0) * (k + b - 1.0) * s;
    const double p2 = (c1 * p1 - c2 * p0) / c0;
    p0 = p1;
    p1 = p2;
  }
  return p1;
}

}  // namespace

double wigner_little_d(HalfInt j, HalfInt m1, HalfInt m2, AngleRad beta) {
  check_magnetic(j, m1, "m1");
  check_magnetic(j, m2, "m2");
  check_precision(j);
  if (beta.value() == 0.0) return m1 == m2 ? 1.0 : 0.0;

  const int jpm2 = (j + m2).as_int();
  const int jmm2 = (j - m2).as_int();
  const int jpm1 = (j + m1).as_int();
  const int jmm1 = (j - m1).as_int();
  const int diff = (m1 - m2).as_int();

  const int k = std::min({jpm2, jmm2, jpm1, jmm1});
  int a = 0;
  int lambda = 0;
  if (k == jpm2) {
    a = diff;
    lambda = diff;
  } else if (k == jmm2) {
    a = -diff;
  } else if (k == jpm1) {
    a = -diff;
  } else {
    a = diff;
    lambda = diff;
  }
  const int two_j = j.twice();
  const int b = two_j - 2 * k - a;

  const double half = 0.5 * beta.value();
  double log_mag = 0.5 * (log_binomial(two_j - k, k + a) - log_binomial(k + b, b));
  int sign = sign_power(lambda);
  if (!signed_log_pow(std::sin(half), a, log_mag, sign)) return 0.0;
  if (!signed_log_pow(std::cos(half), b, log_mag, sign)) return 0.0;

  const double p = jacobi_p(k, a, b, std::cos(beta.value()));
  if (p == 0.0) return 0.0;
  if (p < 0.0) sign = -sign;
  return sign * std::exp(log_mag + std::log(std::abs(p)));
}

double wigner_little_d_sum(HalfInt j, HalfInt m1, HalfInt m2, AngleRad beta) {
  check_magnetic(j, m1, "m1");
  check_magnetic(j, m2, "m2");
  check_precision(j);

  const int jpm2 = (j + m2).as_int();
  const int jmm1 = (j - m1).as_int();
  const int diff = (m1 - m2).as_int();
  const double log_pre =
      0.5 * (log_factorial((j + m1).as_int()) + log_factorial(jmm1) +
             log_factorial(jpm2) + log_factorial((j - m2).as_int()));
  const double c = std::cos(0.5 * beta.value());
  const double s = std::sin(0.5 * beta.value());

  double total = 0.0;
  for (int k = std::max(0, -diff); k <= std::min(jmm1, jpm2); ++k) {
    double log_term = log_pre - log_factorial(k) - log_factorial(jpm2 - k) -
                      log_factorial(diff + k) - log_factorial(jmm1 - k);
    int sign = sign_power(diff + k);
    if (!signed_log_pow(c, j.twice() - diff - 2 * k, log_term, sign)) continue;
    if (!signed_log_pow(s, diff + 2 * k, log_term, sign)) continue;
    total += sign * std::exp(log_term);
  }
  return total;
}

RMatrix wigner_little_d_matrix(HalfInt j, AngleRad beta) {
  const int n = j.twice() + 1;
  RMatrix d(n, n);
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) {
      d(r, c) = wigner_little_d(j, HalfInt::from_twice(2 * r - j.twice()),
                                HalfInt::from_twice(2 * c - j.twice()), beta);
    }
  }
  return d;
}

cplx wigner_big_D(HalfInt iota, HalfInt mu, HalfInt mu2, AngleRad omega, AngleRad phi,
                  AngleRad theta, AngleRad psi) {
  const double little = wigner_little_d(iota, mu, mu2, theta);
  const double arg = -(iota.value() * omega.value() + mu.value() * phi.value() +
                       mu2.value() * psi.value());
  return std::polar(little, arg);
}

double kravchuk_psi(HalfInt j, int n, HalfInt q) {
  if (n < 0 || n > j.twice()) {
    throw DomainError("mode number " + std::to_string(n) + " outside 0…2j for j = " +
                      j.to_string());
  }
  check_magnetic(j, q, "position q");
  return wigner_little_d(j, q, j - n, AngleRad(0.5 * std::numbers::pi));
}

double kravchuk_psi_binomial(HalfInt j, int n, HalfInt q) {
  if (n < 0 || n > j.twice()) {
    throw DomainError("mode number outside 0…2j");
  }
  check_magnetic(j, q, "position q");
  const int big_n = j.twice();
  const int x = (q + j).as_int();
  // K_n(x; ½, N) = Σ_k (−n)_k (−x)_k / ((−N)_k k!) 2^k
  double term = 1.0;
  double poly = 1.0;
  for (int k = 0; k < n; ++k) {
    term *= static_cast<double>(-n + k) * (-x + k) / ((-big_n + k) * (k + 1.0)) * 2.0;
    poly += term;
  }
  const double log_norm = 0.5 * (log_binomial(big_n, n) + log_binomial(big_n, x)) -
                          j.value() * std::numbers::ln2;
  return sign_power(n) * std::exp(log_norm) * poly;
}

RMatrix kravchuk_table(HalfInt j) {
  const int size = j.twice() + 1;
  RMatrix t(size, size);
  for (int r = 0; r < size; ++r) {
    const HalfInt q = HalfInt::from_twice(2 * r - j.twice());
    for (int n = 0; n < size; ++n) t(r, n) = kravchuk_psi(j, n, q);
  }
  return t;
}

namespace {

using boost::multiprecision::cpp_int;

// |v| = mantissa · 2^exponent with mantissa in [0.5, 1).
std::pair<double, long> split_big(const cpp_int& v) {
  if (v == 0) return {0.0, 0};
  cpp_int mag = abs(v);
  const long top = static_cast<long>(boost::multiprecision::msb(mag));
  const long shift = std::max(0L, top - 62);
  const double m = static_cast<double>(static_cast<unsigned long long>(mag >> shift));
  int e = 0;
  const double frac = std::frexp(m, &e);
  return {v < 0 ? -frac : frac, e + shift};
}

// n! for 0 ≤ n ≤ 4·kMaxJ + 1, built once.
const std::vector<cpp_int>& big_factorials() {
  static const std::vector<cpp_int> table = [] {
    std::vector<cpp_int> t(4 * kMaxJ.as_int() + 2);
    t[0] = 1;
    for (std::size_t n = 1; n < t.size(); ++n) t[n] = t[n - 1] * static_cast<unsigned>(n);
    return t;
  }();
  return table;
}

}  // namespace

double clebsch_gordan(HalfInt j1, HalfInt m1, HalfInt j2, HalfInt m2, HalfInt J,
                      HalfInt M) {
  check_magnetic(j1, m1, "m1");
  check_magnetic(j2, m2, "m2");
  check_magnetic(J, M, "M");
  check_precision(j1);
  check_precision(j2);
  if (!(j1 + j2 + J).is_integer() || J < abs(j1 - j2) || J > j1 + j2) {
    throw DomainError("triangle condition violated for (" + j1.to_string() + ", " +
                      j2.to_string() + ", " + J.to_string() + ")");
  }
  if (M != m1 + m2) return 0.0;

  const int a = (j1 + j2 - J).as_int();
  const int b = (j1 - m1).as_int();
  const int c = (j2 + m2).as_int();
  const int d = (J - j2 + m1).as_int();
  const int e = (J - j1 - m2).as_int();
  const int kmin = std::max({0, -d, -e});
  const int kmax = std::min({a, b, c});
  if (kmin > kmax) return 0.0;

  // Σ_k t_k = t_kmin · (1 + ρ_0 (1 + ρ_1 (1 + …))) with integer ratios
  // ρ_i = −(a−k)(b−k)(c−k) / ((k+1)(d+k+1)(e+k+1)), k = kmin + i.
  cpp_int num = 1;
  cpp_int den = 1;
  for (int k = kmax - 1; k >= kmin; --k) {
    const cpp_int p = -cpp_int(a - k) * (b - k) * (c - k);
    const cpp_int q = cpp_int(k + 1) * (d + k + 1) * (e + k + 1);
    num = q * den + p * num;
    den = q * den;
  }
  if (num == 0) return 0.0;

  // C² = (2J+1) · Πfactorials · num² / (Πfactorials · t-denominators² · den²),
  // assembled exactly so only the final division and square root round.
  const auto& f = big_factorials();
  const cpp_int t0_den = f[kmin] * f[a - kmin] * f[b - kmin] * f[c - kmin] * f[d + kmin] * f[e + kmin];
  const cpp_int top = cpp_int(J.twice() + 1) * f[(J + j1 - j2).as_int()] * f[(J - j1 + j2).as_int()] *
                      f[a] * f[(J + M).as_int()] * f[(J - M).as_int()] * f[b] *
                      f[(j1 + m1).as_int()] * f[(j2 - m2).as_int()] * f[c] * num * num;
  const cpp_int bottom = f[(j1 + j2 + J).as_int() + 1] * t0_den * t0_den * den * den;
  const auto [top_m, top_e] = split_big(top);
  const auto [bot_m, bot_e] = split_big(bottom);
  const double magnitude = std::sqrt(std::ldexp(top_m / bot_m, static_cast<int>(top_e - bot_e)));
  const bool negative = (num < 0) != (den < 0);
  return sign_power(kmin) * (negative ? -magnitude : magnitude);
}

cplx ra_ma_phase(HalfInt j, int rho, HalfInt kappa, HalfInt m) {
  if (rho < 0 || rho > j.twice()) {
    throw DomainError("radius " + std::to_string(rho) + " outside 0…2j");
  }
  if (!m.is_integer() || abs(m) > HalfInt(rho)) {
    throw DomainError("angular momentum " + m.to_string() + " not allowed at radius " +
                      std::to_string(rho));
  }
  const cplx sign = phase_pi(j + rho);
  // exp[iπx/2] with x = κ + |m| − m
  const HalfInt x = kappa + abs(m) - m;
  cplx quarter;
  if (x.is_integer()) {
    quarter = phase_pi(HalfInt::from_twice(x.as_int()));
  } else {
    quarter = std::polar(1.0, 0.5 * std::numbers::pi * x.value());
  }
  return sign * quarter;
}

}  // namespace fklens

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

#include "fklens/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>

#include "fklens/cart_basis.hpp"
#include "fklens/gridmap.hpp"
#include "fklens/image_io.hpp"
#include "fklens/kernel_cache.hpp"
#include "fklens/polar_basis.hpp"
#include "fklens/verify.hpp"

namespace fklens {

namespace {

constexpr const char* kFooter = R"(Exit codes:
  0  success
  1  internal error (including a kernel failing its unitarity check)
  2  usage error
  3  dimension mismatch (image size vs --j, non-square input)
  4  unreadable or malformed file
  5  kernel cache error (bad header, version, checksum, I/O)
  6  verification suite reported a failure
  7  parameter outside the supported domain (e.g. j > 64)

Angles accept a "rad" or "deg" suffix; a bare number is radians.
PGM pixel (row r, column c) is the grid point q_x = c - j, q_y = j - r.
Kernels are cached in --cache, else $FKLENS_CACHE_DIR, else $XDG_CACHE_HOME/fklens,
else ~/.cache/fklens.)";

struct IoOptions {
  std::string in;
  std::string out;
  std::string mag;
  std::string cache;
  std::string j;
  bool no_cache = false;
};

void add_io(CLI::App* cmd, IoOptions& io) {
  cmd->add_option("--in", io.in, "input image (PGM P2/P5, CSV-complex, or polar CSV)")->required();
  cmd->add_option("--out", io.out, "output CSV (CSV-complex or polar CSV)")->required();
  cmd->add_option("--mag", io.mag, "also write a magnitude PGM rescaled to 0-255 (lossy)");
  cmd->add_option("--cache", io.cache, "kernel cache directory");
  cmd->add_flag("--no-cache", io.no_cache, "build kernels without reading or writing the cache");
  cmd->add_option("--j", io.j, "expected grid label j (N = 2j+1), e.g. 8 or 15/2");
}

std::optional<HalfInt> parse_j(const std::string& text) {
  if (text.empty()) return std::nullopt;
  return HalfInt::parse(text);
}

std::optional<std::filesystem::path> cache_dir(const IoOptions& io) {
  if (io.no_cache) return std::nullopt;
  return resolve_cache_dir(io.cache.empty() ? std::nullopt : std::optional<std::string>(io.cache));
}

void write_cart(const IoOptions& io, const CartImage& img) {
  write_csv_complex(io.out, img);
  if (!io.mag.empty()) write_magnitude_pgm(io.mag, img);
}

void write_polar(const IoOptions& io, const PolarImage& img) {
  write_polar_csv(io.out, img);
  if (!io.mag.empty()) write_magnitude_pgm(io.mag, img);
}

// Applies a group element to a Cartesian or polar image. Polar images use
// the native polar kernel when one exists and are otherwise carried through
// the Cartesian screen by the unitary map.
int transform(const IoOptions& io, KernelKind cart_kind, std::optional<KernelKind> polar_kind,
              const std::array<double, 4>& params) {
  const LoadedImage img = read_image(io.in, parse_j(io.j));
  const auto dir = cache_dir(io);
  if (!img.polar) {
    const Kernel k = obtain_kernel(img.spec, cart_kind, params, dir);
    write_cart(io, CartImage{img.spec, apply_kernel(k, img.pixels)});
  } else if (polar_kind) {
    const Kernel k = obtain_kernel(img.spec, *polar_kind, params, dir);
    write_polar(io, PolarImage{img.spec, apply_kernel(k, img.pixels)});
  } else {
    const Kernel u = obtain_kernel(img.spec, KernelKind::map_U, {}, dir);
    const Kernel k = obtain_kernel(img.spec, cart_kind, params, dir);
    const CartImage cart = polar_to_cart(PolarImage{img.spec, img.pixels}, u);
    write_polar(io, cart_to_polar(CartImage{img.spec, apply_kernel(k, cart.pixels)}, u));
  }
  return kExitOk;
}

int map_image(const IoOptions& io, const std::string& to) {
  const LoadedImage img = read_image(io.in, parse_j(io.j));
  const bool to_polar = to == "polar";
  if (img.polar == to_polar) {
    throw DimensionError(std::string("input is already a ") + (img.polar ? "polar" : "Cartesian") + " image");
  }
  const Kernel u = obtain_kernel(img.spec, KernelKind::map_U, {}, cache_dir(io));
  if (to_polar) {
    write_polar(io, cart_to_polar(CartImage{img.spec, img.pixels}, u));
  } else {
    write_cart(io, polar_to_cart(PolarImage{img.spec, img.pixels}, u));
  }
  return kExitOk;
}

int dump_basis(const std::string& kind, const std::string& j_text, const std::string& out_path,
               std::ostream& out) {
  const GridSpec spec(HalfInt::parse(j_text));
  std::shared_ptr<const BasisTable> table;
  if (kind == "cart") table = cart_basis_table(spec, BasisKind::cart_mode);
  else if (kind == "ma") table = cart_basis_table(spec, BasisKind::ma);
  else table = polar_basis_table(spec);
  std::ostringstream os;
  os << "row,col,re,im\n" << std::setprecision(17);
  const CMatrix& v = table->values;
  for (Eigen::Index r = 0; r < v.rows(); ++r) {
    for (Eigen::Index c = 0; c < v.cols(); ++c) {
      os << r << ',' << c << ',' << v(r, c).real() + 0.0 << ',' << v(r, c).imag() + 0.0 << '\n';
    }
  }
  if (out_path.empty() || out_path == "-") {
    out << os.str();
  } else {
    std::ofstream f(out_path, std::ios::trunc);
    if (!f || !(f << os.str())) throw FormatError("cannot write " + out_path);
  }
  return kExitOk;
}

int verify(const std::string& j_text, bool inject_fault, std::ostream& out) {
  const HalfInt j = HalfInt::parse(j_text);
  if (j > HalfInt(8)) throw CLI::ValidationError("--j", "verify is capped at j = 8");
  const auto results = run_verification(VerifyOptions{j, inject_fault});
  int failed = 0;
  for (const CheckResult& r : results) {
    if (!r.pass) ++failed;
    out << (r.pass ? "PASS " : "FAIL ") << r.group << ": " << r.name;
    if (r.detail.empty()) {
      out << "  (" << std::setprecision(3) << r.value << (r.pass ? " < " : " >= ") << r.tolerance << ")";
    } else {
      out << "  (" << r.detail << ")";
    }
    out << '\n';
  }
  out << (failed == 0 ? "all " + std::to_string(results.size()) + " checks passed"
                      : std::to_string(failed) + " of " + std::to_string(results.size()) + " checks failed")
      << " at j = " << j << '\n';
  return failed == 0 ? kExitOk : kExitVerifyFailed;
}

KernelKind parse_kind(const std::string& name) {
  for (int code = 0; code <= static_cast<int>(KernelKind::map_U); ++code) {
    if (to_string(static_cast<KernelKind>(code)) == name) return static_cast<KernelKind>(code);
  }
  throw CLI::ValidationError("--kind", "unknown kernel kind '" + name + "'");
}

int bench(const std::vector<int>& sizes, const std::string& kind_name, int reps,
          const std::string& out_path, std::ostream& out) {
  using clock = std::chrono::steady_clock;
  const KernelKind kind = parse_kind(kind_name);
  std::ostringstream os;
  os << "N,kind,build_seconds,apply_seconds,apply_multiply_adds,kernel_file_bytes\n";
  for (int n : sizes) {
    const GridSpec spec = GridSpec::from_size(n);
    const std::array<double, 4> params{0.3, 0.2, 0.7, 0.1};
    const auto t0 = clock::now();
    const Kernel k = build_kernel(spec, kind, params);
    const auto t1 = clock::now();
    CVector f = CVector::Ones(spec.points());
    for (int r = 0; r < reps; ++r) f = apply_kernel(k, f);
    const auto t2 = clock::now();
    const double build_s = std::chrono::duration<double>(t1 - t0).count();
    const double apply_s = std::chrono::duration<double>(t2 - t1).count() / std::max(reps, 1);
    const long long madds = static_cast<long long>(spec.points()) * spec.points();
    os << n << ',' << to_string(kind) << ',' << std::setprecision(6) << build_s << ',' << apply_s << ','
       << madds << ',' << cache_file_size(n) << '\n';
  }
  if (out_path.empty() || out_path == "-") {
    out << os.str();
  } else {
    std::ofstream f(out_path, std::ios::trunc);
    if (!f || !(f << os.str())) throw FormatError("cannot write " + out_path);
  }
  return kExitOk;
}

std::array<double, 4> angles(std::initializer_list<const std::string*> texts) {
  std::array<double, 4> out{};
  int i = 0;
  for (const std::string* t : texts) {
    try {
      out[i++] = parse_angle(*t).value();
    } catch (const DomainError& e) {
      throw CLI::ValidationError("angle", e.what());
    }
  }
  return out;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"fklens: exact unitary rotations, fractional Fourier transforms and the\n"
               "Cartesian-polar map for N x N pixellated images (finite Fourier-Kravchuk group U(2))"};
  app.name("fklens");
  app.footer(kFooter);
  app.require_subcommand(1);
  std::function<int()> action;

  IoOptions io;
  std::string theta = "0", psi = "0", omega = "0", phi = "0", to;

  auto* rotate = app.add_subcommand("rotate", "rotate a Cartesian or polar image by --theta");
  add_io(rotate, io);
  rotate->add_option("--theta", theta, "rotation angle")->required();
  rotate->callback([&] {
    action = [&] { return transform(io, KernelKind::rot_cart, KernelKind::rot_polar, angles({&theta})); };
  });

  auto* gyrate = app.add_subcommand("gyrate", "gyration by --psi");
  add_io(gyrate, io);
  gyrate->add_option("--psi", psi, "gyration angle")->required();
  gyrate->callback([&] {
    action = [&] { return transform(io, KernelKind::gyration, std::nullopt, angles({&psi})); };
  });

  auto* frft = app.add_subcommand("frft", "isotropic fractional Fourier-Kravchuk transform by --omega");
  add_io(frft, io);
  frft->add_option("--omega", omega, "transform angle")->required();
  frft->callback([&] {
    action = [&] { return transform(io, KernelKind::iso, std::nullopt, angles({&omega})); };
  });

  auto* aniso = app.add_subcommand("aniso", "anisotropic fractional Fourier-Kravchuk transform by --phi");
  add_io(aniso, io);
  aniso->add_option("--phi", phi, "transform angle")->required();
  aniso->callback([&] {
    action = [&] { return transform(io, KernelKind::aniso, std::nullopt, angles({&phi})); };
  });

  auto* u2 = app.add_subcommand("u2", "general U(2) element (omega; phi, theta, psi)");
  add_io(u2, io);
  u2->add_option("--omega", omega, "central phase angle");
  u2->add_option("--phi", phi, "first Euler angle");
  u2->add_option("--theta", theta, "second Euler angle");
  u2->add_option("--psi", psi, "third Euler angle");
  u2->callback([&] {
    action = [&] {
      return transform(io, KernelKind::u2_cart, KernelKind::u2_polar, angles({&omega, &phi, &theta, &psi}));
    };
  });

  auto* map = app.add_subcommand("map", "unitary map between the Cartesian and polar screens");
  add_io(map, io);
  map->add_option("--to", to, "target screen")->required()->check(CLI::IsMember({"polar", "cart"}));
  map->callback([&] { action = [&] { return map_image(io, to); }; });

  std::string basis_kind, basis_j, basis_out;
  auto* basis = app.add_subcommand("basis", "dump a basis table as CSV (row,col,re,im)");
  basis->add_option("--kind", basis_kind, "cart, ma or polar")->required()->check(
      CLI::IsMember({"cart", "ma", "polar"}));
  basis->add_option("--j", basis_j, "grid label j")->required();
  basis->add_option("--out", basis_out, "output CSV (default stdout)");
  basis->callback([&] { action = [&] { return dump_basis(basis_kind, basis_j, basis_out, out); }; });

  std::string verify_j = "2";
  bool inject_fault = false;
  auto* ver = app.add_subcommand("verify", "run the invariant and oracle checks (j <= 8)");
  ver->add_option("--j", verify_j, "grid label j")->capture_default_str();
  ver->add_flag("--inject-fault", inject_fault)->group("");
  ver->callback([&] { action = [&] { return verify(verify_j, inject_fault, out); }; });

  std::vector<int> sizes{9, 17, 32};
  std::string bench_kind = "rot_cart", bench_out;
  int reps = 5;
  auto* bch = app.add_subcommand("bench", "time kernel build and application, CSV report");
  bch->add_option("--n", sizes, "grid sizes N")->capture_default_str()->delimiter(',')->check(CLI::Range(1, 129));
  bch->add_option("--kind", bench_kind, "kernel kind (rot_cart, aniso, gyration, iso, u2_cart, "
                                        "rot_polar, u2_polar, map_U)")->capture_default_str();
  bch->add_option("--reps", reps, "applications timed per size")->capture_default_str()->check(CLI::PositiveNumber);
  bch->add_option("--out", bench_out, "output CSV (default stdout)");
  bch->callback([&] { action = [&] { return bench(sizes, bench_kind, reps, bench_out, out); }; });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    return action();
  } catch (const CLI::ParseError& e) {
    err << "fklens: " << e.what() << '\n';
    return kExitUsage;
  } catch (const DimensionError& e) {
    err << "fklens: dimension error: " << e.what() << '\n';
    return kExitDimension;
  } catch (const FormatError& e) {
    err << "fklens: format error: " << e.what() << '\n';
    return kExitFormat;
  } catch (const CacheError& e) {
    err << "fklens: cache error: " << e.what() << '\n';
    return kExitCache;
  } catch (const DomainError& e) {
    err << "fklens: " << e.what() << '\n';
    return kExitDomain;
  } catch (const PrecisionError& e) {
    err << "fklens: precision error: " << e.what() << '\n';
    return kExitDomain;
  } catch (const std::filesystem::filesystem_error& e) {
    err << "fklens: cache error: " << e.what() << '\n';
    return kExitCache;
  } catch (const std::exception& e) {
    err << "fklens: internal error: " << e.what() << '\n';
    return kExitInternal;
  }
}

int run_cli(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return run_cli(args, std::cout, std::cerr);
}

}  // namespace fklens

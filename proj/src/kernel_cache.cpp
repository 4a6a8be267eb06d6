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

#include "fklens/kernel_cache.hpp"

#include <bit>
#include <cmath>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <random>
#include <sstream>

#include <unistd.h>
#include <zlib.h>

#include "fklens/gridmap.hpp"

namespace fklens {

namespace fs = std::filesystem;

namespace {

constexpr char kMagic[4] = {'F', 'K', 'R', 'N'};
constexpr std::size_t kHeaderSize = 4 + 4 + 4 + 4 + 4 * 8;

void put_u32(std::vector<unsigned char>& out, std::uint32_t v) {
  for (int i = 0; i < 4; ++i) out.push_back(static_cast<unsigned char>(v >> (8 * i)));
}

void put_f64(std::vector<unsigned char>& out, double v) {
  const auto bits = std::bit_cast<std::uint64_t>(v);
  for (int i = 0; i < 8; ++i) out.push_back(static_cast<unsigned char>(bits >> (8 * i)));
}

std::uint32_t get_u32(const unsigned char* p) {
  std::uint32_t v = 0;
  for (int i = 0; i < 4; ++i) v |= std::uint32_t(p[i]) << (8 * i);
  return v;
}

double get_f64(const unsigned char* p) {
  std::uint64_t v = 0;
  for (int i = 0; i < 8; ++i) v |= std::uint64_t(p[i]) << (8 * i);
  return std::bit_cast<double>(v);
}

std::uint32_t crc_of(const unsigned char* data, std::size_t size) {
  uLong crc = crc32(0L, Z_NULL, 0);
  // zlib takes uInt lengths; feed in chunks for multi-gigabyte inputs.
  constexpr std::size_t chunk = 1u << 30;
  for (std::size_t off = 0; off < size; off += chunk) {
    crc = crc32(crc, data + off, static_cast<uInt>(std::min(chunk, size - off)));
  }
  return static_cast<std::uint32_t>(crc);
}

double quantize(double v) {
  if (!std::isfinite(v)) throw DomainError("kernel parameters must be finite");
  const double q = std::round(v / kParamQuantum) * kParamQuantum;
  return q == 0.0 ? 0.0 : q;  // fold −0 into +0
}

}  // namespace

CacheKey CacheKey::make(int n, KernelKind kind, std::array<double, 4> params) {
  if (n < 1) throw DomainError("cache key needs N >= 1");
  if (static_cast<int>(kind) > static_cast<int>(KernelKind::map_U)) {
    throw DomainError("unknown kernel kind");
  }
  CacheKey key{n, kind, {}};
  for (int i = 0; i < 4; ++i) key.params[i] = quantize(params[i]);
  return key;
}

CacheKey CacheKey::of(const Kernel& kernel) {
  return make(kernel.spec.size(), kernel.kind, kernel.params);
}

std::string CacheKey::file_name() const {
  std::ostringstream os;
  os << to_string(kind) << "_N" << n;
  for (double p : params) os << '_' << std::hex << std::bit_cast<std::uint64_t>(p) << std::dec;
  os << ".fkrn";
  return os.str();
}

std::uintmax_t cache_file_size(int n) {
  const std::uintmax_t entries = std::uintmax_t(n) * n * n * n;
  return kHeaderSize + 16 * entries + 4;
}

std::vector<unsigned char> serialize_kernel(const Kernel& kernel) {
  const CacheKey key = CacheKey::of(kernel);
  std::vector<unsigned char> out;
  out.reserve(cache_file_size(key.n));
  out.insert(out.end(), kMagic, kMagic + 4);
  put_u32(out, kCacheVersion);
  put_u32(out, static_cast<std::uint32_t>(key.n));
  out.push_back(static_cast<unsigned char>(key.kind));
  out.insert(out.end(), 3, 0);
  for (double p : key.params) put_f64(out, p);
  const CMatrix& v = kernel.values;
  for (Eigen::Index r = 0; r < v.rows(); ++r) {
    for (Eigen::Index c = 0; c < v.cols(); ++c) {
      put_f64(out, v(r, c).real());
      put_f64(out, v(r, c).imag());
    }
  }
  put_u32(out, crc_of(out.data(), out.size()));
  return out;
}

fs::path store(const CacheKey& key, const Kernel& kernel, const fs::path& dir) {
  if (CacheKey::of(kernel).file_name() != key.file_name()) {
    throw CacheHeaderError("kernel does not match cache key " + key.file_name());
  }
  check_unitary(kernel);
  const std::vector<unsigned char> bytes = serialize_kernel(kernel);
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw CacheError("cannot create cache directory " + dir.string() + ": " + ec.message());
  const fs::path final_path = dir / key.file_name();
  std::random_device rd;
  const fs::path tmp = dir / ("." + key.file_name() + ".tmp." + std::to_string(::getpid()) + "." +
                              std::to_string(rd()));
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) throw CacheError("cannot open " + tmp.string() + " for writing");
    f.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
    f.flush();
    if (!f) {
      f.close();
      fs::remove(tmp, ec);
      throw CacheError("write failed for " + tmp.string());
    }
  }
  fs::rename(tmp, final_path, ec);
  if (ec) {
    std::error_code ignored;
    fs::remove(tmp, ignored);
    throw CacheError("cannot move cache file into place: " + ec.message());
  }
  return final_path;
}

std::optional<Kernel> load(const CacheKey& key, const fs::path& dir) {
  const fs::path path = dir / key.file_name();
  std::ifstream f(path, std::ios::binary);
  if (!f) return std::nullopt;
  std::vector<unsigned char> bytes((std::istreambuf_iterator<char>(f)), std::istreambuf_iterator<char>());
  const std::string where = " in " + path.string();
  if (bytes.size() < kHeaderSize + 4 || std::memcmp(bytes.data(), kMagic, 4) != 0) {
    throw CacheHeaderError("missing FKRN header" + where);
  }
  const std::uint32_t version = get_u32(bytes.data() + 4);
  if (version != kCacheVersion) {
    throw CacheVersionError("unsupported cache version " + std::to_string(version) + where);
  }
  const std::uint32_t n = get_u32(bytes.data() + 8);
  const auto kind = static_cast<KernelKind>(bytes[12]);
  std::array<double, 4> params{};
  for (int i = 0; i < 4; ++i) params[i] = get_f64(bytes.data() + 16 + 8 * i);
  if (static_cast<int>(n) != key.n || kind != key.kind || params != key.params) {
    throw CacheHeaderError("header does not match the requested key" + where);
  }
  if (bytes.size() != cache_file_size(key.n)) {
    throw CacheHeaderError("file has " + std::to_string(bytes.size()) + " bytes, expected " +
                           std::to_string(cache_file_size(key.n)) + where);
  }
  const std::size_t body = bytes.size() - 4;
  if (crc_of(bytes.data(), body) != get_u32(bytes.data() + body)) {
    throw CacheChecksumError("checksum mismatch" + where);
  }
  const GridSpec spec = GridSpec::from_size(key.n);
  const int dim = spec.points();
  CMatrix values(dim, dim);
  const unsigned char* p = bytes.data() + kHeaderSize;
  for (int r = 0; r < dim; ++r) {
    for (int c = 0; c < dim; ++c, p += 16) values(r, c) = cplx(get_f64(p), get_f64(p + 8));
  }
  Kernel k{spec, grid_kind_of(kind), kind, params, std::move(values)};
  check_unitary(k);
  return k;
}

fs::path resolve_cache_dir(const std::optional<std::string>& flag) {
  if (flag && !flag->empty()) return fs::path(*flag);
  if (const char* env = std::getenv("FKLENS_CACHE_DIR"); env && *env) return fs::path(env);
  if (const char* xdg = std::getenv("XDG_CACHE_HOME"); xdg && *xdg) return fs::path(xdg) / "fklens";
  if (const char* home = std::getenv("HOME"); home && *home) return fs::path(home) / ".cache" / "fklens";
  return fs::path(".fklens-cache");
}

Kernel build_kernel(const GridSpec& spec, KernelKind kind, const std::array<double, 4>& params) {
  const AngleRad a(params[0]);
  const EulerParams e{AngleRad(params[0]), AngleRad(params[1]), AngleRad(params[2]), AngleRad(params[3])};
  switch (kind) {
    case KernelKind::rot_cart: return kernel_rotation_cart(spec, a);
    case KernelKind::aniso: return kernel_aniso(spec, a);
    case KernelKind::gyration: return kernel_gyration(spec, a);
    case KernelKind::iso: return kernel_isotropic(spec, a);
    case KernelKind::u2_cart: return kernel_u2_cart(spec, e);
    case KernelKind::rot_polar: return kernel_rotation_polar(spec, a);
    case KernelKind::u2_polar: return kernel_u2_polar(spec, e);
    case KernelKind::map_U: return kernel_U(spec);
  }
  throw DomainError("unknown kernel kind");
}

Kernel obtain_kernel(const GridSpec& spec, KernelKind kind, const std::array<double, 4>& params,
                     const std::optional<fs::path>& dir) {
  const CacheKey key = CacheKey::make(spec.size(), kind, params);
  if (!dir || !spec.has_default_offsets()) return build_kernel(spec, kind, key.params);
  if (auto hit = load(key, *dir)) return *std::move(hit);
  Kernel built = build_kernel(spec, kind, key.params);
  store(key, built, *dir);
  return built;
}

}  // namespace fklens

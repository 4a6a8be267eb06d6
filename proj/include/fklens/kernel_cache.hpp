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

#include <array>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "fklens/fourier_group.hpp"

namespace fklens {

/// Identifies a kernel on disk. Parameters are rounded to multiples of
/// kParamQuantum on construction, so writes and lookups agree.
struct CacheKey {
  int n = 0;
  KernelKind kind = KernelKind::rot_cart;
  std::array<double, 4> params{};

  static CacheKey make(int n, KernelKind kind, std::array<double, 4> params);
  static CacheKey of(const Kernel& kernel);

  std::string file_name() const;
};

inline constexpr double kParamQuantum = 1e-12;
inline constexpr std::uint32_t kCacheVersion = 1;

/// Size in bytes of a cache file for grid size N.
std::uintmax_t cache_file_size(int n);

/// Binary layout, all little-endian:
///   "FKRN", u32 version, u32 N, u8 kind, 3 pad bytes, 4 × f64 params,
///   N⁴ × (f64 re, f64 im) row-major, u32 CRC-32 of everything before it.
std::vector<unsigned char> serialize_kernel(const Kernel& kernel);

/// Writes atomically (temporary file + rename) and returns the final path.
std::filesystem::path store(const CacheKey& key, const Kernel& kernel,
                            const std::filesystem::path& dir);

/// Absent when no file exists for the key. Throws CacheVersionError,
/// CacheHeaderError, CacheChecksumError, or UnitarityError on a bad file.
/// Values are not compared with a rebuild; the unitarity re-check is what
/// admits a file written on another platform.
std::optional<Kernel> load(const CacheKey& key, const std::filesystem::path& dir);

/// --cache value if given, else $FKLENS_CACHE_DIR, else $XDG_CACHE_HOME/fklens,
/// else ~/.cache/fklens, else ./.fklens-cache.
std::filesystem::path resolve_cache_dir(const std::optional<std::string>& flag);

/// Builds the kernel described by (spec, kind, params) without the cache.
Kernel build_kernel(const GridSpec& spec, KernelKind kind, const std::array<double, 4>& params);

/// Loads from `dir` or builds and stores. Grids with ring offsets bypass the
/// cache because the file format does not record them.
Kernel obtain_kernel(const GridSpec& spec, KernelKind kind, const std::array<double, 4>& params,
                     const std::optional<std::filesystem::path>& dir);

}  // namespace fklens

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

#include <filesystem>
#include <optional>
#include <string>

#include "fklens/gridmap.hpp"

namespace fklens {

// Screen orientation for N×N files (PGM and CSV-complex): file row r and
// column c hold the pixel at q_x = c − j, q_y = j − r, so the top row is
// q_y = +j and "up" in the picture is +q_y.
//
//        c = 0 ............ c = N−1
//   r = 0     (−j, +j) ... (+j, +j)
//     ...
//   r = N−1   (−j, −j) ... (+j, −j)

enum class ImageFormat { pgm_p2, pgm_p5, csv_complex, polar_csv };

struct LoadedImage {
  ImageFormat format;
  GridSpec spec;
  bool polar = false;  ///< pixels in enumerate_polar() order if set
  CVector pixels;      ///< otherwise in enumerate_cartesian() order
};

/// Format from the leading bytes: "P2"/"P5" → PGM, a "rho,k,re,im" header →
/// polar CSV, anything else → CSV-complex.
ImageFormat detect_format(const std::filesystem::path& path);

/// Reads any supported format. When `expected_j` is given, the file size
/// must match it (DimensionError otherwise). Malformed content throws
/// FormatError.
LoadedImage read_image(const std::filesystem::path& path, std::optional<HalfInt> expected_j);

/// Cells "re+imi" with 17 significant digits; round-trips exactly.
void write_csv_complex(const std::filesystem::path& path, const CartImage& img);
/// Header "rho,k,re,im", one row per polar point in canonical order.
void write_polar_csv(const std::filesystem::path& path, const PolarImage& img);

/// Binary PGM (P5, maxval 255) of |pixel| rescaled so the largest magnitude
/// maps to 255. Lossy; for viewing only.
void write_magnitude_pgm(const std::filesystem::path& path, const CartImage& img);
/// Polar magnitudes unrolled: row ρ, column k + 2j, on a (2j+1)×(4j+1)
/// canvas; points outside the rings are 0.
void write_magnitude_pgm(const std::filesystem::path& path, const PolarImage& img);

/// Writes real parts rounded and clamped to 0…255 as P2 or P5.
void write_pgm(const std::filesystem::path& path, const CartImage& img, bool binary);

/// Parses one CSV-complex cell ("1.5-2e-3i", "-0.25+0i", "3", "2i").
cplx parse_complex_cell(const std::string& cell);

}  // namespace fklens

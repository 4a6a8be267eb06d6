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

#include "fklens/image_io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iterator>
#include <set>
#include <sstream>
#include <vector>

namespace fklens {

namespace fs = std::filesystem;

namespace {

std::string slurp(const fs::path& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw FormatError("cannot open " + path.string());
  return std::string((std::istreambuf_iterator<char>(f)), std::istreambuf_iterator<char>());
}

std::string trim(std::string s) {
  auto space = [](unsigned char c) { return std::isspace(c) != 0; };
  s.erase(s.begin(), std::find_if_not(s.begin(), s.end(), space));
  s.erase(std::find_if_not(s.rbegin(), s.rend(), space).base(), s.end());
  return s;
}

std::vector<std::string> split(const std::string& line, char sep) {
  std::vector<std::string> out;
  std::string cell;
  std::istringstream is(line);
  while (std::getline(is, cell, sep)) out.push_back(trim(cell));
  if (!line.empty() && line.back() == sep) out.emplace_back();
  return out;
}

std::vector<std::string> data_lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream is(text);
  std::string line;
  while (std::getline(is, line)) {
    line = trim(line);
    if (!line.empty() && line[0] != '#') out.push_back(line);
  }
  return out;
}

double parse_real(const std::string& s, const std::string& context) {
  if (s.empty()) throw FormatError("empty number in " + context);
  // from_chars accepts subnormals (stod reports them as out of range) but
  // not a leading '+'.
  const char* first = s.data() + (s[0] == '+' && s.size() > 1 && s[1] != '-' ? 1 : 0);
  const char* last = s.data() + s.size();
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc{} || ptr != last || !std::isfinite(v)) {
    throw FormatError("'" + s + "' is not a number in " + context);
  }
  return v;
}

int side_of(std::size_t count, const std::string& what) {
  const int side = static_cast<int>(std::lround(std::sqrt(static_cast<double>(count))));
  if (side < 1 || static_cast<std::size_t>(side) * side != count) {
    throw DimensionError(what + " has " + std::to_string(count) + " points, not a square number");
  }
  return side;
}

void check_expected(const GridSpec& spec, std::optional<HalfInt> expected_j) {
  if (expected_j && *expected_j != spec.j()) {
    throw DimensionError("image has N = " + std::to_string(spec.size()) + " (j = " + spec.j().to_string() +
                         ") but --j " + expected_j->to_string() + " was given");
  }
}

// Places file cell (r, c) of an N×N picture into canonical Cartesian order.
int cell_index(int n, int r, int c) { return c * n + (n - 1 - r); }

LoadedImage read_pgm(const std::string& text, ImageFormat format) {
  std::size_t pos = 2;
  auto next_token = [&]() -> std::string {
    while (pos < text.size()) {
      if (text[pos] == '#') {
        while (pos < text.size() && text[pos] != '\n') ++pos;
      } else if (std::isspace(static_cast<unsigned char>(text[pos]))) {
        ++pos;
      } else {
        break;
      }
    }
    const std::size_t start = pos;
    while (pos < text.size() && !std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    if (start == pos) throw FormatError("truncated PGM");
    return text.substr(start, pos - start);
  };
  auto next_int = [&]() {
    const std::string tok = next_token();
    if (!std::all_of(tok.begin(), tok.end(), [](unsigned char c) { return std::isdigit(c); })) {
      throw FormatError("PGM field '" + tok + "' is not a non-negative integer");
    }
    return std::stoi(tok);
  };
  const int width = next_int();
  const int height = next_int();
  const int maxval = next_int();
  if (width < 1 || height < 1) throw FormatError("PGM has empty dimensions");
  if (maxval < 1 || maxval > 255) throw FormatError("PGM maxval must be 1..255");
  if (width != height) {
    throw DimensionError("PGM is " + std::to_string(width) + "x" + std::to_string(height) + ", not square");
  }
  const int n = width;
  LoadedImage img{format, GridSpec::from_size(n), false, CVector(n * n)};
  if (format == ImageFormat::pgm_p2) {
    for (int r = 0; r < n; ++r) {
      for (int c = 0; c < n; ++c) {
        const int v = next_int();
        if (v > maxval) throw FormatError("PGM sample exceeds maxval");
        img.pixels(cell_index(n, r, c)) = double(v);
      }
    }
  } else {
    ++pos;  // single whitespace after maxval
    if (text.size() < pos + std::size_t(n) * n) throw FormatError("truncated P5 raster");
    for (int r = 0; r < n; ++r) {
      for (int c = 0; c < n; ++c) {
        const int v = static_cast<unsigned char>(text[pos + r * n + c]);
        if (v > maxval) throw FormatError("PGM sample exceeds maxval");
        img.pixels(cell_index(n, r, c)) = double(v);
      }
    }
  }
  return img;
}

LoadedImage read_csv_complex(const std::string& text) {
  const auto lines = data_lines(text);
  if (lines.empty()) throw FormatError("CSV image is empty");
  const int n = static_cast<int>(lines.size());
  const auto first = split(lines[0], ',');
  const bool paired = static_cast<int>(first.size()) == 2 * n;
  if (!paired && static_cast<int>(first.size()) != n) {
    throw DimensionError("CSV image has " + std::to_string(n) + " rows and " +
                         std::to_string(first.size()) + " columns");
  }
  LoadedImage img{ImageFormat::csv_complex, GridSpec::from_size(n), false, CVector(n * n)};
  for (int r = 0; r < n; ++r) {
    const auto cells = split(lines[r], ',');
    if (cells.size() != first.size()) {
      throw DimensionError("CSV row " + std::to_string(r + 1) + " has " + std::to_string(cells.size()) +
                           " cells, expected " + std::to_string(first.size()));
    }
    for (int c = 0; c < n; ++c) {
      const std::string where = "row " + std::to_string(r + 1);
      img.pixels(cell_index(n, r, c)) =
          paired ? cplx(parse_real(cells[2 * c], where), parse_real(cells[2 * c + 1], where))
                 : parse_complex_cell(cells[c]);
    }
  }
  return img;
}

LoadedImage read_polar_csv(const std::string& text) {
  auto lines = data_lines(text);
  if (lines.empty()) throw FormatError("polar CSV is empty");
  lines.erase(lines.begin());
  const int n = side_of(lines.size(), "polar CSV");
  const GridSpec spec = GridSpec::from_size(n);
  LoadedImage img{ImageFormat::polar_csv, spec, true, CVector::Zero(n * n)};
  std::set<int> seen;
  for (const auto& line : lines) {
    const auto cells = split(line, ',');
    if (cells.size() != 4) throw FormatError("polar CSV rows need rho,k,re,im: '" + line + "'");
    const double rho = parse_real(cells[0], "polar CSV"), k = parse_real(cells[1], "polar CSV");
    if (rho != std::floor(rho) || k != std::floor(k)) throw FormatError("rho and k must be integers");
    int idx;
    try {
      idx = polar_index(spec, static_cast<int>(rho), static_cast<int>(k));
    } catch (const DomainError&) {
      throw DimensionError("polar point (" + cells[0] + ", " + cells[1] + ") is outside an N = " +
                           std::to_string(n) + " screen");
    }
    if (!seen.insert(idx).second) throw FormatError("polar point listed twice: " + line);
    img.pixels(idx) = cplx(parse_real(cells[2], "polar CSV"), parse_real(cells[3], "polar CSV"));
  }
  return img;
}

void write_text(const fs::path& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw FormatError("cannot open " + path.string() + " for writing");
  f << text;
  if (!f) throw FormatError("write failed for " + path.string());
}

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v == 0.0 ? 0.0 : v);
  return buf;
}

void write_raster(const fs::path& path, int rows, int cols, const std::vector<int>& samples, bool binary) {
  std::ostringstream os;
  os << (binary ? "P5" : "P2") << '\n' << cols << ' ' << rows << "\n255\n";
  if (binary) {
    for (int v : samples) os.put(static_cast<char>(static_cast<unsigned char>(v)));
  } else {
    for (int r = 0; r < rows; ++r) {
      for (int c = 0; c < cols; ++c) os << samples[r * cols + c] << (c + 1 < cols ? ' ' : '\n');
    }
  }
  write_text(path, os.str());
}

std::vector<int> rescale(const std::vector<double>& mags) {
  const double top = mags.empty() ? 0.0 : *std::max_element(mags.begin(), mags.end());
  std::vector<int> out(mags.size(), 0);
  if (top <= 0.0) return out;
  for (std::size_t i = 0; i < mags.size(); ++i) {
    out[i] = static_cast<int>(std::lround(255.0 * mags[i] / top));
  }
  return out;
}

}  // namespace

cplx parse_complex_cell(const std::string& raw) {
  const std::string cell = trim(raw);
  if (cell.empty()) throw FormatError("empty CSV cell");
  if (cell.back() != 'i') return {parse_real(cell, "cell '" + cell + "'"), 0.0};
  const std::string body = cell.substr(0, cell.size() - 1);
  // The imaginary part starts at the last sign that is not an exponent sign.
  std::size_t split_at = std::string::npos;
  for (std::size_t i = body.size(); i-- > 1;) {
    if ((body[i] == '+' || body[i] == '-') && body[i - 1] != 'e' && body[i - 1] != 'E') {
      split_at = i;
      break;
    }
  }
  const std::string context = "cell '" + cell + "'";
  if (split_at == std::string::npos) {
    if (body.empty() || body == "+") return {0.0, 1.0};
    if (body == "-") return {0.0, -1.0};
    return {0.0, parse_real(body, context)};
  }
  const std::string re = body.substr(0, split_at);
  std::string im = body.substr(split_at);
  if (im == "+" || im == "-") im += "1";
  return {parse_real(re, context), parse_real(im, context)};
}

ImageFormat detect_format(const fs::path& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw FormatError("cannot open " + path.string());
  std::string head(64, '\0');
  f.read(head.data(), static_cast<std::streamsize>(head.size()));
  head.resize(static_cast<std::size_t>(f.gcount()));
  if (head.rfind("P2", 0) == 0) return ImageFormat::pgm_p2;
  if (head.rfind("P5", 0) == 0) return ImageFormat::pgm_p5;
  if (head.size() >= 2 && head[0] == 'P' && std::isdigit(static_cast<unsigned char>(head[1]))) {
    throw FormatError("only P2 and P5 PGM images are supported");
  }
  std::string first = head.substr(0, head.find('\n'));
  first.erase(std::remove_if(first.begin(), first.end(), [](unsigned char c) { return std::isspace(c); }),
              first.end());
  if (first == "rho,k,re,im") return ImageFormat::polar_csv;
  return ImageFormat::csv_complex;
}

LoadedImage read_image(const fs::path& path, std::optional<HalfInt> expected_j) {
  const ImageFormat format = detect_format(path);
  const std::string text = slurp(path);
  LoadedImage img = [&] {
    switch (format) {
      case ImageFormat::pgm_p2:
      case ImageFormat::pgm_p5: return read_pgm(text, format);
      case ImageFormat::polar_csv: return read_polar_csv(text);
      case ImageFormat::csv_complex: break;
    }
    return read_csv_complex(text);
  }();
  check_expected(img.spec, expected_j);
  return img;
}

void write_csv_complex(const fs::path& path, const CartImage& img) {
  const int n = img.spec.size();
  std::ostringstream os;
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) {
      const cplx v = img.pixels(cell_index(n, r, c));
      const std::string im = format_double(v.imag());
      os << format_double(v.real()) << (im[0] == '-' ? "" : "+") << im << 'i' << (c + 1 < n ? ',' : '\n');
    }
  }
  write_text(path, os.str());
}

void write_polar_csv(const fs::path& path, const PolarImage& img) {
  std::ostringstream os;
  os << "rho,k,re,im\n";
  int i = 0;
  for (const PolarPoint& p : enumerate_polar(img.spec)) {
    const cplx v = img.pixels(i++);
    os << p.rho << ',' << p.k << ',' << format_double(v.real()) << ',' << format_double(v.imag()) << '\n';
  }
  write_text(path, os.str());
}

void write_magnitude_pgm(const fs::path& path, const CartImage& img) {
  const int n = img.spec.size();
  std::vector<double> mags(n * n);
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) mags[r * n + c] = std::abs(img.pixels(cell_index(n, r, c)));
  }
  write_raster(path, n, n, rescale(mags), true);
}

void write_magnitude_pgm(const fs::path& path, const PolarImage& img) {
  const int rows = img.spec.size();
  const int cols = 2 * rows - 1;
  std::vector<double> mags(rows * cols, 0.0);
  int i = 0;
  for (const PolarPoint& p : enumerate_polar(img.spec)) {
    mags[p.rho * cols + p.k + rows - 1] = std::abs(img.pixels(i++));
  }
  write_raster(path, rows, cols, rescale(mags), true);
}

void write_pgm(const fs::path& path, const CartImage& img, bool binary) {
  const int n = img.spec.size();
  std::vector<int> samples(n * n);
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) {
      const double v = std::round(img.pixels(cell_index(n, r, c)).real());
      samples[r * n + c] = static_cast<int>(std::clamp(v, 0.0, 255.0));
    }
  }
  write_raster(path, n, n, samples, binary);
}

}  // namespace fklens

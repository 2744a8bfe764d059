#ifndef LIQ_RASTER_HPP
#define LIQ_RASTER_HPP

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

#include "liq/curves.hpp"
#include "liq/detail/binary_io.hpp"
#include "liq/detail/parallel.hpp"
#include "liq/errors.hpp"
#include "liq/geo.hpp"
#include "liq/mi.hpp"

namespace liq {
namespace raster {

inline constexpr std::uint16_t kNoData = 65535;
inline constexpr double kDefaultCellSize = 0.000833;  // degrees, ~90 m

enum class BandKind : std::uint8_t {
  A = 0,
  B = 1,
  Class = 2,
  Mi = 3,
  Pgf = 4,
  Pga = 5,
  PgaM = 6
};

inline const char* to_string(BandKind kind) {
  switch (kind) {
    case BandKind::A: return "A";
    case BandKind::B: return "B";
    case BandKind::Class: return "class";
    case BandKind::Mi: return "MI";
    case BandKind::Pgf: return "PGF";
    case BandKind::Pga: return "PGA";
    case BandKind::PgaM: return "PGA_M";
  }
  return "unknown";
}

/// Georeferenced 16-bit grid. Values are quantized codes, row-major from the
/// north-west corner; `origin` is the upper-left corner of the upper-left
/// cell. All value arithmetic goes through decode/encode so nodata can never
/// leak into computations as a number.
struct AbRaster {
  std::uint32_t width = 0;
  std::uint32_t height = 0;
  double origin_lon = 0.0;  // west edge
  double origin_lat = 0.0;  // north edge
  double cell_size = kDefaultCellSize;
  BandKind band_kind = BandKind::A;
  MiKind mi_kind = MiKind::Lpi;
  float quant_scale = 0.01f;
  std::vector<std::uint16_t> values;

  std::size_t size() const {
    return static_cast<std::size_t>(width) * height;
  }
  std::size_t index(std::uint32_t col, std::uint32_t row) const {
    return static_cast<std::size_t>(row) * width + col;
  }
  std::uint16_t code_at(std::uint32_t col, std::uint32_t row) const {
    return values[index(col, row)];
  }

  bool is_nodata(std::uint32_t col, std::uint32_t row) const {
    return code_at(col, row) == kNoData;
  }

  /// Decoded value, NaN for nodata.
  double at(std::uint32_t col, std::uint32_t row) const {
    std::uint16_t code = code_at(col, row);
    if (code == kNoData) return std::numeric_limits<double>::quiet_NaN();
    return static_cast<double>(code) * quant_scale;
  }

  void set(std::uint32_t col, std::uint32_t row, double value) {
    if (!std::isfinite(value)) {
      values[index(col, row)] = kNoData;
      return;
    }
    double v = std::clamp(value / quant_scale, 0.0, 65534.0);
    values[index(col, row)] = static_cast<std::uint16_t>(std::lround(v));
  }
  void set_nodata(std::uint32_t col, std::uint32_t row) {
    values[index(col, row)] = kNoData;
  }

  /// Center coordinates of cell (col, row).
  geo::LonLat coord_of(std::uint32_t col, std::uint32_t row) const {
    return {origin_lon + (col + 0.5) * cell_size,
            origin_lat - (row + 0.5) * cell_size};
  }

  /// Cell containing the coordinate; false when outside the grid.
  bool cell_of(const geo::LonLat& p, std::uint32_t& col,
               std::uint32_t& row) const {
    double x = (p.lon - origin_lon) / cell_size;
    double y = (origin_lat - p.lat) / cell_size;
    if (x < 0.0 || y < 0.0) return false;
    auto c = static_cast<std::uint64_t>(x);
    auto r = static_cast<std::uint64_t>(y);
    if (c >= width || r >= height) return false;
    col = static_cast<std::uint32_t>(c);
    row = static_cast<std::uint32_t>(r);
    return true;
  }

  bool same_grid(const AbRaster& other) const {
    return width == other.width && height == other.height &&
           origin_lon == other.origin_lon && origin_lat == other.origin_lat &&
           cell_size == other.cell_size;
  }
};

inline AbRaster make_raster(std::uint32_t width, std::uint32_t height,
                            double origin_lon, double origin_lat,
                            double cell_size, BandKind band = BandKind::A,
                            MiKind mi = MiKind::Lpi, float scale = 0.01f) {
  AbRaster r;
  r.width = width;
  r.height = height;
  r.origin_lon = origin_lon;
  r.origin_lat = origin_lat;
  r.cell_size = cell_size;
  r.band_kind = band;
  r.mi_kind = mi;
  r.quant_scale = scale;
  r.values.assign(r.size(), kNoData);
  return r;
}

inline void write_abgrid(const AbRaster& r, std::ostream& os) {
  os.write("ABG1", 4);
  detail::write_le<std::uint32_t>(os, r.width);
  detail::write_le<std::uint32_t>(os, r.height);
  detail::write_le<double>(os, r.origin_lon);
  detail::write_le<double>(os, r.origin_lat);
  detail::write_le<double>(os, r.cell_size);
  detail::write_le<std::uint8_t>(os, static_cast<std::uint8_t>(r.band_kind));
  detail::write_le<std::uint8_t>(os, static_cast<std::uint8_t>(r.mi_kind));
  detail::write_le<float>(os, r.quant_scale);
  detail::write_le<std::uint16_t>(os, kNoData);
  for (std::uint16_t v : r.values) detail::write_le<std::uint16_t>(os, v);
}

inline void write_abgrid(const AbRaster& r, const std::string& path) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw IoError("cannot open for write: " + path);
  write_abgrid(r, os);
  if (!os) throw IoError("write failed: " + path);
}

inline AbRaster read_abgrid(std::istream& is) {
  char magic[4];
  is.read(magic, 4);
  if (!is || is.gcount() != 4) throw TruncatedFile();
  if (std::string(magic, 4) != "ABG1") throw BadMagic();
  AbRaster r;
  r.width = detail::read_le<std::uint32_t>(is);
  r.height = detail::read_le<std::uint32_t>(is);
  r.origin_lon = detail::read_le<double>(is);
  r.origin_lat = detail::read_le<double>(is);
  r.cell_size = detail::read_le<double>(is);
  auto band = detail::read_le<std::uint8_t>(is);
  auto mi = detail::read_le<std::uint8_t>(is);
  r.quant_scale = detail::read_le<float>(is);
  auto nodata = detail::read_le<std::uint16_t>(is);
  if (r.width == 0 || r.height == 0 || !(r.cell_size > 0.0) || band > 6 ||
      mi > 2 || !(r.quant_scale > 0.0f) || nodata != kNoData)
    throw HeaderInconsistent();
  if (!std::isfinite(r.origin_lon) || !std::isfinite(r.origin_lat))
    throw HeaderInconsistent();
  r.band_kind = static_cast<BandKind>(band);
  r.mi_kind = static_cast<MiKind>(mi);
  r.values.resize(r.size());
  for (std::size_t i = 0; i < r.values.size(); ++i)
    r.values[i] = detail::read_le<std::uint16_t>(is);
  return r;
}

inline AbRaster read_abgrid(const std::string& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw IoError("cannot open: " + path);
  return read_abgrid(is);
}

/// ESRI ASCII grid import. Values are quantized with the supplied band scale;
/// the lower-left corner of the header is converted to this container's
/// upper-left origin convention.
inline AbRaster import_ascii_grid(std::istream& is, BandKind band = BandKind::A,
                                  MiKind mi = MiKind::Lpi, float scale = 0.01f) {
  long ncols = -1, nrows = -1;
  double xll = 0.0, yll = 0.0, cell = 0.0, nodata_value = -9999.0;
  bool have_xll = false, have_yll = false, have_cell = false;

  std::string key;
  // header: keyword/value pairs until the first numeric token
  for (;;) {
    std::streampos before = is.tellg();
    if (!(is >> key)) throw MalformedHeader();
    std::string lower;
    for (char c : key) lower.push_back(static_cast<char>(std::tolower(c)));
    if (lower == "ncols" || lower == "nrows" || lower == "xllcorner" ||
        lower == "yllcorner" || lower == "cellsize" || lower == "nodata_value") {
      double v;
      if (!(is >> v)) throw MalformedHeader();
      if (lower == "ncols") ncols = static_cast<long>(v);
      else if (lower == "nrows") nrows = static_cast<long>(v);
      else if (lower == "xllcorner") { xll = v; have_xll = true; }
      else if (lower == "yllcorner") { yll = v; have_yll = true; }
      else if (lower == "cellsize") { cell = v; have_cell = true; }
      else nodata_value = v;
    } else {
      is.clear();
      is.seekg(before);
      break;
    }
  }
  if (ncols <= 0 || nrows <= 0 || !have_xll || !have_yll || !have_cell ||
      !(cell > 0.0))
    throw MalformedHeader();

  AbRaster r = make_raster(static_cast<std::uint32_t>(ncols),
                           static_cast<std::uint32_t>(nrows), xll,
                           yll + nrows * cell, cell, band, mi, scale);
  for (std::size_t i = 0; i < r.size(); ++i) {
    double v;
    if (!(is >> v)) throw RaggedRows();
    if (v == nodata_value)
      r.values[i] = kNoData;
    else
      r.set(static_cast<std::uint32_t>(i % r.width),
            static_cast<std::uint32_t>(i / r.width), v);
  }
  double extra;
  if (is >> extra) throw RaggedRows();
  return r;
}

inline AbRaster import_ascii_grid(const std::string& path,
                                  BandKind band = BandKind::A,
                                  MiKind mi = MiKind::Lpi, float scale = 0.01f) {
  std::ifstream is(path);
  if (!is) throw IoError("cannot open: " + path);
  return import_ascii_grid(is, band, mi, scale);
}

inline void export_ascii_grid(const AbRaster& r, std::ostream& os) {
  os << "ncols " << r.width << "\n";
  os << "nrows " << r.height << "\n";
  std::ostringstream head;
  head.precision(10);
  head << "xllcorner " << r.origin_lon << "\n";
  head << "yllcorner " << (r.origin_lat - r.height * r.cell_size) << "\n";
  head << "cellsize " << r.cell_size << "\n";
  os << head.str();
  os << "NODATA_value -9999\n";
  std::ostringstream line;
  line.precision(6);
  for (std::uint32_t row = 0; row < r.height; ++row) {
    line.str("");
    for (std::uint32_t col = 0; col < r.width; ++col) {
      if (col) line << ' ';
      if (r.is_nodata(col, row))
        line << "-9999";
      else
        line << r.at(col, row);
    }
    line << '\n';
    os << line.str();
  }
}

inline void export_ascii_grid(const AbRaster& r, const std::string& path) {
  std::ofstream os(path);
  if (!os) throw IoError("cannot open for write: " + path);
  export_ascii_grid(r, os);
  if (!os) throw IoError("write failed: " + path);
}

/// Boolean companion grid; nonzero marks a cell for exclusion.
struct MaskGrid {
  std::uint32_t width = 0;
  std::uint32_t height = 0;
  std::vector<std::uint8_t> cells;
};

struct MaskSet {
  std::vector<MaskGrid> masks;  // slope, lakes, glaciers, ice, permafrost...
};

inline AbRaster apply_masks(const AbRaster& r, const MaskSet& set) {
  AbRaster out = r;
  for (const MaskGrid& m : set.masks) {
    if (m.width != r.width || m.height != r.height) throw GridMismatch();
    for (std::size_t i = 0; i < out.values.size(); ++i)
      if (m.cells[i]) out.values[i] = kNoData;
  }
  return out;
}

/// Cell-wise map over decoded values; fn(double) -> double runs only on data
/// cells, nodata propagates. Row-parallel.
template <typename Fn>
AbRaster map_cells(const AbRaster& r, Fn&& fn, BandKind out_band,
                   float out_scale, int jobs = 0) {
  AbRaster out = r;
  out.band_kind = out_band;
  out.quant_scale = out_scale;
  detail::parallel_for(
      r.height,
      [&](std::size_t row_i) {
        auto row = static_cast<std::uint32_t>(row_i);
        for (std::uint32_t col = 0; col < r.width; ++col) {
          if (r.is_nodata(col, row))
            out.set_nodata(col, row);
          else
            out.set(col, row, fn(r.at(col, row)));
        }
      },
      jobs);
  return out;
}

/// Cell-wise zip of two aligned rasters; nodata in either input propagates.
template <typename Fn>
AbRaster zip_cells(const AbRaster& a, const AbRaster& b, Fn&& fn,
                   BandKind out_band, float out_scale, int jobs = 0) {
  if (!a.same_grid(b)) throw GridMismatch();
  AbRaster out = a;
  out.band_kind = out_band;
  out.quant_scale = out_scale;
  detail::parallel_for(
      a.height,
      [&](std::size_t row_i) {
        auto row = static_cast<std::uint32_t>(row_i);
        for (std::uint32_t col = 0; col < a.width; ++col) {
          if (a.is_nodata(col, row) || b.is_nodata(col, row))
            out.set_nodata(col, row);
          else
            out.set(col, row, fn(a.at(col, row), b.at(col, row)));
        }
      },
      jobs);
  return out;
}

}  // namespace raster
}  // namespace liq

#endif  // LIQ_RASTER_HPP

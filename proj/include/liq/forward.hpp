#ifndef LIQ_FORWARD_HPP
#define LIQ_FORWARD_HPP

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "liq/curves.hpp"
#include "liq/detail/parallel.hpp"
#include "liq/detail/xml.hpp"
#include "liq/errors.hpp"
#include "liq/geo.hpp"
#include "liq/mechanics.hpp"
#include "liq/mi.hpp"
#include "liq/raster.hpp"

namespace liq {
namespace forward {

/// Dyadic quantization steps so the common probabilities and accelerations
/// decode exactly: 0.5 and 1.0 are representable without rounding.
inline constexpr float kPgaQuantScale = 1.0f / 16384.0f;  // up to ~4 g
inline constexpr float kPgfQuantScale = 1.0f / 32768.0f;  // up to 2, used [0,1]

// ---------------------------------------------------------------------------
// ShakeMap grid
// ---------------------------------------------------------------------------

struct ShakeGrid {
  std::string event_id;
  double magnitude = 0.0;
  double lon_min = 0.0, lat_min = 0.0, lon_max = 0.0, lat_max = 0.0;
  std::uint32_t nlon = 0, nlat = 0;
  /// Per-cell arrays, row-major with row 0 at lat_max (north) and column 0
  /// at lon_min (west). Keyed by upper-cased field name; PGA is in g.
  std::map<std::string, std::vector<double>> fields;

  double dlon() const {
    return nlon > 1 ? (lon_max - lon_min) / (nlon - 1) : 0.0;
  }
  double dlat() const {
    return nlat > 1 ? (lat_max - lat_min) / (nlat - 1) : 0.0;
  }
  double node_lon(std::uint32_t col) const { return lon_min + col * dlon(); }
  double node_lat(std::uint32_t row) const { return lat_max - row * dlat(); }

  bool has_field(const std::string& upper_name) const {
    return fields.count(upper_name) != 0;
  }
  const std::vector<double>& field(const std::string& upper_name) const {
    auto it = fields.find(upper_name);
    if (it == fields.end())
      throw MissingPgaField("shakemap field not present: " + upper_name);
    return it->second;
  }
};

namespace detail_fwd {

inline std::string upper(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  for (char c : s)
    out.push_back(static_cast<char>(std::toupper(static_cast<unsigned char>(c))));
  return out;
}

inline double parse_double(const std::string& text, const char* what) {
  const char* begin = text.c_str();
  char* end = nullptr;
  double v = std::strtod(begin, &end);
  if (end == begin || end != begin + text.size() || !std::isfinite(v))
    throw MalformedXml(std::string("cannot parse number for ") + what + ": " +
                       text);
  return v;
}

inline double require_attr_double(const liq::detail::xml::Element& el,
                                  const char* key) {
  const std::string* raw = el.attr(key);
  if (!raw)
    throw MalformedXml(std::string("missing attribute ") + key + " on <" +
                       el.name + ">");
  return parse_double(*raw, key);
}

}  // namespace detail_fwd

/// Parse a USGS-style ShakeMap grid document. Columns are identified by the
/// declared grid_field index attributes; when LON/LAT columns are present the
/// rows may arrive in any order and are placed by coordinate, otherwise file
/// order is taken as row-major from the north-west corner. PGA declared in
/// percent g is converted to g.
inline ShakeGrid parse_shakemap(const std::string& xml_text) {
  namespace x = liq::detail::xml;
  x::Element root = x::parse(xml_text);
  if (x::Element::local_name(root.name) != "shakemap_grid")
    throw MalformedXml("root element is not shakemap_grid");

  ShakeGrid g;
  if (const std::string* id = root.attr("event_id")) g.event_id = *id;

  const x::Element* event = root.child("event");
  if (!event) throw MalformedXml("missing <event> element");
  g.magnitude = detail_fwd::require_attr_double(*event, "magnitude");
  if (g.event_id.empty())
    if (const std::string* id = event->attr("event_id")) g.event_id = *id;

  const x::Element* spec = root.child("grid_specification");
  if (!spec) throw MalformedXml("missing <grid_specification> element");
  g.lon_min = detail_fwd::require_attr_double(*spec, "lon_min");
  g.lat_min = detail_fwd::require_attr_double(*spec, "lat_min");
  g.lon_max = detail_fwd::require_attr_double(*spec, "lon_max");
  g.lat_max = detail_fwd::require_attr_double(*spec, "lat_max");
  double nlon_d = detail_fwd::require_attr_double(*spec, "nlon");
  double nlat_d = detail_fwd::require_attr_double(*spec, "nlat");
  if (nlon_d < 1.0 || nlat_d < 1.0 || nlon_d != std::floor(nlon_d) ||
      nlat_d != std::floor(nlat_d))
    throw MalformedXml("nlon/nlat must be positive integers");
  g.nlon = static_cast<std::uint32_t>(nlon_d);
  g.nlat = static_cast<std::uint32_t>(nlat_d);
  if ((g.nlon > 1 && !(g.lon_max > g.lon_min)) ||
      (g.nlat > 1 && !(g.lat_max > g.lat_min)))
    throw MalformedXml("grid bounds are inconsistent with the node counts");

  struct FieldDecl {
    long index;
    std::string name;
    std::string units;
  };
  std::vector<FieldDecl> decls;
  for (const auto& c : root.children) {
    if (x::Element::local_name(c.name) != "grid_field") continue;
    const std::string* idx = c.attr("index");
    const std::string* name = c.attr("name");
    if (!idx || !name)
      throw MalformedXml("grid_field needs index and name attributes");
    long i = std::lround(detail_fwd::parse_double(*idx, "index"));
    std::string units = c.attr("units") ? *c.attr("units") : "";
    decls.push_back({i, detail_fwd::upper(*name), units});
  }
  if (decls.empty()) throw MalformedXml("no grid_field declarations");
  std::sort(decls.begin(), decls.end(),
            [](const FieldDecl& a, const FieldDecl& b) {
              return a.index < b.index;
            });
  for (std::size_t i = 0; i < decls.size(); ++i)
    if (decls[i].index != static_cast<long>(i) + 1)
      throw MalformedXml("grid_field indexes must be 1..N without gaps");

  const x::Element* data = root.child("grid_data");
  if (!data) throw MalformedXml("missing <grid_data> element");

  std::size_t ncols = decls.size();
  std::vector<double> tokens;
  {
    std::istringstream is(data->text);
    std::string tok;
    while (is >> tok)
      tokens.push_back(detail_fwd::parse_double(tok, "grid_data"));
  }
  if (tokens.size() % ncols != 0)
    throw MalformedXml("grid_data token count is not a multiple of the field count");
  std::size_t nrows = tokens.size() / ncols;
  std::size_t ncells = static_cast<std::size_t>(g.nlon) * g.nlat;
  if (nrows != ncells)
    throw DimensionMismatch("grid_data rows do not match nlat*nlon");

  std::ptrdiff_t lon_col = -1, lat_col = -1;
  for (std::size_t c = 0; c < ncols; ++c) {
    if (decls[c].name == "LON") lon_col = static_cast<std::ptrdiff_t>(c);
    if (decls[c].name == "LAT") lat_col = static_cast<std::ptrdiff_t>(c);
  }

  for (const auto& d : decls) g.fields[d.name].assign(ncells, 0.0);

  std::vector<bool> filled(ncells, false);
  double dx = g.dlon(), dy = g.dlat();
  for (std::size_t rrow = 0; rrow < nrows; ++rrow) {
    const double* rec = tokens.data() + rrow * ncols;
    std::size_t cell;
    if (lon_col >= 0 && lat_col >= 0 && g.nlon >= 1 && g.nlat >= 1) {
      double fx = g.nlon > 1 ? (rec[lon_col] - g.lon_min) / dx : 0.0;
      double fy = g.nlat > 1 ? (g.lat_max - rec[lat_col]) / dy : 0.0;
      long col = std::lround(fx);
      long row = std::lround(fy);
      if (col < 0 || row < 0 || col >= static_cast<long>(g.nlon) ||
          row >= static_cast<long>(g.nlat) || std::abs(fx - col) > 0.25 ||
          std::abs(fy - row) > 0.25)
        throw DimensionMismatch("grid_data coordinates fall off the node lattice");
      cell = static_cast<std::size_t>(row) * g.nlon +
             static_cast<std::size_t>(col);
    } else {
      cell = rrow;  // no coordinate columns: trust row-major NW-first order
    }
    if (filled[cell])
      throw DimensionMismatch("duplicate grid_data row for one node");
    filled[cell] = true;
    for (std::size_t c = 0; c < ncols; ++c)
      g.fields[decls[c].name][cell] = rec[c];
  }

  auto pga_decl =
      std::find_if(decls.begin(), decls.end(),
                   [](const FieldDecl& d) { return d.name == "PGA"; });
  if (pga_decl == decls.end())
    throw MissingPgaField("shakemap declares no PGA field");
  std::string units = detail_fwd::upper(pga_decl->units);
  bool percent = units.find("PCT") != std::string::npos ||
                 units.find('%') != std::string::npos;
  for (double& v : g.fields["PGA"]) {
    if (percent) v /= 100.0;
    v = std::max(v, 0.0);
  }
  return g;
}

inline ShakeGrid parse_shakemap_file(const std::string& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw IoError("cannot open shakemap: " + path);
  std::ostringstream buf;
  buf << is.rdbuf();
  return parse_shakemap(buf.str());
}

// ---------------------------------------------------------------------------
// Magnitude scaling
// ---------------------------------------------------------------------------

/// PGA_M = PGA / MSF(M); the shared MSF already caps at 1.8 and floors the
/// pathological-magnitude tail at 0.05.
inline double magnitude_scale(double pga, double magnitude) {
  return pga / mech::msf(magnitude);
}

// ---------------------------------------------------------------------------
// Resampling onto the model grid
// ---------------------------------------------------------------------------

/// Bilinear sample of a named field at a point; std::nullopt outside bounds.
inline std::optional<double> sample_bilinear(const ShakeGrid& g,
                                             const std::string& upper_name,
                                             const geo::LonLat& p) {
  const std::vector<double>& f = g.field(upper_name);
  double x = g.nlon > 1 ? (p.lon - g.lon_min) / g.dlon()
                        : (p.lon == g.lon_min ? 0.0 : -1.0);
  double y = g.nlat > 1 ? (g.lat_max - p.lat) / g.dlat()
                        : (p.lat == g.lat_max ? 0.0 : -1.0);
  if (x < 0.0 || y < 0.0 || x > static_cast<double>(g.nlon - 1) ||
      y > static_cast<double>(g.nlat - 1))
    return std::nullopt;
  auto j0 = static_cast<std::uint32_t>(
      std::min(x, static_cast<double>(g.nlon > 1 ? g.nlon - 2 : 0)));
  auto i0 = static_cast<std::uint32_t>(
      std::min(y, static_cast<double>(g.nlat > 1 ? g.nlat - 2 : 0)));
  std::uint32_t j1 = std::min(j0 + 1, g.nlon - 1);
  std::uint32_t i1 = std::min(i0 + 1, g.nlat - 1);
  double fx = x - j0;
  double fy = y - i0;
  auto at = [&](std::uint32_t row, std::uint32_t col) {
    return f[static_cast<std::size_t>(row) * g.nlon + col];
  };
  double top = (1.0 - fx) * at(i0, j0) + fx * at(i0, j1);
  double bot = (1.0 - fx) * at(i1, j0) + fx * at(i1, j1);
  return (1.0 - fy) * top + fy * bot;
}

/// PGA interpolated to the target raster geometry. Cells whose centers fall
/// outside the ShakeMap bounds become nodata; no overlap at all is an error.
inline raster::AbRaster resample_shaking(const ShakeGrid& grid,
                                         const raster::AbRaster& target,
                                         int jobs = 0) {
  double west = target.origin_lon + 0.5 * target.cell_size;
  double east = target.origin_lon + (target.width - 0.5) * target.cell_size;
  double north = target.origin_lat - 0.5 * target.cell_size;
  double south = target.origin_lat - (target.height - 0.5) * target.cell_size;
  if (east < grid.lon_min || west > grid.lon_max || north < grid.lat_min ||
      south > grid.lat_max)
    throw NoOverlap("target raster does not overlap the shakemap");

  raster::AbRaster out = raster::make_raster(
      target.width, target.height, target.origin_lon, target.origin_lat,
      target.cell_size, raster::BandKind::Pga, target.mi_kind, kPgaQuantScale);
  liq::detail::parallel_for(
      out.height,
      [&](std::size_t row_i) {
        auto row = static_cast<std::uint32_t>(row_i);
        for (std::uint32_t col = 0; col < out.width; ++col) {
          auto v = sample_bilinear(grid, "PGA", out.coord_of(col, row));
          if (v) out.set(col, row, *v);
        }
      },
      jobs);
  return out;
}

/// PGA -> PGA_M raster via the magnitude scaling factor.
inline raster::AbRaster scale_shaking(const raster::AbRaster& pga,
                                      double magnitude, int jobs = 0) {
  if (pga.band_kind != raster::BandKind::Pga)
    throw KindMismatch("scale_shaking expects a PGA band");
  raster::AbRaster out = raster::map_cells(
      pga, [msf_inv = 1.0 / mech::msf(magnitude)](double v) {
        return v * msf_inv;
      },
      raster::BandKind::PgaM, kPgaQuantScale, jobs);
  return out;
}

// ---------------------------------------------------------------------------
// Response-surface evaluation
// ---------------------------------------------------------------------------

/// Cell-wise response evaluation of stored (A, B) against PGA_M.
inline raster::AbRaster apply_model(const raster::AbRaster& a,
                                    const raster::AbRaster& b,
                                    const raster::AbRaster& pga_m,
                                    int jobs = 0) {
  if (!a.same_grid(b) || !a.same_grid(pga_m))
    throw GridMismatch("A, B and PGA_M rasters are not on one grid");
  if (a.band_kind != raster::BandKind::A ||
      b.band_kind != raster::BandKind::B)
    throw KindMismatch("apply_model expects A and B bands");
  if (a.mi_kind != b.mi_kind)
    throw KindMismatch("A and B rasters target different indices");
  if (pga_m.band_kind != raster::BandKind::Pga &&
      pga_m.band_kind != raster::BandKind::PgaM)
    throw KindMismatch("loading raster must be a PGA or PGA_M band");

  raster::AbRaster out = raster::make_raster(
      a.width, a.height, a.origin_lon, a.origin_lat, a.cell_size,
      raster::BandKind::Mi, a.mi_kind,
      static_cast<float>(curves::kQuantScale));
  liq::detail::parallel_for(
      a.height,
      [&](std::size_t row_i) {
        auto row = static_cast<std::uint32_t>(row_i);
        for (std::uint32_t col = 0; col < a.width; ++col) {
          if (a.is_nodata(col, row) || b.is_nodata(col, row) ||
              pga_m.is_nodata(col, row))
            continue;
          out.set(col, row,
                  curves::eval_curve(a.at(col, row), b.at(col, row),
                                     pga_m.at(col, row)));
        }
      },
      jobs);
  return out;
}

// ---------------------------------------------------------------------------
// Fragility
// ---------------------------------------------------------------------------

/// Probability of ground failure conditioned on a manifestation index.
/// Either a two-parameter lognormal CDF or a tabulated curve interpolated
/// piecewise-linearly in ln(MI). Zero manifestation is zero probability.
struct FragilityFunction {
  MiKind kind = MiKind::Lpi;
  bool kind_set = false;
  int percentile = 50;
  double median = 0.0;
  double beta = 0.0;
  std::vector<std::pair<double, double>> table;  // (mi, pgf), mi ascending

  bool tabulated() const { return !table.empty(); }

  double operator()(double mi) const {
    if (!(mi > 0.0)) return 0.0;
    if (tabulated()) {
      double lx = std::log(mi);
      if (lx <= std::log(table.front().first)) return table.front().second;
      if (lx >= std::log(table.back().first)) return table.back().second;
      for (std::size_t i = 1; i < table.size(); ++i) {
        double hi = std::log(table[i].first);
        if (lx > hi) continue;
        double lo = std::log(table[i - 1].first);
        double t = (lx - lo) / (hi - lo);
        return table[i - 1].second +
               t * (table[i].second - table[i - 1].second);
      }
      return table.back().second;
    }
    double t = std::log(mi / median) / beta;
    return 0.5 * std::erfc(-t / std::sqrt(2.0));
  }
};

inline FragilityFunction make_lognormal_fragility(MiKind kind, int percentile,
                                                  double median, double beta) {
  if (!(median > 0.0)) throw ConfigError("fragility median must be > 0");
  if (!(beta > 0.0)) throw ConfigError("fragility beta must be > 0");
  if (percentile != 16 && percentile != 50 && percentile != 84)
    throw ConfigError("fragility percentile must be 16, 50 or 84");
  FragilityFunction f;
  f.kind = kind;
  f.kind_set = true;
  f.percentile = percentile;
  f.median = median;
  f.beta = beta;
  return f;
}

inline FragilityFunction make_table_fragility(
    std::vector<std::pair<double, double>> table) {
  if (table.size() < 2)
    throw ConfigError("tabulated fragility needs at least two rows");
  for (std::size_t i = 0; i < table.size(); ++i) {
    auto [mi, p] = table[i];
    if (!(mi > 0.0) || !std::isfinite(mi))
      throw ConfigError("tabulated fragility MI values must be > 0");
    if (!(p >= 0.0 && p <= 1.0))
      throw ConfigError("tabulated fragility probabilities must be in [0, 1]");
    if (i > 0 && !(mi > table[i - 1].first))
      throw ConfigError("tabulated fragility MI values must be increasing");
    if (i > 0 && p < table[i - 1].second)
      throw ConfigError("tabulated fragility must be nondecreasing");
  }
  FragilityFunction f;
  f.table = std::move(table);
  return f;
}

/// Config schema: {"kind": "lpi", "percentile": 50, "median": x, "beta": y}
/// or {"table": [[mi, pgf], ...]} with an optional "kind".
inline FragilityFunction fragility_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const std::exception& e) {
    throw ConfigError(std::string("fragility config is not valid JSON: ") +
                      e.what());
  }
  try {
    if (j.contains("table")) {
      std::vector<std::pair<double, double>> rows;
      for (const auto& row : j.at("table")) {
        if (!row.is_array() || row.size() != 2)
          throw ConfigError("fragility table rows must be [mi, pgf] pairs");
        rows.emplace_back(row[0].get<double>(), row[1].get<double>());
      }
      FragilityFunction f = make_table_fragility(std::move(rows));
      if (j.contains("kind")) {
        f.kind = mi_kind_from_string(j.at("kind").get<std::string>());
        f.kind_set = true;
      }
      return f;
    }
    MiKind kind = mi_kind_from_string(j.at("kind").get<std::string>());
    return make_lognormal_fragility(kind, j.at("percentile").get<int>(),
                                    j.at("median").get<double>(),
                                    j.at("beta").get<double>());
  } catch (const ConfigError&) {
    throw;
  } catch (const std::exception& e) {
    throw ConfigError(std::string("fragility config is malformed: ") +
                      e.what());
  }
}

inline FragilityFunction fragility_from_json_file(const std::string& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw IoError("cannot open fragility config: " + path);
  std::ostringstream buf;
  buf << is.rdbuf();
  return fragility_from_json(buf.str());
}

/// MI raster -> probability-of-ground-failure raster.
inline raster::AbRaster pgf(const raster::AbRaster& mi,
                            const FragilityFunction& fragility, int jobs = 0) {
  if (mi.band_kind != raster::BandKind::Mi)
    throw KindMismatch("pgf expects an MI band");
  if (fragility.kind_set && fragility.kind != mi.mi_kind)
    throw KindMismatch("fragility targets a different manifestation index");
  return raster::map_cells(
      mi, [&fragility](double v) { return fragility(v); },
      raster::BandKind::Pgf, kPgfQuantScale, jobs);
}

// ---------------------------------------------------------------------------
// Event pipeline
// ---------------------------------------------------------------------------

struct EventOutputs {
  raster::AbRaster pga;
  raster::AbRaster pga_m;
  raster::AbRaster mi;
  raster::AbRaster pgf;
};

inline EventOutputs compute_event(const raster::AbRaster& a,
                                  const raster::AbRaster& b,
                                  const ShakeGrid& grid,
                                  const FragilityFunction& fragility,
                                  int jobs = 0) {
  EventOutputs out;
  out.pga = resample_shaking(grid, a, jobs);
  out.pga_m = scale_shaking(out.pga, grid.magnitude, jobs);
  out.mi = apply_model(a, b, out.pga_m, jobs);
  out.pgf = pgf(out.mi, fragility, jobs);
  return out;
}

/// Compute and persist the four deliverables under out_dir as pga.abg,
/// pga_m.abg, mi.abg and pgf.abg (plus .asc twins when requested).
inline EventOutputs run_event(const raster::AbRaster& a,
                              const raster::AbRaster& b, const ShakeGrid& grid,
                              const FragilityFunction& fragility,
                              const std::string& out_dir,
                              bool write_ascii = false, int jobs = 0) {
  EventOutputs out = compute_event(a, b, grid, fragility, jobs);
  std::filesystem::create_directories(out_dir);
  auto emit = [&](const raster::AbRaster& r, const std::string& stem) {
    raster::write_abgrid(r, out_dir + "/" + stem + ".abg");
    if (write_ascii) raster::export_ascii_grid(r, out_dir + "/" + stem + ".asc");
  };
  emit(out.pga, "pga");
  emit(out.pga_m, "pga_m");
  emit(out.mi, "mi");
  emit(out.pgf, "pgf");
  return out;
}

/// Cell-wise mean of per-model PGF rasters; nodata anywhere wins.
inline raster::AbRaster ensemble_pgf(const std::vector<raster::AbRaster>& pgfs,
                                     int jobs = 0) {
  if (pgfs.empty()) throw GridMismatch("ensemble needs at least one raster");
  const raster::AbRaster& first = pgfs.front();
  for (const auto& r : pgfs) {
    if (!r.same_grid(first)) throw GridMismatch("ensemble rasters differ");
    if (r.band_kind != raster::BandKind::Pgf)
      throw KindMismatch("ensemble expects PGF bands");
  }
  raster::AbRaster out = raster::make_raster(
      first.width, first.height, first.origin_lon, first.origin_lat,
      first.cell_size, raster::BandKind::Pgf, first.mi_kind, kPgfQuantScale);
  liq::detail::parallel_for(
      first.height,
      [&](std::size_t row_i) {
        auto row = static_cast<std::uint32_t>(row_i);
        for (std::uint32_t col = 0; col < first.width; ++col) {
          double sum = 0.0;
          bool ok = true;
          for (const auto& r : pgfs) {
            if (r.is_nodata(col, row)) {
              ok = false;
              break;
            }
            sum += r.at(col, row);
          }
          if (ok) out.set(col, row, sum / static_cast<double>(pgfs.size()));
        }
      },
      jobs);
  return out;
}

}  // namespace forward
}  // namespace liq

#endif  // LIQ_FORWARD_HPP

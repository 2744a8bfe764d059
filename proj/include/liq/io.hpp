#ifndef LIQ_IO_HPP
#define LIQ_IO_HPP

#include <cctype>
#include <cmath>
#include <cstddef>
#include <filesystem>
#include <fstream>
#include <limits>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "liq/cpt.hpp"
#include "liq/curves.hpp"
#include "liq/errors.hpp"
#include "liq/evalkit.hpp"
#include "liq/geo.hpp"
#include "liq/geostat.hpp"
#include "liq/mechanics.hpp"
#include "liq/mi.hpp"
#include "liq/surrogate.hpp"

namespace liq {
namespace io {

namespace detail_io {

inline std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

inline std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> out;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= line.size(); ++i) {
    if (i == line.size() || line[i] == ',') {
      out.push_back(trim(std::string_view(line).substr(start, i - start)));
      start = i + 1;
    }
  }
  return out;
}

/// Reads lines, dropping a trailing '\r' and skipping blanks.
inline std::vector<std::string> read_lines(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw IoError("cannot open " + path);
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(is, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (trim(line).empty()) continue;
    lines.push_back(line);
  }
  return lines;
}

inline double parse_cell(const std::string& cell, const std::string& path,
                         std::size_t lineno) {
  if (cell.empty() || cell == "nan" || cell == "NaN" || cell == "NA")
    return std::numeric_limits<double>::quiet_NaN();
  try {
    std::size_t used = 0;
    double v = std::stod(cell, &used);
    if (used != cell.size()) throw std::invalid_argument(cell);
    return v;
  } catch (const std::exception&) {
    throw IoError(path + ":" + std::to_string(lineno) +
                  ": not a number: " + cell);
  }
}

inline void require_columns(const std::vector<std::string>& header,
                            const std::vector<std::string>& want,
                            const std::string& path) {
  if (header.size() < want.size())
    throw MalformedHeader(path + ": expected at least " +
                          std::to_string(want.size()) + " columns");
  for (std::size_t i = 0; i < want.size(); ++i)
    if (header[i] != want[i])
      throw MalformedHeader(path + ": column " + std::to_string(i + 1) +
                            " must be '" + want[i] + "', got '" + header[i] +
                            "'");
}

inline std::string format_double(double v) {
  std::ostringstream os;
  os.precision(17);
  os << v;
  return os.str();
}

}  // namespace detail_io

// ---------------------------------------------------------------------------
// CPT exchange format: CSV `depth_m,qc_mpa,fs_kpa` plus a JSON sidecar
// carrying id, location, groundwater and predrill depths.
// ---------------------------------------------------------------------------

inline std::string sidecar_path(const std::string& csv_path) {
  std::filesystem::path p(csv_path);
  p.replace_extension(".json");
  return p.string();
}

inline cpt::Profile read_cpt_profile(const std::string& csv_path) {
  auto lines = detail_io::read_lines(csv_path);
  if (lines.empty()) throw MalformedHeader(csv_path + ": empty file");
  detail_io::require_columns(detail_io::split_csv(lines[0]),
                             {"depth_m", "qc_mpa", "fs_kpa"}, csv_path);

  cpt::Profile p;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    auto cells = detail_io::split_csv(lines[i]);
    if (cells.size() != 3)
      throw RaggedRows(csv_path + ":" + std::to_string(i + 1) +
                       ": expected 3 columns, got " +
                       std::to_string(cells.size()));
    cpt::Record r;
    r.depth = detail_io::parse_cell(cells[0], csv_path, i + 1);
    if (!std::isfinite(r.depth))
      throw NonFiniteInput(csv_path + ":" + std::to_string(i + 1) +
                           ": depth must be finite");
    r.qc = detail_io::parse_cell(cells[1], csv_path, i + 1);
    r.fs = detail_io::parse_cell(cells[2], csv_path, i + 1);
    r.qc_valid = std::isfinite(r.qc);
    r.fs_valid = std::isfinite(r.fs);
    p.records.push_back(r);
  }

  std::string side = sidecar_path(csv_path);
  std::ifstream js(side);
  if (!js) throw IoError("cannot open sidecar " + side);
  nlohmann::json j;
  try {
    js >> j;
  } catch (const nlohmann::json::exception& e) {
    throw IoError(side + ": " + e.what());
  }
  try {
    p.id = j.at("id").get<std::string>();
    p.location.lon = j.at("lon").get<double>();
    p.location.lat = j.at("lat").get<double>();
    p.gwt_depth = j.at("gwt_depth_m").get<double>();
    p.predrill_depth = j.value("predrill_depth_m", 0.0);
    p.standardized = j.value("standardized", false);
    p.interval = j.value("interval_m", 0.0);
  } catch (const nlohmann::json::exception& e) {
    throw IoError(side + ": " + e.what());
  }
  return p;
}

inline void write_cpt_profile(const cpt::Profile& p,
                              const std::string& csv_path) {
  std::ofstream os(csv_path);
  if (!os) throw IoError("cannot write " + csv_path);
  os << "depth_m,qc_mpa,fs_kpa\n";
  for (const auto& r : p.records) {
    os << detail_io::format_double(r.depth) << ',';
    if (r.qc_valid) os << detail_io::format_double(r.qc);
    os << ',';
    if (r.fs_valid) os << detail_io::format_double(r.fs);
    os << '\n';
  }
  if (!os) throw IoError("write failed: " + csv_path);

  nlohmann::json j;
  j["id"] = p.id;
  j["lon"] = p.location.lon;
  j["lat"] = p.location.lat;
  j["gwt_depth_m"] = p.gwt_depth;
  j["predrill_depth_m"] = p.predrill_depth;
  j["standardized"] = p.standardized;
  j["interval_m"] = p.interval;
  std::string side = sidecar_path(csv_path);
  std::ofstream sj(side);
  if (!sj) throw IoError("cannot write sidecar " + side);
  sj << j.dump(2) << '\n';
}

/// Debug dump of a triggering profile.
inline void write_fs_csv(const mech::FsProfile& fs, std::ostream& os) {
  os << "depth_m,fs_liq,ic,susceptible,sigma_v_kpa,sigma_v_eff_kpa,qc1ncs\n";
  for (std::size_t i = 0; i < fs.size(); ++i) {
    os << detail_io::format_double(fs.depth[i]) << ','
       << detail_io::format_double(fs.fs_liq[i]) << ','
       << detail_io::format_double(fs.ic[i]) << ',' << (fs.susceptible[i] ? 1 : 0)
       << ',' << detail_io::format_double(fs.sigma_v[i]) << ','
       << detail_io::format_double(fs.sigma_v_eff[i]) << ','
       << detail_io::format_double(fs.qc1ncs[i]) << '\n';
  }
}

// ---------------------------------------------------------------------------
// Curve table: CSV `site_id,kind,A,B,fit_rmse`.
// ---------------------------------------------------------------------------

struct CurveRow {
  std::string site_id;
  curves::ResponseCurve curve;
};

inline void write_curves_csv(const std::vector<CurveRow>& rows,
                             const std::string& path) {
  std::ofstream os(path);
  if (!os) throw IoError("cannot write " + path);
  os << "site_id,kind,A,B,fit_rmse\n";
  for (const auto& r : rows)
    os << r.site_id << ',' << to_string(r.curve.kind) << ','
       << detail_io::format_double(r.curve.a) << ','
       << detail_io::format_double(r.curve.b) << ','
       << detail_io::format_double(r.curve.fit_rmse) << '\n';
  if (!os) throw IoError("write failed: " + path);
}

inline std::vector<CurveRow> read_curves_csv(const std::string& path) {
  auto lines = detail_io::read_lines(path);
  if (lines.empty()) throw MalformedHeader(path + ": empty file");
  detail_io::require_columns(detail_io::split_csv(lines[0]),
                             {"site_id", "kind", "A", "B", "fit_rmse"}, path);
  std::vector<CurveRow> rows;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    auto cells = detail_io::split_csv(lines[i]);
    if (cells.size() != 5)
      throw RaggedRows(path + ":" + std::to_string(i + 1));
    CurveRow r;
    r.site_id = cells[0];
    r.curve.kind = mi_kind_from_string(cells[1]);
    r.curve.a = detail_io::parse_cell(cells[2], path, i + 1);
    r.curve.b = detail_io::parse_cell(cells[3], path, i + 1);
    r.curve.fit_rmse = detail_io::parse_cell(cells[4], path, i + 1);
    rows.push_back(std::move(r));
  }
  return rows;
}

// ---------------------------------------------------------------------------
// Station residuals: CSV `site_id,lon,lat,residual`.
// ---------------------------------------------------------------------------

inline std::vector<geostat::Station> read_stations_csv(
    const std::string& path) {
  auto lines = detail_io::read_lines(path);
  if (lines.empty()) throw MalformedHeader(path + ": empty file");
  detail_io::require_columns(detail_io::split_csv(lines[0]),
                             {"site_id", "lon", "lat", "residual"}, path);
  std::vector<geostat::Station> stations;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    auto cells = detail_io::split_csv(lines[i]);
    if (cells.size() != 4)
      throw RaggedRows(path + ":" + std::to_string(i + 1));
    geostat::Station s;
    s.location.lon = detail_io::parse_cell(cells[1], path, i + 1);
    s.location.lat = detail_io::parse_cell(cells[2], path, i + 1);
    s.residual = detail_io::parse_cell(cells[3], path, i + 1);
    if (!std::isfinite(s.location.lon) || !std::isfinite(s.location.lat) ||
        !std::isfinite(s.residual))
      throw NonFiniteInput(path + ":" + std::to_string(i + 1) +
                           ": station fields must be finite");
    stations.push_back(s);
  }
  return stations;
}

// ---------------------------------------------------------------------------
// Case histories: CSV `lon,lat,observed,<model name>[,<model name>...]`.
// The per-model probability columns are named by the header.
// ---------------------------------------------------------------------------

struct CaseTable {
  std::vector<evalkit::CaseHistory> cases;
  std::vector<std::string> model_names;
};

inline CaseTable read_cases_csv(const std::string& path) {
  auto lines = detail_io::read_lines(path);
  if (lines.empty()) throw MalformedHeader(path + ": empty file");
  auto header = detail_io::split_csv(lines[0]);
  detail_io::require_columns(header, {"lon", "lat", "observed"}, path);
  if (header.size() < 4)
    throw MalformedHeader(path + ": need at least one model column");

  CaseTable table;
  table.model_names.assign(header.begin() + 3, header.end());
  for (std::size_t i = 1; i < lines.size(); ++i) {
    auto cells = detail_io::split_csv(lines[i]);
    if (cells.size() != header.size())
      throw RaggedRows(path + ":" + std::to_string(i + 1));
    evalkit::CaseHistory c;
    c.location.lon = detail_io::parse_cell(cells[0], path, i + 1);
    c.location.lat = detail_io::parse_cell(cells[1], path, i + 1);
    double obs = detail_io::parse_cell(cells[2], path, i + 1);
    if (obs != 0.0 && obs != 1.0)
      throw NonFiniteInput(path + ":" + std::to_string(i + 1) +
                           ": observed must be 0 or 1");
    c.observed = static_cast<int>(obs);
    for (std::size_t m = 3; m < cells.size(); ++m)
      c.predicted.push_back(detail_io::parse_cell(cells[m], path, i + 1));
    table.cases.push_back(std::move(c));
  }
  return table;
}

/// Resolves a model name from the case table header; names win over indices.
inline std::size_t model_index(const CaseTable& table,
                               const std::string& name) {
  for (std::size_t i = 0; i < table.model_names.size(); ++i)
    if (table.model_names[i] == name) return i;
  throw ConfigError("no model column named '" + name + "' in the case table");
}

// ---------------------------------------------------------------------------
// Feature tables: CSV `site_id,lon,lat,<feature>[,<feature>...]` with the
// schema taken from the header. Empty cells are missing values.
// ---------------------------------------------------------------------------

struct FeatureTable {
  surrogate::FeatureSchema schema;
  std::vector<std::string> site_ids;
  std::vector<surrogate::FeatureSample> samples;
};

inline FeatureTable read_feature_csv(const std::string& path) {
  auto lines = detail_io::read_lines(path);
  if (lines.empty()) throw MalformedHeader(path + ": empty file");
  auto header = detail_io::split_csv(lines[0]);
  detail_io::require_columns(header, {"site_id", "lon", "lat"}, path);
  if (header.size() < 4)
    throw MalformedHeader(path + ": need at least one feature column");

  FeatureTable table;
  table.schema.names.assign(header.begin() + 3, header.end());
  for (std::size_t i = 1; i < lines.size(); ++i) {
    auto cells = detail_io::split_csv(lines[i]);
    if (cells.size() != header.size())
      throw RaggedRows(path + ":" + std::to_string(i + 1));
    surrogate::FeatureSample s;
    s.location.lon = detail_io::parse_cell(cells[1], path, i + 1);
    s.location.lat = detail_io::parse_cell(cells[2], path, i + 1);
    if (!std::isfinite(s.location.lon) || !std::isfinite(s.location.lat))
      throw NonFiniteInput(path + ":" + std::to_string(i + 1) +
                           ": lon/lat must be finite");
    for (std::size_t f = 3; f < cells.size(); ++f)
      s.values.push_back(detail_io::parse_cell(cells[f], path, i + 1));
    table.site_ids.push_back(cells[0]);
    table.samples.push_back(std::move(s));
  }
  return table;
}

/// Joins a feature table against fitted curves by site id, producing the
/// training set for one (kind, target) pair. Sites without a curve row are
/// dropped; sites with missing features are imputed from their neighbors.
inline surrogate::TrainingSet make_training_set(
    const FeatureTable& table, const std::vector<CurveRow>& curve_rows,
    MiKind kind, surrogate::Target target) {
  surrogate::TrainingSet set;
  set.schema = table.schema;
  for (std::size_t i = 0; i < table.samples.size(); ++i) {
    const CurveRow* match = nullptr;
    for (const auto& r : curve_rows)
      if (r.curve.kind == kind && r.site_id == table.site_ids[i]) {
        match = &r;
        break;
      }
    if (!match) continue;
    surrogate::TrainingRow row;
    row.features = surrogate::impute_nearest(table.samples, table.samples[i]);
    row.target = target == surrogate::Target::A ? match->curve.a
                                                : match->curve.b;
    row.location = table.samples[i].location;
    set.rows.push_back(std::move(row));
  }
  return set;
}

// ---------------------------------------------------------------------------
// Evaluation report JSON.
// ---------------------------------------------------------------------------

inline nlohmann::json report_json(const evalkit::ComparisonReport& report,
                                  std::size_t reps, double level,
                                  std::uint64_t seed) {
  nlohmann::json j;
  j["control"] = report.models[report.control].name;
  j["reps"] = reps;
  j["level"] = level;
  j["seed"] = seed;
  j["models"] = nlohmann::json::array();
  for (const auto& m : report.models) {
    nlohmann::json row;
    row["name"] = m.name;
    row["mean_bs"] = m.mean_bs;
    row["bs_ci_low"] = m.ci.low;
    row["bs_ci_high"] = m.ci.high;
    row["bs_ci_mean"] = m.ci.mean;
    row["ks_vs_control"] = m.ks_vs_control;
    row["cohens_d_vs_control"] = m.cohens_d_vs_control;
    row["morans_i"] = m.morans.value;
    row["residuals_clustered"] = m.morans.exceeds_threshold;
    row["calibration"] = nlohmann::json::array();
    for (const auto& b : m.calibration)
      row["calibration"].push_back({{"mean_predicted", b.mean_predicted},
                                    {"mean_observed", b.mean_observed},
                                    {"count", b.count}});
    j["models"].push_back(std::move(row));
  }
  return j;
}

}  // namespace io
}  // namespace liq

#endif  // LIQ_IO_HPP

#ifndef LIQ_PIPELINE_HPP
#define LIQ_PIPELINE_HPP

#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "liq/curves.hpp"
#include "liq/detail/binary_io.hpp"
#include "liq/detail/rng.hpp"
#include "liq/errors.hpp"
#include "liq/evalkit.hpp"
#include "liq/forward.hpp"
#include "liq/geostat.hpp"
#include "liq/io.hpp"
#include "liq/mechanics.hpp"
#include "liq/mi.hpp"
#include "liq/raster.hpp"
#include "liq/surrogate.hpp"

namespace liq {
namespace pipeline {

// ---------------------------------------------------------------------------
// Configuration
// ---------------------------------------------------------------------------

struct LoadingSpec {
  double pga_min = 0.05;
  double pga_max = 2.0;
  std::size_t pga_count = 40;
  double mw_min = 4.5;
  double mw_max = 9.0;
  std::size_t mw_count = 10;

  curves::LoadingArray to_array() const {
    if (pga_count < 1 || mw_count < 1)
      throw ConfigError("loading array needs at least one point per axis");
    curves::LoadingArray array;
    for (std::size_t i = 0; i < pga_count; ++i)
      array.pga_values.push_back(
          pga_count == 1 ? pga_min
                         : pga_min + (pga_max - pga_min) *
                                         static_cast<double>(i) /
                                         static_cast<double>(pga_count - 1));
    for (std::size_t i = 0; i < mw_count; ++i)
      array.magnitude_values.push_back(
          mw_count == 1 ? mw_min
                        : mw_min + (mw_max - mw_min) * static_cast<double>(i) /
                                       static_cast<double>(mw_count - 1));
    array.validate();
    return array;
  }
};

struct Config {
  // paths (resolved against the config file's directory)
  std::string cpt_dir;
  std::string out_dir;
  std::string features;
  std::string grid_features;  // defaults to `features` when empty
  std::string stations;       // optional: enables the krige stage
  std::string shakemap;       // optional: enables the event stage
  std::string fragility;      // required when shakemap is set
  std::string cases;          // optional: enables the evaluate stage
  std::vector<std::string> masks;

  std::vector<MiKind> kinds;
  double interval = 0.05;
  mech::FinesRegion region = mech::FinesRegion::Global;
  bool seed_set = false;
  std::uint64_t seed = 0;
  int jobs = 0;
  LoadingSpec loading;

  // hyperparameter lattice; single values train directly, lists grid-search
  std::vector<std::uint32_t> trees{100};
  std::vector<std::uint32_t> min_leaf{5};
  std::vector<std::uint32_t> max_depth{surrogate::kUnlimitedDepth};
  std::uint32_t features_per_split = 0;
  std::uint32_t folds = 5;

  // output raster geometry (origin is the northwest corner)
  double origin_lon = 0.0;
  double origin_lat = 0.0;
  double cell_size = raster::kDefaultCellSize;
  std::uint32_t width = 0;
  std::uint32_t height = 0;

  // evaluation
  std::string control;  // model column name; first column when empty
  std::size_t reps = 10000;
  double level = 0.99;
};

namespace detail_pl {

inline std::string unquote(const std::string& v) {
  if (v.size() >= 2 && v.front() == '"' && v.back() == '"')
    return v.substr(1, v.size() - 2);
  return v;
}

inline std::vector<std::string> split_list(const std::string& v) {
  std::vector<std::string> out;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= v.size(); ++i) {
    if (i == v.size() || v[i] == ',') {
      std::string item = io::detail_io::trim(
          std::string_view(v).substr(start, i - start));
      if (!item.empty()) out.push_back(item);
      start = i + 1;
    }
  }
  return out;
}

inline double to_double(const std::string& v, const std::string& key) {
  try {
    std::size_t used = 0;
    double x = std::stod(v, &used);
    if (used != v.size()) throw std::invalid_argument(v);
    return x;
  } catch (const std::exception&) {
    throw ConfigError("key '" + key + "': not a number: " + v);
  }
}

inline std::uint64_t to_u64(const std::string& v, const std::string& key) {
  try {
    std::size_t used = 0;
    auto x = std::stoull(v, &used);
    if (used != v.size()) throw std::invalid_argument(v);
    return x;
  } catch (const std::exception&) {
    throw ConfigError("key '" + key + "': not an unsigned integer: " + v);
  }
}

inline std::vector<std::uint32_t> to_u32_list(const std::string& v,
                                              const std::string& key,
                                              bool zero_is_unlimited) {
  std::vector<std::uint32_t> out;
  for (const auto& item : split_list(v)) {
    auto x = to_u64(item, key);
    if (zero_is_unlimited && x == 0) {
      out.push_back(surrogate::kUnlimitedDepth);
      continue;
    }
    if (x == 0 || x > 0xFFFFFFFFull)
      throw ConfigError("key '" + key + "': out of range: " + item);
    out.push_back(static_cast<std::uint32_t>(x));
  }
  if (out.empty()) throw ConfigError("key '" + key + "': empty list");
  return out;
}

inline std::string resolve(const std::string& base, const std::string& p) {
  std::filesystem::path fp(p);
  if (fp.is_absolute() || base.empty()) return fp.lexically_normal().string();
  return (std::filesystem::path(base) / fp).lexically_normal().string();
}

}  // namespace detail_pl

/// Parses the key = value configuration text. Relative paths are resolved
/// against `base_dir`. Unknown keys are rejected so typos cannot silently
/// disable a stage.
inline Config parse_config(const std::string& text,
                           const std::string& base_dir = "") {
  Config cfg;
  std::istringstream is(text);
  std::string line;
  std::size_t lineno = 0;
  auto path = [&](const std::string& v) {
    return detail_pl::resolve(base_dir, detail_pl::unquote(v));
  };
  while (std::getline(is, line)) {
    ++lineno;
    std::string t = io::detail_io::trim(line);
    if (t.empty() || t[0] == '#') continue;
    auto eq = t.find('=');
    if (eq == std::string::npos)
      throw ConfigError("line " + std::to_string(lineno) +
                        ": expected key = value");
    std::string key = io::detail_io::trim(std::string_view(t).substr(0, eq));
    std::string value = io::detail_io::trim(std::string_view(t).substr(eq + 1));
    if (!value.empty() && value.front() == '"') {
      auto close = value.find('"', 1);
      if (close == std::string::npos)
        throw ConfigError("line " + std::to_string(lineno) +
                          ": unterminated string");
      value = value.substr(1, close - 1);
    } else {
      auto hash = value.find('#');
      if (hash != std::string::npos)
        value = io::detail_io::trim(std::string_view(value).substr(0, hash));
    }
    if (value.empty())
      throw ConfigError("line " + std::to_string(lineno) + ": empty value");

    if (key == "cpt_dir") cfg.cpt_dir = path(value);
    else if (key == "out_dir") cfg.out_dir = path(value);
    else if (key == "features") cfg.features = path(value);
    else if (key == "grid_features") cfg.grid_features = path(value);
    else if (key == "stations") cfg.stations = path(value);
    else if (key == "shakemap") cfg.shakemap = path(value);
    else if (key == "fragility") cfg.fragility = path(value);
    else if (key == "cases") cfg.cases = path(value);
    else if (key == "masks") {
      for (const auto& m : detail_pl::split_list(value))
        cfg.masks.push_back(detail_pl::resolve(base_dir, m));
    } else if (key == "kinds") {
      cfg.kinds.clear();
      for (const auto& k : detail_pl::split_list(value))
        cfg.kinds.push_back(mi_kind_from_string(k));
    } else if (key == "interval") cfg.interval = detail_pl::to_double(value, key);
    else if (key == "region") {
      std::string r = detail_pl::unquote(value);
      if (r == "global") cfg.region = mech::FinesRegion::Global;
      else if (r == "nz") cfg.region = mech::FinesRegion::NewZealand;
      else throw ConfigError("region must be 'global' or 'nz', got " + r);
    } else if (key == "seed") {
      cfg.seed = detail_pl::to_u64(value, key);
      cfg.seed_set = true;
    } else if (key == "jobs")
      cfg.jobs = static_cast<int>(detail_pl::to_u64(value, key));
    else if (key == "pga_min") cfg.loading.pga_min = detail_pl::to_double(value, key);
    else if (key == "pga_max") cfg.loading.pga_max = detail_pl::to_double(value, key);
    else if (key == "pga_count")
      cfg.loading.pga_count = detail_pl::to_u64(value, key);
    else if (key == "mw_min") cfg.loading.mw_min = detail_pl::to_double(value, key);
    else if (key == "mw_max") cfg.loading.mw_max = detail_pl::to_double(value, key);
    else if (key == "mw_count")
      cfg.loading.mw_count = detail_pl::to_u64(value, key);
    else if (key == "trees")
      cfg.trees = detail_pl::to_u32_list(value, key, false);
    else if (key == "min_leaf")
      cfg.min_leaf = detail_pl::to_u32_list(value, key, false);
    else if (key == "max_depth")
      cfg.max_depth = detail_pl::to_u32_list(value, key, true);
    else if (key == "features_per_split")
      cfg.features_per_split =
          static_cast<std::uint32_t>(detail_pl::to_u64(value, key));
    else if (key == "folds")
      cfg.folds = static_cast<std::uint32_t>(detail_pl::to_u64(value, key));
    else if (key == "origin_lon") cfg.origin_lon = detail_pl::to_double(value, key);
    else if (key == "origin_lat") cfg.origin_lat = detail_pl::to_double(value, key);
    else if (key == "cell_size") cfg.cell_size = detail_pl::to_double(value, key);
    else if (key == "width")
      cfg.width = static_cast<std::uint32_t>(detail_pl::to_u64(value, key));
    else if (key == "height")
      cfg.height = static_cast<std::uint32_t>(detail_pl::to_u64(value, key));
    else if (key == "control") cfg.control = detail_pl::unquote(value);
    else if (key == "reps") cfg.reps = detail_pl::to_u64(value, key);
    else if (key == "level") cfg.level = detail_pl::to_double(value, key);
    else
      throw ConfigError("line " + std::to_string(lineno) + ": unknown key '" +
                        key + "'");
  }
  return cfg;
}

inline Config parse_config_file(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw IoError("cannot open config " + path);
  std::stringstream ss;
  ss << is.rdbuf();
  return parse_config(ss.str(),
                      std::filesystem::path(path).parent_path().string());
}

inline void validate(const Config& cfg) {
  if (!cfg.seed_set)
    throw ConfigError("seed must be set explicitly in the config");
  if (cfg.cpt_dir.empty()) throw ConfigError("cpt_dir is required");
  if (cfg.out_dir.empty()) throw ConfigError("out_dir is required");
  if (cfg.features.empty()) throw ConfigError("features is required");
  if (cfg.kinds.empty()) throw ConfigError("kinds must name at least one index");
  if (!(cfg.interval > 0.0)) throw IntervalNonPositive();
  if (cfg.width == 0 || cfg.height == 0)
    throw ConfigError("width and height must be positive");
  if (!(cfg.cell_size > 0.0)) throw ConfigError("cell_size must be positive");
  if (!cfg.shakemap.empty() && cfg.fragility.empty())
    throw ConfigError("fragility is required when shakemap is set");

  auto must_exist = [](const std::string& p, const char* what) {
    if (!p.empty() && !std::filesystem::exists(p))
      throw ConfigError(std::string(what) + " does not exist: " + p);
  };
  must_exist(cfg.cpt_dir, "cpt_dir");
  must_exist(cfg.features, "features");
  must_exist(cfg.grid_features, "grid_features");
  must_exist(cfg.stations, "stations");
  must_exist(cfg.shakemap, "shakemap");
  must_exist(cfg.fragility, "fragility");
  must_exist(cfg.cases, "cases");
  for (const auto& m : cfg.masks) must_exist(m, "mask");
}

// ---------------------------------------------------------------------------
// Manifest
// ---------------------------------------------------------------------------

struct StageRecord {
  std::string name;
  std::string params;
  std::map<std::string, std::string> inputs;   // path -> content hash
  std::map<std::string, std::string> outputs;  // path -> content hash
};

struct Manifest {
  std::uint64_t seed = 0;
  std::vector<StageRecord> stages;

  const StageRecord* find(const std::string& name) const {
    for (const auto& s : stages)
      if (s.name == name) return &s;
    return nullptr;
  }
};

inline std::string hash_file(const std::string& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw IoError("cannot hash missing file " + path);
  std::uint64_t h = 0xCBF29CE484222325ULL;
  char buf[65536];
  while (is.read(buf, sizeof(buf)) || is.gcount() > 0)
    h = liq::detail::fnv1a(buf, static_cast<std::size_t>(is.gcount()), h);
  std::ostringstream os;
  os << std::hex << std::setw(16) << std::setfill('0') << h;
  return os.str();
}

inline nlohmann::json manifest_json(const Manifest& m) {
  nlohmann::json j;
  j["version"] = 1;
  j["seed"] = m.seed;
  j["stages"] = nlohmann::json::array();
  for (const auto& s : m.stages) {
    nlohmann::json row;
    row["name"] = s.name;
    row["params"] = s.params;
    row["inputs"] = s.inputs;
    row["outputs"] = s.outputs;
    j["stages"].push_back(std::move(row));
  }
  return j;
}

inline Manifest manifest_from_json(const nlohmann::json& j) {
  Manifest m;
  m.seed = j.at("seed").get<std::uint64_t>();
  for (const auto& row : j.at("stages")) {
    StageRecord s;
    s.name = row.at("name").get<std::string>();
    s.params = row.at("params").get<std::string>();
    s.inputs = row.at("inputs").get<std::map<std::string, std::string>>();
    s.outputs = row.at("outputs").get<std::map<std::string, std::string>>();
    m.stages.push_back(std::move(s));
  }
  return m;
}

// ---------------------------------------------------------------------------
// Runner
// ---------------------------------------------------------------------------

struct RunResult {
  Manifest manifest;
  std::vector<std::string> ran;
  std::vector<std::string> skipped;
  std::string manifest_path;
};

namespace detail_pl {

inline std::vector<std::string> list_cpt_csvs(const std::string& dir) {
  std::vector<std::string> out;
  for (const auto& entry : std::filesystem::directory_iterator(dir))
    if (entry.is_regular_file() && entry.path().extension() == ".csv")
      out.push_back(entry.path().string());
  std::sort(out.begin(), out.end());
  if (out.empty()) throw ConfigError("no CPT csv files under " + dir);
  return out;
}

inline raster::MaskGrid mask_from_raster(const raster::AbRaster& m) {
  raster::MaskGrid g;
  g.width = m.width;
  g.height = m.height;
  g.cells.resize(m.size(), 0);
  for (std::uint32_t row = 0; row < m.height; ++row)
    for (std::uint32_t col = 0; col < m.width; ++col)
      if (!m.is_nodata(col, row) && m.at(col, row) > 0.0)
        g.cells[m.index(col, row)] = 1;
  return g;
}

}  // namespace detail_pl

class Runner {
 public:
  explicit Runner(const Config& cfg) : cfg_(cfg) {
    validate(cfg_);
    out_ = cfg_.out_dir;
    std::filesystem::create_directories(out_ + "/standardized");
    std::filesystem::create_directories(out_ + "/models");
    std::filesystem::create_directories(out_ + "/rasters");
    manifest_path_ = out_ + "/manifest.json";
    if (std::filesystem::exists(manifest_path_)) {
      std::ifstream is(manifest_path_);
      nlohmann::json j;
      try {
        is >> j;
        prev_ = manifest_from_json(j);
        has_prev_ = true;
      } catch (const std::exception&) {
        has_prev_ = false;  // unreadable manifests are treated as absent
      }
    }
  }

  RunResult run() {
    next_.seed = cfg_.seed;
    standardize_stage();
    curves_stage();
    train_stage();
    predict_stage();
    if (!cfg_.stations.empty()) krige_stage();
    if (!cfg_.shakemap.empty()) event_stage();
    if (!cfg_.cases.empty()) evaluate_stage();

    std::string tmp = manifest_path_ + ".tmp";
    {
      std::ofstream os(tmp);
      if (!os) throw IoError("cannot write " + tmp);
      os << manifest_json(next_).dump(2) << '\n';
    }
    std::filesystem::rename(tmp, manifest_path_);
    result_.manifest = next_;
    result_.manifest_path = manifest_path_;
    return result_;
  }

 private:
  template <typename Body>
  void stage(const std::string& name, const std::vector<std::string>& inputs,
             const std::string& params, Body&& body) {
    StageRecord rec;
    rec.name = name;
    rec.params = params;
    try {
      for (const auto& p : inputs) rec.inputs[p] = hash_file(p);
      if (can_skip(rec)) {
        result_.skipped.push_back(name);
        next_.stages.push_back(std::move(rec));
        return;
      }
      std::vector<std::string> outs = body();
      for (const auto& o : outs) rec.outputs[o] = hash_file(o);
    } catch (const StageError&) {
      throw;
    } catch (const std::exception& e) {
      throw StageError(name + ": " + e.what());
    }
    result_.ran.push_back(name);
    next_.stages.push_back(std::move(rec));
  }

  bool can_skip(StageRecord& rec) const {
    if (!has_prev_) return false;
    const StageRecord* old = prev_.find(rec.name);
    if (!old || old->params != rec.params || old->inputs != rec.inputs)
      return false;
    for (const auto& [path, hash] : old->outputs) {
      if (!std::filesystem::exists(path)) return false;
      if (hash_file(path) != hash) return false;
    }
    rec.outputs = old->outputs;
    return true;
  }

  // --- stage bodies --------------------------------------------------------

  std::string std_path(const std::string& cpt_csv) const {
    return out_ + "/standardized" +
           "/" + std::filesystem::path(cpt_csv).filename().string();
  }

  void standardize_stage() {
    auto csvs = detail_pl::list_cpt_csvs(cfg_.cpt_dir);
    std::vector<std::string> inputs;
    for (const auto& c : csvs) {
      inputs.push_back(c);
      inputs.push_back(io::sidecar_path(c));
    }
    stage("standardize", inputs,
          "interval=" + io::detail_io::format_double(cfg_.interval), [&] {
            std::vector<std::string> outs;
            for (const auto& c : csvs) {
              cpt::Profile raw = io::read_cpt_profile(c);
              cpt::Profile standard = cpt::standardize(raw, cfg_.interval);
              std::string dest = std_path(c);
              io::write_cpt_profile(standard, dest);
              outs.push_back(dest);
              outs.push_back(io::sidecar_path(dest));
            }
            return outs;
          });
  }

  std::string kinds_param() const {
    std::string s;
    for (auto k : cfg_.kinds) {
      if (!s.empty()) s += ',';
      s += to_string(k);
    }
    return s;
  }

  void curves_stage() {
    std::vector<std::string> inputs;
    for (const auto& c : detail_pl::list_cpt_csvs(cfg_.cpt_dir)) {
      inputs.push_back(std_path(c));
      inputs.push_back(io::sidecar_path(std_path(c)));
    }
    std::ostringstream params;
    params << "kinds=" << kinds_param() << ";region="
           << (cfg_.region == mech::FinesRegion::Global ? "global" : "nz")
           << ";pga=" << cfg_.loading.pga_min << ':' << cfg_.loading.pga_max
           << ':' << cfg_.loading.pga_count << ";mw=" << cfg_.loading.mw_min
           << ':' << cfg_.loading.mw_max << ':' << cfg_.loading.mw_count;
    stage("curves", inputs, params.str(), [&] {
      curves::LoadingArray array = cfg_.loading.to_array();
      mech::TriggeringOptions opt;
      opt.region = cfg_.region;
      std::vector<io::CurveRow> rows;
      for (const auto& c : detail_pl::list_cpt_csvs(cfg_.cpt_dir)) {
        cpt::Profile profile = io::read_cpt_profile(std_path(c));
        for (MiKind kind : cfg_.kinds) {
          auto samples = curves::sweep_site(profile, array, kind, opt);
          try {
            rows.push_back({profile.id, curves::fit_curve(samples, kind)});
          } catch (const TooFewSamples&) {
            // sites whose response never clears the threshold have no curve
          }
        }
      }
      std::string dest = out_ + "/curves.csv";
      io::write_curves_csv(rows, dest);
      return std::vector<std::string>{dest};
    });
  }

  std::vector<surrogate::Hyperparams> lattice() const {
    std::vector<surrogate::Hyperparams> grid;
    for (auto t : cfg_.trees)
      for (auto l : cfg_.min_leaf)
        for (auto d : cfg_.max_depth)
          grid.push_back({t, l, d, cfg_.features_per_split});
    return grid;
  }

  std::string model_path(MiKind kind, surrogate::Target target) const {
    return out_ + "/models/" + std::string(to_string(kind)) + "_" +
           surrogate::to_string(target) + ".liqt";
  }

  void train_stage() {
    std::ostringstream params;
    params << "seed=" << cfg_.seed << ";folds=" << cfg_.folds << ";grid=";
    for (const auto& hp : lattice())
      params << hp.n_trees << '/' << hp.min_leaf << '/' << hp.max_depth << '/'
             << hp.features_per_split << ',';
    stage("train", {cfg_.features, out_ + "/curves.csv"}, params.str(), [&] {
      io::FeatureTable table = io::read_feature_csv(cfg_.features);
      auto curve_rows = io::read_curves_csv(out_ + "/curves.csv");
      auto grid = lattice();
      std::vector<std::string> outs;
      std::uint64_t salt = 0;
      for (MiKind kind : cfg_.kinds) {
        for (auto target : {surrogate::Target::A, surrogate::Target::B}) {
          auto set = io::make_training_set(table, curve_rows, kind, target);
          surrogate::Hyperparams hp = grid.front();
          if (grid.size() > 1)
            hp = surrogate::grid_search(
                     set, grid, cfg_.folds,
                     liq::detail::derive_seed(cfg_.seed, salt), cfg_.jobs)
                     .best;
          auto model = surrogate::train_bagged(
              set, hp, liq::detail::derive_seed(cfg_.seed, 100 + salt),
              cfg_.jobs);
          model.target = target;
          model.mi_kind = kind;
          std::string dest = model_path(kind, target);
          surrogate::write_liqt(model, dest);
          outs.push_back(dest);
          ++salt;
        }
      }
      return outs;
    });
  }

  std::string raster_path(MiKind kind, const char* suffix) const {
    return out_ + "/rasters/" + std::string(to_string(kind)) + suffix;
  }

  void predict_stage() {
    std::string grid_csv =
        cfg_.grid_features.empty() ? cfg_.features : cfg_.grid_features;
    std::vector<std::string> inputs{grid_csv};
    for (MiKind kind : cfg_.kinds) {
      inputs.push_back(model_path(kind, surrogate::Target::A));
      inputs.push_back(model_path(kind, surrogate::Target::B));
    }
    for (const auto& m : cfg_.masks) inputs.push_back(m);
    std::ostringstream params;
    params << "origin=" << io::detail_io::format_double(cfg_.origin_lon) << ','
           << io::detail_io::format_double(cfg_.origin_lat)
           << ";cell=" << io::detail_io::format_double(cfg_.cell_size)
           << ";size=" << cfg_.width << 'x' << cfg_.height;
    stage("predict", inputs, params.str(), [&] {
      io::FeatureTable table = io::read_feature_csv(grid_csv);
      raster::MaskSet mask_set;
      for (const auto& m : cfg_.masks)
        mask_set.masks.push_back(
            detail_pl::mask_from_raster(raster::read_abgrid(m)));

      std::vector<std::string> outs;
      for (MiKind kind : cfg_.kinds) {
        auto model_a = surrogate::read_liqt(model_path(kind, surrogate::Target::A));
        auto model_b = surrogate::read_liqt(model_path(kind, surrogate::Target::B));
        if (model_a.schema_id != table.schema.id() ||
            model_b.schema_id != table.schema.id())
          throw SchemaMismatch("model trained on a different feature schema");
        raster::AbRaster a = raster::make_raster(
            cfg_.width, cfg_.height, cfg_.origin_lon, cfg_.origin_lat,
            cfg_.cell_size, raster::BandKind::A, kind);
        raster::AbRaster b = raster::make_raster(
            cfg_.width, cfg_.height, cfg_.origin_lon, cfg_.origin_lat,
            cfg_.cell_size, raster::BandKind::B, kind);
        for (const auto& sample : table.samples) {
          std::uint32_t col = 0, row = 0;
          if (!a.cell_of(sample.location, col, row)) continue;
          auto x = surrogate::impute_nearest(table.samples, sample);
          a.set(col, row, surrogate::predict(model_a, x));
          b.set(col, row, surrogate::predict(model_b, x));
        }
        if (!mask_set.masks.empty()) {
          a = raster::apply_masks(a, mask_set);
          b = raster::apply_masks(b, mask_set);
        }
        raster::write_abgrid(a, raster_path(kind, "_A.abg"));
        raster::write_abgrid(b, raster_path(kind, "_B.abg"));
        outs.push_back(raster_path(kind, "_A.abg"));
        outs.push_back(raster_path(kind, "_B.abg"));
      }
      return outs;
    });
  }

  void krige_stage() {
    std::vector<std::string> inputs{cfg_.stations};
    for (MiKind kind : cfg_.kinds)
      inputs.push_back(raster_path(kind, "_A.abg"));
    stage("krige", inputs, "", [&] {
      auto stations = io::read_stations_csv(cfg_.stations);
      geostat::ResidualField field;
      field.stations = stations;
      field.model = geostat::fit_stable(
          geostat::empirical_semivariogram(stations));
      std::vector<std::string> outs;
      for (MiKind kind : cfg_.kinds) {
        auto a = raster::read_abgrid(raster_path(kind, "_A.abg"));
        auto result = geostat::update_raster(a, field, cfg_.jobs);
        raster::write_abgrid(result.updated, raster_path(kind, "_A_upd.abg"));
        raster::write_abgrid(result.classes, raster_path(kind, "_cls.abg"));
        outs.push_back(raster_path(kind, "_A_upd.abg"));
        outs.push_back(raster_path(kind, "_cls.abg"));
      }
      return outs;
    });
  }

  void event_stage() {
    bool kriged = !cfg_.stations.empty();
    std::vector<std::string> inputs{cfg_.shakemap, cfg_.fragility};
    for (MiKind kind : cfg_.kinds) {
      inputs.push_back(raster_path(kind, kriged ? "_A_upd.abg" : "_A.abg"));
      inputs.push_back(raster_path(kind, "_B.abg"));
    }
    stage("event", inputs, kriged ? "ab=updated" : "ab=predicted", [&] {
      forward::ShakeGrid grid = forward::parse_shakemap_file(cfg_.shakemap);
      forward::FragilityFunction frag =
          forward::fragility_from_json_file(cfg_.fragility);
      std::vector<std::string> outs;
      for (MiKind kind : cfg_.kinds) {
        if (frag.kind_set && frag.kind != kind) continue;
        auto a = raster::read_abgrid(
            raster_path(kind, kriged ? "_A_upd.abg" : "_A.abg"));
        auto b = raster::read_abgrid(raster_path(kind, "_B.abg"));
        std::string dir = out_ + "/event/" + to_string(kind);
        forward::run_event(a, b, grid, frag, dir, false, cfg_.jobs);
        for (const char* stem : {"pga", "pga_m", "mi", "pgf"})
          outs.push_back(dir + "/" + stem + ".abg");
      }
      if (outs.empty())
        throw ConfigError("fragility kind matches none of the configured kinds");
      return outs;
    });
  }

  void evaluate_stage() {
    std::ostringstream params;
    params << "control=" << cfg_.control << ";reps=" << cfg_.reps
           << ";level=" << cfg_.level << ";seed=" << cfg_.seed;
    stage("evaluate", {cfg_.cases}, params.str(), [&] {
      io::CaseTable table = io::read_cases_csv(cfg_.cases);
      std::size_t control =
          cfg_.control.empty() ? 0 : io::model_index(table, cfg_.control);
      auto report = evalkit::compare_models(
          table.cases, table.model_names, control, cfg_.reps, cfg_.level,
          liq::detail::derive_seed(cfg_.seed, 0xEA1ULL), cfg_.jobs);
      std::string dest = out_ + "/report.json";
      std::ofstream os(dest);
      if (!os) throw IoError("cannot write " + dest);
      os << io::report_json(report, cfg_.reps, cfg_.level, cfg_.seed).dump(2)
         << '\n';
      return std::vector<std::string>{dest};
    });
  }

  Config cfg_;
  std::string out_;
  std::string manifest_path_;
  Manifest prev_;
  bool has_prev_ = false;
  Manifest next_;
  RunResult result_;
};

inline RunResult run_pipeline(const Config& cfg) { return Runner(cfg).run(); }

}  // namespace pipeline
}  // namespace liq

#endif  // LIQ_PIPELINE_HPP

// liq: command-line front end for the liquefaction geospatial pipeline.

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "liq/cpt.hpp"
#include "liq/curves.hpp"
#include "liq/errors.hpp"
#include "liq/evalkit.hpp"
#include "liq/forward.hpp"
#include "liq/geostat.hpp"
#include "liq/io.hpp"
#include "liq/mechanics.hpp"
#include "liq/mi.hpp"
#include "liq/pipeline.hpp"
#include "liq/raster.hpp"
#include "liq/surrogate.hpp"

namespace {

using namespace liq;

cpt::Profile load_profile(const std::string& path, double interval) {
  cpt::Profile p = io::read_cpt_profile(path);
  if (!p.standardized) p = cpt::standardize(p, interval);
  return p;
}

raster::BandKind band_from_string(const std::string& s) {
  if (s == "A" || s == "a") return raster::BandKind::A;
  if (s == "B" || s == "b") return raster::BandKind::B;
  if (s == "class" || s == "CLASS") return raster::BandKind::Class;
  if (s == "mi" || s == "MI") return raster::BandKind::Mi;
  if (s == "pgf" || s == "PGF") return raster::BandKind::Pgf;
  if (s == "pga" || s == "PGA") return raster::BandKind::Pga;
  if (s == "pga_m" || s == "PGA_M") return raster::BandKind::PgaM;
  throw ConfigError("unknown band kind: " + s);
}

std::vector<MiKind> kinds_from_csv(const std::string& csv) {
  std::vector<MiKind> kinds;
  for (const auto& k : pipeline::detail_pl::split_list(csv))
    kinds.push_back(mi_kind_from_string(k));
  if (kinds.empty()) throw ConfigError("no kinds given");
  return kinds;
}

curves::LoadingArray loading_from(double pga_min, double pga_max,
                                  std::size_t pga_count, double mw_min,
                                  double mw_max, std::size_t mw_count) {
  pipeline::LoadingSpec spec{pga_min, pga_max, pga_count,
                             mw_min,  mw_max,  mw_count};
  return spec.to_array();
}

// --- subcommand bodies ------------------------------------------------------

int run_standardize(const std::string& in_dir, const std::string& out_dir,
                    double interval) {
  std::filesystem::create_directories(out_dir);
  auto csvs = pipeline::detail_pl::list_cpt_csvs(in_dir);
  for (const auto& c : csvs) {
    cpt::Profile raw = io::read_cpt_profile(c);
    cpt::Profile standard = cpt::standardize(raw, interval);
    std::string dest =
        out_dir + "/" + std::filesystem::path(c).filename().string();
    io::write_cpt_profile(standard, dest);
    std::cout << c << " -> " << dest << " (" << standard.records.size()
              << " samples)\n";
  }
  return 0;
}

int run_fs(const std::string& profile_path, double pga, double mw,
           const std::string& region, double interval,
           const std::string& out) {
  cpt::Profile p = load_profile(profile_path, interval);
  mech::TriggeringOptions opt;
  opt.region = region == "nz" ? mech::FinesRegion::NewZealand
                              : mech::FinesRegion::Global;
  mech::FsProfile fs = mech::factor_of_safety(p, {pga, mw}, opt);
  if (out.empty()) {
    io::write_fs_csv(fs, std::cout);
  } else {
    std::ofstream os(out);
    if (!os) throw IoError("cannot write " + out);
    io::write_fs_csv(fs, os);
  }
  return 0;
}

int run_curves(const std::string& cpts_dir, const std::string& kinds_csv,
               const std::string& out, const std::string& region,
               double interval, const curves::LoadingArray& array) {
  auto kinds = kinds_from_csv(kinds_csv);
  mech::TriggeringOptions opt;
  opt.region = region == "nz" ? mech::FinesRegion::NewZealand
                              : mech::FinesRegion::Global;
  std::vector<io::CurveRow> rows;
  for (const auto& c : pipeline::detail_pl::list_cpt_csvs(cpts_dir)) {
    cpt::Profile profile = load_profile(c, interval);
    for (MiKind kind : kinds) {
      auto samples = curves::sweep_site(profile, array, kind, opt);
      try {
        rows.push_back({profile.id, curves::fit_curve(samples, kind)});
      } catch (const TooFewSamples&) {
        std::cerr << "note: " << profile.id << "/" << to_string(kind)
                  << " has too few usable samples, skipped\n";
      }
    }
  }
  io::write_curves_csv(rows, out);
  std::cout << "wrote " << rows.size() << " curves to " << out << "\n";
  return 0;
}

int run_train(const std::string& features, const std::string& curves_csv,
              const std::string& target, const std::string& kind,
              const std::string& out, std::uint32_t trees,
              std::uint32_t min_leaf, std::uint32_t max_depth,
              std::uint32_t features_per_split, std::uint64_t seed, int jobs) {
  io::FeatureTable table = io::read_feature_csv(features);
  auto curve_rows = io::read_curves_csv(curves_csv);
  auto set = io::make_training_set(table, curve_rows,
                                   mi_kind_from_string(kind),
                                   surrogate::target_from_string(target));
  surrogate::Hyperparams hp{
      trees, min_leaf, max_depth == 0 ? surrogate::kUnlimitedDepth : max_depth,
      features_per_split};
  auto model = surrogate::train_bagged(set, hp, seed, jobs);
  model.target = surrogate::target_from_string(target);
  model.mi_kind = mi_kind_from_string(kind);
  surrogate::write_liqt(model, out);
  std::cout << "trained " << model.trees.size() << " trees on "
            << set.rows.size() << " rows -> " << out << "\n";
  return 0;
}

int run_predict(const std::string& features, const std::string& model_a_path,
                const std::string& model_b_path, double origin_lon,
                double origin_lat, double cell_size, std::uint32_t width,
                std::uint32_t height, const std::vector<std::string>& masks,
                const std::string& out_a, const std::string& out_b) {
  io::FeatureTable table = io::read_feature_csv(features);
  auto model_a = surrogate::read_liqt(model_a_path);
  auto model_b = surrogate::read_liqt(model_b_path);
  if (model_a.schema_id != table.schema.id() ||
      model_b.schema_id != table.schema.id())
    throw SchemaMismatch("model trained on a different feature schema");
  if (model_a.mi_kind != model_b.mi_kind)
    throw KindMismatch("A and B models target different indices");

  raster::AbRaster a =
      raster::make_raster(width, height, origin_lon, origin_lat, cell_size,
                          raster::BandKind::A, model_a.mi_kind);
  raster::AbRaster b =
      raster::make_raster(width, height, origin_lon, origin_lat, cell_size,
                          raster::BandKind::B, model_a.mi_kind);
  std::size_t placed = 0;
  for (const auto& sample : table.samples) {
    std::uint32_t col = 0, row = 0;
    if (!a.cell_of(sample.location, col, row)) continue;
    auto x = surrogate::impute_nearest(table.samples, sample);
    a.set(col, row, surrogate::predict(model_a, x));
    b.set(col, row, surrogate::predict(model_b, x));
    ++placed;
  }
  if (!masks.empty()) {
    raster::MaskSet mask_set;
    for (const auto& m : masks)
      mask_set.masks.push_back(
          pipeline::detail_pl::mask_from_raster(raster::read_abgrid(m)));
    a = raster::apply_masks(a, mask_set);
    b = raster::apply_masks(b, mask_set);
  }
  raster::write_abgrid(a, out_a);
  raster::write_abgrid(b, out_b);
  std::cout << "placed " << placed << " of " << table.samples.size()
            << " sites -> " << out_a << ", " << out_b << "\n";
  return 0;
}

int run_krige(const std::string& raster_path, const std::string& stations_csv,
              const std::string& out, const std::string& classes_out,
              int jobs) {
  auto ab = raster::read_abgrid(raster_path);
  geostat::ResidualField field;
  field.stations = io::read_stations_csv(stations_csv);
  field.model =
      geostat::fit_stable(geostat::empirical_semivariogram(field.stations));
  auto result = geostat::update_raster(ab, field, jobs);
  raster::write_abgrid(result.updated, out);
  if (!classes_out.empty()) raster::write_abgrid(result.classes, classes_out);
  std::cout << "updated " << raster_path << " with " << field.stations.size()
            << " stations (sill " << field.model.c0 << ", range "
            << field.model.r << " m)\n";
  return 0;
}

int run_event(const std::vector<std::string>& a_paths,
              const std::vector<std::string>& b_paths,
              const std::string& shakemap, const std::string& fragility,
              const std::string& out_dir, bool ensemble, bool ascii,
              int jobs) {
  if (a_paths.size() != b_paths.size())
    throw ConfigError("--a and --b must be given the same number of times");
  if (a_paths.empty()) throw ConfigError("at least one --a/--b pair required");
  if (a_paths.size() > 1 && !ensemble)
    throw ConfigError("multiple --a/--b pairs require --ensemble");

  forward::ShakeGrid grid = forward::parse_shakemap_file(shakemap);
  forward::FragilityFunction frag =
      forward::fragility_from_json_file(fragility);

  std::vector<raster::AbRaster> pgfs;
  for (std::size_t i = 0; i < a_paths.size(); ++i) {
    auto a = raster::read_abgrid(a_paths[i]);
    auto b = raster::read_abgrid(b_paths[i]);
    std::string dir = a_paths.size() == 1
                          ? out_dir
                          : out_dir + "/model" + std::to_string(i + 1);
    auto outputs = forward::run_event(a, b, grid, frag, dir, ascii, jobs);
    pgfs.push_back(std::move(outputs.pgf));
    std::cout << "event " << grid.event_id << " (Mw " << grid.magnitude
              << ") -> " << dir << "\n";
  }
  if (ensemble && pgfs.size() > 1) {
    auto mean = forward::ensemble_pgf(pgfs, jobs);
    std::string dest = out_dir + "/pgf_ensemble.abg";
    raster::write_abgrid(mean, dest);
    if (ascii) raster::export_ascii_grid(mean, out_dir + "/pgf_ensemble.asc");
    std::cout << "ensemble of " << pgfs.size() << " models -> " << dest
              << "\n";
  }
  return 0;
}

int run_evaluate(const std::string& cases_csv, const std::string& control,
                 std::size_t reps, double level, std::uint64_t seed,
                 const std::string& out, int jobs) {
  io::CaseTable table = io::read_cases_csv(cases_csv);
  std::size_t ctrl = control.empty() ? 0 : io::model_index(table, control);
  auto report = evalkit::compare_models(table.cases, table.model_names, ctrl,
                                        reps, level, seed, jobs);
  auto j = io::report_json(report, reps, level, seed);
  if (out.empty()) {
    std::cout << j.dump(2) << "\n";
  } else {
    std::ofstream os(out);
    if (!os) throw IoError("cannot write " + out);
    os << j.dump(2) << "\n";
    std::cout << "wrote " << out << "\n";
  }
  return 0;
}

int run_raster_convert(const std::string& in, const std::string& out,
                       const std::string& band, const std::string& mi,
                       double scale) {
  std::string iext = std::filesystem::path(in).extension().string();
  std::string oext = std::filesystem::path(out).extension().string();
  if (iext == ".abg" && oext == ".asc") {
    raster::export_ascii_grid(raster::read_abgrid(in), out);
  } else if (iext == ".asc" && oext == ".abg") {
    auto r = raster::import_ascii_grid(in, band_from_string(band),
                                       mi_kind_from_string(mi),
                                       static_cast<float>(scale));
    raster::write_abgrid(r, out);
  } else {
    throw ConfigError("convert supports .abg -> .asc and .asc -> .abg");
  }
  std::cout << in << " -> " << out << "\n";
  return 0;
}

int run_raster_info(const std::string& in) {
  auto r = raster::read_abgrid(in);
  std::size_t nodata = 0;
  for (auto v : r.values)
    if (v == raster::kNoData) ++nodata;
  std::cout << "width: " << r.width << "\nheight: " << r.height
            << "\norigin_lon: " << r.origin_lon
            << "\norigin_lat: " << r.origin_lat
            << "\ncell_size: " << r.cell_size
            << "\nband: " << raster::to_string(r.band_kind)
            << "\nmi_kind: " << to_string(r.mi_kind)
            << "\nquant_scale: " << r.quant_scale << "\nnodata_cells: "
            << nodata << " of " << r.size() << "\n";
  return 0;
}

int run_raster_mask(const std::string& in, const std::string& mask,
                    const std::string& out) {
  auto r = raster::read_abgrid(in);
  raster::MaskSet set;
  set.masks.push_back(
      pipeline::detail_pl::mask_from_raster(raster::read_abgrid(mask)));
  raster::write_abgrid(raster::apply_masks(r, set), out);
  std::cout << in << " masked by " << mask << " -> " << out << "\n";
  return 0;
}

int run_pipeline_cmd(const std::string& config_path, int jobs) {
  pipeline::Config cfg = pipeline::parse_config_file(config_path);
  if (jobs > 0) cfg.jobs = jobs;
  auto result = pipeline::run_pipeline(cfg);
  for (const auto& s : result.ran) std::cout << "ran: " << s << "\n";
  for (const auto& s : result.skipped) std::cout << "skipped: " << s << "\n";
  std::cout << "manifest: " << result.manifest_path << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"liquefaction geospatial modeling pipeline"};
  app.require_subcommand(1);
  int exit_code = 0;
  std::function<int()> action;

  // cpt standardize
  auto* cpt_cmd = app.add_subcommand("cpt", "CPT profile utilities");
  cpt_cmd->require_subcommand(1);
  {
    auto* sc = cpt_cmd->add_subcommand(
        "standardize", "resample profiles to a constant depth interval");
    auto in_dir = std::make_shared<std::string>();
    auto out_dir = std::make_shared<std::string>();
    auto interval = std::make_shared<double>(0.05);
    sc->add_option("--in", *in_dir, "directory of CPT csv files")->required();
    sc->add_option("--out", *out_dir, "output directory")->required();
    sc->add_option("--interval", *interval, "depth interval in meters");
    sc->callback([=, &action] {
      action = [=] { return run_standardize(*in_dir, *out_dir, *interval); };
    });
  }

  // fs
  {
    auto* sc = app.add_subcommand(
        "fs", "factor-of-safety profile for one loading scenario");
    auto profile = std::make_shared<std::string>();
    auto pga = std::make_shared<double>(0.0);
    auto mw = std::make_shared<double>(7.5);
    auto region = std::make_shared<std::string>("global");
    auto interval = std::make_shared<double>(0.05);
    auto out = std::make_shared<std::string>();
    sc->add_option("--profile", *profile, "CPT csv (sidecar json required)")
        ->required();
    sc->add_option("--pga", *pga, "peak ground acceleration, g")->required();
    sc->add_option("--mw", *mw, "moment magnitude")->required();
    sc->add_option("--region", *region, "fines correlation: global or nz");
    sc->add_option("--interval", *interval, "standardization interval, m");
    sc->add_option("--out", *out, "output csv (stdout when omitted)");
    sc->callback([=, &action] {
      action = [=] {
        return run_fs(*profile, *pga, *mw, *region, *interval, *out);
      };
    });
  }

  // curves
  {
    auto* sc = app.add_subcommand(
        "curves", "fit site response curves over the loading array");
    auto cpts = std::make_shared<std::string>();
    auto kinds = std::make_shared<std::string>("lpi,lpish,lsn");
    auto out = std::make_shared<std::string>();
    auto region = std::make_shared<std::string>("global");
    auto interval = std::make_shared<double>(0.05);
    auto pga_min = std::make_shared<double>(0.05);
    auto pga_max = std::make_shared<double>(2.0);
    auto pga_count = std::make_shared<std::size_t>(40);
    auto mw_min = std::make_shared<double>(4.5);
    auto mw_max = std::make_shared<double>(9.0);
    auto mw_count = std::make_shared<std::size_t>(10);
    sc->add_option("--cpts", *cpts, "directory of CPT csv files")->required();
    sc->add_option("--kinds", *kinds, "comma list: lpi,lpish,lsn");
    sc->add_option("--out", *out, "output curve table csv")->required();
    sc->add_option("--region", *region, "fines correlation: global or nz");
    sc->add_option("--interval", *interval, "standardization interval, m");
    sc->add_option("--pga-min", *pga_min, "loading array pga minimum, g");
    sc->add_option("--pga-max", *pga_max, "loading array pga maximum, g");
    sc->add_option("--pga-count", *pga_count, "loading array pga points");
    sc->add_option("--mw-min", *mw_min, "loading array magnitude minimum");
    sc->add_option("--mw-max", *mw_max, "loading array magnitude maximum");
    sc->add_option("--mw-count", *mw_count, "loading array magnitude points");
    sc->callback([=, &action] {
      action = [=] {
        return run_curves(*cpts, *kinds, *out, *region, *interval,
                          loading_from(*pga_min, *pga_max, *pga_count, *mw_min,
                                       *mw_max, *mw_count));
      };
    });
  }

  // train
  {
    auto* sc = app.add_subcommand(
        "train", "train a bagged-tree surrogate for one curve parameter");
    auto features = std::make_shared<std::string>();
    auto curves_csv = std::make_shared<std::string>();
    auto target = std::make_shared<std::string>();
    auto kind = std::make_shared<std::string>();
    auto out = std::make_shared<std::string>();
    auto trees = std::make_shared<std::uint32_t>(100);
    auto min_leaf = std::make_shared<std::uint32_t>(5);
    auto max_depth = std::make_shared<std::uint32_t>(0);
    auto fps = std::make_shared<std::uint32_t>(0);
    auto seed = std::make_shared<std::uint64_t>(0);
    auto jobs = std::make_shared<int>(0);
    sc->add_option("--features", *features, "feature table csv")->required();
    sc->add_option("--curves", *curves_csv, "fitted curve table csv")
        ->required();
    sc->add_option("--target", *target, "curve parameter: A or B")->required();
    sc->add_option("--kind", *kind, "index kind: lpi, lpish or lsn")
        ->required();
    sc->add_option("--out", *out, "output model file (.liqt)")->required();
    sc->add_option("--trees", *trees, "ensemble size");
    sc->add_option("--min-leaf", *min_leaf, "minimum samples per leaf");
    sc->add_option("--max-depth", *max_depth, "tree depth cap (0 = none)");
    sc->add_option("--features-per-split", *fps,
                   "features considered per split (0 = all)");
    sc->add_option("--seed", *seed, "training seed")->required();
    sc->add_option("--jobs", *jobs, "worker threads (0 = LIQ_JOBS or cores)");
    sc->callback([=, &action] {
      action = [=] {
        return run_train(*features, *curves_csv, *target, *kind, *out, *trees,
                         *min_leaf, *max_depth, *fps, *seed, *jobs);
      };
    });
  }

  // predict
  {
    auto* sc = app.add_subcommand(
        "predict", "rasterize model predictions over a feature grid");
    auto features = std::make_shared<std::string>();
    auto model_a = std::make_shared<std::string>();
    auto model_b = std::make_shared<std::string>();
    auto origin_lon = std::make_shared<double>(0.0);
    auto origin_lat = std::make_shared<double>(0.0);
    auto cell = std::make_shared<double>(raster::kDefaultCellSize);
    auto width = std::make_shared<std::uint32_t>(0);
    auto height = std::make_shared<std::uint32_t>(0);
    auto masks = std::make_shared<std::vector<std::string>>();
    auto out_a = std::make_shared<std::string>();
    auto out_b = std::make_shared<std::string>();
    sc->add_option("--features", *features, "feature grid csv")->required();
    sc->add_option("--model-a", *model_a, "A-parameter model (.liqt)")
        ->required();
    sc->add_option("--model-b", *model_b, "B-parameter model (.liqt)")
        ->required();
    sc->add_option("--origin-lon", *origin_lon, "west edge, degrees")
        ->required();
    sc->add_option("--origin-lat", *origin_lat, "north edge, degrees")
        ->required();
    sc->add_option("--cell", *cell, "cell size, degrees");
    sc->add_option("--width", *width, "columns")->required();
    sc->add_option("--height", *height, "rows")->required();
    sc->add_option("--mask", *masks, "exclusion raster (repeatable)");
    sc->add_option("--out-a", *out_a, "output A raster (.abg)")->required();
    sc->add_option("--out-b", *out_b, "output B raster (.abg)")->required();
    sc->callback([=, &action] {
      action = [=] {
        return run_predict(*features, *model_a, *model_b, *origin_lon,
                           *origin_lat, *cell, *width, *height, *masks, *out_a,
                           *out_b);
      };
    });
  }

  // krige
  {
    auto* sc = app.add_subcommand(
        "krige", "update a raster with kriged station residuals");
    auto raster_in = std::make_shared<std::string>();
    auto stations = std::make_shared<std::string>();
    auto out = std::make_shared<std::string>();
    auto classes = std::make_shared<std::string>();
    auto jobs = std::make_shared<int>(0);
    sc->add_option("--raster", *raster_in, "input raster (.abg)")->required();
    sc->add_option("--stations", *stations, "station residual csv")
        ->required();
    sc->add_option("--out", *out, "updated raster (.abg)")->required();
    sc->add_option("--classes", *classes, "variance class raster (.abg)");
    sc->add_option("--jobs", *jobs, "worker threads (0 = LIQ_JOBS or cores)");
    sc->callback([=, &action] {
      action = [=] {
        return run_krige(*raster_in, *stations, *out, *classes, *jobs);
      };
    });
  }

  // event
  {
    auto* sc = app.add_subcommand(
        "event", "forward-predict manifestation for one ShakeMap event");
    auto a_paths = std::make_shared<std::vector<std::string>>();
    auto b_paths = std::make_shared<std::vector<std::string>>();
    auto shakemap = std::make_shared<std::string>();
    auto fragility = std::make_shared<std::string>();
    auto out = std::make_shared<std::string>();
    auto ensemble = std::make_shared<bool>(false);
    auto ascii = std::make_shared<bool>(false);
    auto jobs = std::make_shared<int>(0);
    sc->add_option("--a", *a_paths, "A raster (repeat with --ensemble)")
        ->required();
    sc->add_option("--b", *b_paths, "B raster (repeat with --ensemble)")
        ->required();
    sc->add_option("--shakemap", *shakemap, "ShakeMap grid.xml")->required();
    sc->add_option("--fragility", *fragility, "fragility config json")
        ->required();
    sc->add_option("--out", *out, "output directory")->required();
    sc->add_flag("--ensemble", *ensemble, "average PGF across model pairs");
    sc->add_flag("--ascii", *ascii, "also write ESRI ASCII twins");
    sc->add_option("--jobs", *jobs, "worker threads (0 = LIQ_JOBS or cores)");
    sc->callback([=, &action] {
      action = [=] {
        return run_event(*a_paths, *b_paths, *shakemap, *fragility, *out,
                         *ensemble, *ascii, *jobs);
      };
    });
  }

  // evaluate
  {
    auto* sc = app.add_subcommand(
        "evaluate", "compare model probabilities against case histories");
    auto cases = std::make_shared<std::string>();
    auto control = std::make_shared<std::string>();
    auto reps = std::make_shared<std::size_t>(10000);
    auto level = std::make_shared<double>(0.99);
    auto seed = std::make_shared<std::uint64_t>(0);
    auto out = std::make_shared<std::string>();
    auto jobs = std::make_shared<int>(0);
    sc->add_option("--cases", *cases, "case history csv")->required();
    sc->add_option("--control", *control,
                   "control model column (first when omitted)");
    sc->add_option("--reps", *reps, "bootstrap replicates");
    sc->add_option("--level", *level, "confidence level");
    sc->add_option("--seed", *seed, "bootstrap seed")->required();
    sc->add_option("--out", *out, "report json (stdout when omitted)");
    sc->add_option("--jobs", *jobs, "worker threads (0 = LIQ_JOBS or cores)");
    sc->callback([=, &action] {
      action = [=] {
        return run_evaluate(*cases, *control, *reps, *level, *seed, *out,
                            *jobs);
      };
    });
  }

  // raster convert|info|mask
  auto* raster_cmd = app.add_subcommand("raster", "raster file utilities");
  raster_cmd->require_subcommand(1);
  {
    auto* sc = raster_cmd->add_subcommand(
        "convert", "convert between .abg and ESRI ASCII .asc");
    auto in = std::make_shared<std::string>();
    auto out = std::make_shared<std::string>();
    auto band = std::make_shared<std::string>("A");
    auto mi = std::make_shared<std::string>("lpi");
    auto scale = std::make_shared<double>(0.01);
    sc->add_option("--in", *in, "input raster")->required();
    sc->add_option("--out", *out, "output raster")->required();
    sc->add_option("--band", *band, "band kind for .asc imports");
    sc->add_option("--mi", *mi, "index kind for .asc imports");
    sc->add_option("--scale", *scale, "quantization scale for .asc imports");
    sc->callback([=, &action] {
      action = [=] { return run_raster_convert(*in, *out, *band, *mi, *scale); };
    });
  }
  {
    auto* sc = raster_cmd->add_subcommand("info", "print raster header");
    auto in = std::make_shared<std::string>();
    sc->add_option("--in", *in, "input raster (.abg)")->required();
    sc->callback([=, &action] {
      action = [=] { return run_raster_info(*in); };
    });
  }
  {
    auto* sc = raster_cmd->add_subcommand(
        "mask", "set cells to nodata where a mask raster is positive");
    auto in = std::make_shared<std::string>();
    auto mask = std::make_shared<std::string>();
    auto out = std::make_shared<std::string>();
    sc->add_option("--in", *in, "input raster (.abg)")->required();
    sc->add_option("--mask", *mask, "mask raster (.abg)")->required();
    sc->add_option("--out", *out, "output raster (.abg)")->required();
    sc->callback([=, &action] {
      action = [=] { return run_raster_mask(*in, *mask, *out); };
    });
  }

  // pipeline run
  auto* pipe_cmd = app.add_subcommand("pipeline", "orchestrated runs");
  pipe_cmd->require_subcommand(1);
  {
    auto* sc = pipe_cmd->add_subcommand(
        "run", "run all stages from a config, skipping cached ones");
    auto config = std::make_shared<std::string>();
    auto jobs = std::make_shared<int>(0);
    sc->add_option("--config", *config, "pipeline config file")->required();
    sc->add_option("--jobs", *jobs, "worker threads (0 = LIQ_JOBS or cores)");
    sc->callback([=, &action] {
      action = [=] { return run_pipeline_cmd(*config, *jobs); };
    });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  try {
    if (action) exit_code = action();
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return exit_code;
}

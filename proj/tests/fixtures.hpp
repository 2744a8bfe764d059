#ifndef LIQ_TESTS_FIXTURES_HPP
#define LIQ_TESTS_FIXTURES_HPP

#include <atomic>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include <unistd.h>

#include "liq/cpt.hpp"
#include "liq/geo.hpp"
#include "liq/io.hpp"
#include "liq/raster.hpp"

namespace fixtures {

inline std::string unique_dir(const std::string& tag) {
  static std::atomic<int> counter{0};
  auto dir = std::filesystem::temp_directory_path() /
             ("liq_" + tag + "_" + std::to_string(::getpid()) + "_" +
              std::to_string(counter++));
  std::filesystem::create_directories(dir);
  return dir.string();
}

inline liq::geo::LonLat offset_east_m(const liq::geo::LonLat& base,
                                      double east_m) {
  double m_per_deg = liq::geo::kDegToRad * liq::geo::kEarthRadiusM;
  return {base.lon + east_m / (m_per_deg *
                               std::cos(base.lat * liq::geo::kDegToRad)),
          base.lat};
}

/// Uniform sandy profile: low friction ratio, water table at ~1 m.
inline liq::cpt::Profile sandy_profile(const std::string& id,
                                       const liq::geo::LonLat& where,
                                       double qc0_mpa, double gwt_m) {
  liq::cpt::Profile p;
  p.id = id;
  p.location = where;
  p.gwt_depth = gwt_m;
  for (int i = 1; i <= 400; ++i) {
    liq::cpt::Record r;
    r.depth = 0.02 * i;
    r.qc = qc0_mpa + 0.4 * std::sin(0.9 * r.depth);
    r.fs = 0.005 * r.qc * 1000.0;
    p.records.push_back(r);
  }
  return p;
}

inline void write_text(const std::string& path, const std::string& text) {
  std::ofstream os(path);
  os << text;
}

/// A complete miniature working area: CPT soundings, feature table, station
/// residuals, a ShakeMap, a fragility config, case histories, an exclusion
/// mask and a pipeline config wired to all of them.
struct World {
  std::string root;
  std::string cpt_dir;
  std::string features;
  std::string stations;
  std::string shakemap;
  std::string fragility;
  std::string cases;
  std::string mask;
  std::string config;
  std::string out_dir;
};

inline World make_world(const std::string& tag) {
  World w;
  w.root = unique_dir(tag);
  w.cpt_dir = w.root + "/cpt";
  std::filesystem::create_directories(w.cpt_dir);
  w.out_dir = w.root + "/out";

  // grid: 4x4 cells of 0.01 deg from (172.0, -43.0); sites at cell centers
  liq::io::write_cpt_profile(
      sandy_profile("site1", {172.005, -43.005}, 4.0, 1.0),
      w.cpt_dir + "/site1.csv");
  liq::io::write_cpt_profile(
      sandy_profile("site2", {172.015, -43.015}, 7.0, 1.2),
      w.cpt_dir + "/site2.csv");
  liq::io::write_cpt_profile(
      sandy_profile("site3", {172.025, -43.025}, 10.0, 0.8),
      w.cpt_dir + "/site3.csv");
  liq::io::write_cpt_profile(
      sandy_profile("site4", {172.035, -43.035}, 6.0, 1.1),
      w.cpt_dir + "/site4.csv");

  w.features = w.root + "/features.csv";
  write_text(w.features,
             "site_id,lon,lat,qc_band,depth_to_gwt\n"
             "site1,172.005,-43.005,4.0,1.0\n"
             "site2,172.015,-43.015,7.0,1.2\n"
             "site3,172.025,-43.025,10.0,0.8\n"
             "site4,172.035,-43.035,6.0,1.1\n");

  w.stations = w.root + "/stations.csv";
  {
    std::string text = "site_id,lon,lat,residual\n";
    const double east[] = {0.0, 200.0, 450.0, 700.0, 1100.0, 1600.0};
    const double resid[] = {2.0, 1.8, 1.5, 1.0, 0.5, 0.2};
    for (int i = 0; i < 6; ++i) {
      auto p = offset_east_m({172.005, -43.005}, east[i]);
      std::ostringstream row;
      row.precision(17);
      row << 's' << (i + 1) << ',' << p.lon << ',' << p.lat << ','
          << resid[i] << '\n';
      text += row.str();
    }
    write_text(w.stations, text);
  }

  w.shakemap = w.root + "/shakemap.xml";
  write_text(
      w.shakemap,
      "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      "<shakemap_grid xmlns=\"http://earthquake.usgs.gov/eqcenter/shakemap\""
      " event_id=\"fx2026\" shakemap_version=\"1\">\n"
      "<event event_id=\"fx2026\" magnitude=\"7.2\" depth=\"10.0\""
      " lat=\"-43.02\" lon=\"172.02\"/>\n"
      "<grid_specification lon_min=\"172.0\" lat_min=\"-43.04\""
      " lon_max=\"172.04\" lat_max=\"-43.0\" nlon=\"2\" nlat=\"2\"/>\n"
      "<grid_field index=\"1\" name=\"LON\" units=\"dd\"/>\n"
      "<grid_field index=\"2\" name=\"LAT\" units=\"dd\"/>\n"
      "<grid_field index=\"3\" name=\"PGA\" units=\"pctg\"/>\n"
      "<grid_data>\n"
      "172.0 -43.0 20.0\n"
      "172.04 -43.0 30.0\n"
      "172.0 -43.04 40.0\n"
      "172.04 -43.04 50.0\n"
      "</grid_data>\n"
      "</shakemap_grid>\n");

  w.fragility = w.root + "/fragility.json";
  write_text(w.fragility,
             "{\"kind\": \"lpi\", \"percentile\": 50, \"median\": 5.0, "
             "\"beta\": 0.5}\n");

  w.cases = w.root + "/cases.csv";
  write_text(w.cases,
             "lon,lat,observed,ml,rb20\n"
             "172.005,-43.005,1,0.8,0.6\n"
             "172.015,-43.015,0,0.2,0.4\n"
             "172.025,-43.025,1,0.7,0.5\n"
             "172.006,-43.022,0,0.3,0.45\n"
             "172.028,-43.008,1,0.65,0.5\n"
             "172.018,-43.03,0,0.25,0.35\n");

  w.mask = w.root + "/mask.abg";
  {
    auto m = liq::raster::make_raster(4, 4, 172.0, -43.0, 0.01,
                                      liq::raster::BandKind::Class,
                                      liq::MiKind::Lpi, 1.0f);
    for (std::uint32_t row = 0; row < 4; ++row)
      for (std::uint32_t col = 0; col < 4; ++col) m.set(col, row, 0.0);
    m.set(3, 3, 1.0);  // excludes site4's cell
    liq::raster::write_abgrid(m, w.mask);
  }

  w.config = w.root + "/config.toml";
  write_text(w.config,
             "# miniature end-to-end run\n"
             "cpt_dir = \"cpt\"\n"
             "out_dir = \"out\"\n"
             "features = \"features.csv\"\n"
             "stations = \"stations.csv\"\n"
             "shakemap = \"shakemap.xml\"\n"
             "fragility = \"fragility.json\"\n"
             "cases = \"cases.csv\"\n"
             "masks = \"mask.abg\"\n"
             "kinds = \"lpi\"\n"
             "interval = 0.05\n"
             "region = \"global\"\n"
             "seed = 7\n"
             "jobs = 1\n"
             "pga_min = 0.05\n"
             "pga_max = 2.0\n"
             "pga_count = 8\n"
             "mw_min = 4.5\n"
             "mw_max = 9.0\n"
             "mw_count = 2\n"
             "trees = 10\n"
             "min_leaf = 1\n"
             "max_depth = 0\n"
             "origin_lon = 172.0\n"
             "origin_lat = -43.0\n"
             "cell_size = 0.01\n"
             "width = 4\n"
             "height = 4\n"
             "control = \"rb20\"\n"
             "reps = 200\n"
             "level = 0.9\n");
  return w;
}

}  // namespace fixtures

#endif  // LIQ_TESTS_FIXTURES_HPP

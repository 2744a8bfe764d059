#include <catch2/catch_amalgamated.hpp>

#include <sys/wait.h>

#include <array>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include "fixtures.hpp"
#include "liq/io.hpp"
#include "liq/raster.hpp"

namespace fs = std::filesystem;

namespace {

struct RunOutput {
  int exit_code = -1;
  std::string text;
};

RunOutput run(const std::string& args) {
  std::string cmd = std::string(LIQ_BIN_PATH) + " " + args + " 2>&1";
  std::array<char, 4096> buf{};
  RunOutput out;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  while (std::fgets(buf.data(), static_cast<int>(buf.size()), pipe))
    out.text += buf.data();
  int status = pclose(pipe);
  out.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return out;
}

}  // namespace

TEST_CASE("help output covers every subcommand", "[cli]") {
  auto out = run("--help");
  CHECK(out.exit_code == 0);
  for (const char* sub : {"cpt", "fs", "curves", "train", "predict", "krige",
                          "event", "evaluate", "raster", "pipeline"}) {
    INFO("subcommand " << sub);
    CHECK(out.text.find(sub) != std::string::npos);
  }
}

TEST_CASE("bad invocations exit nonzero with a message", "[cli]") {
  CHECK(run("frobnicate").exit_code != 0);
  CHECK(run("train --features missing.csv").exit_code != 0);  // no --seed

  auto out = run("raster info --in /nonexistent.abg");
  CHECK(out.exit_code == 1);
  CHECK(out.text.find("error:") != std::string::npos);
}

TEST_CASE("subcommand chain from raw soundings to an event report", "[cli]") {
  auto world = fixtures::make_world("cli");
  const std::string& r = world.root;

  auto step = run("cpt standardize --in " + world.cpt_dir + " --out " + r +
                  "/std --interval 0.1");
  INFO(step.text);
  REQUIRE(step.exit_code == 0);
  auto std_profile = liq::io::read_cpt_profile(r + "/std/site1.csv");
  CHECK(std_profile.standardized);
  CHECK(std_profile.interval == Catch::Approx(0.1));

  step = run("fs --profile " + world.cpt_dir + "/site1.csv --pga 0.3 --mw 7.5"
             " --out " + r + "/fs.csv");
  INFO(step.text);
  REQUIRE(step.exit_code == 0);
  {
    std::ifstream is(r + "/fs.csv");
    std::string header;
    std::getline(is, header);
    CHECK(header ==
          "depth_m,fs_liq,ic,susceptible,sigma_v_kpa,sigma_v_eff_kpa,qc1ncs");
    std::string row;
    CHECK(std::getline(is, row));
  }

  step = run("curves --cpts " + world.cpt_dir + " --kinds lpi --out " + r +
             "/curves.csv --pga-count 8 --mw-count 2");
  INFO(step.text);
  REQUIRE(step.exit_code == 0);
  auto curve_rows = liq::io::read_curves_csv(r + "/curves.csv");
  CHECK(curve_rows.size() >= 3);

  for (const char* target : {"A", "B"}) {
    step = run(std::string("train --features ") + world.features +
               " --curves " + r + "/curves.csv --target " + target +
               " --kind lpi --out " + r + "/model_" + target +
               ".liqt --trees 10 --min-leaf 1 --seed 7");
    INFO(step.text);
    REQUIRE(step.exit_code == 0);
  }

  step = run("predict --features " + world.features + " --model-a " + r +
             "/model_A.liqt --model-b " + r + "/model_B.liqt"
             " --origin-lon 172 --origin-lat -43 --cell 0.01"
             " --width 4 --height 4 --out-a " + r + "/a_full.abg --out-b " +
             r + "/b.abg");
  INFO(step.text);
  REQUIRE(step.exit_code == 0);

  step = run("raster mask --in " + r + "/a_full.abg --mask " + world.mask +
             " --out " + r + "/a.abg");
  INFO(step.text);
  REQUIRE(step.exit_code == 0);
  auto masked = liq::raster::read_abgrid(r + "/a.abg");
  CHECK(masked.is_nodata(3, 3));
  CHECK_FALSE(masked.is_nodata(0, 0));

  auto info = run("raster info --in " + r + "/a.abg");
  CHECK(info.exit_code == 0);
  CHECK(info.text.find("width: 4") != std::string::npos);
  CHECK(info.text.find("band: A") != std::string::npos);

  SECTION("ascii round trip stays within one quantization step") {
    REQUIRE(run("raster convert --in " + r + "/a.abg --out " + r +
                "/a.asc").exit_code == 0);
    REQUIRE(run("raster convert --in " + r + "/a.asc --out " + r +
                "/a2.abg --band A --mi lpi --scale 0.01").exit_code == 0);
    auto a2 = liq::raster::read_abgrid(r + "/a2.abg");
    REQUIRE(a2.values.size() == masked.values.size());
    for (std::size_t i = 0; i < a2.values.size(); ++i) {
      if (masked.values[i] == liq::raster::kNoData) {
        CHECK(a2.values[i] == liq::raster::kNoData);
      } else {
        auto lo = static_cast<double>(masked.values[i]) - 1.0;
        auto hi = static_cast<double>(masked.values[i]) + 1.0;
        CHECK(static_cast<double>(a2.values[i]) >= lo);
        CHECK(static_cast<double>(a2.values[i]) <= hi);
      }
    }
  }

  step = run("krige --raster " + r + "/a.abg --stations " + world.stations +
             " --out " + r + "/a_upd.abg --classes " + r + "/cls.abg");
  INFO(step.text);
  REQUIRE(step.exit_code == 0);
  CHECK(fs::exists(r + "/a_upd.abg"));
  CHECK(fs::exists(r + "/cls.abg"));

  step = run("event --a " + r + "/a_upd.abg --b " + r + "/b.abg"
             " --shakemap " + world.shakemap + " --fragility " +
             world.fragility + " --out " + r + "/event");
  INFO(step.text);
  REQUIRE(step.exit_code == 0);
  for (const char* name : {"pga", "pga_m", "mi", "pgf"}) {
    INFO("band " << name);
    CHECK(fs::exists(r + "/event/" + name + ".abg"));
  }
  auto pgf = liq::raster::read_abgrid(r + "/event/pgf.abg");
  for (std::uint32_t row = 0; row < pgf.height; ++row)
    for (std::uint32_t col = 0; col < pgf.width; ++col)
      if (!pgf.is_nodata(col, row)) {
        CHECK(pgf.at(col, row) >= 0.0);
        CHECK(pgf.at(col, row) <= 1.0);
      }

  step = run("evaluate --cases " + world.cases + " --control rb20"
             " --reps 100 --level 0.9 --seed 3 --out " + r + "/report.json");
  INFO(step.text);
  REQUIRE(step.exit_code == 0);
  nlohmann::json report;
  std::ifstream(r + "/report.json") >> report;
  CHECK(report["control"] == "rb20");
  CHECK(report["models"].size() == 2);

  fs::remove_all(world.root);
}

TEST_CASE("pipeline subcommand runs and then caches", "[cli]") {
  auto world = fixtures::make_world("clipipe");

  auto first = run("pipeline run --config " + world.config);
  INFO(first.text);
  REQUIRE(first.exit_code == 0);
  CHECK(fs::exists(world.out_dir + "/manifest.json"));

  auto second = run("pipeline run --config " + world.config);
  INFO(second.text);
  REQUIRE(second.exit_code == 0);
  CHECK(second.text.find("skipped") != std::string::npos);

  SECTION("a broken config exits nonzero without touching the manifest") {
    fixtures::write_text(world.root + "/bad.toml", "seed = 7\n");
    auto bad = run("pipeline run --config " + world.root + "/bad.toml");
    CHECK(bad.exit_code != 0);
    CHECK(bad.text.find("error:") != std::string::npos);
  }

  fs::remove_all(world.root);
}

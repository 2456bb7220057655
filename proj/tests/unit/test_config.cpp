#include "runner/config.hpp"

#include <doctest.h>

#include <random>

using namespace burgers;
using namespace burgers::cli;

TEST_CASE("parse a solve config") {
  const RunConfig cfg = parse_config("# run\nR = 2\nM = 16\nN = 256  # k = h^2\nsnapshot-t = 0.5, 1\n");
  CHECK(cfg.command == Command::solve);
  CHECK(cfg.problem == "traveling-wave");
  CHECK(cfg.R == 2.0);
  CHECK(cfg.T == 1.0);
  CHECK(std::get<ExplicitGrid>(cfg.grid) == ExplicitGrid{16, 256});
  CHECK(cfg.snapshot_t == std::vector<double>{0.5, 1.0});
  CHECK(cfg.substeps == 1);
}

TEST_CASE("parse a converge config") {
  const RunConfig cfg =
      parse_config("command = converge\nR = 64\nh = 2^-3, 2^-4, 0.015625\ncoupling = k_eq_h\n"
                   "format = json\nsubsteps = auto\n");
  CHECK(cfg.command == Command::converge);
  const auto& g = std::get<CoupledGrid>(cfg.grid);
  CHECK(g.h == std::vector<double>{0.125, 0.0625, 0.015625});
  CHECK(g.coupling == Coupling::k_eq_h);
  CHECK(cfg.format == TableFormat::json);
  CHECK(cfg.substeps == 0);
}

TEST_CASE("config errors") {
  auto line_of = [](const char* text) {
    try {
      parse_config(text);
    } catch (const ConfigError& e) {
      return e.line();
    }
    return -1;
  };
  CHECK_THROWS_AS(parse_config("M = 8\nN = 8\n"), ConfigError);
  CHECK(line_of("R = 2\nM = 8\nN = 8\nh = 0.125\ncoupling = k_eq_h\n") == 5);
  CHECK(line_of("R = 2\nM = 8\nN = 8\nspeed = 3\n") == 4);
  CHECK(line_of("R = 2\nR = 3\nM = 8\nN = 8\n") == 2);
  CHECK(line_of("R = 2\nh =\ncoupling = k_eq_h\n") == 2);
  CHECK(line_of("R = -1\nM = 8\nN = 8\n") == 1);
  CHECK(line_of("R = 2\nM = 1\nN = 8\n") == 2);
  CHECK(line_of("R = 2\nM = 8\nN = eight\n") == 3);
  CHECK(line_of("R = 2\nM = 8\n") == 0);
  CHECK(line_of("R = 2\nM = 8\nN = 8\nformat = xml\n") == 4);
  CHECK(line_of("R = 2\nM = 8\nN = 8\nproblem = vortex\n") == 4);
  CHECK(line_of("R = 2\nM 8\n") == 2);
  CHECK(line_of("R = 2\nM = 8\nN = 8\nsubsteps = 0\n") == 4);
  CHECK(line_of("R = 2\nh = 0.1\ncoupling = k=h\n") == 3);
}

TEST_CASE("parse_number") {
  CHECK(parse_number("2^-6") == 0.015625);
  CHECK(parse_number(" 0.25 ") == 0.25);
  CHECK(parse_number("1e-3") == 1e-3);
  CHECK_THROWS_AS(parse_number("2^x"), ValidationError);
  CHECK_THROWS_AS(parse_number(""), ValidationError);
  CHECK_THROWS_AS(parse_number("0.5m"), ValidationError);
}

TEST_CASE("overrides replace the file's grid form") {
  ConfigMap map = parse_key_values("R = 2\nh = 0.25\ncoupling = k_eq_h\n");
  apply_overrides(map, {{"M", "4"}, {"N", "16"}, {"snapshot-t", "0.5"}});
  const RunConfig cfg = resolve_config(map);
  CHECK(std::get<ExplicitGrid>(cfg.grid) == ExplicitGrid{4, 16});
  CHECK(cfg.snapshot_t == std::vector<double>{0.5});
  CHECK_THROWS_AS(apply_overrides(map, {{"speed", "1"}}), ConfigError);
}

TEST_CASE("serialize round-trips") {
  std::mt19937_64 rng(23);
  std::uniform_real_distribution<double> unit(0.001, 1.0);
  std::uniform_int_distribution<int> small(2, 300);
  for (int trial = 0; trial < 500; ++trial) {
    RunConfig cfg;
    cfg.command = static_cast<Command>(trial % 3);
    cfg.R = unit(rng) * 1000.0;
    cfg.T = unit(rng) * 3.0;
    if (trial % 2 == 0) {
      cfg.grid = ExplicitGrid{small(rng), small(rng)};
    } else {
      CoupledGrid g;
      for (int q = 0, n = small(rng) % 5 + 1; q < n; ++q) {
        g.h.push_back(unit(rng));
      }
      g.coupling = static_cast<Coupling>(trial % 3);
      cfg.grid = g;
    }
    cfg.substeps = trial % 4;
    cfg.out = trial % 5 == 0 ? "" : "out_" + std::to_string(trial) + ".dat";
    cfg.format = trial % 7 == 0 ? TableFormat::json : TableFormat::csv;
    if (trial % 3 == 0) {
      cfg.snapshot_t = {unit(rng), unit(rng)};
    }
    cfg.time_sum = trial % 2 ? TimeSum::exclude_initial : TimeSum::include_initial;
    REQUIRE(parse_config(serialize(cfg)) == cfg);
  }
}

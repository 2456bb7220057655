#include "burgers/convergence.hpp"
#include "burgers/errors.hpp"

#include <doctest.h>
#include <nlohmann/json.hpp>

#include <cmath>
#include <sstream>
#include <string>

using namespace burgers;

namespace {

LadderSpec ladder(Coupling c, std::vector<double> hs, double R) {
  LadderSpec s;
  s.coupling = c;
  s.h_list = std::move(hs);
  s.R = R;
  return s;
}

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) {
    out.push_back(line);
  }
  return out;
}

} // namespace

TEST_CASE("coupling rules") {
  CHECK(coupled_time_step(Coupling::k_eq_R_half_h2, 0.25, 2.0) == 0.0625);
  CHECK(coupled_time_step(Coupling::k_eq_quarter_h, 0.125, 64.0) == 0.03125);
  CHECK(coupled_time_step(Coupling::k_eq_h, 0.125, 64.0) == 0.125);
  for (Coupling c : {Coupling::k_eq_R_half_h2, Coupling::k_eq_quarter_h, Coupling::k_eq_h}) {
    CHECK(parse_coupling(to_string(c)) == c);
  }
  CHECK_FALSE(parse_coupling("k=h"));
}

TEST_CASE("grid_for_pair") {
  const GridSpec g = grid_for_pair(0.125, 1.0 / 64, 1.0);
  CHECK(g.M == 8);
  CHECK(g.N == 64);
  CHECK_THROWS_AS(grid_for_pair(0.3, 0.01, 1.0), ValidationError);
  CHECK_THROWS_AS(grid_for_pair(0.25, 0.3, 1.0), ValidationError);
  CHECK_THROWS_AS(grid_for_pair(0.0, 0.1, 1.0), ValidationError);
}

TEST_CASE("run_ladder validates the spacings") {
  CHECK_THROWS_AS(run_ladder(ladder(Coupling::k_eq_h, {}, 2.0)), ValidationError);
  CHECK_THROWS_AS(run_ladder(ladder(Coupling::k_eq_h, {0.25, 0.5}, 2.0)), ValidationError);
  CHECK_THROWS_AS(run_ladder(ladder(Coupling::k_eq_h, {0.25, 0.25}, 2.0)), ValidationError);
  CHECK_THROWS_AS(run_ladder(ladder(Coupling::k_eq_h, {1.0 / 3}, 2.0)), ValidationError);
  LadderSpec bad = ladder(Coupling::k_eq_h, {0.5}, 2.0);
  bad.problem = "vortex";
  CHECK_THROWS_AS(run_ladder(bad), ValidationError);
}

TEST_CASE("run_ladder rows") {
  const auto rows = run_ladder(ladder(Coupling::k_eq_R_half_h2, {0.5, 0.25, 0.125}, 2.0));
  REQUIRE(rows.size() == 3);
  CHECK(rows[0].h == 0.5);
  CHECK(rows[2].k == 1.0 / 64);
  CHECK_FALSE(rows[0].observed_order_vs_prev);
  REQUIRE(rows[1].observed_order_vs_prev);
  CHECK(*rows[1].observed_order_vs_prev ==
        doctest::Approx(std::log2(rows[0].errors.l2_spacetime_u / rows[1].errors.l2_spacetime_u)));
  for (const auto& r : rows) {
    CHECK(r.stability.satisfied);
    CHECK_FALSE(r.errors.diverged);
  }

  // Rows do not depend on their neighbours.
  const auto alone = run_ladder(ladder(Coupling::k_eq_R_half_h2, {0.25}, 2.0));
  CHECK(alone[0].errors.l2_spacetime_u == rows[1].errors.l2_spacetime_u);
  CHECK(alone[0].errors.linf_l2_v == rows[1].errors.linf_l2_v);
}

TEST_CASE("csv table") {
  const auto rows = run_ladder(ladder(Coupling::k_eq_h, {0.5, 0.25, 0.125}, 2.0));
  const auto text = emit_table(rows, TableFormat::csv);
  const auto lines = lines_of(text);
  REQUIRE(lines.size() == 4);
  CHECK(lines[0] == "h,k,L2_u,L2_v,Linf_u,Linf_v,L1_u,L1_v,order_L2_u,stable,diverged_at");
  CHECK(lines[1].rfind("5.000000e-01,5.000000e-01,", 0) == 0);
  CHECK(lines[1].find(",,false,") != std::string::npos);
  CHECK(lines[3].rfind("1.250000e-01,1.250000e-01,NaN,NaN,Inf,Inf,NaN,NaN,,false,", 0) == 0);
  CHECK(lines[3].back() != ',');
  CHECK(emit_table(rows, "csv") == text);
  CHECK_THROWS_AS(emit_table(rows, "xml"), ValidationError);
  CHECK_THROWS_AS(emit_table({}, TableFormat::csv), ValidationError);
}

TEST_CASE("json table") {
  const auto rows = run_ladder(ladder(Coupling::k_eq_h, {0.5, 0.125}, 2.0));
  const auto doc = nlohmann::json::parse(emit_table(rows, TableFormat::json));
  REQUIRE(doc["rows"].size() == 2);
  CHECK(doc["rows"][0]["h"] == 0.5);
  CHECK(doc["rows"][0]["order_L2_u"].is_null());
  CHECK(doc["rows"][0]["diverged_at"].is_null());
  CHECK(doc["rows"][1]["L2_u"] == "NaN");
  CHECK(doc["rows"][1]["Linf_u"] == "Inf");
  CHECK(doc["rows"][1]["stable"] == false);
  CHECK(doc["rows"][1]["diverged_at"].is_string());
  CHECK(doc["rows"][1]["diffusive_ratio"] == doctest::Approx(8.0));
}

TEST_CASE("format_cell") {
  CHECK(format_cell(7.391e-4) == "7.391000e-04");
  CHECK(format_cell(NAN) == "NaN");
  CHECK(format_cell(INFINITY) == "Inf");
  CHECK(format_cell(-INFINITY) == "-Inf");
}

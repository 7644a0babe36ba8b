#include <doctest.h>

#include "dynas/report.hpp"
#include "test_util.hpp"

using namespace dynas;

TEST_CASE("float formatting") {
  CHECK(format_double(1.0) == "1");
  CHECK(format_double(0.1) == "0.1");
  CHECK(format_double(13.0) == "13");
  // shortest round-trip: parsing the output recovers the exact double
  const double v = 40.0 / 3.0;
  CHECK(std::stod(format_double(v)) == v);
  CHECK(format_fixed1(6.649) == "6.6");
  CHECK(format_fixed1(13.0) == "13.0");
}

TEST_CASE("table1 csv has the fixed header and n/a rows") {
  TargetGrid grid;
  auto index = generate(testutil::random_spec(3, 3, 15, grid), grid);
  std::map<ProblemKey, std::vector<ErtTable>> tables;
  tables[{1, 5}] = testutil::tables_from_index(index, grid);

  std::string csv = table1_csv(tables, 5, grid, {1, 2});
  CHECK(csv.rfind("FID,vbs_static,ert_static,A1,A2,log10_tau,ert_dyn,speedup\n",
                  0) == 0);
  CHECK(csv.find("\n2,n/a,n/a,n/a,n/a,n/a,n/a,n/a\n") != std::string::npos);

  // row content agrees with a direct engine call
  VbsReport r = vbs_report({1, 5}, tables[{1, 5}], grid);
  CHECK(csv.find("1," + r.vbs_static.algorithm_id + "," +
                 format_fixed1(r.vbs_static.ert) + "," + r.vbs_dyn.a1) !=
        std::string::npos);
}

TEST_CASE("exports are byte-identical across runs") {
  TargetGrid grid;
  auto index = generate(testutil::random_spec(8, 4, 15, grid), grid);
  auto tables = testutil::tables_from_index(index, grid);

  CHECK(export_canonical(index) == export_canonical(index));
  CHECK(ert_curves_csv(tables, grid) == ert_curves_csv(tables, grid));
  auto m1 = pair_matrix({1, 5}, tables, grid);
  auto m2 = pair_matrix({1, 5}, tables, grid);
  CHECK(pair_matrix_csv(m1, grid) == pair_matrix_csv(m2, grid));
}

TEST_CASE("ert table csv marks never-hit targets") {
  TargetGrid grid;
  RunSet rs{"alg", {1, 5}, {}};
  rs.runs.push_back(RunTrace::from_points(1, {{10, 1e-3}}, 100));
  std::string csv = ert_table_csv(ert_table(rs, grid), grid);
  CHECK(csv.find("50,-8.0,inf,0,1") != std::string::npos);
  CHECK(csv.find("0,2.0,10,1,1") != std::string::npos);
}

TEST_CASE("metric grid csv clips only the display column") {
  MetricGrid values;
  values[1]["a"] = 9.0;
  values[1]["b"] = std::nullopt;
  std::string csv = metric_grid_csv(values, "i1");
  CHECK(csv.find("1,a,9,3\n") != std::string::npos);
  CHECK(csv.find("1,b,absent,3\n") != std::string::npos);
}

TEST_CASE("pair matrix csv caps the display speedup at 2") {
  TargetGrid grid;

  SynthSpec spec;
  spec.seed = 1;
  spec.runs_per_algorithm = 15;
  SynthSpec::AlgorithmProfile early{"early", {}, 100000};
  SynthSpec::AlgorithmProfile late{"late", {}, 100000};
  for (int i = 0; i < grid.size(); ++i) {
    std::int64_t e = i <= 25 ? (i + 1) : (10000 + i);
    early.targets.push_back({0.0, e, e});
    late.targets.push_back({0.0, 100 + i, 100 + i});
  }
  spec.algorithms = {early, late};
  auto tables = testutil::tables_from_index(generate(spec, grid), grid);

  auto m = pair_matrix({1, 5}, tables, grid);
  std::string csv = pair_matrix_csv(m, grid);
  // raw speedup 150/51 ≈ 2.94 is kept; display column capped at 2
  const auto& cell = m.cells.at({"early", "late"});
  CHECK(*cell.speedup > 2.0);
  CHECK(csv.find(format_double(*cell.speedup) + ",2\n") != std::string::npos);
}

TEST_CASE("svg renderings are self-contained documents") {
  TargetGrid grid;
  auto index = generate(testutil::random_spec(21, 3, 15, grid), grid);
  auto tables = testutil::tables_from_index(index, grid);

  std::map<ProblemKey, double> values{{{1, 5}, 1.0}, {{2, 5}, 10.0}};
  std::string svg = heatmap_svg(values, "test");
  CHECK(svg.rfind("<svg", 0) == 0);
  CHECK(svg.find("</svg>") != std::string::npos);

  std::string curves = ert_curves_svg(tables, switch_markers(tables, grid), grid);
  CHECK(curves.rfind("<svg", 0) == 0);
  CHECK(curves.find("<path") != std::string::npos);
}

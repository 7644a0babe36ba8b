// dynas: fixed-target performance analysis for black-box optimizer logs.
//
// Ingests COCO/BBOB-style archives (or canonical NDJSON), computes ERT
// tables, the best static and best single-switch dynamic solver per problem,
// per-algorithm contribution values, and figure/table data exports.

#include <algorithm>
#include <cctype>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "dynas/contribution.hpp"
#include "dynas/dynas_engine.hpp"
#include "dynas/ingest.hpp"
#include "dynas/perf_metrics.hpp"
#include "dynas/report.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace dynas;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitData = 2;

struct Options {
  std::vector<std::string> roots;
  std::vector<int> dims;
  std::vector<int> funcs;
  double target = 0.0;  // 0 = default final target
  std::string out;
  std::vector<std::string> formats = {"csv"};
  std::string portfolio_file;
  std::string metric = "i1";
  int subset_k = 15;
  std::string figure;
};

TargetGrid make_grid(const Options& opt) {
  TargetGrid grid;
  if (opt.target > 0.0) {
    const int idx = grid.nearest_index(opt.target);
    grid = TargetGrid(idx + 1, 20, 2);
  }
  return grid;
}

bool keep_problem(const Options& opt, const ProblemKey& key) {
  if (!opt.dims.empty() &&
      std::find(opt.dims.begin(), opt.dims.end(), key.dimension) ==
          opt.dims.end())
    return false;
  if (!opt.funcs.empty() &&
      std::find(opt.funcs.begin(), opt.funcs.end(), key.function_id) ==
          opt.funcs.end())
    return false;
  return true;
}

DatasetIndex load_filtered(const Options& opt) {
  IngestResult result = build_index(opt.roots);
  DatasetIndex filtered;
  for (auto& [key, runs] : result.index.entries)
    if (keep_problem(opt, key.second))
      filtered.entries.emplace(key, std::move(runs));
  if (filtered.entries.empty())
    throw FormatError("no data left after --dims/--funcs filtering");
  return filtered;
}

bool wants(const Options& opt, const std::string& fmt) {
  return std::find(opt.formats.begin(), opt.formats.end(), fmt) !=
         opt.formats.end();
}

// CSV -> schema-versioned JSON rows, for the --format json variants.
std::string csv_to_json(const std::string& csv) {
  std::istringstream in(csv);
  std::string line;
  std::vector<std::string> header;
  json rows = json::array();
  auto split = [](const std::string& s) {
    std::vector<std::string> fields;
    std::istringstream fs(s);
    std::string f;
    while (std::getline(fs, f, ',')) fields.push_back(f);
    return fields;
  };
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (header.empty()) {
      header = split(line);
      continue;
    }
    auto fields = split(line);
    json row;
    for (size_t i = 0; i < header.size() && i < fields.size(); ++i)
      row[header[i]] = fields[i];
    rows.push_back(std::move(row));
  }
  json doc;
  doc["schema_version"] = 1;
  doc["rows"] = std::move(rows);
  return doc.dump(2) + "\n";
}

void emit(const Options& opt, const std::string& name,
          const std::string& content) {
  if (opt.out.empty()) {
    std::cout << content;
    return;
  }
  fs::create_directories(opt.out);
  const fs::path path = fs::path(opt.out) / name;
  std::ofstream f(path, std::ios::binary);
  if (!f) throw FormatError("cannot write " + path.string());
  f << content;
}

void emit_tabular(const Options& opt, const std::string& stem,
                  const std::string& csv) {
  if (wants(opt, "csv")) emit(opt, stem + ".csv", csv);
  if (wants(opt, "json")) emit(opt, stem + ".json", csv_to_json(csv));
}

std::string sanitize(const std::string& s) {
  std::string out;
  for (char c : s)
    out.push_back(std::isalnum(static_cast<unsigned char>(c)) ? c : '_');
  return out;
}

std::string problem_stem(const ProblemKey& key) {
  return "f" + std::to_string(key.function_id) + "_d" +
         std::to_string(key.dimension);
}

std::vector<std::string> read_portfolio(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot read portfolio file: " + path);
  std::vector<std::string> ids;
  std::string line;
  while (std::getline(in, line)) {
    while (!line.empty() && (line.back() == '\r' || line.back() == ' '))
      line.pop_back();
    if (!line.empty()) ids.push_back(line);
  }
  return ids;
}

std::vector<ErtTable> apply_portfolio(const std::vector<ErtTable>& tables,
                                      const std::vector<std::string>& ids) {
  if (ids.empty()) return tables;
  std::vector<ErtTable> out;
  for (const auto& t : tables)
    if (std::find(ids.begin(), ids.end(), t.algorithm_id) != ids.end())
      out.push_back(t);
  return out;
}

int cmd_ingest(const Options& opt) {
  IngestResult result = build_index(opt.roots);
  if (opt.out.empty()) throw FormatError("ingest requires --out");
  fs::create_directories(opt.out);

  std::set<std::string> used;
  for (const auto& [key, runs] : result.index.entries) {
    std::string stem =
        sanitize(key.first) + "_" + problem_stem(key.second);
    std::string name = stem;
    int suffix = 1;
    while (!used.insert(name).second) name = stem + "_" + std::to_string(++suffix);
    std::ofstream f(fs::path(opt.out) / (name + ".ndjson"), std::ios::binary);
    f << export_canonical(runs);
  }
  std::ofstream rep(fs::path(opt.out) / "ingest_report.ndjson",
                    std::ios::binary);
  rep << export_ingest_report(result.report);
  std::cerr << "ingested " << result.index.entries.size() << " run sets\n";
  return kExitOk;
}

int cmd_ert(const Options& opt) {
  const TargetGrid grid = make_grid(opt);
  DatasetIndex index = load_filtered(opt);
  for (const auto& [key, runs] : index.entries) {
    ErtTable table = ert_table(runs, grid);
    emit_tabular(opt,
                 "ert_" + sanitize(key.first) + "_" + problem_stem(key.second),
                 ert_table_csv(table, grid));
  }
  return kExitOk;
}

int cmd_vbs(const Options& opt) {
  const TargetGrid grid = make_grid(opt);
  auto tables = admissible_tables(load_filtered(opt), grid);
  std::ostringstream csv;
  csv << "function,dimension,algorithm,ert\n";
  for (const auto& [key, tabs] : tables) {
    try {
      StaticBest best = vbs_static(tabs, grid.final_index());
      csv << key.function_id << "," << key.dimension << ","
          << best.algorithm_id << "," << format_double(best.ert) << "\n";
    } catch (const std::domain_error&) {
      csv << key.function_id << "," << key.dimension << ",n/a,n/a\n";
    }
  }
  emit_tabular(opt, "vbs_static", csv.str());
  return kExitOk;
}

int cmd_dynas(const Options& opt) {
  const TargetGrid grid = make_grid(opt);
  auto tables = admissible_tables(load_filtered(opt), grid);
  std::ostringstream csv;
  csv << "function,dimension,vbs_static,ert_static,A1,A2,tau_index,ert_dyn,"
         "speedup\n";
  for (const auto& [key, tabs] : tables) {
    try {
      VbsReport r = vbs_report(key, tabs, grid);
      csv << key.function_id << "," << key.dimension << ","
          << r.vbs_static.algorithm_id << "," << format_double(r.vbs_static.ert)
          << "," << r.vbs_dyn.a1 << "," << r.vbs_dyn.a2 << ","
          << r.vbs_dyn.tau_index << "," << format_double(r.vbs_dyn.composed_ert)
          << "," << format_double(r.speedup) << "\n";
    } catch (const std::domain_error&) {
      csv << key.function_id << "," << key.dimension
          << ",n/a,n/a,n/a,n/a,n/a,n/a,n/a\n";
    }
  }
  emit_tabular(opt, "vbs_dyn", csv.str());
  return kExitOk;
}

int cmd_contrib(const Options& opt) {
  const TargetGrid grid = make_grid(opt);
  auto tables = admissible_tables(load_filtered(opt), grid);
  std::ostringstream csv;
  csv << "function,dimension,algorithm,i1,i2\n";
  for (const auto& [key, tabs] : tables) {
    ContributionTable c = contribution_table(key, tabs, grid);
    for (const auto& [alg, v1] : c.i1) {
      const auto& v2 = c.i2.at(alg);
      csv << key.function_id << "," << key.dimension << "," << alg << ","
          << (v1 ? format_double(*v1) : "absent") << ","
          << (v2 ? format_double(*v2) : "absent") << "\n";
    }
  }
  emit_tabular(opt, "contribution", csv.str());
  return kExitOk;
}

int cmd_portfolio(const Options& opt) {
  const TargetGrid grid = make_grid(opt);
  if (opt.dims.size() != 1)
    throw CLI::ValidationError("portfolio needs exactly one --dims value");
  auto tables = admissible_tables(load_filtered(opt), grid);

  MetricGrid values;
  for (const auto& [key, tabs] : tables) {
    if (key.dimension != opt.dims[0]) continue;
    ContributionTable c = contribution_table(key, tabs, grid);
    const auto& metric = opt.metric == "i2" ? c.i2 : c.i1;
    for (const auto& [alg, v] : metric) values[key.function_id][alg] = v;
  }
  if (values.empty()) throw FormatError("no admissible data for portfolio");

  auto subset = select_subset(values, opt.subset_k);
  std::ostringstream csv;
  csv << "algorithm\n";
  for (const auto& alg : subset) csv << alg << "\n";
  emit_tabular(opt, "portfolio_" + opt.metric, csv.str());
  return kExitOk;
}

int cmd_table1(const Options& opt) {
  const TargetGrid grid = make_grid(opt);
  if (opt.dims.size() != 1)
    throw CLI::ValidationError("table1 needs exactly one --dims value");
  auto tables = admissible_tables(load_filtered(opt), grid);

  std::vector<int> fids = opt.funcs;
  if (fids.empty())
    for (int f = 1; f <= 24; ++f) fids.push_back(f);
  emit_tabular(opt, "table1_d" + std::to_string(opt.dims[0]),
               table1_csv(tables, opt.dims[0], grid, fids));
  return kExitOk;
}

int cmd_figures(const Options& opt) {
  const TargetGrid grid = make_grid(opt);
  DatasetIndex index = load_filtered(opt);

  auto one_problem_tables = [&]() {
    auto tables = admissible_tables(index, grid);
    if (tables.size() != 1)
      throw FormatError(
          "this figure needs exactly one (function, dimension); narrow with "
          "--funcs/--dims");
    auto portfolio = opt.portfolio_file.empty()
                         ? std::vector<std::string>{}
                         : read_portfolio(opt.portfolio_file);
    return std::pair{tables.begin()->first,
                     apply_portfolio(tables.begin()->second, portfolio)};
  };

  if (opt.figure == "fig1") {
    auto counts = admissible_counts(index, grid);
    emit_tabular(opt, "fig1_admissible_counts", counts_csv(counts));
    if (wants(opt, "svg")) {
      std::map<ProblemKey, double> as_double;
      for (const auto& [k, v] : counts) as_double[k] = v;
      emit(opt, "fig1_admissible_counts.svg",
           heatmap_svg(as_double, "admissible algorithms"));
    }
  } else if (opt.figure == "fig3") {
    emit_tabular(opt, "fig3_ert_distribution",
                 ert_distribution_csv(admissible_tables(index, grid), grid));
  } else if (opt.figure == "fig4") {
    auto speedups = speedup_matrix(admissible_tables(index, grid), grid);
    emit_tabular(opt, "fig4_speedup", speedup_csv(speedups));
    if (wants(opt, "svg"))
      emit(opt, "fig4_speedup.svg",
           heatmap_svg(speedups, "static/dynamic ERT ratio"));
  } else if (opt.figure == "fig5" || opt.figure == "fig6") {
    const bool use_i1 = opt.figure == "fig5";
    MetricGrid values;
    for (const auto& [key, tabs] : admissible_tables(index, grid)) {
      ContributionTable c = contribution_table(key, tabs, grid);
      const auto& metric = use_i1 ? c.i1 : c.i2;
      for (const auto& [alg, v] : metric) values[key.function_id][alg] = v;
    }
    emit_tabular(opt, opt.figure + (use_i1 ? "_i1" : "_i2"),
                 metric_grid_csv(values, use_i1 ? "i1" : "i2"));
  } else if (opt.figure == "fig7") {
    auto [key, tabs] = one_problem_tables();
    emit_tabular(opt, "fig7_pair_matrix_" + problem_stem(key),
                 pair_matrix_csv(pair_matrix(key, tabs, grid), grid));
  } else if (opt.figure == "fig8") {
    auto [key, tabs] = one_problem_tables();
    auto markers = switch_markers(tabs, grid);
    emit_tabular(opt, "fig8_curves_" + problem_stem(key),
                 ert_curves_csv(tabs, grid));
    emit_tabular(opt, "fig8_markers_" + problem_stem(key),
                 switch_markers_csv(markers, grid));
    if (wants(opt, "svg"))
      emit(opt, "fig8_curves_" + problem_stem(key) + ".svg",
           ert_curves_svg(tabs, markers, grid));
  } else {
    throw CLI::ValidationError("unknown figure id: " + opt.figure);
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"fixed-target performance analysis for optimizer logs"};
  app.require_subcommand(1);

  Options opt;
  app.add_option("--dims", opt.dims, "dimension filter")->delimiter(',');
  app.add_option("--funcs", opt.funcs, "function id filter")->delimiter(',');
  app.add_option("--target", opt.target, "final target precision override");
  app.add_option("--out", opt.out, "output directory (default: stdout)");
  app.add_option("--format", opt.formats, "output formats: csv, json, svg")
      ->delimiter(',');

  std::map<std::string, int (*)(const Options&)> handlers;
  auto add = [&](const std::string& name, const std::string& desc,
                 int (*fn)(const Options&)) {
    CLI::App* sub = app.add_subcommand(name, desc);
    sub->fallthrough();  // global flags may follow the subcommand
    sub->add_option("roots", opt.roots, "input directories")->required();
    handlers[name] = fn;
    return sub;
  };

  add("ingest", "parse archives into the canonical dataset", cmd_ingest);
  add("ert", "export ERT tables per algorithm and problem", cmd_ert);
  add("vbs", "best static algorithm per problem", cmd_vbs);
  add("dynas", "best single-switch combination per problem", cmd_dynas);
  add("contrib", "per-algorithm switch contribution values", cmd_contrib);
  CLI::App* pf = add("portfolio", "contribution-based subset selection",
                     cmd_portfolio);
  pf->add_option("--metric", opt.metric, "i1 or i2")
      ->check(CLI::IsMember({"i1", "i2"}));
  pf->add_option("-k,--size", opt.subset_k, "subset size");
  CLI::App* figs = add("figures", "figure data exports", cmd_figures);
  figs->add_option("--which", opt.figure, "fig1|fig3|fig4|fig5|fig6|fig7|fig8")
      ->required();
  figs->add_option("--portfolio", opt.portfolio_file,
                   "file with one algorithm id per line");
  add("table1", "per-function static vs dynamic summary", cmd_table1);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  }

  try {
    for (const auto& [name, fn] : handlers)
      if (app.get_subcommand(name)->parsed()) return fn(opt);
    return kExitUsage;
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitData;
  }
}

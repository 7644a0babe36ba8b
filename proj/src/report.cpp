#include "dynas/report.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <set>
#include <sstream>

#include <json.hpp>

using nlohmann::json;

namespace dynas {

std::string format_double(double v) {
  char buf[32];
  auto [p, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, p);
}

std::string format_fixed1(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.1f", v);
  return buf;
}

std::string export_canonical(const RunSet& runs) {
  std::ostringstream out;
  for (const auto& run : runs.runs) {
    json j;
    j["algorithm"] = runs.algorithm_id;
    j["function"] = runs.problem.function_id;
    j["dimension"] = runs.problem.dimension;
    j["instance"] = run.instance_id();
    j["budget"] = run.budget();
    json trace = json::array();
    for (const auto& p : run.points())
      trace.push_back({p.evals, p.best_precision});
    j["trace"] = std::move(trace);
    out << j.dump() << "\n";
  }
  return out.str();
}

std::string export_canonical(const DatasetIndex& index) {
  std::ostringstream out;
  for (const auto& [key, runs] : index.entries) out << export_canonical(runs);
  return out.str();
}

std::string export_ingest_report(const std::vector<IngestReportLine>& report) {
  std::ostringstream out;
  for (const auto& line : report) {
    json j;
    j["file"] = line.file;
    j["status"] = line.status;
    j["reason"] = line.reason;
    j["runs"] = line.runs;
    out << j.dump() << "\n";
  }
  return out.str();
}

namespace {

std::string log10_tenths(const TargetGrid& grid, int i) {
  // exact: tenths/10 always has one decimal digit
  const int tenths = grid.exponent_tenths(i);
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.1f", tenths / 10.0);
  return buf;
}

}  // namespace

std::string ert_table_csv(const ErtTable& table, const TargetGrid& grid) {
  std::ostringstream out;
  out << "index,log10_target,ert,successes,total_runs\n";
  for (int i = 0; i < grid.size(); ++i) {
    const ErtValue& v = table.at(i);
    out << i << "," << log10_tenths(grid, i) << ",";
    if (v.finite)
      out << format_double(v.ert) << "," << v.successes;
    else
      out << "inf,0";
    out << "," << v.total_runs << "\n";
  }
  return out.str();
}

std::string table1_csv(
    const std::map<ProblemKey, std::vector<ErtTable>>& tables_per_problem,
    int dimension, const TargetGrid& grid,
    const std::vector<int>& function_ids) {
  std::ostringstream out;
  out << "FID,vbs_static,ert_static,A1,A2,log10_tau,ert_dyn,speedup\n";
  for (int fid : function_ids) {
    out << fid << ",";
    auto it = tables_per_problem.find(ProblemKey{fid, dimension});
    if (it == tables_per_problem.end()) {
      out << "n/a,n/a,n/a,n/a,n/a,n/a,n/a\n";
      continue;
    }
    try {
      VbsReport r = vbs_report(it->first, it->second, grid);
      out << r.vbs_static.algorithm_id << ","
          << format_fixed1(r.vbs_static.ert) << "," << r.vbs_dyn.a1 << ","
          << r.vbs_dyn.a2 << "," << log10_tenths(grid, r.vbs_dyn.tau_index)
          << "," << format_fixed1(r.vbs_dyn.composed_ert) << ","
          << format_double(r.speedup) << "\n";
    } catch (const std::domain_error&) {
      out << "n/a,n/a,n/a,n/a,n/a,n/a,n/a\n";
    }
  }
  return out.str();
}

std::string counts_csv(const std::map<ProblemKey, int>& counts) {
  std::ostringstream out;
  out << "function,dimension,admissible_algorithms\n";
  for (const auto& [key, n] : counts)
    out << key.function_id << "," << key.dimension << "," << n << "\n";
  return out.str();
}

std::string ert_distribution_csv(
    const std::map<ProblemKey, std::vector<ErtTable>>& tables_per_problem,
    const TargetGrid& grid) {
  std::ostringstream out;
  out << "function,dimension,algorithm,ert_final\n";
  const int last = grid.final_index();
  for (const auto& [key, tables] : tables_per_problem) {
    for (const auto& t : tables) {
      out << key.function_id << "," << key.dimension << "," << t.algorithm_id
          << ",";
      const ErtValue& v = t.at(last);
      out << (v.finite ? format_double(v.ert) : "inf") << "\n";
    }
  }
  return out.str();
}

std::string speedup_csv(const std::map<ProblemKey, double>& speedups) {
  std::ostringstream out;
  out << "function,dimension,speedup\n";
  for (const auto& [key, s] : speedups)
    out << key.function_id << "," << key.dimension << ","
        << format_double(s) << "\n";
  return out.str();
}

std::string metric_grid_csv(const MetricGrid& values, const std::string& name) {
  std::ostringstream out;
  out << "function,algorithm," << name << "_raw," << name << "_clipped\n";
  for (const auto& [fid, row] : values) {
    for (const auto& [alg, v] : row) {
      out << fid << "," << alg << ",";
      if (v)
        out << format_double(*v) << "," << format_double(std::min(*v, 3.0));
      else
        out << "absent,3";
      out << "\n";
    }
  }
  return out.str();
}

std::string pair_matrix_csv(const PairMatrix& m, const TargetGrid& grid) {
  std::ostringstream out;
  out << "A1,A2,best_ert,log10_tau,speedup_raw,speedup_capped\n";
  for (const auto& a1 : m.algorithms) {
    for (const auto& a2 : m.algorithms) {
      auto it = m.cells.find({a1, a2});
      out << a1 << "," << a2 << ",";
      if (it != m.cells.end() && it->second.best_ert) {
        const auto& c = it->second;
        out << format_double(*c.best_ert) << ","
            << log10_tenths(grid, *c.best_tau) << ","
            << format_double(*c.speedup) << ","
            << format_double(std::min(*c.speedup, 2.0));
      } else {
        out << "inf,n/a,n/a,n/a";
      }
      out << "\n";
    }
  }
  return out.str();
}

std::string ert_curves_csv(const std::vector<ErtTable>& tables,
                           const TargetGrid& grid) {
  std::ostringstream out;
  out << "algorithm,index,log10_target,ert\n";
  for (const auto& t : tables) {
    for (int i = 0; i < grid.size(); ++i) {
      const ErtValue& v = t.at(i);
      out << t.algorithm_id << "," << i << "," << log10_tenths(grid, i) << ","
          << (v.finite ? format_double(v.ert) : "inf") << "\n";
    }
  }
  return out.str();
}

std::string switch_markers_csv(const std::vector<SwitchMarker>& markers,
                               const TargetGrid& grid) {
  std::ostringstream out;
  out << "A1,A2,log10_tau,composed_ert\n";
  for (const auto& mk : markers)
    out << mk.a1 << "," << mk.a2 << "," << log10_tenths(grid, mk.tau_index)
        << "," << format_double(mk.composed_ert) << "\n";
  return out.str();
}

std::string heatmap_svg(const std::map<ProblemKey, double>& values,
                        const std::string& title) {
  std::set<int> funcs, dims;
  double vmax = 1.0;
  for (const auto& [key, v] : values) {
    funcs.insert(key.function_id);
    dims.insert(key.dimension);
    vmax = std::max(vmax, v);
  }
  const int cell = 24;
  const int left = 60, top = 40;
  const int width = left + cell * static_cast<int>(funcs.size()) + 20;
  const int height = top + cell * static_cast<int>(dims.size()) + 20;

  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width
      << "\" height=\"" << height << "\">\n";
  out << "<text x=\"" << left << "\" y=\"20\" font-size=\"14\">" << title
      << "</text>\n";
  int col = 0;
  for (int f : funcs) {
    out << "<text x=\"" << left + col * cell + 4 << "\" y=\"" << top - 6
        << "\" font-size=\"9\">" << f << "</text>\n";
    ++col;
  }
  int row = 0;
  for (int d : dims) {
    out << "<text x=\"8\" y=\"" << top + row * cell + 16
        << "\" font-size=\"10\">" << d << "D</text>\n";
    col = 0;
    for (int f : funcs) {
      auto it = values.find(ProblemKey{f, d});
      std::string fill = "#dddddd";
      if (it != values.end()) {
        // log scale from white (1.0) to dark red (vmax)
        double t = vmax > 1.0 ? std::log(it->second) / std::log(vmax) : 0.0;
        t = std::clamp(t, 0.0, 1.0);
        int shade = static_cast<int>(255 - t * 200);
        char color[8];
        std::snprintf(color, sizeof(color), "#ff%02x%02x", shade, shade);
        fill = color;
      }
      out << "<rect x=\"" << left + col * cell << "\" y=\"" << top + row * cell
          << "\" width=\"" << cell - 1 << "\" height=\"" << cell - 1
          << "\" fill=\"" << fill << "\"/>\n";
      ++col;
    }
    ++row;
  }
  out << "</svg>\n";
  return out.str();
}

std::string ert_curves_svg(const std::vector<ErtTable>& tables,
                           const std::vector<SwitchMarker>& markers,
                           const TargetGrid& grid) {
  const int width = 640, height = 420;
  const int left = 60, right = 20, top = 20, bottom = 40;

  double ymax = 1.0;
  for (const auto& t : tables)
    for (int i = 0; i < grid.size(); ++i)
      if (t.at(i).finite) ymax = std::max(ymax, t.at(i).ert);
  const double log_ymax = std::log10(ymax) + 0.1;

  auto x_of = [&](int i) {
    return left + (width - left - right) * static_cast<double>(i) /
                      std::max(1, grid.size() - 1);
  };
  auto y_of = [&](double ert) {
    const double ly = std::log10(std::max(ert, 1.0));
    return top + (height - top - bottom) * (1.0 - ly / log_ymax);
  };

  static const char* palette[] = {"#1f77b4", "#ff7f0e", "#2ca02c", "#d62728",
                                  "#9467bd", "#8c564b", "#e377c2", "#7f7f7f"};

  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width
      << "\" height=\"" << height << "\">\n";
  out << "<line x1=\"" << left << "\" y1=\"" << height - bottom << "\" x2=\""
      << width - right << "\" y2=\"" << height - bottom
      << "\" stroke=\"black\"/>\n";
  out << "<line x1=\"" << left << "\" y1=\"" << top << "\" x2=\"" << left
      << "\" y2=\"" << height - bottom << "\" stroke=\"black\"/>\n";

  int ci = 0;
  for (const auto& t : tables) {
    const char* color = palette[ci % 8];
    std::ostringstream path;
    bool pen_down = false;
    for (int i = 0; i < grid.size(); ++i) {
      if (!t.at(i).finite) {
        pen_down = false;
        continue;
      }
      path << (pen_down ? " L" : " M") << x_of(i) << " " << y_of(t.at(i).ert);
      pen_down = true;
    }
    out << "<path d=\"" << path.str() << "\" fill=\"none\" stroke=\"" << color
        << "\"/>\n";
    out << "<text x=\"" << width - right - 150 << "\" y=\"" << top + 14 * (ci + 1)
        << "\" font-size=\"10\" fill=\"" << color << "\">" << t.algorithm_id
        << "</text>\n";
    ++ci;
  }
  for (const auto& mk : markers)
    out << "<circle cx=\"" << x_of(mk.tau_index) << "\" cy=\""
        << y_of(mk.composed_ert) << "\" r=\"4\" fill=\"black\"/>\n";
  out << "<text x=\"" << left << "\" y=\"" << height - 10
      << "\" font-size=\"10\">target index (easy to hard)</text>\n";
  out << "</svg>\n";
  return out.str();
}

}  // namespace dynas

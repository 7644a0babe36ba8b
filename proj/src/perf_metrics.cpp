#include "dynas/perf_metrics.hpp"

#include <stdexcept>

namespace dynas {

HittingTime hitting_time(const RunTrace& trace, const TargetGrid& grid, int i) {
  const double target = grid.value(i);
  for (const auto& p : trace.points())
    if (p.best_precision <= target) return HittingTime::at(p.evals);
  return HittingTime::unhit(trace.budget());
}

std::vector<HittingTime> hitting_times(const RunTrace& trace,
                                       const TargetGrid& grid) {
  // Targets shrink with the index and precision shrinks along the trace, so a
  // single forward pointer suffices.
  std::vector<HittingTime> out;
  out.reserve(static_cast<size_t>(grid.size()));
  const auto& pts = trace.points();
  size_t p = 0;
  for (int i = 0; i < grid.size(); ++i) {
    const double target = grid.value(i);
    while (p < pts.size() && pts[p].best_precision > target) ++p;
    if (p < pts.size())
      out.push_back(HittingTime::at(pts[p].evals));
    else
      out.push_back(HittingTime::unhit(trace.budget()));
  }
  return out;
}

ErtValue ert(const RunSet& runs, const TargetGrid& grid, int i) {
  if (runs.runs.empty()) throw std::domain_error("ert: empty run set");
  double numerator = 0.0;
  int successes = 0;
  for (const auto& run : runs.runs) {
    const HittingTime ht = hitting_time(run, grid, i);
    if (ht.hit) {
      numerator += static_cast<double>(ht.evals);
      ++successes;
    } else {
      numerator += static_cast<double>(ht.budget);
    }
  }
  const int total = static_cast<int>(runs.runs.size());
  if (successes == 0) return ErtValue::never_hit(total);
  return ErtValue::make_finite(numerator / successes, successes, total);
}

ErtTable ert_table(const RunSet& runs, const TargetGrid& grid) {
  if (runs.runs.empty()) throw std::domain_error("ert_table: empty run set");
  const int n = grid.size();
  std::vector<double> numerator(static_cast<size_t>(n), 0.0);
  std::vector<int> successes(static_cast<size_t>(n), 0);
  for (const auto& run : runs.runs) {
    const auto hts = hitting_times(run, grid);
    for (int i = 0; i < n; ++i) {
      const auto& ht = hts[static_cast<size_t>(i)];
      if (ht.hit) {
        numerator[static_cast<size_t>(i)] += static_cast<double>(ht.evals);
        ++successes[static_cast<size_t>(i)];
      } else {
        numerator[static_cast<size_t>(i)] += static_cast<double>(ht.budget);
      }
    }
  }
  ErtTable table;
  table.algorithm_id = runs.algorithm_id;
  table.problem = runs.problem;
  table.values.reserve(static_cast<size_t>(n));
  const int total = static_cast<int>(runs.runs.size());
  for (int i = 0; i < n; ++i) {
    const int s = successes[static_cast<size_t>(i)];
    if (s == 0)
      table.values.push_back(ErtValue::never_hit(total));
    else
      table.values.push_back(ErtValue::make_finite(
          numerator[static_cast<size_t>(i)] / s, s, total));
  }
  return table;
}

bool is_admissible(const RunSet& runs, const TargetGrid& grid, int min_runs) {
  if (static_cast<int>(runs.runs.size()) < min_runs) return false;
  const int last = grid.final_index();
  for (const auto& run : runs.runs)
    if (hitting_time(run, grid, last).hit) return true;
  return false;
}

std::map<ProblemKey, int> admissible_counts(const DatasetIndex& index,
                                            const TargetGrid& grid,
                                            int min_runs) {
  std::map<ProblemKey, int> counts;
  for (const auto& [key, runs] : index.entries) {
    counts.try_emplace(key.second, 0);
    if (is_admissible(runs, grid, min_runs)) ++counts[key.second];
  }
  return counts;
}

std::map<ProblemKey, std::vector<ErtTable>> admissible_tables(
    const DatasetIndex& index, const TargetGrid& grid, int min_runs) {
  std::map<ProblemKey, std::vector<ErtTable>> out;
  // entries are keyed (algorithm, problem) in sorted order, so each problem's
  // table list comes out sorted by algorithm id.
  for (const auto& [key, runs] : index.entries)
    if (is_admissible(runs, grid, min_runs))
      out[key.second].push_back(ert_table(runs, grid));
  return out;
}

}  // namespace dynas

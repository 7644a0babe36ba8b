#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "dynas/dynas_engine.hpp"

namespace dynas {

/// Per-algorithm switch-contribution ratios: i1 measures the algorithm as the
/// starting half of a switch, i2 as the finishing half. Both are >= 1; absent
/// when no feasible triple uses the algorithm in that role.
struct ContributionTable {
  ProblemKey problem;
  std::map<std::string, std::optional<double>> i1;
  std::map<std::string, std::optional<double>> i2;
};

/// Best switch per ordered algorithm pair, with speedup against the static
/// best. Raw values only; display capping happens at export time.
struct PairMatrix {
  ProblemKey problem;
  struct Cell {
    std::optional<double> best_ert;   // min over tau of the composed ERT
    std::optional<int> best_tau;      // argmin tau (largest on ties)
    std::optional<double> speedup;    // vbs_static.ert / best_ert
  };
  std::vector<std::string> algorithms;           // sorted ids
  std::map<std::pair<std::string, std::string>, Cell> cells;
};

/// Switch point worth marking on an ERT curve: an ordered pair a1 != a2 whose
/// best switch strictly improves on both static algorithms.
struct SwitchMarker {
  std::string a1;
  std::string a2;
  int tau_index = 0;
  double composed_ert = 0.0;
};

/// Ratio of the best composed ERT starting with `algorithm` to the global
/// best over all triples. Throws std::domain_error when the algorithm is not
/// in the portfolio.
std::optional<double> i1(const std::string& algorithm,
                         const std::vector<ErtTable>& tables,
                         const TargetGrid& grid);

/// Same with `algorithm` fixed as the finishing half.
std::optional<double> i2(const std::string& algorithm,
                         const std::vector<ErtTable>& tables,
                         const TargetGrid& grid);

ContributionTable contribution_table(const ProblemKey& problem,
                                     const std::vector<ErtTable>& tables,
                                     const TargetGrid& grid);

/// Improvement values per (function -> algorithm) for one metric; absent
/// entries mean the algorithm had no feasible triple in that role.
using MetricGrid = std::map<int, std::map<std::string, std::optional<double>>>;

/// Portfolio selection for one metric: per-function winners united with the
/// algorithms of best clipped average (absent and >3 clip to 3), sized to k.
/// Returns the full portfolio when k exceeds it.
std::vector<std::string> select_subset(const MetricGrid& values, int k);

PairMatrix pair_matrix(const ProblemKey& problem,
                       const std::vector<ErtTable>& tables,
                       const TargetGrid& grid);

std::vector<SwitchMarker> switch_markers(const std::vector<ErtTable>& tables,
                                         const TargetGrid& grid);

}  // namespace dynas

#include "dynas/contribution.hpp"

#include <algorithm>
#include <limits>
#include <set>
#include <stdexcept>
#include <tuple>

namespace dynas {
namespace {

const ErtTable* find_table(const std::vector<ErtTable>& tables,
                           const std::string& algorithm) {
  for (const auto& t : tables)
    if (t.algorithm_id == algorithm) return &t;
  return nullptr;
}

// Min over tau of composed_ert(a1, a2, tau); largest tau on ties.
std::optional<std::pair<double, int>> best_pair_switch(const ErtTable& a1,
                                                       const ErtTable& a2,
                                                       const TargetGrid& grid) {
  const int final_index = grid.final_index();
  std::optional<std::pair<double, int>> best;
  for (int tau = final_index; tau >= 0; --tau) {
    auto v = composed_ert(a1, a2, tau, final_index);
    if (!v) continue;
    if (!best || *v < best->first) best = {*v, tau};
  }
  return best;
}

std::optional<double> best_with_role(const std::string& algorithm,
                                     const std::vector<ErtTable>& tables,
                                     const TargetGrid& grid, bool as_starter) {
  const ErtTable* fixed = find_table(tables, algorithm);
  if (!fixed)
    throw std::domain_error("contribution: algorithm not in portfolio: " +
                            algorithm);
  std::optional<double> best;
  for (const auto& other : tables) {
    auto b = as_starter ? best_pair_switch(*fixed, other, grid)
                        : best_pair_switch(other, *fixed, grid);
    if (b && (!best || b->first < *best)) best = b->first;
  }
  return best;
}

}  // namespace

std::optional<double> i1(const std::string& algorithm,
                         const std::vector<ErtTable>& tables,
                         const TargetGrid& grid) {
  auto numer = best_with_role(algorithm, tables, grid, /*as_starter=*/true);
  if (!numer) return std::nullopt;
  const double global = vbs_dyn(tables, grid).composed_ert;
  return *numer / global;
}

std::optional<double> i2(const std::string& algorithm,
                         const std::vector<ErtTable>& tables,
                         const TargetGrid& grid) {
  auto numer = best_with_role(algorithm, tables, grid, /*as_starter=*/false);
  if (!numer) return std::nullopt;
  const double global = vbs_dyn(tables, grid).composed_ert;
  return *numer / global;
}

ContributionTable contribution_table(const ProblemKey& problem,
                                     const std::vector<ErtTable>& tables,
                                     const TargetGrid& grid) {
  ContributionTable out;
  out.problem = problem;
  const double global = vbs_dyn(tables, grid).composed_ert;
  for (const auto& t : tables) {
    auto n1 = best_with_role(t.algorithm_id, tables, grid, true);
    auto n2 = best_with_role(t.algorithm_id, tables, grid, false);
    out.i1[t.algorithm_id] =
        n1 ? std::optional<double>(*n1 / global) : std::nullopt;
    out.i2[t.algorithm_id] =
        n2 ? std::optional<double>(*n2 / global) : std::nullopt;
  }
  return out;
}

std::vector<std::string> select_subset(const MetricGrid& values, int k) {
  if (k < 1) throw std::invalid_argument("select_subset: k must be >= 1");

  std::set<std::string> all_algorithms;
  for (const auto& [fid, row] : values)
    for (const auto& [alg, v] : row) all_algorithms.insert(alg);

  // Per-function winners: strict minimum, lexicographic tie-break.
  std::set<std::string> winners;
  for (const auto& [fid, row] : values) {
    std::string best_alg;
    double best = std::numeric_limits<double>::infinity();
    for (const auto& [alg, v] : row) {
      if (!v) continue;
      if (*v < best) {  // map order makes ties lexicographic
        best = *v;
        best_alg = alg;
      }
    }
    if (!best_alg.empty()) winners.insert(best_alg);
  }

  // Clipped averages: absent and >3 count as 3.
  std::vector<std::pair<double, std::string>> by_average;
  for (const auto& alg : all_algorithms) {
    double sum = 0.0;
    for (const auto& [fid, row] : values) {
      auto it = row.find(alg);
      double v = 3.0;
      if (it != row.end() && it->second) v = std::min(*it->second, 3.0);
      sum += v;
    }
    by_average.emplace_back(sum / static_cast<double>(values.size()), alg);
  }
  std::sort(by_average.begin(), by_average.end());

  if (k >= static_cast<int>(all_algorithms.size()))
    return {all_algorithms.begin(), all_algorithms.end()};

  // Winners first in average order, then fill with the best averages.
  std::vector<std::string> subset;
  for (const auto& [avg, alg] : by_average)
    if (winners.count(alg) && static_cast<int>(subset.size()) < k)
      subset.push_back(alg);
  for (const auto& [avg, alg] : by_average) {
    if (static_cast<int>(subset.size()) >= k) break;
    if (std::find(subset.begin(), subset.end(), alg) == subset.end())
      subset.push_back(alg);
  }
  std::sort(subset.begin(), subset.end());
  return subset;
}

PairMatrix pair_matrix(const ProblemKey& problem,
                       const std::vector<ErtTable>& tables,
                       const TargetGrid& grid) {
  PairMatrix m;
  m.problem = problem;
  const double static_best = vbs_static(tables, grid.final_index()).ert;
  for (const auto& t : tables) m.algorithms.push_back(t.algorithm_id);
  std::sort(m.algorithms.begin(), m.algorithms.end());

  for (const auto& t1 : tables) {
    for (const auto& t2 : tables) {
      PairMatrix::Cell cell;
      if (auto b = best_pair_switch(t1, t2, grid)) {
        cell.best_ert = b->first;
        cell.best_tau = b->second;
        cell.speedup = static_best / b->first;
      }
      m.cells[{t1.algorithm_id, t2.algorithm_id}] = cell;
    }
  }
  return m;
}

std::vector<SwitchMarker> switch_markers(const std::vector<ErtTable>& tables,
                                         const TargetGrid& grid) {
  const int final_index = grid.final_index();
  auto static_ert = [&](const ErtTable& t) {
    const ErtValue& v = t.at(final_index);
    return v.finite ? v.ert : std::numeric_limits<double>::infinity();
  };

  std::vector<SwitchMarker> out;
  for (const auto& t1 : tables) {
    for (const auto& t2 : tables) {
      if (t1.algorithm_id == t2.algorithm_id) continue;
      auto b = best_pair_switch(t1, t2, grid);
      if (!b) continue;
      if (b->first < static_ert(t1) && b->first < static_ert(t2))
        out.push_back({t1.algorithm_id, t2.algorithm_id, b->second, b->first});
    }
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return std::tie(a.a1, a.a2) < std::tie(b.a1, b.a2);
  });
  return out;
}

}  // namespace dynas

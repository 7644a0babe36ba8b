#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "dynas/ingest.hpp"

namespace dynas {

/// Hitting time of one run at one target: evaluations to first reach it, or
/// the run's budget when it never did.
struct HittingTime {
  bool hit = false;
  std::int64_t evals = 0;   // valid when hit
  std::int64_t budget = 0;  // valid when !hit

  static HittingTime at(std::int64_t evals) { return {true, evals, 0}; }
  static HittingTime unhit(std::int64_t budget) { return {false, 0, budget}; }

  friend bool operator==(const HittingTime&, const HittingTime&) = default;
};

/// ERT of one algorithm on one problem at every grid target.
struct ErtTable {
  std::string algorithm_id;
  ProblemKey problem;
  std::vector<ErtValue> values;  // one per grid index

  const ErtValue& at(int i) const { return values.at(static_cast<size_t>(i)); }
};

/// Smallest recorded eval count whose best precision is <= target i.
HittingTime hitting_time(const RunTrace& trace, const TargetGrid& grid, int i);

/// Hitting times of one run at all grid targets, in one pass over the trace.
std::vector<HittingTime> hitting_times(const RunTrace& trace,
                                       const TargetGrid& grid);

/// ERT at target i: sum of capped hitting times over all runs divided by the
/// number of runs that hit. Runs are pooled across instances.
ErtValue ert(const RunSet& runs, const TargetGrid& grid, int i);

/// ERT at every grid target.
ErtTable ert_table(const RunSet& runs, const TargetGrid& grid);

/// Data filter: at least `min_runs` runs, at least one reaching the final
/// target.
bool is_admissible(const RunSet& runs, const TargetGrid& grid,
                   int min_runs = 15);

/// Number of admissible algorithms per problem.
std::map<ProblemKey, int> admissible_counts(const DatasetIndex& index,
                                            const TargetGrid& grid,
                                            int min_runs = 15);

/// ERT tables of the admissible algorithms, grouped per problem and sorted by
/// algorithm id.
std::map<ProblemKey, std::vector<ErtTable>> admissible_tables(
    const DatasetIndex& index, const TargetGrid& grid, int min_runs = 15);

}  // namespace dynas

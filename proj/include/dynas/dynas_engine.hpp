#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "dynas/perf_metrics.hpp"

namespace dynas {

/// A single-switch policy: run a1 until target tau_index, then a2, with the
/// composed ERT of the combination.
struct SwitchTriple {
  std::string a1;
  std::string a2;
  int tau_index = 0;
  double composed_ert = 0.0;

  friend bool operator==(const SwitchTriple&, const SwitchTriple&) = default;
};

/// Best static algorithm at the final target.
struct StaticBest {
  std::string algorithm_id;
  double ert = 0.0;
};

struct VbsReport {
  ProblemKey problem;
  StaticBest vbs_static;
  SwitchTriple vbs_dyn;
  double speedup = 1.0;  // vbs_static.ert / vbs_dyn.composed_ert
};

/// ERT of switching from a1 to a2 at target tau: ERT(a1,tau) + ERT(a2,final)
/// - ERT(a2,tau). Empty when either ERT(a1,tau) or ERT(a2,final) is never-hit.
/// The sum is ordered so that a self-switch reproduces ERT(a,final) exactly.
std::optional<double> composed_ert(const ErtTable& a1, const ErtTable& a2,
                                   int tau_index, int final_index);

/// Argmin of final-target ERT; ties to the lexicographically smallest id.
/// Throws std::domain_error when no table has a finite final ERT.
StaticBest vbs_static(const std::vector<ErtTable>& tables, int final_index);

struct DynScan {
  SwitchTriple best;
  std::int64_t excluded_triples = 0;  // combinations with undefined ERT
};

/// Exhaustive argmin over all (a1, a2, tau) including a1 == a2. Ties break by
/// smaller ERT, then larger tau index, then lexicographic a1, then a2, so the
/// result is invariant under input permutation.
DynScan vbs_dyn_scan(const std::vector<ErtTable>& tables,
                     const TargetGrid& grid);
SwitchTriple vbs_dyn(const std::vector<ErtTable>& tables,
                     const TargetGrid& grid);

VbsReport vbs_report(const ProblemKey& problem,
                     const std::vector<ErtTable>& tables,
                     const TargetGrid& grid);

struct SbsResult {
  std::string algorithm_id;
  // Rank sum per candidate (algorithms admissible on every function).
  std::map<std::string, double> rank_sums;
};

/// Single best solver for one dimension: among algorithms with a finite final
/// ERT on every function, the smallest sum of per-function ERT ranks
/// (ties share the average rank; final ties go lexicographic).
SbsResult sbs(const std::map<int, std::vector<ErtTable>>& tables_per_function,
              int final_index);

/// Per problem, ERT(vbs_static) / ERT(vbs_dyn). Problems with no admissible
/// solver are absent from the result.
std::map<ProblemKey, double> speedup_matrix(
    const std::map<ProblemKey, std::vector<ErtTable>>& tables_per_problem,
    const TargetGrid& grid);

}  // namespace dynas

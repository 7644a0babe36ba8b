#include "dynas/dynas_engine.hpp"

#include <algorithm>
#include <stdexcept>

namespace dynas {

std::optional<double> composed_ert(const ErtTable& a1, const ErtTable& a2,
                                   int tau_index, int final_index) {
  if (tau_index > final_index)
    throw std::out_of_range("composed_ert: tau_index beyond final target");
  const ErtValue& e1_tau = a1.at(tau_index);
  const ErtValue& e2_final = a2.at(final_index);
  if (!e1_tau.finite || !e2_final.finite) return std::nullopt;
  const ErtValue& e2_tau = a2.at(tau_index);
  if (!e2_tau.finite) return std::nullopt;  // cannot happen with monotone ERT
  // Grouped so the a1 == a2 case cancels exactly.
  return e2_final.ert + (e1_tau.ert - e2_tau.ert);
}

StaticBest vbs_static(const std::vector<ErtTable>& tables, int final_index) {
  const ErtTable* best = nullptr;
  for (const auto& t : tables) {
    const ErtValue& v = t.at(final_index);
    if (!v.finite) continue;
    if (!best || v.ert < best->at(final_index).ert ||
        (v.ert == best->at(final_index).ert &&
         t.algorithm_id < best->algorithm_id))
      best = &t;
  }
  if (!best)
    throw std::domain_error("vbs_static: no algorithm with finite final ERT");
  return {best->algorithm_id, best->at(final_index).ert};
}

namespace {

// Total order on candidate triples: smaller ERT, later switch point,
// lexicographic a1, lexicographic a2.
bool triple_better(const SwitchTriple& a, const SwitchTriple& b) {
  if (a.composed_ert != b.composed_ert) return a.composed_ert < b.composed_ert;
  if (a.tau_index != b.tau_index) return a.tau_index > b.tau_index;
  if (a.a1 != b.a1) return a.a1 < b.a1;
  return a.a2 < b.a2;
}

}  // namespace

DynScan vbs_dyn_scan(const std::vector<ErtTable>& tables,
                     const TargetGrid& grid) {
  const int final_index = grid.final_index();
  DynScan scan;
  bool found = false;
  for (const auto& t1 : tables) {
    for (const auto& t2 : tables) {
      for (int tau = 0; tau <= final_index; ++tau) {
        auto value = composed_ert(t1, t2, tau, final_index);
        if (!value) {
          ++scan.excluded_triples;
          continue;
        }
        SwitchTriple cand{t1.algorithm_id, t2.algorithm_id, tau, *value};
        if (!found || triple_better(cand, scan.best)) {
          scan.best = std::move(cand);
          found = true;
        }
      }
    }
  }
  if (!found) throw std::domain_error("vbs_dyn: no feasible switch triple");
  return scan;
}

SwitchTriple vbs_dyn(const std::vector<ErtTable>& tables,
                     const TargetGrid& grid) {
  return vbs_dyn_scan(tables, grid).best;
}

VbsReport vbs_report(const ProblemKey& problem,
                     const std::vector<ErtTable>& tables,
                     const TargetGrid& grid) {
  VbsReport r;
  r.problem = problem;
  r.vbs_static = vbs_static(tables, grid.final_index());
  r.vbs_dyn = vbs_dyn(tables, grid);
  r.speedup = r.vbs_static.ert / r.vbs_dyn.composed_ert;
  return r;
}

SbsResult sbs(const std::map<int, std::vector<ErtTable>>& tables_per_function,
              int final_index) {
  if (tables_per_function.empty())
    throw std::domain_error("sbs: no functions given");

  // Candidates: finite final ERT on every function.
  std::map<std::string, int> presence;
  for (const auto& [fid, tables] : tables_per_function)
    for (const auto& t : tables)
      if (t.at(final_index).finite) ++presence[t.algorithm_id];

  const int n_functions = static_cast<int>(tables_per_function.size());
  std::map<std::string, double> rank_sums;
  for (const auto& [alg, count] : presence)
    if (count == n_functions) rank_sums[alg] = 0.0;
  if (rank_sums.empty())
    throw std::domain_error(
        "sbs: no algorithm hit the final target on all functions");

  for (const auto& [fid, tables] : tables_per_function) {
    std::vector<std::pair<double, std::string>> erts;
    for (const auto& t : tables)
      if (rank_sums.count(t.algorithm_id))
        erts.emplace_back(t.at(final_index).ert, t.algorithm_id);
    std::sort(erts.begin(), erts.end());
    // Average rank across ties, 1-based.
    size_t i = 0;
    while (i < erts.size()) {
      size_t j = i;
      while (j < erts.size() && erts[j].first == erts[i].first) ++j;
      const double avg_rank = (static_cast<double>(i + 1 + j)) / 2.0;
      for (size_t k = i; k < j; ++k) rank_sums[erts[k].second] += avg_rank;
      i = j;
    }
  }

  SbsResult out;
  out.rank_sums = rank_sums;
  double best = 0.0;
  for (const auto& [alg, sum] : rank_sums) {
    if (out.algorithm_id.empty() || sum < best) {
      out.algorithm_id = alg;
      best = sum;
    }
  }
  return out;
}

std::map<ProblemKey, double> speedup_matrix(
    const std::map<ProblemKey, std::vector<ErtTable>>& tables_per_problem,
    const TargetGrid& grid) {
  std::map<ProblemKey, double> out;
  for (const auto& [problem, tables] : tables_per_problem) {
    try {
      out[problem] = vbs_report(problem, tables, grid).speedup;
    } catch (const std::domain_error&) {
      // no admissible solver: absent, not zero
    }
  }
  return out;
}

}  // namespace dynas

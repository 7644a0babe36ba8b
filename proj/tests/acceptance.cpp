// Acceptance suite: one pass/fail line per criterion. Criteria 1-8 run on
// synthetic data and bundled fixtures; criteria 9-13 need a local copy of the
// BBOB archives (set DYNAS_BBOB_DATA to the directory) and are skipped
// otherwise.

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <iostream>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "dynas/contribution.hpp"
#include "dynas/dynas_engine.hpp"
#include "dynas/ingest.hpp"
#include "dynas/perf_metrics.hpp"
#include "dynas/report.hpp"
#include "dynas/synth.hpp"
#include "test_util.hpp"

using namespace dynas;
using dynas::testutil::random_spec;
using dynas::testutil::tables_from_index;

namespace {

int g_failures = 0;

void report(int criterion, const std::string& name, bool ok,
            const std::string& detail = "") {
  std::cout << (ok ? "PASS" : "FAIL") << " criterion " << criterion << ": "
            << name;
  if (!detail.empty()) std::cout << " (" << detail << ")";
  std::cout << "\n";
  if (!ok) ++g_failures;
}

void skip(int criterion, const std::string& name, const std::string& why) {
  std::cout << "SKIP criterion " << criterion << ": " << name << " (" << why
            << ")\n";
}

bool rel_close(double a, double b, double tol) {
  return std::abs(a - b) <= tol * std::max(std::abs(a), std::abs(b));
}

// ---- criteria 1-4: ERT oracle equivalence, monotonicity, self-switch,
//      dominance, over >= 1000 seeded synthetic RunSets ----

void criteria_1_to_4(const TargetGrid& grid, const std::string& fixtures) {
  bool oracle_ok = true, mono_ok = true, self_ok = true, dom_ok = true;
  int run_sets = 0;
  std::string detail1, detail2, detail3, detail4;

  for (std::uint64_t seed = 1; seed <= 260 && oracle_ok; ++seed) {
    auto index = generate(random_spec(seed, 4, 12, grid), grid);
    std::vector<ErtTable> tables;
    for (const auto& [key, rs] : index.entries) {
      ++run_sets;
      auto table = ert_table(rs, grid);
      for (int i = 0; i < grid.size(); ++i) {
        const ErtValue oracle = oracle_ert(rs, grid, i);
        const ErtValue& mine = table.at(i);
        if (oracle.finite != mine.finite ||
            (oracle.finite && !rel_close(oracle.ert, mine.ert, 1e-12)) ||
            oracle.successes != mine.successes) {
          oracle_ok = false;
          detail1 = "mismatch at seed " + std::to_string(seed) + " index " +
                    std::to_string(i);
          break;
        }
        if (i > 0 && mine.finite && table.at(i - 1).finite &&
            table.at(i - 1).ert > mine.ert) {
          mono_ok = false;
          detail2 = "violation at seed " + std::to_string(seed);
        }
      }
      tables.push_back(std::move(table));
    }

    for (const auto& t : tables) {
      if (!t.at(grid.final_index()).finite) continue;
      for (int tau = 0; tau <= grid.final_index(); ++tau) {
        if (!t.at(tau).finite) continue;
        auto v = composed_ert(t, t, tau, grid.final_index());
        if (!v || *v != t.at(grid.final_index()).ert) {
          self_ok = false;
          detail3 = "seed " + std::to_string(seed) + " tau " +
                    std::to_string(tau);
        }
      }
    }

    try {
      StaticBest stat = vbs_static(tables, grid.final_index());
      SwitchTriple dyn = vbs_dyn(tables, grid);
      if (dyn.composed_ert > stat.ert || stat.ert / dyn.composed_ert < 1.0) {
        dom_ok = false;
        detail4 = "seed " + std::to_string(seed);
      }
    } catch (const std::domain_error&) {
      // no finite final ERT in this portfolio; dominance is vacuous
    }
  }

  // fixture RunSets join the monotonicity check
  try {
    auto fixture_index = build_index({fixtures + "/coco"}).index;
    for (const auto& [key, rs] : fixture_index.entries) {
      auto table = ert_table(rs, grid);
      for (int i = 1; i < grid.size(); ++i)
        if (table.at(i - 1).finite && table.at(i).finite &&
            table.at(i - 1).ert > table.at(i).ert) {
          mono_ok = false;
          detail2 = "fixture violation";
        }
    }
  } catch (const std::exception& e) {
    mono_ok = false;
    detail2 = e.what();
  }

  report(1, "ERT oracle equivalence on " + std::to_string(run_sets) +
             " synthetic run sets", oracle_ok, detail1);
  report(2, "ERT monotonicity in target index", mono_ok, detail2);
  report(3, "self-switch identity composed(A,A,tau) == ERT(A,final)", self_ok,
         detail3);
  report(4, "VBS dominance: dynamic <= static, speedup >= 1", dom_ok, detail4);
}

// ---- criterion 5: enumeration oracle equality on >= 1000 portfolios ----

void criterion_5(const TargetGrid& grid) {
  bool ok = true;
  std::string detail;
  int portfolios = 0;

  for (std::uint64_t seed = 1; seed <= 1100 && ok; ++seed) {
    const int n_alg = 2 + static_cast<int>(seed % 7);  // 2..8
    auto index = generate(random_spec(seed * 31 + 7, n_alg, 8, grid), grid);
    auto tables = tables_from_index(index, grid);

    SwitchTriple engine_best;
    try {
      engine_best = vbs_dyn(tables, grid);
    } catch (const std::domain_error&) {
      continue;  // infeasible portfolio, oracle would throw identically
    }
    ++portfolios;

    if (!(engine_best == oracle_vbs_dyn(tables, grid))) {
      ok = false;
      detail = "vbs_dyn mismatch at seed " + std::to_string(seed);
      break;
    }

    ContributionTable c = contribution_table({1, 5}, tables, grid);
    for (const auto& t : tables) {
      if (c.i1.at(t.algorithm_id) != oracle_i1(t.algorithm_id, tables, grid) ||
          c.i2.at(t.algorithm_id) != oracle_i2(t.algorithm_id, tables, grid)) {
        ok = false;
        detail = "i1/i2 mismatch at seed " + std::to_string(seed);
        break;
      }
    }

    auto m = pair_matrix({1, 5}, tables, grid);
    for (const auto& t1 : tables) {
      for (const auto& t2 : tables) {
        auto oracle = oracle_best_pair(t1, t2, grid);
        const auto& cell = m.cells.at({t1.algorithm_id, t2.algorithm_id});
        const bool same =
            oracle.has_value() == cell.best_ert.has_value() &&
            (!oracle || (oracle->first == *cell.best_ert &&
                         oracle->second == *cell.best_tau));
        if (!same) {
          ok = false;
          detail = "pair_matrix mismatch at seed " + std::to_string(seed);
        }
      }
    }
  }
  report(5, "enumeration-oracle equality on " + std::to_string(portfolios) +
             " random portfolios", ok, detail);
}

// ---- criterion 6: permutation invariance ----

void criterion_6(const TargetGrid& grid) {
  bool ok = true;
  std::string detail;

  for (std::uint64_t seed = 1; seed <= 60 && ok; ++seed) {
    auto index = generate(random_spec(seed * 97, 5, 15, grid), grid);
    auto tables = tables_from_index(index, grid);

    SwitchTriple baseline;
    try {
      baseline = vbs_dyn(tables, grid);
    } catch (const std::domain_error&) {
      continue;
    }

    std::map<int, std::vector<ErtTable>> per_function{{1, tables},
                                                      {2, tables}};
    std::string sbs_baseline;
    try {
      sbs_baseline = sbs(per_function, grid.final_index()).algorithm_id;
    } catch (const std::domain_error&) {
    }

    MetricGrid metric;
    ContributionTable c = contribution_table({1, 5}, tables, grid);
    for (const auto& [alg, v] : c.i1) metric[1][alg] = v;
    auto subset_baseline = select_subset(metric, 3);

    Lcg64 rng(seed);
    for (int trial = 0; trial < 4; ++trial) {
      for (size_t i = tables.size(); i > 1; --i)
        std::swap(tables[i - 1],
                  tables[static_cast<size_t>(rng.uniform_int(0, i - 1))]);
      if (!(vbs_dyn(tables, grid) == baseline)) {
        ok = false;
        detail = "vbs_dyn at seed " + std::to_string(seed);
      }
      std::map<int, std::vector<ErtTable>> shuffled{{1, tables}, {2, tables}};
      if (!sbs_baseline.empty() &&
          sbs(shuffled, grid.final_index()).algorithm_id != sbs_baseline) {
        ok = false;
        detail = "sbs at seed " + std::to_string(seed);
      }
      if (select_subset(metric, 3) != subset_baseline) {
        ok = false;
        detail = "select_subset at seed " + std::to_string(seed);
      }
    }
  }
  report(6, "permutation invariance of vbs_dyn, sbs, select_subset", ok,
         detail);
}

// ---- criterion 7: round trips ----

void criterion_7(const TargetGrid& grid, const std::string& fixtures) {
  bool ok = true;
  std::string detail;

  for (std::uint64_t seed = 1; seed <= 25 && ok; ++seed) {
    auto index = generate(random_spec(seed * 13, 3, 10, grid), grid);
    for (const auto& [key, rs] : index.entries) {
      RunSet back = parse_canonical(export_canonical(rs));
      bool same = back.algorithm_id == rs.algorithm_id &&
                  back.problem == rs.problem &&
                  back.runs.size() == rs.runs.size();
      for (size_t r = 0; same && r < rs.runs.size(); ++r) {
        same = back.runs[r].instance_id() == rs.runs[r].instance_id() &&
               back.runs[r].budget() == rs.runs[r].budget() &&
               back.runs[r].points().size() == rs.runs[r].points().size();
        for (size_t p = 0; same && p < rs.runs[r].points().size(); ++p)
          same = back.runs[r].points()[p].evals ==
                     rs.runs[r].points()[p].evals &&
                 back.runs[r].points()[p].best_precision ==
                     rs.runs[r].points()[p].best_precision;
      }
      if (!same) {
        ok = false;
        detail = "canonical round-trip at seed " + std::to_string(seed);
      }
    }
  }

  try {
    auto index = build_index({fixtures + "/coco"}).index;
    const RunSet& d5 = index.entries.at({"algA", ProblemKey{1, 5}});
    const bool traces_ok =
        d5.runs.size() == 2 && d5.runs[0].points().size() == 3 &&
        d5.runs[0].points()[0].evals == 1 &&
        d5.runs[0].points()[0].best_precision == 5.0e+01 &&
        d5.runs[0].points()[1].evals == 10 &&
        d5.runs[0].points()[1].best_precision == 1.0 &&
        d5.runs[0].points()[2].evals == 30 &&
        d5.runs[0].points()[2].best_precision == 9.0e-09 &&
        d5.runs[1].points()[1].best_precision == 1.0 &&  // repaired minimum
        d5.runs[1].budget() == 40;
    if (!traces_ok) {
      ok = false;
      detail = "COCO fixture traces differ from the hand-specified values";
    }
  } catch (const std::exception& e) {
    ok = false;
    detail = e.what();
  }
  report(7, "canonical and COCO round-trip fidelity", ok, detail);
}

// ---- criterion 8: constructed optimum ----

void criterion_8(const TargetGrid& grid) {
  // Two deterministic algorithms crossing at index 25 [DERIVED fixture]:
  //   early: hit(i) = i+1 for i <= 25, 10000+i after    (15 runs)
  //   late:  hit(i) = 100+i everywhere
  // T(early, late, tau<=25) = (tau+1) + 150 - (100+tau) = 51; ties push the
  // switch to tau* = 25. All other triples cost >= 150.
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
  auto tables = tables_from_index(generate(spec, grid), grid);

  SwitchTriple best = vbs_dyn(tables, grid);
  const bool ok = best.a1 == "early" && best.a2 == "late" &&
                  best.tau_index == 25 && best.composed_ert == 51.0;
  report(8, "constructed-optimum switch recovered exactly", ok,
         ok ? "" : best.a1 + "->" + best.a2 + " tau=" +
                       std::to_string(best.tau_index) + " ert=" +
                       std::to_string(best.composed_ert));
}

// ---- criteria 9-13: full-data reproduction (optional tier) ----

void full_data_criteria(const TargetGrid& grid) {
  const char* env = std::getenv("DYNAS_BBOB_DATA");
  if (!env || std::string(env).empty()) {
    const std::string why = "set DYNAS_BBOB_DATA to the BBOB archive directory";
    skip(9, "Table 1 dim 5 F1 reproduction", why);
    skip(10, "F19/F24 dim 5 speedups", why);
    skip(11, "median speedup 1.49", why);
    skip(12, "admissible counts and algorithm total", why);
    skip(13, "SBS per dimension", why);
    return;
  }

  DatasetIndex index;
  try {
    index = build_index({env}).index;
  } catch (const std::exception& e) {
    report(9, "Table 1 dim 5 F1 reproduction", false, e.what());
    report(10, "F19/F24 dim 5 speedups", false, "no data");
    report(11, "median speedup 1.49", false, "no data");
    report(12, "admissible counts and algorithm total", false, "no data");
    report(13, "SBS per dimension", false, "no data");
    return;
  }
  auto per_problem = admissible_tables(index, grid);

  // 9: F1 dim 5
  {
    bool ok = false;
    std::string detail = "no admissible data for F1/5D";
    auto it = per_problem.find(ProblemKey{1, 5});
    if (it != per_problem.end()) {
      try {
        VbsReport r = vbs_report(it->first, it->second, grid);
        ok = rel_close(r.vbs_static.ert, 13.0, 0.02) &&
             rel_close(r.vbs_dyn.composed_ert, 6.6, 0.02) &&
             rel_close(r.speedup, 1.97, 0.02);
        detail = "static " + format_double(r.vbs_static.ert) + " dyn " +
                 format_double(r.vbs_dyn.composed_ert) + " speedup " +
                 format_double(r.speedup);
      } catch (const std::exception& e) {
        detail = e.what();
      }
    }
    report(9, "Table 1 dim 5 F1: static 13.0, dynamic 6.6, speedup 1.97 +-2%",
           ok, detail);
  }

  // 10: F19 and F24 dim 5 speedups
  {
    bool ok = true;
    std::string detail;
    const std::vector<std::pair<int, double>> expected{{19, 40.54},
                                                       {24, 5.44}};
    for (auto [fid, target] : expected) {
      auto it = per_problem.find(ProblemKey{fid, 5});
      if (it == per_problem.end()) {
        ok = false;
        detail += "F" + std::to_string(fid) + " missing; ";
        continue;
      }
      try {
        VbsReport r = vbs_report(it->first, it->second, grid);
        if (!rel_close(r.speedup, target, 0.05)) ok = false;
        detail += "F" + std::to_string(fid) + " " + format_double(r.speedup) +
                  "; ";
      } catch (const std::exception& e) {
        ok = false;
        detail += e.what();
      }
    }
    report(10, "F19 speedup 40.54 +-5%, F24 speedup 5.44 +-5% (dim 5)", ok,
           detail);
  }

  // 11: median speedup over all (f, d)
  {
    auto speedups = speedup_matrix(per_problem, grid);
    std::vector<double> all;
    for (const auto& [key, s] : speedups) all.push_back(s);
    bool ok = false;
    std::string detail = "no speedups computed";
    if (!all.empty()) {
      std::sort(all.begin(), all.end());
      const size_t n = all.size();
      const double median =
          n % 2 ? all[n / 2] : 0.5 * (all[n / 2 - 1] + all[n / 2]);
      ok = std::abs(median - 1.49) <= 0.05;
      detail = "median " + format_double(median) + " over " +
               std::to_string(n) + " problems";
    }
    report(11, "median speedup 1.49 +-0.05", ok, detail);
  }

  // 12: admissible counts in 4..155 (+-10%), ~182 algorithms
  {
    auto counts = admissible_counts(index, grid);
    int lo = 1 << 30, hi = 0;
    for (const auto& [key, n] : counts) {
      if (n == 0) continue;
      lo = std::min(lo, n);
      hi = std::max(hi, n);
    }
    std::set<std::string> algorithms;
    for (const auto& [key, rs] : index.entries) algorithms.insert(key.first);
    const double n_algs = static_cast<double>(algorithms.size());
    const bool ok = lo >= 3 && lo <= 5 && hi >= 140 && hi <= 171 &&
                    n_algs >= 182 * 0.9 && n_algs <= 182 * 1.1;
    report(12, "admissible counts span ~4..155, ~182 algorithms (+-10%)", ok,
           "span " + std::to_string(lo) + ".." + std::to_string(hi) + ", " +
               std::to_string(algorithms.size()) + " algorithms");
  }

  // 13: SBS per dimension
  {
    const std::map<int, std::string> expected{{2, "Nelder-Doerr"},
                                              {3, "HCMA"},
                                              {5, "BIPOP-aCMA-STEP"},
                                              {10, "HCMA"},
                                              {20, "HCMA"}};
    bool ok = true;
    std::string detail;
    for (const auto& [dim, want] : expected) {
      std::map<int, std::vector<ErtTable>> per_function;
      for (const auto& [key, tabs] : per_problem)
        if (key.dimension == dim) per_function[key.function_id] = tabs;
      if (per_function.empty()) {
        ok = false;
        detail += std::to_string(dim) + "D missing; ";
        continue;
      }
      try {
        SbsResult r = sbs(per_function, grid.final_index());
        bool dim_ok = r.algorithm_id == want;
        if (!dim_ok && r.rank_sums.count(want))
          dim_ok = rel_close(r.rank_sums.at(r.algorithm_id),
                             r.rank_sums.at(want), 0.01);
        if (!dim_ok) ok = false;
        detail += std::to_string(dim) + "D " + r.algorithm_id + "; ";
      } catch (const std::exception& e) {
        ok = false;
        detail += e.what();
      }
    }
    report(13, "SBS matches Nelder-Doerr/HCMA/BIPOP-aCMA-STEP per dimension",
           ok, detail);
  }
}

}  // namespace

int main() {
  const TargetGrid grid;
  const std::string fixtures = DYNAS_FIXTURE_DIR;

  criteria_1_to_4(grid, fixtures);
  criterion_5(grid);
  criterion_6(grid);
  criterion_7(grid, fixtures);
  criterion_8(grid);
  full_data_criteria(grid);

  if (g_failures > 0) {
    std::cout << g_failures << " criterion(s) failed\n";
    return 1;
  }
  std::cout << "all executed criteria passed\n";
  return 0;
}

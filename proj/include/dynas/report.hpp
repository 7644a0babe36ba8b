#pragma once

#include <map>
#include <string>
#include <vector>

#include "dynas/contribution.hpp"
#include "dynas/dynas_engine.hpp"
#include "dynas/ingest.hpp"
#include "dynas/perf_metrics.hpp"

namespace dynas {

/// Shortest decimal string that round-trips to the same double.
std::string format_double(double v);

/// One-decimal fixed formatting (display precision for ERT columns).
std::string format_fixed1(double v);

/// Canonical newline-delimited JSON, one line per run. Inverse of
/// parse_canonical.
std::string export_canonical(const RunSet& runs);
std::string export_canonical(const DatasetIndex& index);

std::string export_ingest_report(const std::vector<IngestReportLine>& report);

/// CSV of one ERT table: index, log10_target, ert, successes, total_runs.
std::string ert_table_csv(const ErtTable& table, const TargetGrid& grid);

/// Per-function summary rows for one dimension. Columns:
/// FID, vbs_static, ert_static, A1, A2, log10_tau, ert_dyn, speedup.
/// Functions without an admissible solver get explicit n/a markers.
std::string table1_csv(
    const std::map<ProblemKey, std::vector<ErtTable>>& tables_per_problem,
    int dimension, const TargetGrid& grid,
    const std::vector<int>& function_ids);

/// Admissible-algorithm counts per (function, dimension).
std::string counts_csv(const std::map<ProblemKey, int>& counts);

/// Final-target ERT of every admissible algorithm, per problem.
std::string ert_distribution_csv(
    const std::map<ProblemKey, std::vector<ErtTable>>& tables_per_problem,
    const TargetGrid& grid);

/// Static-over-dynamic speedup per problem.
std::string speedup_csv(const std::map<ProblemKey, double>& speedups);

/// Improvement-value grid (i1 or i2). Raw values; the clipped column applies
/// the display clip at 3.
std::string metric_grid_csv(const MetricGrid& values, const std::string& name);

/// Pair matrix rows with raw and display-capped (at 2) speedups.
std::string pair_matrix_csv(const PairMatrix& m, const TargetGrid& grid);

/// ERT-curve data: per algorithm, ERT at every target index.
std::string ert_curves_csv(const std::vector<ErtTable>& tables,
                           const TargetGrid& grid);

std::string switch_markers_csv(const std::vector<SwitchMarker>& markers,
                               const TargetGrid& grid);

/// Minimal SVG heatmap over (function, dimension) cells.
std::string heatmap_svg(const std::map<ProblemKey, double>& values,
                        const std::string& title);

/// Minimal SVG of ERT curves on log-log axes with switch markers.
std::string ert_curves_svg(const std::vector<ErtTable>& tables,
                           const std::vector<SwitchMarker>& markers,
                           const TargetGrid& grid);

}  // namespace dynas

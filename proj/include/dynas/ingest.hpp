#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "dynas/core_model.hpp"

namespace dynas {

/// Raised for unreadable or structurally unusable input files.
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// All ingested data, keyed by (algorithm, problem). Duplicate keys from
/// distinct sources are merged run-wise at build time.
struct DatasetIndex {
  using Key = std::pair<std::string, ProblemKey>;

  std::map<Key, RunSet> entries;
  std::map<Key, std::vector<std::string>> provenance;
};

/// One line of the machine-readable ingestion report.
struct IngestReportLine {
  std::string file;
  std::string status;  // "ok" | "skipped"
  std::string reason;
  int runs = 0;
};

struct IngestResult {
  DatasetIndex index;
  std::vector<IngestReportLine> report;
};

/// One header block of a COCO `.info` index file.
struct CocoInfoRecord {
  ProblemKey problem;
  std::string algorithm_id;
  std::string datafile;  // relative to the .info file's directory

  struct InstanceSummary {
    std::int64_t instance = 0;
    std::int64_t evals = 0;
    double precision = 0.0;
  };
  std::vector<InstanceSummary> instances;
};

struct CocoInfoParse {
  std::vector<CocoInfoRecord> records;
  std::vector<std::string> warnings;  // skipped blocks, one line each
};

/// Parses a COCO legacy `.info` index. Unparseable blocks become warnings;
/// zero parseable blocks is a FormatError.
CocoInfoParse parse_coco_info(const std::string& text);

/// Parses a COCO fixed-target `.dat` file: one trace per `%`-delimited run
/// segment, column 1 = evaluations, column 3 = best-so-far precision.
/// Monotonicity violations are repaired by the running minimum.
std::vector<RunTrace> parse_coco_dat(const std::string& text);

/// Parses the canonical newline-delimited JSON interchange format into a
/// single RunSet. All lines must share (algorithm, function, dimension).
RunSet parse_canonical(const std::string& text);

/// Walks the given roots, parses every `.info`/`.dat`/canonical file, and
/// merges the results deterministically (sorted by source path). Throws
/// FormatError when no usable data is found.
IngestResult build_index(const std::vector<std::string>& roots);

}  // namespace dynas

#include "dynas/ingest.hpp"

#include <algorithm>
#include <charconv>
#include <filesystem>
#include <fstream>
#include <optional>
#include <regex>
#include <set>
#include <sstream>

#include <json.hpp>

namespace fs = std::filesystem;
using nlohmann::json;

namespace dynas {
namespace {

std::vector<std::string> split_lines(const std::string& text) {
  std::vector<std::string> lines;
  std::string line;
  std::istringstream in(text);
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    lines.push_back(line);
  }
  return lines;
}

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t");
  return s.substr(b, e - b + 1);
}

std::optional<std::int64_t> parse_int(const std::string& s) {
  std::int64_t v = 0;
  auto t = trim(s);
  auto [p, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
  if (ec != std::errc() || p != t.data() + t.size()) return std::nullopt;
  return v;
}

std::optional<double> parse_double(const std::string& s) {
  auto t = trim(s);
  if (t.empty()) return std::nullopt;
  char* end = nullptr;
  double v = std::strtod(t.c_str(), &end);
  if (end != t.c_str() + t.size()) return std::nullopt;
  return v;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FormatError("cannot read file: " + path);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

bool is_canonical_file(const fs::path& p) {
  auto ext = p.extension().string();
  return ext == ".ndjson" || ext == ".jsonl";
}

}  // namespace

CocoInfoParse parse_coco_info(const std::string& text) {
  static const std::regex func_re(R"(funcId\s*=\s*(-?\d+))");
  static const std::regex dim_re(R"(DIM\s*=\s*(-?\d+))");
  static const std::regex alg_re(R"(algId\s*=\s*['"]([^'"]*)['"])");

  CocoInfoParse out;
  const auto lines = split_lines(text);

  // A block is: one header line with funcId/DIM/algId tokens, optional
  // %-comment lines, then a data line naming the .dat file plus
  // instance:evals|precision tokens.
  size_t i = 0;
  while (i < lines.size()) {
    const std::string& header = lines[i];
    if (header.find("funcId") == std::string::npos) {
      ++i;
      continue;
    }
    size_t block_start = i;
    ++i;
    while (i < lines.size() && !lines[i].empty() && lines[i][0] == '%') ++i;
    if (i >= lines.size()) {
      out.warnings.push_back("block at line " +
                             std::to_string(block_start + 1) +
                             ": missing data line");
      break;
    }
    const std::string data_line = lines[i];
    ++i;

    std::smatch m;
    CocoInfoRecord rec;
    bool ok = true;
    std::string why;
    if (std::regex_search(header, m, func_re))
      rec.problem.function_id = static_cast<int>(std::stoll(m[1]));
    else {
      ok = false;
      why = "missing funcId";
    }
    if (ok && std::regex_search(header, m, dim_re))
      rec.problem.dimension = static_cast<int>(std::stoll(m[1]));
    else if (ok) {
      ok = false;
      why = "missing or malformed DIM";
    }
    if (ok && std::regex_search(header, m, alg_re))
      rec.algorithm_id = m[1];
    else if (ok) {
      ok = false;
      why = "missing algId";
    }
    if (ok && (rec.problem.function_id < 1 || rec.problem.dimension < 1)) {
      ok = false;
      why = "non-positive funcId or DIM";
    }

    if (ok) {
      std::istringstream ds(data_line);
      std::string token;
      bool first = true;
      while (std::getline(ds, token, ',')) {
        token = trim(token);
        if (token.empty()) continue;
        if (first) {
          rec.datafile = token;
          first = false;
          continue;
        }
        auto colon = token.find(':');
        auto bar = token.find('|', colon == std::string::npos ? 0 : colon);
        if (colon == std::string::npos || bar == std::string::npos) continue;
        auto inst = parse_int(token.substr(0, colon));
        auto evals = parse_int(token.substr(colon + 1, bar - colon - 1));
        auto prec = parse_double(token.substr(bar + 1));
        if (inst && evals && prec)
          rec.instances.push_back({*inst, *evals, *prec});
      }
      if (rec.datafile.empty()) {
        ok = false;
        why = "data line names no file";
      }
    }

    if (ok)
      out.records.push_back(std::move(rec));
    else
      out.warnings.push_back("block at line " +
                             std::to_string(block_start + 1) + ": " + why);
  }

  if (out.records.empty())
    throw FormatError("no parseable .info blocks" +
                      (out.warnings.empty()
                           ? std::string()
                           : " (" + out.warnings.front() + ")"));
  return out;
}

std::vector<RunTrace> parse_coco_dat(const std::string& text) {
  std::vector<RunTrace> traces;
  std::vector<RunTrace::Point> current;
  bool any_row = false;

  auto flush = [&] {
    if (!current.empty()) {
      traces.push_back(RunTrace::from_points(0, std::move(current)));
      current.clear();
    }
  };

  for (const auto& line : split_lines(text)) {
    const std::string t = trim(line);
    if (t.empty()) continue;
    if (t[0] == '%') {
      flush();
      continue;
    }
    std::istringstream row(t);
    std::string c1, c2, c3;
    row >> c1 >> c2 >> c3;
    auto evals = parse_int(c1);
    auto prec = parse_double(c3);
    if (!evals || !prec) continue;  // tolerate junk rows
    if (*evals < 0) throw FormatError(".dat: negative evaluation count");
    any_row = true;
    current.push_back({*evals, *prec});
  }
  flush();

  if (!any_row) throw FormatError(".dat: no parseable data rows");
  return traces;
}

RunSet parse_canonical(const std::string& text) {
  RunSet rs;
  bool have_key = false;
  int lineno = 0;
  for (const auto& line : split_lines(text)) {
    ++lineno;
    if (trim(line).empty()) continue;
    json j;
    try {
      j = json::parse(line);
    } catch (const json::exception& e) {
      throw FormatError("canonical line " + std::to_string(lineno) + ": " +
                        e.what());
    }
    if (!j.is_object() || !j.contains("algorithm") || !j.contains("function") ||
        !j.contains("dimension") || !j.contains("instance") ||
        !j.contains("trace"))
      throw FormatError("canonical line " + std::to_string(lineno) +
                        ": missing required field");

    const std::string alg = j["algorithm"].get<std::string>();
    ProblemKey key{j["function"].get<int>(), j["dimension"].get<int>()};
    if (!have_key) {
      rs.algorithm_id = alg;
      rs.problem = key;
      have_key = true;
    } else if (alg != rs.algorithm_id || key != rs.problem) {
      throw FormatError("canonical line " + std::to_string(lineno) +
                        ": key (" + alg + ", f" +
                        std::to_string(key.function_id) + ", d" +
                        std::to_string(key.dimension) +
                        ") differs from earlier lines");
    }

    std::vector<RunTrace::Point> pts;
    for (const auto& pair : j["trace"]) {
      if (!pair.is_array() || pair.size() != 2)
        throw FormatError("canonical line " + std::to_string(lineno) +
                          ": trace entries must be [evals, precision] pairs");
      pts.push_back({pair[0].get<std::int64_t>(), pair[1].get<double>()});
    }
    std::int64_t budget = j.value("budget", std::int64_t{0});
    rs.runs.push_back(
        RunTrace::from_points(j["instance"].get<std::int64_t>(),
                              std::move(pts), budget));
  }
  if (!have_key) throw FormatError("canonical: empty file");
  return rs;
}

namespace {

void merge_runset(DatasetIndex& index, RunSet&& rs, const std::string& source) {
  DatasetIndex::Key key{rs.algorithm_id, rs.problem};
  auto it = index.entries.find(key);
  if (it == index.entries.end()) {
    index.entries.emplace(key, std::move(rs));
  } else {
    auto& dst = it->second.runs;
    dst.insert(dst.end(), std::make_move_iterator(rs.runs.begin()),
               std::make_move_iterator(rs.runs.end()));
  }
  index.provenance[key].push_back(source);
}

}  // namespace

IngestResult build_index(const std::vector<std::string>& roots) {
  std::vector<fs::path> info_files, canonical_files;
  std::set<fs::path> all_dat_files;

  for (const auto& root : roots) {
    if (!fs::exists(root)) throw FormatError("root does not exist: " + root);
    for (const auto& entry : fs::recursive_directory_iterator(root)) {
      if (!entry.is_regular_file()) continue;
      const auto& p = entry.path();
      if (p.extension() == ".info")
        info_files.push_back(p);
      else if (p.extension() == ".dat")
        all_dat_files.insert(fs::weakly_canonical(p));
      else if (is_canonical_file(p))
        canonical_files.push_back(p);
    }
  }
  std::sort(info_files.begin(), info_files.end());
  std::sort(canonical_files.begin(), canonical_files.end());

  IngestResult result;
  std::set<fs::path> referenced_dat;

  for (const auto& info_path : info_files) {
    CocoInfoParse parsed;
    try {
      parsed = parse_coco_info(read_file(info_path.string()));
    } catch (const FormatError& e) {
      result.report.push_back({info_path.string(), "skipped", e.what(), 0});
      continue;
    }
    for (const auto& w : parsed.warnings)
      result.report.push_back({info_path.string(), "skipped", w, 0});

    int total_runs = 0;
    for (const auto& rec : parsed.records) {
      fs::path dat_path = info_path.parent_path() / rec.datafile;
      std::vector<RunTrace> traces;
      try {
        traces = parse_coco_dat(read_file(dat_path.string()));
      } catch (const FormatError& e) {
        result.report.push_back({dat_path.string(), "skipped", e.what(), 0});
        continue;
      }
      referenced_dat.insert(fs::weakly_canonical(dat_path));
      // Instance ids come from the .info summaries, in segment order.
      for (size_t i = 0; i < traces.size(); ++i) {
        std::int64_t inst = i < rec.instances.size()
                                ? rec.instances[i].instance
                                : static_cast<std::int64_t>(i + 1);
        std::vector<RunTrace::Point> pts = traces[i].points();
        traces[i] = RunTrace::from_points(inst, std::move(pts),
                                          traces[i].budget());
      }
      RunSet rs{rec.algorithm_id, rec.problem, std::move(traces)};
      total_runs += static_cast<int>(rs.runs.size());
      merge_runset(result.index, std::move(rs), dat_path.string());
      result.report.push_back(
          {dat_path.string(), "ok", "", total_runs});
      total_runs = 0;
    }
  }

  for (const auto& path : canonical_files) {
    try {
      RunSet rs = parse_canonical(read_file(path.string()));
      int n = static_cast<int>(rs.runs.size());
      merge_runset(result.index, std::move(rs), path.string());
      result.report.push_back({path.string(), "ok", "", n});
    } catch (const FormatError& e) {
      result.report.push_back({path.string(), "skipped", e.what(), 0});
    }
  }

  for (const auto& dat : all_dat_files)
    if (!referenced_dat.count(dat))
      result.report.push_back(
          {dat.string(), "skipped", "not referenced by any .info index", 0});

  if (result.index.entries.empty())
    throw FormatError("no usable data found under the given roots");
  return result;
}

}  // namespace dynas

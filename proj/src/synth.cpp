#include "dynas/synth.hpp"

#include <algorithm>
#include <stdexcept>

#include <json.hpp>

using nlohmann::json;

namespace dynas {

std::string SynthSpec::to_json() const {
  json j;
  j["seed"] = seed;
  j["runs_per_algorithm"] = runs_per_algorithm;
  j["function_id"] = function_id;
  j["dimension"] = dimension;
  j["algorithms"] = json::array();
  for (const auto& a : algorithms) {
    json ja;
    ja["name"] = a.name;
    ja["budget"] = a.budget;
    ja["targets"] = json::array();
    for (const auto& t : a.targets)
      ja["targets"].push_back(
          {{"never_hit_prob", t.never_hit_prob}, {"lo", t.lo}, {"hi", t.hi}});
    j["algorithms"].push_back(std::move(ja));
  }
  return j.dump(2);
}

SynthSpec SynthSpec::from_json(const std::string& text) {
  json j = json::parse(text);
  SynthSpec spec;
  spec.seed = j.at("seed").get<std::uint64_t>();
  spec.runs_per_algorithm = j.at("runs_per_algorithm").get<int>();
  spec.function_id = j.value("function_id", 1);
  spec.dimension = j.value("dimension", 5);
  for (const auto& ja : j.at("algorithms")) {
    SynthSpec::AlgorithmProfile a;
    a.name = ja.at("name").get<std::string>();
    a.budget = ja.value("budget", std::int64_t{1});
    for (const auto& jt : ja.at("targets"))
      a.targets.push_back({jt.value("never_hit_prob", 0.0),
                           jt.at("lo").get<std::int64_t>(),
                           jt.at("hi").get<std::int64_t>()});
    spec.algorithms.push_back(std::move(a));
  }
  return spec;
}

namespace {

void validate_profile(const SynthSpec::AlgorithmProfile& a,
                      const TargetGrid& grid) {
  if (static_cast<int>(a.targets.size()) != grid.size())
    throw std::invalid_argument("synth: profile for '" + a.name +
                                "' must cover every grid index");
  std::int64_t prev_lo = 0, prev_hi = 0;
  for (const auto& t : a.targets) {
    if (t.lo < 1 || t.hi < t.lo)
      throw std::invalid_argument("synth: invalid hitting-time range in '" +
                                  a.name + "'");
    if (t.lo < prev_lo || t.hi < prev_hi)
      throw std::invalid_argument("synth: profile for '" + a.name +
                                  "' is not monotone");
    prev_lo = t.lo;
    prev_hi = t.hi;
  }
}

}  // namespace

DatasetIndex generate(const SynthSpec& spec, const TargetGrid& grid) {
  if (spec.runs_per_algorithm < 1)
    throw std::invalid_argument("synth: runs_per_algorithm must be >= 1");
  for (const auto& a : spec.algorithms) validate_profile(a, grid);

  DatasetIndex index;
  const ProblemKey problem{spec.function_id, spec.dimension};
  Lcg64 rng(spec.seed);

  for (const auto& profile : spec.algorithms) {
    RunSet rs;
    rs.algorithm_id = profile.name;
    rs.problem = problem;
    for (int run = 0; run < spec.runs_per_algorithm; ++run) {
      std::vector<RunTrace::Point> pts;
      std::int64_t prev = 0;
      for (int i = 0; i < grid.size(); ++i) {
        const auto& t = profile.targets[static_cast<size_t>(i)];
        if (t.never_hit_prob > 0.0 && rng.uniform01() < t.never_hit_prob)
          break;  // unhit from here on
        std::int64_t h = t.lo == t.hi ? t.lo : rng.uniform_int(t.lo, t.hi);
        h = std::max(h, prev);
        prev = h;
        pts.push_back({h, grid.value(i)});
      }
      rs.runs.push_back(RunTrace::from_points(run + 1, std::move(pts),
                                              std::max(profile.budget, prev)));
    }
    index.entries.emplace(DatasetIndex::Key{rs.algorithm_id, problem},
                          std::move(rs));
  }
  return index;
}

ErtValue oracle_ert(const RunSet& runs, const TargetGrid& grid, int i) {
  if (runs.runs.empty()) throw std::domain_error("oracle_ert: empty run set");
  const double target = grid.value(i);

  // Literal formula: collect min{t, B} per run, then sum back to front.
  std::vector<double> capped;
  int successes = 0;
  for (const auto& run : runs.runs) {
    double t = -1.0;
    for (const auto& p : run.points()) {
      if (p.best_precision <= target) {
        t = static_cast<double>(p.evals);
        break;
      }
    }
    if (t >= 0.0) {
      ++successes;
      capped.push_back(t);
    } else {
      capped.push_back(static_cast<double>(run.budget()));
    }
  }
  if (successes == 0)
    return ErtValue::never_hit(static_cast<int>(runs.runs.size()));
  double sum = 0.0;
  for (auto it = capped.rbegin(); it != capped.rend(); ++it) sum += *it;
  return ErtValue::make_finite(sum / successes, successes,
                               static_cast<int>(runs.runs.size()));
}

SwitchTriple oracle_vbs_dyn(const std::vector<ErtTable>& tables,
                            const TargetGrid& grid) {
  const int final_index = grid.final_index();
  std::vector<SwitchTriple> candidates;
  for (const auto& t1 : tables)
    for (const auto& t2 : tables)
      for (int tau = 0; tau <= final_index; ++tau)
        if (auto v = composed_ert(t1, t2, tau, final_index))
          candidates.push_back({t1.algorithm_id, t2.algorithm_id, tau, *v});
  if (candidates.empty())
    throw std::domain_error("oracle_vbs_dyn: no feasible triple");
  std::sort(candidates.begin(), candidates.end(),
            [](const SwitchTriple& a, const SwitchTriple& b) {
              if (a.composed_ert != b.composed_ert)
                return a.composed_ert < b.composed_ert;
              if (a.tau_index != b.tau_index) return a.tau_index > b.tau_index;
              if (a.a1 != b.a1) return a.a1 < b.a1;
              return a.a2 < b.a2;
            });
  return candidates.front();
}

std::optional<std::pair<double, int>> oracle_best_pair(const ErtTable& a1,
                                                       const ErtTable& a2,
                                                       const TargetGrid& grid) {
  const int final_index = grid.final_index();
  std::optional<std::pair<double, int>> best;
  for (int tau = 0; tau <= final_index; ++tau) {
    auto v = composed_ert(a1, a2, tau, final_index);
    if (!v) continue;
    if (!best || *v < best->first || (*v == best->first && tau > best->second))
      best = {*v, tau};
  }
  return best;
}

namespace {

std::optional<double> oracle_role_min(const std::string& algorithm,
                                      const std::vector<ErtTable>& tables,
                                      const TargetGrid& grid, bool starter) {
  const int final_index = grid.final_index();
  std::optional<double> best;
  for (const auto& t1 : tables) {
    for (const auto& t2 : tables) {
      if (starter && t1.algorithm_id != algorithm) continue;
      if (!starter && t2.algorithm_id != algorithm) continue;
      for (int tau = 0; tau <= final_index; ++tau) {
        auto v = composed_ert(t1, t2, tau, final_index);
        if (v && (!best || *v < *best)) best = *v;
      }
    }
  }
  return best;
}

}  // namespace

std::optional<double> oracle_i1(const std::string& algorithm,
                                const std::vector<ErtTable>& tables,
                                const TargetGrid& grid) {
  auto numer = oracle_role_min(algorithm, tables, grid, true);
  if (!numer) return std::nullopt;
  return *numer / oracle_vbs_dyn(tables, grid).composed_ert;
}

std::optional<double> oracle_i2(const std::string& algorithm,
                                const std::vector<ErtTable>& tables,
                                const TargetGrid& grid) {
  auto numer = oracle_role_min(algorithm, tables, grid, false);
  if (!numer) return std::nullopt;
  return *numer / oracle_vbs_dyn(tables, grid).composed_ert;
}

}  // namespace dynas

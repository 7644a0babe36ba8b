#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "dynas/dynas_engine.hpp"
#include "dynas/ingest.hpp"

namespace dynas {

/// Documented, platform-independent 64-bit linear congruential generator.
/// state' = state * 6364136223846793005 + 1442695040888963407; draws use the
/// high 32 bits.
class Lcg64 {
 public:
  explicit Lcg64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    state_ = state_ * 6364136223846793005ULL + 1442695040888963407ULL;
    return state_;
  }

  std::uint32_t next_u32() { return static_cast<std::uint32_t>(next_u64() >> 32); }

  /// Uniform integer in [lo, hi], inclusive.
  std::int64_t uniform_int(std::int64_t lo, std::int64_t hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<std::int64_t>(next_u32() % span);
  }

  /// Uniform double in [0, 1).
  double uniform01() { return next_u32() / 4294967296.0; }

 private:
  std::uint64_t state_;
};

/// Synthetic dataset spec: per algorithm, a hitting-time distribution per
/// grid index plus a never-hit probability. Profiles must be monotone (lo and
/// hi non-decreasing in the index).
struct SynthSpec {
  struct TargetProfile {
    double never_hit_prob = 0.0;
    std::int64_t lo = 1;  // uniform hitting-time range; lo == hi is
    std::int64_t hi = 1;  // deterministic
  };

  struct AlgorithmProfile {
    std::string name;
    std::vector<TargetProfile> targets;  // one per grid index
    std::int64_t budget = 1;             // floor for unhit-run budgets
  };

  std::uint64_t seed = 1;
  int runs_per_algorithm = 1;
  int function_id = 1;
  int dimension = 5;
  std::vector<AlgorithmProfile> algorithms;

  std::string to_json() const;
  static SynthSpec from_json(const std::string& text);
};

/// Deterministic dataset from a spec: trace precisions sit exactly on grid
/// boundaries, so hitting times equal the profile draws.
DatasetIndex generate(const SynthSpec& spec, const TargetGrid& grid);

/// Literal, unoptimized evaluation of the ERT definition. Traversal and
/// accumulation order are independent of the perf-metrics implementation.
ErtValue oracle_ert(const RunSet& runs, const TargetGrid& grid, int i);

/// Exhaustive triple enumeration: every candidate is materialized and the
/// winner picked by a full sort under the documented tie order.
SwitchTriple oracle_vbs_dyn(const std::vector<ErtTable>& tables,
                            const TargetGrid& grid);

std::optional<double> oracle_i1(const std::string& algorithm,
                                const std::vector<ErtTable>& tables,
                                const TargetGrid& grid);
std::optional<double> oracle_i2(const std::string& algorithm,
                                const std::vector<ErtTable>& tables,
                                const TargetGrid& grid);

/// Best composed ERT for an ordered pair, by plain enumeration over tau.
std::optional<std::pair<double, int>> oracle_best_pair(
    const ErtTable& a1, const ErtTable& a2, const TargetGrid& grid);

}  // namespace dynas

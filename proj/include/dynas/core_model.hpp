#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace dynas {

/// Grid of target precisions 10^(e/10) with exponents stored in exact tenths.
/// Default grid: 51 points, exponents 2.0 down to -8.0 in steps of 0.2.
/// Floating values are derived on demand; all indexing and comparison is
/// integer-exact.
class TargetGrid {
 public:
  TargetGrid() : TargetGrid(51, 20, 2) {}

  /// Custom grid: `count` points, top exponent `top_tenths`/10, decreasing by
  /// `step_tenths`/10 per index.
  TargetGrid(int count, int top_tenths, int step_tenths)
      : count_(count), top_tenths_(top_tenths), step_tenths_(step_tenths) {
    if (count < 1) throw std::invalid_argument("TargetGrid: count must be >= 1");
    if (step_tenths < 1)
      throw std::invalid_argument("TargetGrid: step must be positive");
  }

  int size() const { return count_; }
  int final_index() const { return count_ - 1; }

  /// Exponent of grid point i, in exact tenths (default grid: 20 - 2i).
  int exponent_tenths(int i) const {
    check_index(i);
    return top_tenths_ - step_tenths_ * i;
  }

  double exponent(int i) const { return exponent_tenths(i) / 10.0; }

  /// Precision value 10^exponent(i).
  double value(int i) const;

  double final_target() const { return value(final_index()); }

  /// Index whose exponent is closest to log10(precision); ties go to the
  /// smaller index (easier target).
  int nearest_index(double precision) const;

 private:
  void check_index(int i) const {
    if (i < 0 || i >= count_)
      throw std::out_of_range("TargetGrid: index " + std::to_string(i) +
                              " out of range 0.." + std::to_string(count_ - 1));
  }

  int count_;
  int top_tenths_;
  int step_tenths_;
};

/// One benchmark problem: (function id, dimension).
struct ProblemKey {
  int function_id = 0;
  int dimension = 0;

  friend bool operator==(const ProblemKey&, const ProblemKey&) = default;
  friend auto operator<=>(const ProblemKey&, const ProblemKey&) = default;
};

/// Validates a key against the BBOB suite layout. A wider dimension set may be
/// passed for non-BBOB data.
bool is_valid_problem(const ProblemKey& key,
                      const std::vector<int>& allowed_dims = {2, 3, 5, 10, 20,
                                                              40});

/// One run of one algorithm: best-so-far precision per evaluation count.
/// Evals strictly increase, precision never increases. Non-positive input
/// precisions are clamped to 0 (hits every target).
class RunTrace {
 public:
  struct Point {
    std::int64_t evals;
    double best_precision;
  };

  /// Builds a trace from raw points, enforcing the invariants:
  /// duplicate eval counts keep the last precision, precision is repaired to
  /// the running minimum, values <= 0 clamp to 0.
  static RunTrace from_points(std::int64_t instance_id,
                              std::vector<Point> points,
                              std::int64_t budget = 0);

  std::int64_t instance_id() const { return instance_id_; }
  const std::vector<Point>& points() const { return points_; }
  std::int64_t budget() const { return budget_; }

 private:
  RunTrace() = default;

  std::int64_t instance_id_ = 0;
  std::vector<Point> points_;
  std::int64_t budget_ = 0;
};

/// All runs of one algorithm on one problem, pooled across instances.
struct RunSet {
  std::string algorithm_id;
  ProblemKey problem;
  std::vector<RunTrace> runs;
};

/// ERT at one target: either a finite estimate with its success counts, or
/// "never hit" when no run reached the target.
struct ErtValue {
  bool finite = false;
  double ert = 0.0;      // valid when finite
  int successes = 0;     // valid when finite
  int total_runs = 0;

  static ErtValue make_finite(double ert, int successes, int total_runs) {
    if (successes < 1)
      throw std::invalid_argument("ErtValue: finite requires successes >= 1");
    if (ert < 1.0)
      throw std::invalid_argument("ErtValue: ert must be >= 1");
    return ErtValue{true, ert, successes, total_runs};
  }

  static ErtValue never_hit(int total_runs) {
    return ErtValue{false, 0.0, 0, total_runs};
  }

  friend bool operator==(const ErtValue&, const ErtValue&) = default;
};

}  // namespace dynas

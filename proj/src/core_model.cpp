#include "dynas/core_model.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace dynas {

double TargetGrid::value(int i) const {
  return std::pow(10.0, exponent_tenths(i) / 10.0);
}

int TargetGrid::nearest_index(double precision) const {
  if (!(precision > 0.0))
    throw std::domain_error("TargetGrid: nearest_index needs precision > 0");
  const double x = std::log10(precision);
  int best = 0;
  double best_dist = std::abs(x - exponent(0));
  for (int i = 1; i < count_; ++i) {
    const double d = std::abs(x - exponent(i));
    if (d < best_dist) {  // strict: ties keep the smaller (easier) index
      best_dist = d;
      best = i;
    }
  }
  return best;
}

bool is_valid_problem(const ProblemKey& key,
                      const std::vector<int>& allowed_dims) {
  if (key.function_id < 1 || key.function_id > 24) return false;
  return std::find(allowed_dims.begin(), allowed_dims.end(), key.dimension) !=
         allowed_dims.end();
}

RunTrace RunTrace::from_points(std::int64_t instance_id,
                               std::vector<Point> points,
                               std::int64_t budget) {
  RunTrace t;
  t.instance_id_ = instance_id;
  double running_min = std::numeric_limits<double>::infinity();
  for (auto p : points) {
    if (p.evals <= 0)
      throw std::invalid_argument("RunTrace: evaluation counts must be positive");
    double prec = p.best_precision;
    if (prec <= 0.0) prec = 0.0;  // boundary-violating solvers: full success
    running_min = std::min(running_min, prec);
    if (!t.points_.empty() && t.points_.back().evals == p.evals) {
      t.points_.back().best_precision = running_min;  // keep last at same eval
      continue;
    }
    if (!t.points_.empty() && p.evals < t.points_.back().evals)
      throw std::invalid_argument("RunTrace: evaluation counts must increase");
    t.points_.push_back({p.evals, running_min});
  }
  std::int64_t last = t.points_.empty() ? 0 : t.points_.back().evals;
  t.budget_ = std::max(budget, last);
  if (t.budget_ <= 0)
    throw std::invalid_argument("RunTrace: budget must be positive");
  return t;
}

}  // namespace dynas

#pragma once

#include <vector>

#include "morbit/system.hpp"

namespace morbit {

// Uniform measure on the first n orbit points; atom order records the
// orbit segment and duplicates are kept.
struct EmpiricalMeasure {
  std::vector<Point> atoms;
  std::size_t size() const { return atoms.size(); }
};

EmpiricalMeasure empirical(const System& s, const Point& x, long long n);

// Finite-support measure with exact rational weights summing to 1.
// Canonical form: support sorted by point_less, coincident points merged,
// zero-weight points dropped.
struct DiscreteMeasure {
  std::vector<Point> support;
  std::vector<Rat> weights;

  static DiscreteMeasure dirac(const Point& p);
  // Normalizes (sort + merge + drop zeros) and checks the weight sum is 1.
  static DiscreteMeasure make(std::vector<Point> support, std::vector<Rat> weights);

  std::size_t size() const { return support.size(); }
};

DiscreteMeasure to_discrete(const EmpiricalMeasure& m);

// Exact rational convex combination; weights must be nonnegative and sum to 1.
DiscreteMeasure convex_combination(
    const std::vector<std::pair<Rat, DiscreteMeasure>>& parts);

}  // namespace morbit

#pragma once

#include <optional>

#include "morbit/gamma.hpp"

namespace morbit {

// Finite union of closed rational subintervals of [0, 1], kept normalized
// (sorted, overlapping/touching parts merged).
struct IntervalUnion {
  std::vector<std::pair<Rat, Rat>> parts;

  static IntervalUnion make(std::vector<std::pair<Rat, Rat>> parts);
  bool contains(const IntervalUnion& other) const;
  // pieces of `other` not covered by *this
  std::vector<std::pair<Rat, Rat>> uncovered(const IntervalUnion& other) const;
};

// Closed cover D_0, ..., D_{k-1} of [0, 1] cyclically permuted by the map.
struct PeriodicDecomposition {
  std::vector<IntervalUnion> sets;
  std::size_t k() const { return sets.size(); }
};

struct DecompositionReport {
  bool valid = false;
  bool exact = false;  // piecewise-linear systems get exact verification
  struct SetCheck {
    IntervalUnion image;
    bool contained = false;
    std::vector<std::pair<Rat, Rat>> leftovers;
  };
  std::vector<SetCheck> mapping;           // T(D_i) vs D_{i+1 mod k}
  bool covers = false;
  std::vector<std::pair<Rat, Rat>> uncovered;
};

// Exact image computation for piecewise-linear systems; float maps get a
// sampled check and the report is flagged non-exact.
DecompositionReport verify_decomposition(const System& s,
                                         const PeriodicDecomposition& d,
                                         uint64_t sample_seed = 1,
                                         int samples_per_part = 256);

// T-level min-permutation average cost over kn orbit points, for x periodic
// at the T^k level (T^{kn} x = x). With k = 1 this is ebar_finite.
Num lift_witness(const System& s, const PeriodicDecomposition& d,
                 const Point& x, const Point& y, long long n, long long k,
                 const GammaOptions& opts = {});

}  // namespace morbit

#pragma once

#include <vector>

#include "morbit/measure.hpp"

namespace morbit {

struct CostMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<Num> entries;  // row-major

  const Num& at(int i, int j) const {
    return entries[static_cast<std::size_t>(i) * static_cast<std::size_t>(cols) +
                   static_cast<std::size_t>(j)];
  }
  Num& at(int i, int j) {
    return entries[static_cast<std::size_t>(i) * static_cast<std::size_t>(cols) +
                   static_cast<std::size_t>(j)];
  }
  bool all_exact() const;
};

// entry (i, j) = dist(system, a[i], b[j])
CostMatrix cost_matrix(const System& s, const std::vector<Point>& a,
                       const std::vector<Point>& b);

struct AssignmentResult {
  Num cost;               // min over permutations of (1/n) sum c[i][sigma(i)]
  std::vector<int> perm;  // row i -> column perm[i]; lexicographically
                          // smallest among the optimal permutations
};

inline constexpr int kAssignmentCap = 4096;

// Exact optimum over all permutations (Jonker-Volgenant shortest augmenting
// paths). Square matrices only; n above the cap is refused.
AssignmentResult assignment_cost(const CostMatrix& c, int cap = kAssignmentCap);

struct TransportPlan {
  struct Arc {
    int from = 0;
    int to = 0;
    Rat mass;
  };
  std::vector<Arc> arcs;
  Num cost;
};

inline constexpr long long kFlowScaleCap = 1LL << 31;

// Exact W1 between finite discrete measures via min-cost flow on the
// instance scaled by the common denominator of all weights. The plan's
// marginals match the inputs exactly.
TransportPlan w1_discrete(const DiscreteMeasure& mu, const DiscreteMeasure& nu,
                          const System& s, long long scale_cap = kFlowScaleCap);

// 1-D closed form for equal-size uniform measures on interval points:
// (1/n) sum |x_(i) - y_(i)| over sorted atoms.
Num w1_sorted_interval(const EmpiricalMeasure& mu, const EmpiricalMeasure& nu);

}  // namespace morbit

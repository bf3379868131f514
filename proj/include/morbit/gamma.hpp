#pragma once

#include <string>

#include "morbit/transport.hpp"

namespace morbit {

enum class GammaMethod {
  kAuto,        // fastest exact route for the space variant
  kAssignment,  // Hungarian on the full cost matrix (equal sizes only)
  kFlow,        // min-cost flow on deduplicated supports
  kSorted1d,    // sorted matching, interval points, equal sizes
  kCdf1d,       // CDF integral, interval points, any rational weights
  kCircleCdf,   // cut-point CDF form on the circle, any rational weights
};

struct GammaOptions {
  GammaMethod method = GammaMethod::kAuto;
  int assignment_cap = kAssignmentCap;
  long long flow_scale_cap = kFlowScaleCap;
};

struct GammaResult {
  Num value;
  std::string method;  // route actually taken
};

// W1 = gamma between two finite discrete measures, exact in rational mode.
// Every route computes the same optimal-transport value; kAuto picks the
// cheapest one that applies (closed forms in 1-D, flow/assignment otherwise).
GammaResult gamma_discrete(const System& s, const DiscreteMeasure& mu,
                           const DiscreteMeasure& nu,
                           const GammaOptions& opts = {});

// Same for two equal-or-unequal point lists with uniform weights.
GammaResult gamma_lists(const System& s, const std::vector<Point>& a,
                        const std::vector<Point>& b,
                        const GammaOptions& opts = {});

// Exact W1 between measures supported on interval points, arbitrary
// rational weights: integral of |F_mu - F_nu|.
Num w1_interval_cdf(const DiscreteMeasure& mu, const DiscreteMeasure& nu);

// Exact W1 on the circle (metric = 2 * shortest arc): the optimal
// cut-point form min_t integral |F_mu - F_nu - t|, weighted median cut.
Num w1_circle_cdf(const DiscreteMeasure& mu, const DiscreteMeasure& nu);

}  // namespace morbit

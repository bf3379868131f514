#pragma once

#include <optional>

#include "morbit/gamma.hpp"

namespace morbit {

struct PeriodicOrbit {
  Point base;
  long long period = 1;       // least period
  std::vector<Point> points;  // [base, T base, ..., T^(p-1) base]
  DiscreteMeasure measure;    // uniform on the orbit
};

// Builds the orbit of a point known to be periodic; verifies T^p base = base
// with p least, up to max_period.
PeriodicOrbit make_periodic_orbit(const System& s, const Point& base,
                                  long long max_period = 1 << 20);

// One orbit per rotation class of words of length dividing p, least period
// recorded. Refuses m^p above the cap.
std::vector<PeriodicOrbit> enumerate_shift_periodic(int alphabet, int p,
                                                    long long cap = 1 << 20);

// All periodic orbits of least period dividing p of a piecewise-linear map,
// found by solving f^p(x) = x exactly on every monotone branch of f^p.
// Also returns via *fixed_point_count (when non-null) the number of distinct
// solutions of f^p(x) = x before grouping into orbits.
std::vector<PeriodicOrbit> interval_periodic_points(
    const PiecewiseLinearInterval& f, int p, long long branch_cap = 1 << 20,
    long long* fixed_point_count = nullptr);

// Cyclic chain of closed rational intervals with f(I_i) covering I_{i+1}.
struct CoveringChain {
  std::vector<std::pair<Rat, Rat>> intervals;
  std::size_t size() const { return intervals.size(); }
};

// Exact verification of the covering property for a piecewise-linear map.
// Returns the first violated link, or nothing when the chain covers.
std::optional<std::size_t> covering_violation(const PiecewiseLinearInterval& f,
                                              const CoveringChain& chain);

// Periodic point following the chain: f^i(x) in I_i, f^m(x) = x, found by
// exact backward refinement of onto-subintervals. Throws if the covering
// property fails.
PeriodicOrbit loop_periodic_point(const PiecewiseLinearInterval& f,
                                  const CoveringChain& chain);

struct OmegaIntervalsReport {
  CoveringChain chain;       // 2^level intervals, orbit-sampled hulls
  bool covering_ok = false;
  std::optional<std::size_t> first_violation;
  Num padding;               // outward endpoint padding applied (float data)
  std::vector<Num> diameters;
};

// Hulls of the sampled omega-limit sets of f^(2^level) along the first
// 2^level iterates, after burn_in sweeps, using `samples` sweeps. The last
// chain class keeps one extra pre-window sample so the wrap link is
// certified by the same forward-image argument as the interior links.
OmegaIntervalsReport omega_limit_intervals(const System& s, const Point& y,
                                           int level, long long burn_in,
                                           long long samples);

// Candidate periodic orbits for the density/closability/linkability
// searches: an explicit list, optionally extended (on shift spaces) with
// word-truncation closings of the target point.
struct PeriodicSource {
  std::vector<PeriodicOrbit> orbits;
  bool shift_closing = false;
};

struct SearchCaps {
  int period_cap = 12;         // max candidate period considered
  long long horizon_cap = 4096;
  int assignment_cap = 1024;
  int rounds = 4;              // horizons tested per candidate (doubling)
};

struct DensityWitness {
  PeriodicOrbit orbit;
  long long n = 0;   // certification horizon, T^n x = x
  Num cost;          // certified min-permutation average distance
  std::string target;
};

struct CandidateRecord {
  std::string description;
  long long n = 0;
  Num cost;
};

struct DensityResult {
  std::optional<DensityWitness> witness;
  std::optional<CandidateRecord> best;  // best cost seen (always on failure)
  long long candidates_tried = 0;
  SearchCaps caps;
};

// Bounded search for a periodic orbit whose length-n segment is within eps
// of the target orbit segment in min-permutation average distance.
// Candidates ordered by (least period, horizon); first hit wins.
DensityResult check_density_ergodic(const System& s, const PeriodicSource& k,
                                    const Point& y, const Num& eps,
                                    long long min_horizon,
                                    const SearchCaps& caps = {},
                                    const GammaOptions& opts = {});

// Convex variant: the target is the stitched sequence z of k orbit segments
// (z_{i+(j-1)n} = T^i y_j); candidates must satisfy T^{kn} x = x.
DensityResult check_density_convex(const System& s, const PeriodicSource& k,
                                   const std::vector<Point>& ys, const Num& eps,
                                   long long min_horizon,
                                   const SearchCaps& caps = {},
                                   const GammaOptions& opts = {});

struct ClosableWitness {
  long long p = 0;
  long long q = 0;
  PeriodicOrbit y;
  Num sup_dist;  // max over i < p of d(T^i y, T^i x)
};

struct ClosableResult {
  std::optional<ClosableWitness> witness;
  std::optional<CandidateRecord> best;  // smallest sup distance seen
  SearchCaps caps;
};

// Searches N <= p <= q <= (1+eps) p and y in K with T^q y = y whose first p
// orbit points stay sup-within eps of x's.
ClosableResult check_closable(const System& s, const PeriodicSource& k,
                              const Point& x, const Num& eps, long long min_n,
                              const SearchCaps& caps = {});

// (1/q) sum_{i<q} d(T^i x, T^i y) for a q-periodic y.
Num closable_mean_bound(const System& s, const Point& x, const Point& y,
                        long long q);

struct LinkableWitness {
  long long p1 = 0, p2 = 0, q1 = 0, q2 = 0;
  PeriodicOrbit z;
  Num cost;
};

struct LinkableResult {
  std::optional<LinkableWitness> witness;
  std::optional<CandidateRecord> best;
  SearchCaps caps;
};

// Searches period multiples p1, p2 with p1/(p1+p2) within eps of lambda and
// a periodic z (period dividing q2) whose orbit is within eps of the
// stitched segment [orbit(y1, q1), orbit(y2, q2-q1)] in min-permutation
// average distance.
LinkableResult check_linkable_pair(const System& s, const PeriodicOrbit& y1,
                                   const PeriodicOrbit& y2, const Rat& lambda,
                                   const Num& eps, const PeriodicSource& k,
                                   const SearchCaps& caps = {},
                                   const GammaOptions& opts = {});

}  // namespace morbit

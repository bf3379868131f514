#pragma once

#include <optional>

#include "morbit/pseudometric.hpp"

namespace morbit {

// One stage of a block schedule: a target measure, p_n generic points whose
// length-q_n orbit segments realize it, and how many times the stage's full
// sweep (p_n * q_n points) repeats. Internal stages of a paper-strict
// schedule repeat exactly p_{n+1} q_{n+1} times.
struct ScheduleStage {
  DiscreteMeasure measure;
  std::vector<Point> generic_points;
  long long q = 1;
  long long repeats = 1;
  std::optional<Rat> eps;  // default: gamma to the next stage's measure

  long long p() const { return static_cast<long long>(generic_points.size()); }
  long long block_size() const { return p() * q * repeats; }
};

struct BlockSchedule {
  std::vector<ScheduleStage> stages;
  bool strict = false;

  std::vector<long long> block_sizes() const;  // P_n
  std::vector<long long> cumulative() const;   // Q_n
};

struct ScheduleReport {
  bool well_formed = false;
  bool strict_ok = false;
  std::vector<std::string> violations;  // strict-growth failures
  std::vector<std::string> warnings;
  std::vector<Num> eps;        // per-stage eps_n actually used
  std::vector<Num> generic_gap;  // gamma(mu_n, averaged segment measures)
  std::vector<long long> P, Q;
};

// Checks stage data, growth inequalities (strict mode), and certifies
// gamma(mu_n, (1/p_n) sum_j m_T(y^n_j, q_n)) <= eps_n via min-cost flow.
ScheduleReport schedule_validate(const System& s, const BlockSchedule& sched,
                                 const GammaOptions& opts = {});

struct PseudoOrbitSeq {
  std::vector<Point> points;
  // sparse jump list: positions i with d(T x_i, x_{i+1}) possibly nonzero
  struct Jump {
    long long index;
    Num dist;
  };
  std::vector<Jump> jumps;

  // (1/n) sum_{i<n-1... } d(T x_i, x_{i+1}) for i < n, from the jump list
  Num jump_average(long long n) const;
};

// Realizes the schedule's index decomposition x_i = T^r y^n_{j+1}; the only
// nonzero one-step errors sit at segment seams.
PseudoOrbitSeq build_aapo(const System& s, const BlockSchedule& sched,
                          long long horizon);

// Paper-strict prefix bound on the average jump at prefix N inside stage n,
// sweep k: (1/N) (sum_{i<n} p_i repeats_i + (k+1) p_n).
Num aapo_prefix_bound(const BlockSchedule& sched, long long prefix);

struct AapoReport {
  std::vector<long long> horizons;
  std::vector<Num> averages;  // (1/n) sum d(T x_i, x_{i+1}), recomputed
  bool verdict = false;       // final average below the threshold
  Num threshold;
};

// Recomputes one-step average errors from the stored points.
AapoReport is_aapo(const System& s, const std::vector<Point>& seq,
                   const std::vector<long long>& horizons, const Num& threshold);

struct TraceOptions {
  int assignment_cap = 1024;
  // Horizons beyond the cap: interval/circle points use the exact 1-D
  // closed forms; shift points fall back to a seeded subsample of this size.
  int subsample_size = 1024;
  uint64_t subsample_seed = 1;
};

struct TraceResult {
  std::vector<long long> horizons;
  std::vector<Num> costs;
  std::vector<std::string> methods;  // per horizon
  std::vector<bool> subsampled;
};

// Per-horizon min over permutations of the average distance between the
// first n sequence points and the first n orbit points of x.
TraceResult trace_error(const System& s, const std::vector<Point>& seq,
                        const Point& x, const std::vector<long long>& horizons,
                        const TraceOptions& topts = {}, int threads = 1);

struct VsetTransferReport {
  std::vector<long long> checkpoints;
  std::vector<Num> checkpoint_gamma;  // gamma(m(a,n), m(b,n))
  Num tau;
  bool all_below_tau = false;
  // |G_a[i][j] - G_b[i][j]| <= checkpoint_gamma[i] + checkpoint_gamma[j],
  // the triangle transfer between the two snapshot distance matrices.
  bool triangle_transfer_ok = false;
  Num max_matrix_diff;
  MeasureLimitSetEstimate vset_a, vset_b;
};

// Finite-scale form of "close sequences generate the same limit measures".
VsetTransferReport vset_transfer_check(const System& s,
                                       const std::vector<Point>& seq_a,
                                       const std::vector<Point>& seq_b,
                                       const std::vector<long long>& checkpoints,
                                       const Num& tau, int coarsen_bins = 64,
                                       const GammaOptions& opts = {});

}  // namespace morbit

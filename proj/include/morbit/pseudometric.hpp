#pragma once

#include "morbit/gamma.hpp"

namespace morbit {

// gamma(m_T(x,n), m_T(y,n)) = min over permutations of the average orbit
// distance; exact in rational mode.
Num ebar_finite(const System& s, const Point& x, const Point& y, long long n,
                const GammaOptions& opts = {});

struct EbarEstimate {
  std::vector<long long> horizons;
  std::vector<Num> values;
  Num limsup_estimate;  // max of values over the last tail_window horizons
  int tail_window = 3;
};

EbarEstimate ebar_estimate(const System& s, const Point& x, const Point& y,
                           const std::vector<long long>& horizons,
                           int tail_window = 3, const GammaOptions& opts = {},
                           int threads = 1);

// Default doubling horizon schedule n0, 2 n0, ..., n0 2^(count-1).
std::vector<long long> doubling_horizons(long long n0, int count);

// (1/n) sum d(T^i x, T^i y): the identity-permutation average.
Num besicovitch_finite(const System& s, const Point& x, const Point& y,
                       long long n);

struct QuasiRegularReport {
  bool cauchy = false;
  Num tol;
  struct Gap {
    long long from, to;
    Num gamma;
  };
  std::vector<Gap> gaps;  // consecutive horizon pairs
  Num max_gap;
};

// Finite-horizon Cauchy surrogate: all consecutive-horizon empirical
// measures within tol of each other in gamma.
QuasiRegularReport is_quasi_regular(const System& s, const Point& x,
                                    const std::vector<long long>& horizons,
                                    const Num& tol,
                                    const GammaOptions& opts = {});

// Empirical measure coarsened onto representative points: uniform bins for
// interval/circle, cylinder words for shifts. error_bound is the max
// distance from any atom to its representative.
struct CoarsenedMeasure {
  DiscreteMeasure measure;
  Num error_bound;
};

CoarsenedMeasure coarsen(const System& s, const EmpiricalMeasure& m, int bins);

struct MeasureLimitSetEstimate {
  std::vector<long long> checkpoints;
  std::vector<DiscreteMeasure> snapshots;
  std::vector<std::vector<Num>> pairwise_gamma;
  Num coarsen_error;
  int coarsen_bins = 64;
};

// Snapshots of the empirical measure along checkpoints with pairwise gamma
// distances (computed by min-cost flow on the coarsened supports).
MeasureLimitSetEstimate vset_estimate(const System& s, const Point& x,
                                      const std::vector<long long>& checkpoints,
                                      int coarsen_bins = 64,
                                      const GammaOptions& opts = {});

// Same for an arbitrary stored sequence instead of a true orbit.
MeasureLimitSetEstimate vset_estimate_seq(const System& s,
                                          const std::vector<Point>& seq,
                                          const std::vector<long long>& checkpoints,
                                          int coarsen_bins = 64,
                                          const GammaOptions& opts = {});

}  // namespace morbit

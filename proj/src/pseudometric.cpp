#include "morbit/pseudometric.hpp"

#include <algorithm>
#include <future>

namespace morbit {

Num ebar_finite(const System& s, const Point& x, const Point& y, long long n,
                const GammaOptions& opts) {
  std::vector<Point> ox = orbit(s, x, n);
  std::vector<Point> oy = orbit(s, y, n);
  return gamma_lists(s, ox, oy, opts).value;
}

std::vector<long long> doubling_horizons(long long n0, int count) {
  std::vector<long long> out;
  long long n = n0;
  for (int i = 0; i < count; ++i, n *= 2) out.push_back(n);
  return out;
}

EbarEstimate ebar_estimate(const System& s, const Point& x, const Point& y,
                           const std::vector<long long>& horizons,
                           int tail_window, const GammaOptions& opts,
                           int threads) {
  if (horizons.empty()) throw Error("ebar_estimate needs at least one horizon");
  for (std::size_t i = 0; i + 1 < horizons.size(); ++i)
    if (horizons[i] >= horizons[i + 1])
      throw Error("horizons must be strictly increasing");
  if (tail_window < 1 || static_cast<std::size_t>(tail_window) > horizons.size())
    throw Error("tail window must be in [1, horizon count]");
  // Orbits are shared prefixes; compute the longest once.
  std::vector<Point> ox = orbit(s, x, horizons.back());
  std::vector<Point> oy = orbit(s, y, horizons.back());
  EbarEstimate est;
  est.horizons = horizons;
  est.tail_window = tail_window;
  est.values.resize(horizons.size());
  auto eval = [&](std::size_t i) {
    long long n = horizons[i];
    std::vector<Point> px(ox.begin(), ox.begin() + n);
    std::vector<Point> py(oy.begin(), oy.begin() + n);
    return gamma_lists(s, px, py, opts).value;
  };
  if (threads > 1) {
    std::vector<std::future<Num>> futs;
    for (std::size_t i = 0; i < horizons.size(); ++i)
      futs.push_back(std::async(std::launch::async, eval, i));
    for (std::size_t i = 0; i < horizons.size(); ++i) est.values[i] = futs[i].get();
  } else {
    for (std::size_t i = 0; i < horizons.size(); ++i) est.values[i] = eval(i);
  }
  est.limsup_estimate = est.values[horizons.size() - tail_window];
  for (std::size_t i = horizons.size() - tail_window; i < horizons.size(); ++i)
    est.limsup_estimate = num_max(est.limsup_estimate, est.values[i]);
  return est;
}

Num besicovitch_finite(const System& s, const Point& x, const Point& y,
                       long long n) {
  if (n < 1) throw Error("horizon must be >= 1");
  Point px = x, py = y;
  Num total = dist(s, px, py);
  bool exact = total.exact();
  if (exact) total = Num(total.rat());
  for (long long i = 1; i < n; ++i) {
    px = apply_map(s, px);
    py = apply_map(s, py);
    total += dist(s, px, py);
  }
  return total / Num(n);
}

QuasiRegularReport is_quasi_regular(const System& s, const Point& x,
                                    const std::vector<long long>& horizons,
                                    const Num& tol, const GammaOptions& opts) {
  if (horizons.size() < 2) throw Error("need >= 2 horizons");
  std::vector<Point> o = orbit(s, x, horizons.back());
  QuasiRegularReport rep;
  rep.tol = tol;
  rep.max_gap = Num(Rat(0));
  for (std::size_t i = 0; i + 1 < horizons.size(); ++i) {
    std::vector<Point> a(o.begin(), o.begin() + horizons[i]);
    std::vector<Point> b(o.begin(), o.begin() + horizons[i + 1]);
    Num g = gamma_lists(s, a, b, opts).value;
    rep.gaps.push_back({horizons[i], horizons[i + 1], g});
    rep.max_gap = num_max(rep.max_gap, g);
  }
  rep.cauchy = rep.max_gap < tol;
  return rep;
}

namespace {

long long bin_of(const Num& v, int bins) {
  Num scaled = v * Num(bins);
  long long b;
  if (scaled.exact())
    b = rat_floor(scaled.rat()).convert_to<long long>();
  else
    b = static_cast<long long>(scaled.value());
  if (b < 0) b = 0;
  if (b >= bins) b = bins - 1;
  return b;
}

}  // namespace

CoarsenedMeasure coarsen(const System& s, const EmpiricalMeasure& m, int bins) {
  if (bins < 1) throw Error("coarsen bins must be >= 1");
  if (m.atoms.empty()) throw Error("empty empirical measure");
  std::vector<Point> reps;
  std::vector<Rat> weights;
  Rat unit(1, static_cast<long long>(m.atoms.size()));
  if (std::holds_alternative<FullShift>(s)) {
    // cylinder words of length ceil(log_m bins), at least 1
    int alphabet = std::get<FullShift>(s).alphabet;
    int len = 1;
    long long cells = alphabet;
    while (cells < bins) {
      cells *= alphabet;
      ++len;
    }
    for (const Point& p : m.atoms) {
      const auto& sp = std::get<ShiftPoint>(p);
      std::string w;
      for (int i = 0; i < len; ++i) w.push_back(sp.at(static_cast<std::size_t>(i)));
      reps.push_back(ShiftPoint(alphabet, "", w));
      weights.push_back(unit);
    }
    CoarsenedMeasure out;
    out.measure = DiscreteMeasure::make(std::move(reps), std::move(weights));
    out.error_bound = Num(pow2_inv(len));
    return out;
  }
  bool circle = std::holds_alternative<CircleRotation>(s);
  for (const Point& p : m.atoms) {
    Num v = circle ? std::get<CirclePoint>(p).angle
                   : std::get<IntervalPoint>(p).value;
    long long b = bin_of(v, bins);
    Rat center(2 * b + 1, 2LL * bins);
    if (circle)
      reps.push_back(CirclePoint{Num(center)});
    else
      reps.push_back(IntervalPoint{Num(center)});
    weights.push_back(unit);
  }
  CoarsenedMeasure out;
  out.measure = DiscreteMeasure::make(std::move(reps), std::move(weights));
  // farthest point in a bin sits half a bin width from the center; the
  // circle metric doubles arc length
  out.error_bound = circle ? Num(Rat(1, bins)) : Num(Rat(1, 2LL * bins));
  return out;
}

MeasureLimitSetEstimate vset_estimate_seq(const System& s,
                                          const std::vector<Point>& seq,
                                          const std::vector<long long>& checkpoints,
                                          int coarsen_bins,
                                          const GammaOptions& opts) {
  if (checkpoints.empty()) throw Error("need at least one checkpoint");
  for (std::size_t i = 0; i + 1 < checkpoints.size(); ++i)
    if (checkpoints[i] >= checkpoints[i + 1])
      throw Error("checkpoints must be strictly increasing");
  if (checkpoints.back() > static_cast<long long>(seq.size()))
    throw Error("checkpoint beyond sequence length");
  MeasureLimitSetEstimate est;
  est.checkpoints = checkpoints;
  est.coarsen_bins = coarsen_bins;
  est.coarsen_error = Num(Rat(0));
  for (long long n : checkpoints) {
    EmpiricalMeasure m{std::vector<Point>(seq.begin(), seq.begin() + n)};
    CoarsenedMeasure c = coarsen(s, m, coarsen_bins);
    est.coarsen_error = num_max(est.coarsen_error, c.error_bound);
    est.snapshots.push_back(std::move(c.measure));
  }
  std::size_t k = est.snapshots.size();
  est.pairwise_gamma.assign(k, std::vector<Num>(k, Num(Rat(0))));
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i + 1; j < k; ++j) {
      GammaOptions flow_opts = opts;
      flow_opts.method = GammaMethod::kFlow;
      Num g = gamma_discrete(s, est.snapshots[i], est.snapshots[j], flow_opts).value;
      est.pairwise_gamma[i][j] = g;
      est.pairwise_gamma[j][i] = g;
    }
  }
  return est;
}

MeasureLimitSetEstimate vset_estimate(const System& s, const Point& x,
                                      const std::vector<long long>& checkpoints,
                                      int coarsen_bins, const GammaOptions& opts) {
  if (checkpoints.empty()) throw Error("need at least one checkpoint");
  std::vector<Point> o = orbit(s, x, checkpoints.back());
  return vset_estimate_seq(s, o, checkpoints, coarsen_bins, opts);
}

}  // namespace morbit

#include "morbit/shadowing.hpp"

#include <algorithm>
#include <future>

#include "morbit/random.hpp"

namespace morbit {

std::vector<long long> BlockSchedule::block_sizes() const {
  std::vector<long long> out;
  for (const ScheduleStage& st : stages) out.push_back(st.block_size());
  return out;
}

std::vector<long long> BlockSchedule::cumulative() const {
  std::vector<long long> out;
  long long acc = 0;
  for (const ScheduleStage& st : stages) out.push_back(acc += st.block_size());
  return out;
}

ScheduleReport schedule_validate(const System& s, const BlockSchedule& sched,
                                 const GammaOptions& opts) {
  ScheduleReport rep;
  if (sched.stages.empty()) {
    rep.violations.push_back("schedule has no stages");
    return rep;
  }
  for (std::size_t n = 0; n < sched.stages.size(); ++n) {
    const ScheduleStage& st = sched.stages[n];
    if (st.generic_points.empty())
      throw Error("stage " + std::to_string(n + 1) + " has no generic points");
    if (st.q < 1 || st.repeats < 1)
      throw Error("stage " + std::to_string(n + 1) + " has nonpositive q or repeats");
    for (const Point& y : st.generic_points) require_compatible(s, y);
  }
  rep.well_formed = true;
  rep.P = sched.block_sizes();
  rep.Q = sched.cumulative();

  GammaOptions flow_opts = opts;
  flow_opts.method = GammaMethod::kFlow;
  std::size_t count = sched.stages.size();
  for (std::size_t n = 0; n < count; ++n) {
    const ScheduleStage& st = sched.stages[n];
    // eps_n defaults to the chain gap gamma(mu_n, mu_{n+1}); 0 for the last.
    Num eps_n = Num(Rat(0));
    if (st.eps) {
      eps_n = Num(*st.eps);
    } else if (n + 1 < count) {
      eps_n = gamma_discrete(s, st.measure, sched.stages[n + 1].measure,
                             flow_opts).value;
    }
    rep.eps.push_back(eps_n);
    // average of the segment measures of the generic points
    std::vector<std::pair<Rat, DiscreteMeasure>> parts;
    Rat coef(1, st.p());
    for (const Point& y : st.generic_points)
      parts.push_back({coef, to_discrete(empirical(s, y, st.q))});
    Num gap = gamma_discrete(s, st.measure, convex_combination(parts),
                             flow_opts).value;
    rep.generic_gap.push_back(gap);
    if (gap > eps_n)
      rep.warnings.push_back("stage " + std::to_string(n + 1) +
                             ": generic-segment gap " + gap.str() +
                             " exceeds eps " + eps_n.str());
  }

  rep.strict_ok = true;
  for (std::size_t n = 0; n + 1 < count; ++n) {
    const ScheduleStage& cur = sched.stages[n];
    const ScheduleStage& nxt = sched.stages[n + 1];
    long long growth = (1LL << (n + 1)) * cur.p() * cur.q;  // 2^n, 1-based n
    if (nxt.p() < growth)
      rep.violations.push_back("stage " + std::to_string(n + 2) + ": p = " +
                               std::to_string(nxt.p()) + " < " +
                               std::to_string(growth));
    if (nxt.q < 2 * nxt.p())
      rep.violations.push_back("stage " + std::to_string(n + 2) + ": q = " +
                               std::to_string(nxt.q) + " < 2p");
    if (cur.repeats != nxt.p() * nxt.q)
      rep.violations.push_back("stage " + std::to_string(n + 1) +
                               ": repeats != p_{n+1} q_{n+1}");
  }
  if (!rep.violations.empty()) rep.strict_ok = false;
  if (sched.strict && !rep.strict_ok)
    rep.warnings.push_back("strict growth conditions violated");
  return rep;
}

Num PseudoOrbitSeq::jump_average(long long n) const {
  if (n < 1) throw Error("prefix must be >= 1");
  if (n > static_cast<long long>(points.size()))
    throw Error("prefix beyond sequence length");
  Num total(Rat(0));
  for (const Jump& j : jumps) {
    if (j.index >= n - 1) break;  // jumps sorted; d(T x_i, x_{i+1}) needs i+1 < n
    total += j.dist;
  }
  return total / Num(n);
}

PseudoOrbitSeq build_aapo(const System& s, const BlockSchedule& sched,
                          long long horizon) {
  std::vector<long long> q = sched.cumulative();
  if (horizon < 1 || horizon > q.back())
    throw Error("horizon must lie in [1, Q_final]");
  PseudoOrbitSeq seq;
  seq.points.reserve(static_cast<std::size_t>(horizon));
  for (std::size_t n = 0; n < sched.stages.size() &&
                          static_cast<long long>(seq.points.size()) < horizon;
       ++n) {
    const ScheduleStage& st = sched.stages[n];
    // segment orbits computed once per stage
    std::vector<std::vector<Point>> segs;
    for (const Point& y : st.generic_points) segs.push_back(orbit(s, y, st.q));
    for (long long k = 0; k < st.repeats; ++k) {
      for (const auto& seg : segs) {
        for (const Point& pt : seg) {
          seq.points.push_back(pt);
          if (static_cast<long long>(seq.points.size()) == horizon) break;
        }
        if (static_cast<long long>(seq.points.size()) == horizon) break;
      }
      if (static_cast<long long>(seq.points.size()) == horizon) break;
    }
  }
  // seams: segment boundaries every q_n points within stage n
  long long idx = 0;
  for (std::size_t n = 0; n < sched.stages.size(); ++n) {
    const ScheduleStage& st = sched.stages[n];
    long long segs_total = st.p() * st.repeats;
    for (long long g = 0; g < segs_total; ++g) {
      long long seam = idx + (g + 1) * st.q - 1;  // last index of a segment
      if (seam + 1 >= horizon) break;
      Num d = dist(s, apply_map(s, seq.points[static_cast<std::size_t>(seam)]),
                   seq.points[static_cast<std::size_t>(seam + 1)]);
      if (!(d == Num(Rat(0)))) seq.jumps.push_back({seam, d});
    }
    idx += st.block_size();
    if (idx >= horizon) break;
  }
  return seq;
}

Num aapo_prefix_bound(const BlockSchedule& sched, long long prefix) {
  if (prefix < 1) throw Error("prefix must be >= 1");
  std::vector<long long> q = sched.cumulative();
  if (prefix > q.back()) throw Error("prefix beyond the schedule");
  long long before = 0;
  Num seam_count(Rat(0));
  for (std::size_t n = 0; n < sched.stages.size(); ++n) {
    const ScheduleStage& st = sched.stages[n];
    if (prefix > q[n]) {
      seam_count += Num(st.p() * st.repeats);
      before = q[n];
      continue;
    }
    long long within = prefix - before;
    long long sweep = st.p() * st.q;
    long long k = within / sweep;  // completed sweeps
    seam_count += Num((k + 1) * st.p());
    break;
  }
  return seam_count / Num(prefix);
}

AapoReport is_aapo(const System& s, const std::vector<Point>& seq,
                   const std::vector<long long>& horizons, const Num& threshold) {
  if (horizons.empty()) throw Error("need at least one horizon");
  if (horizons.back() > static_cast<long long>(seq.size()))
    throw Error("horizon beyond sequence length");
  for (std::size_t i = 0; i + 1 < horizons.size(); ++i)
    if (horizons[i] >= horizons[i + 1])
      throw Error("horizons must be strictly increasing");
  AapoReport rep;
  rep.horizons = horizons;
  rep.threshold = threshold;
  Num total(Rat(0));
  long long done = 0;
  for (long long n : horizons) {
    for (long long i = done; i < n - 1; ++i) {
      total += dist(s, apply_map(s, seq[static_cast<std::size_t>(i)]),
                    seq[static_cast<std::size_t>(i + 1)]);
    }
    done = std::max(done, n - 1);
    rep.averages.push_back(total / Num(n));
  }
  rep.verdict = rep.averages.back() < threshold;
  return rep;
}

TraceResult trace_error(const System& s, const std::vector<Point>& seq,
                        const Point& x, const std::vector<long long>& horizons,
                        const TraceOptions& topts, int threads) {
  if (horizons.empty()) throw Error("need at least one horizon");
  for (long long n : horizons)
    if (n < 1 || n > static_cast<long long>(seq.size()))
      throw Error("horizon outside the sequence");
  std::vector<Point> xo = orbit(s, x, *std::max_element(horizons.begin(),
                                                        horizons.end()));
  bool one_dim = !std::holds_alternative<FullShift>(s);
  TraceResult res;
  res.horizons = horizons;
  res.costs.resize(horizons.size());
  res.methods.resize(horizons.size());
  res.subsampled.assign(horizons.size(), false);

  auto eval = [&](std::size_t idx) {
    long long n = horizons[idx];
    std::vector<Point> a(seq.begin(), seq.begin() + n);
    std::vector<Point> b(xo.begin(), xo.begin() + n);
    GammaOptions gopts;
    gopts.assignment_cap = topts.assignment_cap;
    if (n <= topts.assignment_cap) {
      gopts.method = GammaMethod::kAssignment;
      res.costs[idx] = gamma_lists(s, a, b, gopts).value;
      res.methods[idx] = "assignment";
      return;
    }
    if (one_dim) {
      GammaResult g = gamma_lists(s, a, b, GammaOptions{});
      res.costs[idx] = g.value;
      res.methods[idx] = g.method;
      return;
    }
    // seeded uniform index subsample of both empirical measures
    Rng rng(topts.subsample_seed + static_cast<uint64_t>(n));
    auto pick = [&](const std::vector<Point>& src) {
      std::vector<Point> out;
      std::uniform_int_distribution<std::size_t> d(0, src.size() - 1);
      for (int i = 0; i < topts.subsample_size; ++i) out.push_back(src[d(rng)]);
      return out;
    };
    std::vector<Point> sa = pick(a), sb = pick(b);
    gopts.method = GammaMethod::kAssignment;
    res.costs[idx] = gamma_lists(s, sa, sb, gopts).value;
    res.methods[idx] = "assignment_subsampled";
    res.subsampled[idx] = true;
  };
  if (threads > 1) {
    std::vector<std::future<void>> futs;
    for (std::size_t i = 0; i < horizons.size(); ++i)
      futs.push_back(std::async(std::launch::async, eval, i));
    for (auto& f : futs) f.get();
  } else {
    for (std::size_t i = 0; i < horizons.size(); ++i) eval(i);
  }
  return res;
}

VsetTransferReport vset_transfer_check(const System& s,
                                       const std::vector<Point>& seq_a,
                                       const std::vector<Point>& seq_b,
                                       const std::vector<long long>& checkpoints,
                                       const Num& tau, int coarsen_bins,
                                       const GammaOptions& opts) {
  if (seq_a.size() != seq_b.size())
    throw Error("sequences must have equal length");
  if (checkpoints.empty() ||
      checkpoints.back() > static_cast<long long>(seq_a.size()))
    throw Error("checkpoints outside the sequences");
  VsetTransferReport rep;
  rep.checkpoints = checkpoints;
  rep.tau = tau;
  for (long long n : checkpoints) {
    std::vector<Point> a(seq_a.begin(), seq_a.begin() + n);
    std::vector<Point> b(seq_b.begin(), seq_b.begin() + n);
    rep.checkpoint_gamma.push_back(gamma_lists(s, a, b, opts).value);
  }
  rep.all_below_tau =
      std::all_of(rep.checkpoint_gamma.begin(), rep.checkpoint_gamma.end(),
                  [&](const Num& g) { return g < tau; });
  rep.vset_a = vset_estimate_seq(s, seq_a, checkpoints, coarsen_bins, opts);
  rep.vset_b = vset_estimate_seq(s, seq_b, checkpoints, coarsen_bins, opts);
  rep.triangle_transfer_ok = true;
  rep.max_matrix_diff = Num(Rat(0));
  Num two_err = Num(2) * (rep.vset_a.coarsen_error + rep.vset_b.coarsen_error);
  std::size_t k = checkpoints.size();
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      Num diff = num_abs(rep.vset_a.pairwise_gamma[i][j] -
                         rep.vset_b.pairwise_gamma[i][j]);
      rep.max_matrix_diff = num_max(rep.max_matrix_diff, diff);
      // triangle through the raw checkpoint measures, padded by coarsening
      Num bound = rep.checkpoint_gamma[i] + rep.checkpoint_gamma[j] + two_err;
      if (diff > bound) rep.triangle_transfer_ok = false;
    }
  }
  return rep;
}

}  // namespace morbit

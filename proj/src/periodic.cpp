#include "morbit/periodic.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace morbit {

PeriodicOrbit make_periodic_orbit(const System& s, const Point& base,
                                  long long max_period) {
  PeriodicOrbit orb;
  orb.base = base;
  orb.points.push_back(base);
  Point cur = apply_map(s, base);
  while (!points_equal(cur, base)) {
    orb.points.push_back(cur);
    if (static_cast<long long>(orb.points.size()) > max_period)
      throw Error("point did not return within " + std::to_string(max_period) +
                  " steps: " + point_to_string(base));
    cur = apply_map(s, cur);
  }
  orb.period = static_cast<long long>(orb.points.size());
  orb.measure = to_discrete(EmpiricalMeasure{orb.points});
  return orb;
}

std::vector<PeriodicOrbit> enumerate_shift_periodic(int alphabet, int p,
                                                    long long cap) {
  if (p < 1) throw Error("period must be >= 1");
  double total = std::pow(static_cast<double>(alphabet), p);
  if (total > static_cast<double>(cap))
    throw Error("alphabet^p exceeds enumeration cap");
  System shift = FullShift{alphabet};
  std::set<std::string> canonical;  // primitive roots of minimal rotations
  std::string word(static_cast<std::size_t>(p), '0');
  auto min_rotation = [](const std::string& w) {
    std::string best = w;
    std::string cur = w;
    for (std::size_t r = 1; r < w.size(); ++r) {
      std::rotate(cur.begin(), cur.begin() + 1, cur.end());
      if (cur < best) best = cur;
    }
    return best;
  };
  for (;;) {
    canonical.insert(primitive_root(min_rotation(word)));
    // odometer increment
    int pos = p - 1;
    while (pos >= 0 && word[pos] == '0' + alphabet - 1) word[pos--] = '0';
    if (pos < 0) break;
    ++word[pos];
  }
  std::vector<PeriodicOrbit> out;
  for (const std::string& w : canonical)
    out.push_back(make_periodic_orbit(shift, ShiftPoint(alphabet, "", w)));
  std::sort(out.begin(), out.end(), [](const PeriodicOrbit& a, const PeriodicOrbit& b) {
    if (a.period != b.period) return a.period < b.period;
    return point_less(a.base, b.base);
  });
  return out;
}

namespace {

// Monotone branch of f^k: the affine map a x + b on [lo, hi].
struct Branch {
  Rat lo, hi;
  Rat a, b;
};

std::vector<Branch> compose_branches(const PiecewiseLinearInterval& f,
                                     const Rat& lo, const Rat& hi, int steps,
                                     long long cap) {
  std::vector<Branch> branches{{lo, hi, Rat(1), Rat(0)}};
  for (int step = 0; step < steps; ++step) {
    std::vector<Branch> next;
    for (const Branch& br : branches) {
      if (br.a == 0) {
        // constant branch: stays a single branch under composition
        Rat v = br.b;
        int j = f.piece_index(v);
        const auto& piece = f.pieces[static_cast<std::size_t>(j)];
        next.push_back({br.lo, br.hi, Rat(0), Rat(piece.slope * v + piece.intercept)});
        continue;
      }
      for (std::size_t j = 0; j < f.pieces.size(); ++j) {
        const Rat& cl = f.breakpoints[j];
        const Rat& cr = f.breakpoints[j + 1];
        // subdomain of [lo, hi] sent into piece j by a x + b
        Rat xl = (cl - br.b) / br.a;
        Rat xr = (cr - br.b) / br.a;
        if (br.a < 0) std::swap(xl, xr);
        Rat nlo = std::max(br.lo, xl);
        Rat nhi = std::min(br.hi, xr);
        if (!(nlo < nhi)) continue;  // empty or a shared boundary point
        const auto& piece = f.pieces[j];
        next.push_back({nlo, nhi, Rat(piece.slope * br.a),
                        Rat(piece.slope * br.b + piece.intercept)});
      }
    }
    branches = std::move(next);
    if (static_cast<long long>(branches.size()) > cap)
      throw Error("branch count exceeds cap during composition");
  }
  return branches;
}

}  // namespace

std::vector<PeriodicOrbit> interval_periodic_points(
    const PiecewiseLinearInterval& f, int p, long long branch_cap,
    long long* fixed_point_count) {
  if (p < 1) throw Error("period must be >= 1");
  std::vector<Branch> branches = compose_branches(f, Rat(0), Rat(1), p, branch_cap);
  std::vector<Rat> solutions;
  for (const Branch& br : branches) {
    if (br.a == 1) {
      if (br.b == 0)
        throw Error("a branch of the p-fold composition is the identity; "
                    "continuum of periodic points");
      continue;
    }
    Rat x = br.b / (Rat(1) - br.a);
    if (br.lo <= x && x <= br.hi) solutions.push_back(x);
  }
  std::sort(solutions.begin(), solutions.end());
  solutions.erase(std::unique(solutions.begin(), solutions.end()), solutions.end());
  if (fixed_point_count)
    *fixed_point_count = static_cast<long long>(solutions.size());
  System sys = f;
  std::vector<PeriodicOrbit> out;
  std::set<Rat> seen;
  for (const Rat& x : solutions) {
    if (seen.count(x)) continue;
    PeriodicOrbit orb = make_periodic_orbit(sys, IntervalPoint{Num(x)}, p);
    for (const Point& q : orb.points) seen.insert(std::get<IntervalPoint>(q).value.rat());
    out.push_back(std::move(orb));
  }
  std::sort(out.begin(), out.end(), [](const PeriodicOrbit& a, const PeriodicOrbit& b) {
    if (a.period != b.period) return a.period < b.period;
    return point_less(a.base, b.base);
  });
  return out;
}

namespace {

// Exact image of a closed interval under a continuous piecewise-linear map.
std::pair<Rat, Rat> pwl_image(const PiecewiseLinearInterval& f, const Rat& lo,
                              const Rat& hi) {
  Rat mn = f.eval(lo), mx = mn;
  auto consider = [&](const Rat& v) {
    if (v < mn) mn = v;
    if (v > mx) mx = v;
  };
  consider(f.eval(hi));
  for (const Rat& b : f.breakpoints)
    if (lo < b && b < hi) consider(f.eval(b));
  return {mn, mx};
}

}  // namespace

std::optional<std::size_t> covering_violation(const PiecewiseLinearInterval& f,
                                              const CoveringChain& chain) {
  if (chain.intervals.empty()) throw Error("empty covering chain");
  for (std::size_t i = 0; i < chain.intervals.size(); ++i) {
    const auto& [lo, hi] = chain.intervals[i];
    if (lo > hi || lo < 0 || hi > 1) throw Error("malformed chain interval");
    auto [mn, mx] = pwl_image(f, lo, hi);
    const auto& [nlo, nhi] = chain.intervals[(i + 1) % chain.intervals.size()];
    if (mn > nlo || mx < nhi) return i;
  }
  return std::nullopt;
}

namespace {

// Crossing points of f with the level v inside [lo, hi], ascending.
std::vector<Rat> level_crossings(const PiecewiseLinearInterval& f, const Rat& lo,
                                 const Rat& hi, const Rat& v) {
  std::vector<Rat> xs;
  for (std::size_t j = 0; j < f.pieces.size(); ++j) {
    Rat pl = std::max(lo, f.breakpoints[j]);
    Rat pr = std::min(hi, f.breakpoints[j + 1]);
    if (pl > pr) continue;
    const auto& piece = f.pieces[j];
    if (piece.slope == 0) {
      if (piece.intercept == v) {
        xs.push_back(pl);
        xs.push_back(pr);
      }
      continue;
    }
    Rat x = (v - piece.intercept) / piece.slope;
    if (pl <= x && x <= pr) xs.push_back(x);
  }
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  return xs;
}

// Leftmost closed subinterval K of [lo, hi] with f(K) exactly [alpha, beta].
std::pair<Rat, Rat> onto_subinterval(const PiecewiseLinearInterval& f,
                                     const Rat& lo, const Rat& hi,
                                     const Rat& alpha, const Rat& beta) {
  if (alpha == beta) {
    std::vector<Rat> xs = level_crossings(f, lo, hi, alpha);
    if (xs.empty()) throw Error("covering property violated (level missing)");
    return {xs.front(), xs.front()};
  }
  std::vector<Rat> a_cross = level_crossings(f, lo, hi, alpha);
  std::vector<Rat> b_cross = level_crossings(f, lo, hi, beta);
  struct Mark {
    Rat x;
    bool is_beta;
  };
  std::vector<Mark> marks;
  for (const Rat& x : a_cross) marks.push_back({x, false});
  for (const Rat& x : b_cross) marks.push_back({x, true});
  std::sort(marks.begin(), marks.end(),
            [](const Mark& m1, const Mark& m2) { return m1.x < m2.x; });
  auto within = [&](const Rat& s, const Rat& t) {
    // endpoint values are alpha/beta; interior extrema sit at breakpoints
    for (const Rat& b : f.breakpoints) {
      if (s < b && b < t) {
        Rat v = f.eval(b);
        if (v < alpha || v > beta) return false;
      }
    }
    return true;
  };
  for (std::size_t i = 0; i + 1 < marks.size(); ++i) {
    if (marks[i].is_beta == marks[i + 1].is_beta) continue;
    if (marks[i].x == marks[i + 1].x) continue;
    if (within(marks[i].x, marks[i + 1].x)) return {marks[i].x, marks[i + 1].x};
  }
  throw Error("covering property violated (no onto subinterval)");
}

}  // namespace

PeriodicOrbit loop_periodic_point(const PiecewiseLinearInterval& f,
                                  const CoveringChain& chain) {
  if (auto bad = covering_violation(f, chain))
    throw Error("chain covering fails at link " + std::to_string(*bad));
  std::size_t m = chain.intervals.size();
  // Backward pass: A[i] maps exactly onto A[i+1]; A[m] is the wrap target.
  std::vector<std::pair<Rat, Rat>> a(m + 1);
  a[m] = chain.intervals[0];
  for (std::size_t i = m; i-- > 0;) {
    const auto& [lo, hi] = chain.intervals[i];
    a[i] = onto_subinterval(f, lo, hi, a[i + 1].first, a[i + 1].second);
  }
  // f^m maps A[0] onto I_0 which contains A[0]; solve per branch.
  std::vector<Branch> branches =
      compose_branches(f, a[0].first, a[0].second, static_cast<int>(m), 1 << 20);
  std::optional<Rat> found;
  for (const Branch& br : branches) {
    if (br.a == 1) {
      if (br.b == 0) {
        if (!found || br.lo < *found) found = br.lo;
      }
      continue;
    }
    Rat x = br.b / (Rat(1) - br.a);
    if (br.lo <= x && x <= br.hi)
      if (!found || x < *found) found = x;
  }
  if (!found) throw Error("no fixed point on the refined tube (unexpected)");
  // sanity: the orbit follows the chain
  System sys = f;
  Point cur = IntervalPoint{Num(*found)};
  for (std::size_t i = 0; i < m; ++i) {
    const Rat& v = std::get<IntervalPoint>(cur).value.rat();
    if (v < chain.intervals[i].first || v > chain.intervals[i].second)
      throw Error("refined periodic point escapes the chain (unexpected)");
    cur = apply_map(sys, cur);
  }
  return make_periodic_orbit(sys, IntervalPoint{Num(*found)},
                             static_cast<long long>(m));
}

OmegaIntervalsReport omega_limit_intervals(const System& s, const Point& y,
                                           int level, long long burn_in,
                                           long long samples) {
  if (level < 0 || level > 20) throw Error("level out of range");
  if (burn_in < 1 || samples < 1) throw Error("burn_in and samples must be >= 1");
  bool pwl = std::holds_alternative<PiecewiseLinearInterval>(s);
  if (!pwl && !std::holds_alternative<GeneralInterval>(s))
    throw Error("omega-limit intervals need an interval system");
  long long block = 1LL << level;
  long long total = block * (burn_in + samples);
  std::vector<Point> o = orbit(s, y, total);
  OmegaIntervalsReport rep;
  bool exact = std::get<IntervalPoint>(o.front()).value.exact();
  Rat pad = exact ? Rat(0) : Rat(1, 1000000000);
  rep.padding = Num(pad);
  for (long long c = 0; c < block; ++c) {
    long long first = c + block * burn_in;
    Num mn = std::get<IntervalPoint>(o[static_cast<std::size_t>(first)]).value;
    Num mx = mn;
    for (long long k = burn_in; k < burn_in + samples; ++k) {
      const Num& v =
          std::get<IntervalPoint>(o[static_cast<std::size_t>(c + block * k)]).value;
      mn = num_min(mn, v);
      mx = num_max(mx, v);
    }
    if (c == block - 1 && block * burn_in - 1 >= 0) {
      // extra pre-window sample so the wrap image covers the first class
      const Num& v = std::get<IntervalPoint>(
                         o[static_cast<std::size_t>(block * burn_in - 1)])
                         .value;
      mn = num_min(mn, v);
      mx = num_max(mx, v);
    }
    Rat lo = exact ? mn.rat() : rat_from_double(mn.value());
    Rat hi = exact ? mx.rat() : rat_from_double(mx.value());
    lo = std::max(Rat(0), Rat(lo - pad));
    hi = std::min(Rat(1), Rat(hi + pad));
    rep.chain.intervals.push_back({lo, hi});
    rep.diameters.push_back(Num(Rat(hi - lo)));
  }
  if (pwl) {
    rep.first_violation =
        covering_violation(std::get<PiecewiseLinearInterval>(s), rep.chain);
    rep.covering_ok = !rep.first_violation.has_value();
  } else {
    // float map: sampled check, image hull from the recorded samples
    rep.covering_ok = true;
    for (long long c = 0; c < block && rep.covering_ok; ++c) {
      const auto& [nlo, nhi] = rep.chain.intervals[static_cast<std::size_t>(
          (c + 1) % block)];
      const auto& gen = std::get<GeneralInterval>(s);
      double lo = rat_to_double(rep.chain.intervals[static_cast<std::size_t>(c)].first);
      double hi = rat_to_double(rep.chain.intervals[static_cast<std::size_t>(c)].second);
      double mn = gen.map(lo), mx = mn;
      for (int g = 1; g <= 64; ++g) {
        double v = gen.map(lo + (hi - lo) * g / 64.0);
        mn = std::min(mn, v);
        mx = std::max(mx, v);
      }
      if (Rat(rat_from_double(mn)) > nlo || Rat(rat_from_double(mx)) < nhi) {
        rep.covering_ok = false;
        rep.first_violation = static_cast<std::size_t>(c);
      }
    }
  }
  return rep;
}

namespace {

struct Candidate {
  long long order_period;  // least period (truncation length for closings)
  PeriodicOrbit orbit;
};

std::vector<Candidate> explicit_candidates(const PeriodicSource& k,
                                           const SearchCaps& caps) {
  std::vector<Candidate> out;
  for (const PeriodicOrbit& orb : k.orbits)
    if (orb.period <= caps.period_cap) out.push_back({orb.period, orb});
  std::sort(out.begin(), out.end(), [](const Candidate& a, const Candidate& b) {
    if (a.order_period != b.order_period) return a.order_period < b.order_period;
    return point_less(a.orbit.base, b.orbit.base);
  });
  return out;
}

std::string word_prefix(const ShiftPoint& p, long long n) {
  std::string w;
  w.reserve(static_cast<std::size_t>(n));
  for (long long i = 0; i < n; ++i) w.push_back(p.at(static_cast<std::size_t>(i)));
  return w;
}

DensityResult density_search(const System& s, const PeriodicSource& k,
                             const std::vector<Point>& ys, const Num& eps,
                             long long min_horizon, const SearchCaps& caps,
                             const GammaOptions& opts_in) {
  if (ys.empty()) throw Error("density check needs at least one target point");
  long long kk = static_cast<long long>(ys.size());
  GammaOptions opts = opts_in;
  opts.assignment_cap = caps.assignment_cap;
  bool shift = std::holds_alternative<FullShift>(s);
  long long len_cap = caps.horizon_cap;
  if (shift) len_cap = std::min<long long>(len_cap, caps.assignment_cap);

  DensityResult res;
  res.caps = caps;
  std::string target_desc = point_to_string(ys[0]);
  for (std::size_t j = 1; j < ys.size(); ++j)
    target_desc += " | " + point_to_string(ys[j]);

  // Stitched target: orbit segments of each y_j, length n each.
  std::vector<std::vector<Point>> target_orbits;
  for (const Point& y : ys) target_orbits.push_back({y});
  auto stitched_target = [&](long long n) {
    std::vector<Point> z;
    z.reserve(static_cast<std::size_t>(kk * n));
    for (auto& to : target_orbits) {
      while (static_cast<long long>(to.size()) < n)
        to.push_back(apply_map(s, to.back()));
      z.insert(z.end(), to.begin(), to.begin() + n);
    }
    return z;
  };

  auto consider = [&](const PeriodicOrbit& orb, long long n) -> bool {
    long long len = kk * n;
    if (len < 1 || len > len_cap) return false;
    std::vector<Point> z = stitched_target(n);
    std::vector<Point> xo = orbit(s, orb.base, len);
    Num cost = gamma_lists(s, z, xo, opts).value;
    ++res.candidates_tried;
    if (!res.best || cost < res.best->cost)
      res.best = CandidateRecord{point_to_string(orb.base), len, cost};
    if (cost < eps) {
      res.witness = DensityWitness{orb, len, cost, target_desc};
      return true;
    }
    return false;
  };

  struct Entry {
    long long period;
    bool truncation;
    long long q;       // truncation length when truncation
    std::size_t idx;   // explicit index otherwise
  };
  std::vector<Candidate> expl = explicit_candidates(k, caps);
  std::vector<Entry> entries;
  for (std::size_t i = 0; i < expl.size(); ++i)
    entries.push_back({expl[i].order_period, false, 0, i});
  if (k.shift_closing && shift && kk == 1) {
    for (long long q = std::max<long long>(min_horizon, 1);
         q <= std::min<long long>(caps.period_cap, len_cap); ++q)
      entries.push_back({q, true, q, 0});
  }
  std::stable_sort(entries.begin(), entries.end(),
                   [](const Entry& a, const Entry& b) { return a.period < b.period; });

  for (const Entry& e : entries) {
    if (e.truncation) {
      const auto& sp = std::get<ShiftPoint>(ys[0]);
      ShiftPoint z(sp.alphabet, "", word_prefix(sp, e.q));
      PeriodicOrbit orb = make_periodic_orbit(s, z, e.q);
      if (consider(orb, e.q)) return res;  // n = q >= min_horizon by loop range
      continue;
    }
    const PeriodicOrbit& orb = expl[e.idx].orbit;
    long long p = orb.period;
    long long g = std::gcd(p, kk);
    long long step = p / g;  // n must make k n divisible by p
    long long n0 = step * ((std::max<long long>(min_horizon, 1) + step - 1) / step);
    long long n = n0;
    for (int round = 0; round < caps.rounds; ++round, n *= 2) {
      if (kk * n > len_cap) break;
      if (consider(orb, n)) return res;
    }
  }
  return res;
}

}  // namespace

DensityResult check_density_ergodic(const System& s, const PeriodicSource& k,
                                    const Point& y, const Num& eps,
                                    long long min_horizon, const SearchCaps& caps,
                                    const GammaOptions& opts) {
  return density_search(s, k, {y}, eps, min_horizon, caps, opts);
}

DensityResult check_density_convex(const System& s, const PeriodicSource& k,
                                   const std::vector<Point>& ys, const Num& eps,
                                   long long min_horizon, const SearchCaps& caps,
                                   const GammaOptions& opts) {
  return density_search(s, k, ys, eps, min_horizon, caps, opts);
}

namespace {

long long floor_times(const Num& factor, long long p) {
  // largest q with q <= factor * p
  Num bound = factor * Num(p);
  if (bound.exact()) return rat_floor(bound.rat()).convert_to<long long>();
  return static_cast<long long>(std::floor(bound.value() + 1e-12));
}

}  // namespace

ClosableResult check_closable(const System& s, const PeriodicSource& k,
                              const Point& x, const Num& eps, long long min_n,
                              const SearchCaps& caps) {
  ClosableResult res;
  res.caps = caps;
  bool shift = std::holds_alternative<FullShift>(s);
  std::vector<Candidate> expl = explicit_candidates(k, caps);
  std::vector<Point> xo{x};
  auto x_orbit_prefix = [&](long long n) {
    while (static_cast<long long>(xo.size()) < n) xo.push_back(apply_map(s, xo.back()));
  };
  Num one_plus_eps = Num(1) + eps;
  for (long long p = std::max<long long>(min_n, 1); p <= caps.horizon_cap; ++p) {
    long long qmax = std::min(floor_times(one_plus_eps, p), caps.horizon_cap);
    for (long long q = p; q <= qmax; ++q) {
      auto try_candidate = [&](const PeriodicOrbit& orb) -> bool {
        x_orbit_prefix(p);
        Num sup(Rat(0));
        std::vector<Point> yo = orbit(s, orb.base, p);
        for (long long i = 0; i < p; ++i) {
          sup = num_max(sup, dist(s, xo[static_cast<std::size_t>(i)],
                                  yo[static_cast<std::size_t>(i)]));
          if (sup >= eps && res.best && res.best->cost <= sup) break;
        }
        if (!res.best || sup < res.best->cost)
          res.best = CandidateRecord{point_to_string(orb.base), q, sup};
        if (sup < eps) {
          res.witness = ClosableWitness{p, q, orb, sup};
          return true;
        }
        return false;
      };
      for (const Candidate& c : expl) {
        if (q % c.orbit.period != 0) continue;
        if (try_candidate(c.orbit)) return res;
      }
      if (k.shift_closing && shift) {
        const auto& sp = std::get<ShiftPoint>(x);
        ShiftPoint z(sp.alphabet, "", word_prefix(sp, q));
        if (try_candidate(make_periodic_orbit(s, z, q))) return res;
      }
    }
  }
  return res;
}

Num closable_mean_bound(const System& s, const Point& x, const Point& y,
                        long long q) {
  if (q < 1) throw Error("period must be >= 1");
  std::vector<Point> yo = orbit(s, y, q + 1);
  if (!points_equal(yo.back(), y))
    throw Error("point is not q-periodic: " + point_to_string(y));
  std::vector<Point> xo = orbit(s, x, q);
  Num total(Rat(0));
  for (long long i = 0; i < q; ++i)
    total += dist(s, xo[static_cast<std::size_t>(i)], yo[static_cast<std::size_t>(i)]);
  return total / Num(q);
}

LinkableResult check_linkable_pair(const System& s, const PeriodicOrbit& y1,
                                   const PeriodicOrbit& y2, const Rat& lambda,
                                   const Num& eps, const PeriodicSource& k,
                                   const SearchCaps& caps,
                                   const GammaOptions& opts_in) {
  if (lambda < 0 || lambda > 1) throw Error("lambda must be in [0, 1]");
  LinkableResult res;
  res.caps = caps;
  GammaOptions opts = opts_in;
  opts.assignment_cap = caps.assignment_cap;
  bool shift = std::holds_alternative<FullShift>(s);
  std::vector<Candidate> expl = explicit_candidates(k, caps);
  Num one_plus_eps = Num(1) + eps;
  long long len_cap = std::min<long long>(caps.horizon_cap, caps.assignment_cap);

  auto try_candidate = [&](const PeriodicOrbit& z, long long p1, long long p2,
                           long long q1, long long q2) -> bool {
    std::vector<Point> stitched = orbit(s, y1.base, q1);
    std::vector<Point> tail = orbit(s, y2.base, q2 - q1);
    stitched.insert(stitched.end(), tail.begin(), tail.end());
    Num cost = gamma_lists(s, stitched, orbit(s, z.base, q2), opts).value;
    if (!res.best || cost < res.best->cost)
      res.best = CandidateRecord{point_to_string(z.base), q2, cost};
    if (cost < eps) {
      res.witness = LinkableWitness{p1, p2, q1, q2, z, cost};
      return true;
    }
    return false;
  };

  for (long long ab = 2; ; ++ab) {
    if (y1.period * (ab - 1) + y2.period > len_cap &&
        y1.period + y2.period * (ab - 1) > len_cap)
      break;  // every split is already too long
    for (long long aa = 1; aa < ab; ++aa) {
      long long bb = ab - aa;
      long long p1 = aa * y1.period;
      long long p2 = bb * y2.period;
      // condition (1): |p1/(p1+p2) - lambda| <= eps
      Num ratio = Num(Rat(p1, p1 + p2));
      if (num_abs(ratio - Num(lambda)) > eps) continue;
      long long q1max = std::min(floor_times(one_plus_eps, p1), len_cap);
      for (long long q1 = p1; q1 <= q1max; ++q1) {
        long long dq_max = floor_times(one_plus_eps, p2);
        for (long long dq = p2; dq <= dq_max; ++dq) {
          long long q2 = q1 + dq;
          if (q2 > len_cap) break;
          for (const Candidate& c : expl) {
            if (q2 % c.orbit.period != 0) continue;
            if (try_candidate(c.orbit, p1, p2, q1, q2)) return res;
          }
          if (k.shift_closing && shift) {
            std::string w = word_prefix(std::get<ShiftPoint>(y1.base), q1) +
                            word_prefix(std::get<ShiftPoint>(y2.base), q2 - q1);
            PeriodicOrbit z =
                make_periodic_orbit(s, ShiftPoint(std::get<FullShift>(s).alphabet,
                                                  "", w),
                                    q2);
            if (try_candidate(z, p1, p2, q1, q2)) return res;
          }
        }
      }
    }
  }
  return res;
}

}  // namespace morbit

#include "morbit/gamma.hpp"

#include <algorithm>
#include <numeric>

namespace morbit {

namespace {

struct WeightedValue {
  Num x;
  Rat w;
};

std::vector<WeightedValue> line_values(const DiscreteMeasure& m, bool circle) {
  std::vector<WeightedValue> out;
  out.reserve(m.size());
  for (std::size_t i = 0; i < m.size(); ++i) {
    const Point& p = m.support[i];
    if (circle) {
      const auto* cp = std::get_if<CirclePoint>(&p);
      if (!cp) throw Error("expected circle points");
      out.push_back({cp->angle, m.weights[i]});
    } else {
      const auto* ip = std::get_if<IntervalPoint>(&p);
      if (!ip) throw Error("expected interval points");
      out.push_back({ip->value, m.weights[i]});
    }
  }
  return out;
}

// Merged event list: position, mu-weight minus nu-weight at that position.
std::vector<WeightedValue> signed_events(const DiscreteMeasure& mu,
                                         const DiscreteMeasure& nu,
                                         bool circle) {
  std::vector<WeightedValue> ev = line_values(mu, circle);
  for (auto& e : line_values(nu, circle)) ev.push_back({e.x, Rat(-e.w)});
  std::sort(ev.begin(), ev.end(),
            [](const WeightedValue& a, const WeightedValue& b) { return a.x < b.x; });
  return ev;
}

bool all_exact_events(const std::vector<WeightedValue>& ev) {
  return std::all_of(ev.begin(), ev.end(),
                     [](const WeightedValue& e) { return e.x.exact(); });
}

}  // namespace

Num w1_interval_cdf(const DiscreteMeasure& mu, const DiscreteMeasure& nu) {
  auto ev = signed_events(mu, nu, false);
  bool exact = all_exact_events(ev);
  Num total = exact ? Num(Rat(0)) : Num(0.0);
  Num f = exact ? Num(Rat(0)) : Num(0.0);  // running F_mu - F_nu
  for (std::size_t k = 0; k + 1 <= ev.size(); ++k) {
    Rat df = ev[k].w;
    std::size_t j = k;
    while (j + 1 < ev.size() && ev[j + 1].x == ev[k].x) {
      ++j;
      df += ev[j].w;
    }
    f += Num(df);
    Num right = (j + 1 < ev.size()) ? ev[j + 1].x : Num(exact ? Num(Rat(1)) : Num(1.0));
    total += num_abs(f) * (right - ev[k].x);
    k = j;
  }
  return total;
}

Num w1_circle_cdf(const DiscreteMeasure& mu, const DiscreteMeasure& nu) {
  auto ev = signed_events(mu, nu, true);
  bool exact = all_exact_events(ev);
  // Piecewise-constant G = F_mu - F_nu on [0,1): segments between events,
  // plus the wrap segment [last event, 1) + [0, first event) where G = 0.
  struct Seg {
    Num g;
    Num len;
  };
  std::vector<Seg> segs;
  Num zero = exact ? Num(Rat(0)) : Num(0.0);
  Num one = exact ? Num(Rat(1)) : Num(1.0);
  if (ev.empty()) return zero;
  // leading segment [0, first event): G = 0
  if (ev.front().x > zero) segs.push_back({zero, ev.front().x});
  Num g = zero;
  for (std::size_t k = 0; k < ev.size(); ++k) {
    Rat df = ev[k].w;
    std::size_t j = k;
    while (j + 1 < ev.size() && ev[j + 1].x == ev[k].x) {
      ++j;
      df += ev[j].w;
    }
    g += Num(df);
    Num right = (j + 1 < ev.size()) ? ev[j + 1].x : one;
    if (right > ev[k].x) segs.push_back({g, right - ev[k].x});
    k = j;
  }
  // Optimal cut value t* is a weighted median of the segment levels.
  std::vector<std::size_t> order(segs.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return segs[a].g < segs[b].g;
  });
  Num half = exact ? Num(Rat(1, 2)) : Num(0.5);
  Num acc = zero;
  Num tstar = segs[order.back()].g;
  for (std::size_t idx : order) {
    acc += segs[idx].len;
    if (acc >= half) {
      tstar = segs[idx].g;
      break;
    }
  }
  Num total = zero;
  for (const Seg& s : segs) total += num_abs(s.g - tstar) * s.len;
  return Num(2) * total;  // metric is twice the arc length
}

namespace {

GammaResult via_assignment(const System& s, const std::vector<Point>& a,
                           const std::vector<Point>& b, const GammaOptions& opts) {
  if (a.size() != b.size())
    throw Error("assignment route needs equal-size point lists");
  AssignmentResult r = assignment_cost(cost_matrix(s, a, b), opts.assignment_cap);
  return {r.cost, "assignment"};
}

GammaResult via_flow(const System& s, const DiscreteMeasure& mu,
                     const DiscreteMeasure& nu, const GammaOptions& opts) {
  TransportPlan plan = w1_discrete(mu, nu, s, opts.flow_scale_cap);
  return {plan.cost, "flow"};
}

bool interval_space(const System& s) {
  return std::holds_alternative<PiecewiseLinearInterval>(s) ||
         std::holds_alternative<GeneralInterval>(s);
}

}  // namespace

GammaResult gamma_discrete(const System& s, const DiscreteMeasure& mu,
                           const DiscreteMeasure& nu, const GammaOptions& opts) {
  switch (opts.method) {
    case GammaMethod::kCdf1d:
      return {w1_interval_cdf(mu, nu), "cdf1d"};
    case GammaMethod::kCircleCdf:
      return {w1_circle_cdf(mu, nu), "circle_cdf"};
    case GammaMethod::kFlow:
      return via_flow(s, mu, nu, opts);
    case GammaMethod::kSorted1d:
    case GammaMethod::kAssignment:
      throw Error("list-based gamma method applied to discrete measures");
    case GammaMethod::kAuto:
      break;
  }
  if (interval_space(s)) return {w1_interval_cdf(mu, nu), "cdf1d"};
  if (std::holds_alternative<CircleRotation>(s))
    return {w1_circle_cdf(mu, nu), "circle_cdf"};
  return via_flow(s, mu, nu, opts);
}

GammaResult gamma_lists(const System& s, const std::vector<Point>& a,
                        const std::vector<Point>& b, const GammaOptions& opts) {
  switch (opts.method) {
    case GammaMethod::kAssignment:
      return via_assignment(s, a, b, opts);
    case GammaMethod::kSorted1d:
      return {w1_sorted_interval(EmpiricalMeasure{a}, EmpiricalMeasure{b}),
              "sorted1d"};
    case GammaMethod::kCdf1d:
    case GammaMethod::kCircleCdf:
    case GammaMethod::kFlow:
      return gamma_discrete(s, to_discrete(EmpiricalMeasure{a}),
                            to_discrete(EmpiricalMeasure{b}), opts);
    case GammaMethod::kAuto:
      break;
  }
  if (interval_space(s)) {
    if (a.size() == b.size())
      return {w1_sorted_interval(EmpiricalMeasure{a}, EmpiricalMeasure{b}),
              "sorted1d"};
    return {w1_interval_cdf(to_discrete(EmpiricalMeasure{a}),
                            to_discrete(EmpiricalMeasure{b})),
            "cdf1d"};
  }
  if (std::holds_alternative<CircleRotation>(s))
    return {w1_circle_cdf(to_discrete(EmpiricalMeasure{a}),
                          to_discrete(EmpiricalMeasure{b})),
            "circle_cdf"};
  // Shift space: deduplication can shrink eventually periodic orbits a lot;
  // fall back to the assignment when it does not.
  DiscreteMeasure dmu = to_discrete(EmpiricalMeasure{a});
  DiscreteMeasure dnu = to_discrete(EmpiricalMeasure{b});
  if (a.size() == b.size() &&
      dmu.size() + dnu.size() > (a.size() * 3) / 2 &&
      static_cast<int>(a.size()) <= opts.assignment_cap)
    return via_assignment(s, a, b, opts);
  return via_flow(s, dmu, dnu, opts);
}

}  // namespace morbit

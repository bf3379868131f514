// Test-side oracles, independent of the library's solver paths.
#pragma once

#include <algorithm>
#include <numeric>
#include <vector>

#include "morbit/measure.hpp"
#include "morbit/random.hpp"
#include "morbit/transport.hpp"

namespace morbit::testing {

// Exhaustive minimum over all permutations; n <= 9 or so.
inline Num brute_force_assignment(const CostMatrix& c) {
  if (c.rows != c.cols) throw Error("square matrices only");
  std::vector<int> perm(static_cast<std::size_t>(c.rows));
  std::iota(perm.begin(), perm.end(), 0);
  bool exact = c.all_exact();
  Num best = exact ? Num(Rat(c.rows + 1)) : Num(double(c.rows + 1));
  do {
    Num total = exact ? Num(Rat(0)) : Num(0.0);
    for (int i = 0; i < c.rows; ++i) total += c.at(i, perm[static_cast<std::size_t>(i)]);
    best = num_min(best, total);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best / Num(c.rows);
}

// Order-preserving cyclic matching on the circle: optimal transport between
// equal-size uniform circle measures is a cyclic shift of the sorted lists.
inline Num circle_cyclic_cost(const System& s, std::vector<Point> a,
                              std::vector<Point> b) {
  auto key = [](const Point& p) { return std::get<CirclePoint>(p).angle; };
  std::sort(a.begin(), a.end(),
            [&](const Point& x, const Point& y) { return key(x) < key(y); });
  std::sort(b.begin(), b.end(),
            [&](const Point& x, const Point& y) { return key(x) < key(y); });
  std::size_t n = a.size();
  bool exact = key(a[0]).exact() && key(b[0]).exact();
  Num best = exact ? Num(Rat(2)) : Num(2.0);
  for (std::size_t off = 0; off < n; ++off) {
    Num total = exact ? Num(Rat(0)) : Num(0.0);
    for (std::size_t i = 0; i < n; ++i) total += dist(s, a[i], b[(i + off) % n]);
    best = num_min(best, total);
  }
  return best / Num(static_cast<long long>(n));
}

// Random orbit-based empirical measures per variant (exact data).
struct RandomInstance {
  System system;
  std::vector<Point> a, b;
};

inline RandomInstance random_interval_instance(Rng& rng, int n) {
  RandomInstance inst;
  inst.system = PiecewiseLinearInterval::tent();
  // odd denominators keep tent orbits nicely non-collapsing
  auto pick = [&]() {
    std::uniform_int_distribution<long long> d(1, 120);
    long long q = 2 * d(rng) + 1;
    std::uniform_int_distribution<long long> nm(0, q);
    return Point(IntervalPoint{Num(Rat(nm(rng), q))});
  };
  inst.a = orbit(inst.system, pick(), n);
  inst.b = orbit(inst.system, pick(), n);
  return inst;
}

inline RandomInstance random_circle_instance(Rng& rng, int n, bool exact) {
  RandomInstance inst;
  if (exact) {
    inst.system = CircleRotation{Num(random_rational(rng, 64))};
    inst.a = orbit(inst.system, circle_point(Num(random_rational(rng, 97))), n);
    inst.b = orbit(inst.system, circle_point(Num(random_rational(rng, 89))), n);
  } else {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    inst.system = CircleRotation{Num(0.6180339887498949)};
    inst.a = orbit(inst.system, circle_point(Num(u(rng))), n);
    inst.b = orbit(inst.system, circle_point(Num(u(rng))), n);
  }
  return inst;
}

inline RandomInstance random_shift_instance(Rng& rng, int n) {
  RandomInstance inst;
  inst.system = FullShift{2};
  std::uniform_int_distribution<std::size_t> pre_len(0, 3), per_len(1, 6);
  auto pick = [&]() {
    return Point(ShiftPoint(2, random_word(rng, 2, pre_len(rng)),
                            random_word(rng, 2, per_len(rng))));
  };
  inst.a = orbit(inst.system, pick(), n);
  inst.b = orbit(inst.system, pick(), n);
  return inst;
}

inline RandomInstance random_float_interval_instance(Rng& rng, int n) {
  RandomInstance inst;
  inst.system = make_general_interval("logistic");
  std::uniform_real_distribution<double> u(0.05, 0.95);
  inst.a = orbit(inst.system, IntervalPoint{Num(u(rng))}, n);
  inst.b = orbit(inst.system, IntervalPoint{Num(u(rng))}, n);
  return inst;
}

inline bool feasible_plan(const TransportPlan& plan, const DiscreteMeasure& mu,
                          const DiscreteMeasure& nu) {
  std::vector<Rat> row(mu.size(), Rat(0)), col(nu.size(), Rat(0));
  for (const auto& arc : plan.arcs) {
    if (arc.mass < 0) return false;
    row[static_cast<std::size_t>(arc.from)] += arc.mass;
    col[static_cast<std::size_t>(arc.to)] += arc.mass;
  }
  for (std::size_t i = 0; i < mu.size(); ++i)
    if (row[i] != mu.weights[i]) return false;
  for (std::size_t j = 0; j < nu.size(); ++j)
    if (col[j] != nu.weights[j]) return false;
  return true;
}

}  // namespace morbit::testing

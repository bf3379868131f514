#include "morbit/decomp.hpp"

#include <algorithm>

#include "morbit/random.hpp"

namespace morbit {

IntervalUnion IntervalUnion::make(std::vector<std::pair<Rat, Rat>> parts) {
  for (auto& [lo, hi] : parts)
    if (lo > hi) throw Error("interval with lo > hi");
  std::sort(parts.begin(), parts.end());
  IntervalUnion out;
  for (auto& part : parts) {
    if (!out.parts.empty() && part.first <= out.parts.back().second) {
      out.parts.back().second = std::max(out.parts.back().second, part.second);
    } else {
      out.parts.push_back(part);
    }
  }
  return out;
}

std::vector<std::pair<Rat, Rat>> IntervalUnion::uncovered(
    const IntervalUnion& other) const {
  std::vector<std::pair<Rat, Rat>> out;
  for (const auto& [lo, hi] : other.parts) {
    Rat cur = lo;
    for (const auto& [plo, phi] : parts) {
      if (phi < cur) continue;
      if (plo > hi) break;
      if (plo > cur) out.push_back({cur, std::min(Rat(plo), hi)});
      cur = std::max(cur, phi);
      if (cur >= hi) break;
    }
    if (cur < hi) out.push_back({cur, hi});
  }
  return out;
}

bool IntervalUnion::contains(const IntervalUnion& other) const {
  return uncovered(other).empty();
}

namespace {

// Exact image of an interval union under a piecewise-linear map.
IntervalUnion pwl_union_image(const PiecewiseLinearInterval& f,
                              const IntervalUnion& u) {
  std::vector<std::pair<Rat, Rat>> images;
  for (const auto& [lo, hi] : u.parts) {
    for (std::size_t j = 0; j < f.pieces.size(); ++j) {
      Rat pl = std::max(lo, f.breakpoints[j]);
      Rat ph = std::min(hi, f.breakpoints[j + 1]);
      if (pl > ph) continue;
      Rat a = f.pieces[j].slope * pl + f.pieces[j].intercept;
      Rat b = f.pieces[j].slope * ph + f.pieces[j].intercept;
      if (a > b) std::swap(a, b);
      images.push_back({a, b});
    }
  }
  return IntervalUnion::make(std::move(images));
}

}  // namespace

DecompositionReport verify_decomposition(const System& s,
                                         const PeriodicDecomposition& d,
                                         uint64_t sample_seed,
                                         int samples_per_part) {
  if (d.k() == 0) throw Error("decomposition needs at least one set");
  DecompositionReport rep;
  const auto* pwl = std::get_if<PiecewiseLinearInterval>(&s);
  const auto* gen = std::get_if<GeneralInterval>(&s);
  if (!pwl && !gen) throw Error("decomposition check needs an interval system");
  rep.exact = pwl != nullptr;

  std::vector<std::pair<Rat, Rat>> all;
  for (const IntervalUnion& u : d.sets)
    all.insert(all.end(), u.parts.begin(), u.parts.end());
  IntervalUnion cover = IntervalUnion::make(all);
  IntervalUnion full = IntervalUnion::make({{Rat(0), Rat(1)}});
  rep.uncovered = cover.uncovered(full);
  rep.covers = rep.uncovered.empty();

  bool all_contained = true;
  for (std::size_t i = 0; i < d.k(); ++i) {
    const IntervalUnion& next = d.sets[(i + 1) % d.k()];
    DecompositionReport::SetCheck chk;
    if (pwl) {
      chk.image = pwl_union_image(*pwl, d.sets[i]);
      chk.leftovers = next.uncovered(chk.image);
      chk.contained = chk.leftovers.empty();
    } else {
      // sampled endpoints + interior grid through the float map
      std::vector<std::pair<Rat, Rat>> hull;
      Rng rng(sample_seed + i);
      std::uniform_real_distribution<double> jitter(0.0, 1.0);
      bool ok = true;
      for (const auto& [lo, hi] : d.sets[i].parts) {
        double l = rat_to_double(lo), h = rat_to_double(hi);
        double mn = gen->map(l), mx = mn;
        for (int g = 0; g < samples_per_part; ++g) {
          double t = (g + jitter(rng)) / samples_per_part;
          double v = gen->map(l + (h - l) * t);
          mn = std::min(mn, v);
          mx = std::max(mx, v);
        }
        mx = std::max(mx, gen->map(h));
        mn = std::min(mn, gen->map(h));
        hull.push_back({rat_from_double(mn), rat_from_double(mx)});
      }
      chk.image = IntervalUnion::make(std::move(hull));
      // sampled images must land inside the next set
      for (const auto& [lo, hi] : chk.image.parts) {
        IntervalUnion img = IntervalUnion::make({{lo, hi}});
        auto left = next.uncovered(img);
        chk.leftovers.insert(chk.leftovers.end(), left.begin(), left.end());
      }
      chk.contained = chk.leftovers.empty();
      ok = chk.contained;
      (void)ok;
    }
    all_contained = all_contained && chk.contained;
    rep.mapping.push_back(std::move(chk));
  }
  rep.valid = rep.covers && all_contained;
  return rep;
}

Num lift_witness(const System& s, const PeriodicDecomposition& d,
                 const Point& x, const Point& y, long long n, long long k,
                 const GammaOptions& opts) {
  if (n < 1 || k < 1) throw Error("n and k must be >= 1");
  if (static_cast<long long>(d.k()) != k)
    throw Error("decomposition order does not match k");
  long long len = k * n;
  std::vector<Point> xo = orbit(s, x, len + 1);
  if (!points_equal(xo.back(), x))
    throw Error("x is not periodic at the T^k level (T^{kn} x != x)");
  xo.pop_back();
  std::vector<Point> yo = orbit(s, y, len);
  return gamma_lists(s, xo, yo, opts).value;
}

}  // namespace morbit

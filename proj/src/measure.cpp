#include "morbit/measure.hpp"

#include <algorithm>
#include <numeric>

namespace morbit {

EmpiricalMeasure empirical(const System& s, const Point& x, long long n) {
  return EmpiricalMeasure{orbit(s, x, n)};
}

DiscreteMeasure DiscreteMeasure::dirac(const Point& p) {
  return DiscreteMeasure{{p}, {Rat(1)}};
}

DiscreteMeasure DiscreteMeasure::make(std::vector<Point> support,
                                      std::vector<Rat> weights) {
  if (support.size() != weights.size())
    throw Error("support and weight counts differ");
  for (const Rat& w : weights)
    if (w < 0) throw Error("negative weight in discrete measure");
  std::vector<std::size_t> order(support.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return point_less(support[a], support[b]);
  });
  DiscreteMeasure out;
  Rat total(0);
  for (std::size_t k : order) {
    total += weights[k];
    if (weights[k] == 0) continue;
    if (!out.support.empty() && points_equal(out.support.back(), support[k])) {
      out.weights.back() += weights[k];
    } else {
      out.support.push_back(support[k]);
      out.weights.push_back(weights[k]);
    }
  }
  if (total != 1) throw Error("discrete measure weights sum to " +
                              rat_to_string(total) + ", expected 1");
  return out;
}

DiscreteMeasure to_discrete(const EmpiricalMeasure& m) {
  if (m.atoms.empty()) throw Error("empty empirical measure");
  Rat w(1, static_cast<long long>(m.atoms.size()));
  return DiscreteMeasure::make(m.atoms,
                               std::vector<Rat>(m.atoms.size(), w));
}

DiscreteMeasure convex_combination(
    const std::vector<std::pair<Rat, DiscreteMeasure>>& parts) {
  if (parts.empty()) throw Error("convex combination of nothing");
  Rat total(0);
  std::vector<Point> support;
  std::vector<Rat> weights;
  for (const auto& [coef, mu] : parts) {
    if (coef < 0) throw Error("negative convex coefficient");
    total += coef;
    for (std::size_t i = 0; i < mu.support.size(); ++i) {
      support.push_back(mu.support[i]);
      weights.push_back(Rat(coef * mu.weights[i]));
    }
  }
  if (total != 1)
    throw Error("convex coefficients sum to " + rat_to_string(total) +
                ", expected 1");
  return DiscreteMeasure::make(std::move(support), std::move(weights));
}

}  // namespace morbit

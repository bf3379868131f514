#pragma once

#include <functional>
#include <string>
#include <variant>
#include <vector>

#include "morbit/point.hpp"

namespace morbit {

// Continuous piecewise-affine self-map of [0, 1] with exact rational data.
// Piece i is the restriction to [breakpoints[i], breakpoints[i+1]].
struct PiecewiseLinearInterval {
  struct Piece {
    Rat slope;
    Rat intercept;
  };
  std::vector<Rat> breakpoints;  // 0 = b0 < b1 < ... < bk = 1
  std::vector<Piece> pieces;     // one per gap

  PiecewiseLinearInterval(std::vector<Rat> bps, std::vector<Piece> ps);

  Rat eval(const Rat& x) const;
  double eval(double x) const;
  int piece_index(const Rat& x) const;

  static PiecewiseLinearInterval tent();
  // Swaps [0,1/2] and [1/2,1]; its square restricted to [0,1/2] is
  // conjugate to the tent map. Fixes 1/2, so {[0,1/2],[1/2,1]} is an exact
  // 2-periodic decomposition.
  static PiecewiseLinearInterval swap_halves();
  // Valley map |2x-1|: tent conjugated by x -> 1-x.
  static PiecewiseLinearInterval valley();
};

// Interval map given only as a float evaluation rule; named so it can be
// serialized. Orbits are computed in binary64.
struct GeneralInterval {
  std::string name;
  std::function<double(double)> map;
};

// Registry of named float maps ("logistic", "tent_logistic_conjugate").
GeneralInterval make_general_interval(const std::string& name);

struct CircleRotation {
  Num alpha;
};

struct FullShift {
  int alphabet = 2;
};

using System = std::variant<PiecewiseLinearInterval, GeneralInterval,
                            CircleRotation, FullShift>;

std::string system_kind(const System& s);

// Angle reduced into [0, 1).
Point circle_point(const Num& angle);

// Checks the point belongs to the system's state space; throws otherwise.
void require_compatible(const System& s, const Point& p);

// One application of the map (T p). Exact when both system and point are rational.
Point apply_map(const System& s, const Point& p);

// The compatible metric, normalized so every variant has diameter exactly 1:
//   interval: |a - b|
//   circle:   2 * shortest arc
//   shift:    sum over i of 2^-(i+1) [a_i != b_i]
// Shift distances are exact rationals while the comparison window
// (max preperiod + lcm of periods) stays small, and truncated binary64
// sums beyond that; see kShiftExactWindowLimit.
Num dist(const System& s, const Point& a, const Point& b);

inline constexpr std::size_t kShiftExactWindowLimit = 512;
inline constexpr std::size_t kShiftFloatTruncation = 96;

// [x, Tx, ..., T^(n-1) x]
std::vector<Point> orbit(const System& s, const Point& x, long long n);

}  // namespace morbit

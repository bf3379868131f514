#include "morbit/system.hpp"

#include <algorithm>
#include <numeric>
#include <cmath>

namespace morbit {

PiecewiseLinearInterval::PiecewiseLinearInterval(std::vector<Rat> bps,
                                                 std::vector<Piece> ps)
    : breakpoints(std::move(bps)), pieces(std::move(ps)) {
  if (breakpoints.size() < 2) throw Error("piecewise map needs >= 2 breakpoints");
  if (pieces.size() + 1 != breakpoints.size())
    throw Error("piece count must be breakpoint count - 1");
  if (breakpoints.front() != 0 || breakpoints.back() != 1)
    throw Error("breakpoints must start at 0 and end at 1");
  for (std::size_t i = 0; i + 1 < breakpoints.size(); ++i)
    if (!(breakpoints[i] < breakpoints[i + 1]))
      throw Error("breakpoints must be strictly increasing");
  auto val = [&](std::size_t piece, const Rat& x) {
    return Rat(pieces[piece].slope * x + pieces[piece].intercept);
  };
  for (std::size_t i = 0; i + 1 < pieces.size(); ++i) {
    if (val(i, breakpoints[i + 1]) != val(i + 1, breakpoints[i + 1]))
      throw Error("piecewise map discontinuous at breakpoint " +
                  rat_to_string(breakpoints[i + 1]));
  }
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    for (const Rat& end : {val(i, breakpoints[i]), val(i, breakpoints[i + 1])}) {
      if (end < 0 || end > 1)
        throw Error("piece " + std::to_string(i) + " leaves [0,1]");
    }
  }
}

int PiecewiseLinearInterval::piece_index(const Rat& x) const {
  if (x < 0 || x > 1) throw Error("interval point outside [0,1]");
  // last piece owns x == 1; continuity makes interior breakpoint choice moot
  auto it = std::upper_bound(breakpoints.begin(), breakpoints.end(), x);
  std::size_t idx = static_cast<std::size_t>(it - breakpoints.begin());
  if (idx == 0) idx = 1;
  if (idx > pieces.size()) idx = pieces.size();
  return static_cast<int>(idx - 1);
}

Rat PiecewiseLinearInterval::eval(const Rat& x) const {
  const Piece& p = pieces[static_cast<std::size_t>(piece_index(x))];
  return Rat(p.slope * x + p.intercept);
}

double PiecewiseLinearInterval::eval(double x) const {
  if (x < 0) x = 0;
  if (x > 1) x = 1;
  std::size_t idx = 1;
  while (idx + 1 < breakpoints.size() && rat_to_double(breakpoints[idx]) <= x) ++idx;
  const Piece& p = pieces[idx - 1];
  double y = rat_to_double(p.slope) * x + rat_to_double(p.intercept);
  return std::clamp(y, 0.0, 1.0);
}

PiecewiseLinearInterval PiecewiseLinearInterval::tent() {
  return PiecewiseLinearInterval({Rat(0), Rat(1, 2), Rat(1)},
                                 {{Rat(2), Rat(0)}, {Rat(-2), Rat(2)}});
}

PiecewiseLinearInterval PiecewiseLinearInterval::swap_halves() {
  return PiecewiseLinearInterval(
      {Rat(0), Rat(1, 2), Rat(3, 4), Rat(1)},
      {{Rat(-1), Rat(1)}, {Rat(-2), Rat(3, 2)}, {Rat(2), Rat(-3, 2)}});
}

PiecewiseLinearInterval PiecewiseLinearInterval::valley() {
  return PiecewiseLinearInterval({Rat(0), Rat(1, 2), Rat(1)},
                                 {{Rat(-2), Rat(1)}, {Rat(2), Rat(-1)}});
}

GeneralInterval make_general_interval(const std::string& name) {
  if (name == "logistic") {
    return GeneralInterval{name, [](double x) { return 4.0 * x * (1.0 - x); }};
  }
  if (name == "tent_logistic_conjugate") {
    // Tent map evaluated through the conjugacy z = sin^2(pi x / 2) with the
    // logistic map; float iteration of the tent map directly collapses to 0,
    // this form does not.
    return GeneralInterval{name, [](double x) {
      double s = std::sin(M_PI * x / 2.0);
      double z = s * s;
      double z2 = 4.0 * z * (1.0 - z);
      z2 = std::clamp(z2, 0.0, 1.0);
      return 2.0 / M_PI * std::asin(std::sqrt(z2));
    }};
  }
  throw Error("unknown general interval map '" + name + "'");
}

std::string system_kind(const System& s) {
  if (std::holds_alternative<PiecewiseLinearInterval>(s)) return "piecewise_linear";
  if (std::holds_alternative<GeneralInterval>(s)) return "general_interval";
  if (std::holds_alternative<CircleRotation>(s)) return "circle_rotation";
  return "full_shift";
}

Point circle_point(const Num& angle) {
  if (angle.exact()) return CirclePoint{Num(rat_mod1(angle.rat()))};
  double v = std::fmod(angle.value(), 1.0);
  if (v < 0) v += 1.0;
  if (v >= 1.0) v = 0.0;
  return CirclePoint{Num(v)};
}

void require_compatible(const System& s, const Point& p) {
  bool ok = false;
  if (std::holds_alternative<PiecewiseLinearInterval>(s) ||
      std::holds_alternative<GeneralInterval>(s)) {
    ok = std::holds_alternative<IntervalPoint>(p);
    if (ok) {
      const Num& v = std::get<IntervalPoint>(p).value;
      if (v < Num(0) || v > Num(1)) throw Error("interval point outside [0,1]");
    }
  } else if (std::holds_alternative<CircleRotation>(s)) {
    ok = std::holds_alternative<CirclePoint>(p);
    if (ok) {
      const Num& v = std::get<CirclePoint>(p).angle;
      if (v < Num(0) || v >= Num(1)) throw Error("circle angle outside [0,1)");
    }
  } else if (std::holds_alternative<FullShift>(s)) {
    ok = std::holds_alternative<ShiftPoint>(p) &&
         std::get<ShiftPoint>(p).alphabet == std::get<FullShift>(s).alphabet;
  }
  if (!ok)
    throw Error("point " + point_to_string(p) + " does not live in a " +
                system_kind(s) + " system");
}

namespace {

Num mod1(const Num& x) {
  if (x.exact()) return Num(rat_mod1(x.rat()));
  double v = std::fmod(x.value(), 1.0);
  if (v < 0) v += 1.0;
  if (v >= 1.0) v = 0.0;
  return Num(v);
}

ShiftPoint shift_drop_head(const ShiftPoint& p) {
  if (!p.pre.empty()) return ShiftPoint(p.alphabet, p.pre.substr(1), p.period);
  std::string w = p.period.substr(1) + p.period.substr(0, 1);
  return ShiftPoint(p.alphabet, "", w);
}

Num shift_dist(const ShiftPoint& a, const ShiftPoint& b) {
  if (a.alphabet != b.alphabet)
    throw Error("shift points over different alphabets");
  if (a.pre == b.pre && a.period == b.period) return Num(Rat(0));
  std::size_t head = std::max(a.pre.size(), b.pre.size());
  std::size_t l = std::lcm(a.period.size(), b.period.size());
  if (head + l <= kShiftExactWindowLimit) {
    // head part: sum of 2^-(i+1) over differing i < head
    BigInt head_num = 0;
    for (std::size_t i = 0; i < head; ++i) {
      head_num <<= 1;
      if (a.at(i) != b.at(i)) head_num += 1;
    }
    Rat head_sum(head_num, BigInt(1) << head);
    // periodic tail: pattern of length l starting at position head
    BigInt tail_num = 0;
    for (std::size_t j = 0; j < l; ++j) {
      tail_num <<= 1;
      if (a.at(head + j) != b.at(head + j)) tail_num += 1;
    }
    // sum over j of diff_j 2^-(j+1), repeated with ratio 2^-l, shifted 2^-head
    Rat tail_sum(tail_num, (BigInt(1) << l) - 1);
    Rat total = head_sum + tail_sum / Rat(BigInt(1) << head);
    return Num(total);
  }
  // Long-window pair: truncated float sum; the neglected tail is < 2^-96.
  double sum = 0.0;
  double w = 0.5;
  for (std::size_t i = 0; i < kShiftFloatTruncation; ++i, w *= 0.5)
    if (a.at(i) != b.at(i)) sum += w;
  return Num(sum);
}

}  // namespace

Point apply_map(const System& s, const Point& p) {
  require_compatible(s, p);
  if (const auto* pwl = std::get_if<PiecewiseLinearInterval>(&s)) {
    const Num& v = std::get<IntervalPoint>(p).value;
    if (v.exact()) return IntervalPoint{Num(pwl->eval(v.rat()))};
    return IntervalPoint{Num(pwl->eval(v.value()))};
  }
  if (const auto* gen = std::get_if<GeneralInterval>(&s)) {
    const Num& v = std::get<IntervalPoint>(p).value;
    return IntervalPoint{Num(gen->map(v.value()))};
  }
  if (const auto* rot = std::get_if<CircleRotation>(&s)) {
    const Num& v = std::get<CirclePoint>(p).angle;
    return CirclePoint{mod1(v + rot->alpha)};
  }
  return shift_drop_head(std::get<ShiftPoint>(p));
}

Num dist(const System& s, const Point& a, const Point& b) {
  require_compatible(s, a);
  require_compatible(s, b);
  if (std::holds_alternative<PiecewiseLinearInterval>(s) ||
      std::holds_alternative<GeneralInterval>(s)) {
    return num_abs(std::get<IntervalPoint>(a).value -
                   std::get<IntervalPoint>(b).value);
  }
  if (std::holds_alternative<CircleRotation>(s)) {
    Num gap = num_abs(std::get<CirclePoint>(a).angle -
                      std::get<CirclePoint>(b).angle);
    Num arc = num_min(gap, Num(1) - gap);
    return Num(2) * arc;
  }
  return shift_dist(std::get<ShiftPoint>(a), std::get<ShiftPoint>(b));
}

std::vector<Point> orbit(const System& s, const Point& x, long long n) {
  if (n < 1) throw Error("orbit length must be >= 1");
  std::vector<Point> out;
  out.reserve(static_cast<std::size_t>(n));
  out.push_back(x);
  for (long long i = 1; i < n; ++i) out.push_back(apply_map(s, out.back()));
  return out;
}

}  // namespace morbit

#include "morbit/point.hpp"

#include <algorithm>
#include <numeric>

namespace morbit {

std::string primitive_root(const std::string& word) {
  std::size_t n = word.size();
  for (std::size_t p = 1; p <= n / 2; ++p) {
    if (n % p != 0) continue;
    bool ok = true;
    for (std::size_t i = p; i < n && ok; ++i) ok = word[i] == word[i - p];
    if (ok) return word.substr(0, p);
  }
  return word;
}

ShiftPoint::ShiftPoint(int m, std::string pre_word, std::string period_word)
    : alphabet(m), pre(std::move(pre_word)), period(std::move(period_word)) {
  if (m < 2 || m > 10) throw Error("shift alphabet size must be in [2, 10]");
  if (period.empty()) throw Error("shift period word must be nonempty");
  auto check = [&](const std::string& w) {
    for (char c : w)
      if (c < '0' || c >= '0' + m)
        throw Error("shift symbol out of range for alphabet " + std::to_string(m));
  };
  check(pre);
  check(period);
  period = primitive_root(period);
  // Absorb preperiod symbols that already follow the periodic pattern.
  while (!pre.empty() && pre.back() == period.back()) {
    pre.pop_back();
    std::rotate(period.rbegin(), period.rbegin() + 1, period.rend());
  }
}

namespace {

int variant_rank(const Point& p) { return static_cast<int>(p.index()); }

// Compares two eventually periodic sequences symbol by symbol. They agree
// everywhere iff they agree on a window of length max preperiod + lcm of
// the period lengths.
int shift_stream_compare(const ShiftPoint& a, const ShiftPoint& b) {
  std::size_t head = std::max(a.pre.size(), b.pre.size());
  std::size_t l = std::lcm(a.period.size(), b.period.size());
  std::size_t n = head + l;
  for (std::size_t i = 0; i < n; ++i) {
    char ca = a.at(i), cb = b.at(i);
    if (ca != cb) return ca < cb ? -1 : 1;
  }
  return 0;
}

}  // namespace

bool points_equal(const Point& a, const Point& b) {
  if (a.index() != b.index()) return false;
  if (const auto* ia = std::get_if<IntervalPoint>(&a))
    return ia->value == std::get<IntervalPoint>(b).value;
  if (const auto* ca = std::get_if<CirclePoint>(&a))
    return ca->angle == std::get<CirclePoint>(b).angle;
  const auto& sa = std::get<ShiftPoint>(a);
  const auto& sb = std::get<ShiftPoint>(b);
  return sa.alphabet == sb.alphabet && sa.pre == sb.pre && sa.period == sb.period;
}

bool point_less(const Point& a, const Point& b) {
  if (a.index() != b.index()) return variant_rank(a) < variant_rank(b);
  if (const auto* ia = std::get_if<IntervalPoint>(&a))
    return ia->value < std::get<IntervalPoint>(b).value;
  if (const auto* ca = std::get_if<CirclePoint>(&a))
    return ca->angle < std::get<CirclePoint>(b).angle;
  const auto& sa = std::get<ShiftPoint>(a);
  const auto& sb = std::get<ShiftPoint>(b);
  return shift_stream_compare(sa, sb) < 0;
}

std::string point_to_string(const Point& p) {
  if (const auto* ip = std::get_if<IntervalPoint>(&p)) return ip->value.str();
  if (const auto* cp = std::get_if<CirclePoint>(&p)) return cp->angle.str() + " (mod 1)";
  const auto& sp = std::get<ShiftPoint>(p);
  return sp.pre + "(" + sp.period + ")^inf";
}

}  // namespace morbit

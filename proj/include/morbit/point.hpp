#pragma once

#include <string>
#include <variant>
#include <vector>

#include "morbit/num.hpp"

namespace morbit {

// State of an interval system: a value in [0, 1].
struct IntervalPoint {
  Num value;
};

// State of a circle rotation: an angle in [0, 1), mod 1.
struct CirclePoint {
  Num angle;
};

// Eventually periodic symbol sequence over {0, ..., m-1}, m in [2, 10].
// Symbols are the digit characters '0'..'9'. The representation is kept
// canonical: the period word is primitive and the preperiod is minimal,
// so two ShiftPoints describe the same sequence iff their fields match.
struct ShiftPoint {
  int alphabet = 2;
  std::string pre;     // finite prefix, possibly empty
  std::string period;  // nonempty primitive repeating word

  ShiftPoint() : period("0") {}
  ShiftPoint(int m, std::string pre_word, std::string period_word);

  // Symbol at position i of the infinite sequence.
  char at(std::size_t i) const {
    if (i < pre.size()) return pre[i];
    return period[(i - pre.size()) % period.size()];
  }
};

using Point = std::variant<IntervalPoint, CirclePoint, ShiftPoint>;

bool points_equal(const Point& a, const Point& b);

// Total order used only for deterministic sorting and deduplication.
bool point_less(const Point& a, const Point& b);

std::string point_to_string(const Point& p);

// Reduces a word to its primitive root (shortest w with word = w^k).
std::string primitive_root(const std::string& word);

}  // namespace morbit

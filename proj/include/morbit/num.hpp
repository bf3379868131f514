#pragma once

#include <cmath>
#include <string>
#include <variant>

#include "morbit/rational.hpp"

namespace morbit {

// Scalar that is either an exact rational or a binary64 value. Arithmetic
// between two exact operands stays exact; anything touching a float operand
// degrades to double. This is how "rational mode" and "float mode" coexist:
// a computation is exact precisely when every input was.
class Num {
 public:
  Num() : v_(Rat(0)) {}
  Num(int n) : v_(Rat(n)) {}
  Num(long long n) : v_(Rat(n)) {}
  Num(const Rat& r) : v_(r) {}
  Num(Rat&& r) : v_(std::move(r)) {}
  explicit Num(double d) : v_(d) {}

  bool exact() const { return std::holds_alternative<Rat>(v_); }

  double value() const {
    return exact() ? rat_to_double(std::get<Rat>(v_)) : std::get<double>(v_);
  }

  const Rat& rat() const {
    if (!exact()) throw Error("float-valued Num has no exact rational form");
    return std::get<Rat>(v_);
  }

  friend Num operator+(const Num& a, const Num& b) {
    if (a.exact() && b.exact()) return Num(Rat(a.rat() + b.rat()));
    return Num(a.value() + b.value());
  }
  friend Num operator-(const Num& a, const Num& b) {
    if (a.exact() && b.exact()) return Num(Rat(a.rat() - b.rat()));
    return Num(a.value() - b.value());
  }
  friend Num operator*(const Num& a, const Num& b) {
    if (a.exact() && b.exact()) return Num(Rat(a.rat() * b.rat()));
    return Num(a.value() * b.value());
  }
  friend Num operator/(const Num& a, const Num& b) {
    if (a.exact() && b.exact()) {
      if (b.rat() == 0) throw Error("division by zero");
      return Num(Rat(a.rat() / b.rat()));
    }
    return Num(a.value() / b.value());
  }
  Num operator-() const {
    if (exact()) return Num(Rat(-rat()));
    return Num(-value());
  }
  Num& operator+=(const Num& o) { return *this = *this + o; }
  Num& operator-=(const Num& o) { return *this = *this - o; }
  Num& operator*=(const Num& o) { return *this = *this * o; }
  Num& operator/=(const Num& o) { return *this = *this / o; }

  friend bool operator==(const Num& a, const Num& b) {
    if (a.exact() && b.exact()) return a.rat() == b.rat();
    return a.value() == b.value();
  }
  friend bool operator!=(const Num& a, const Num& b) { return !(a == b); }
  friend bool operator<(const Num& a, const Num& b) {
    if (a.exact() && b.exact()) return a.rat() < b.rat();
    return a.value() < b.value();
  }
  friend bool operator>(const Num& a, const Num& b) { return b < a; }
  friend bool operator<=(const Num& a, const Num& b) { return !(b < a); }
  friend bool operator>=(const Num& a, const Num& b) { return !(a < b); }

  friend Num num_abs(const Num& a) {
    if (a.exact()) return Num(rat_abs(a.rat()));
    return Num(std::fabs(a.value()));
  }

  friend Num num_min(const Num& a, const Num& b) { return a < b ? a : b; }
  friend Num num_max(const Num& a, const Num& b) { return a < b ? b : a; }

  // "p/q" for exact values, shortest-roundtrip-ish %.17g otherwise.
  std::string str() const;

 private:
  std::variant<Rat, double> v_;
};

std::string format_double(double d);  // %.17g, locale-independent

}  // namespace morbit

#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <numeric>
#include <string>

#include "morbit/error.hpp"

namespace morbit {

using BigInt = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// Parses "p/q", "p", with optional sign. Throws Error on garbage or q == 0.
Rat parse_rational(const std::string& s);

// "p/q" when the denominator is not 1, plain integer otherwise.
std::string rat_to_string(const Rat& r);

inline double rat_to_double(const Rat& r) { return r.convert_to<double>(); }

inline Rat rat_abs(const Rat& r) { return r < 0 ? Rat(-r) : r; }

// Largest integer <= r.
BigInt rat_floor(const Rat& r);

// r reduced into [0, 1).
Rat rat_mod1(const Rat& r);

// 2^-k as an exact rational, k >= 0.
Rat pow2_inv(long k);

// Exact conversion: every binary64 value is a dyadic rational.
Rat rat_from_double(double x);

BigInt big_lcm(const BigInt& a, const BigInt& b);

inline long long illcm(long long a, long long b) {
  return a / std::gcd(a, b) * b;
}

}  // namespace morbit

#pragma once

#include <random>

#include "morbit/point.hpp"

namespace morbit {

using Rng = std::mt19937_64;

// Uniform random rational p/q with q in [1, max_den], p in [0, q].
Rat random_rational(Rng& rng, long long max_den);

// Random word of the given length over digits '0'..'0'+m-1.
std::string random_word(Rng& rng, int alphabet, std::size_t length);

// Pseudorandom eventually periodic shift points. "periodic" style repeats a
// random word of the given length; "prefix" style puts it before a fixed
// single-symbol tail.
ShiftPoint random_periodic_shift_point(Rng& rng, int alphabet, std::size_t length);
ShiftPoint random_prefix_shift_point(Rng& rng, int alphabet, std::size_t length,
                                     char tail_symbol = '0');

}  // namespace morbit

#include "morbit/random.hpp"

namespace morbit {

Rat random_rational(Rng& rng, long long max_den) {
  std::uniform_int_distribution<long long> den(1, max_den);
  long long q = den(rng);
  std::uniform_int_distribution<long long> num(0, q);
  return Rat(num(rng), q);
}

std::string random_word(Rng& rng, int alphabet, std::size_t length) {
  std::uniform_int_distribution<int> sym(0, alphabet - 1);
  std::string w;
  w.reserve(length);
  for (std::size_t i = 0; i < length; ++i)
    w.push_back(static_cast<char>('0' + sym(rng)));
  return w;
}

ShiftPoint random_periodic_shift_point(Rng& rng, int alphabet,
                                       std::size_t length) {
  std::string w = random_word(rng, alphabet, length);
  return ShiftPoint(alphabet, "", w);
}

ShiftPoint random_prefix_shift_point(Rng& rng, int alphabet, std::size_t length,
                                     char tail_symbol) {
  std::string pre = random_word(rng, alphabet, length);
  return ShiftPoint(alphabet, pre, std::string(1, tail_symbol));
}

}  // namespace morbit

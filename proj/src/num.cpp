#include "morbit/num.hpp"

#include <cstdio>

namespace morbit {

std::string format_double(double d) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", d);
  return buf;
}

std::string Num::str() const {
  if (exact()) return rat_to_string(rat());
  return format_double(value());
}

}  // namespace morbit

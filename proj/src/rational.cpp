#include "morbit/rational.hpp"

#include <cctype>
#include <cmath>

namespace morbit {

Rat parse_rational(const std::string& s) {
  if (s.empty()) throw Error("empty rational literal");
  std::size_t slash = s.find('/');
  auto check_int = [&](const std::string& part) {
    if (part.empty()) throw Error("malformed rational '" + s + "'");
    std::size_t i = (part[0] == '-' || part[0] == '+') ? 1 : 0;
    if (i == part.size()) throw Error("malformed rational '" + s + "'");
    for (; i < part.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(part[i])))
        throw Error("malformed rational '" + s + "'");
  };
  try {
    if (slash == std::string::npos) {
      check_int(s);
      return Rat(BigInt(s));
    }
    std::string num = s.substr(0, slash);
    std::string den = s.substr(slash + 1);
    check_int(num);
    check_int(den);
    BigInt q(den);
    if (q == 0) throw Error("zero denominator in '" + s + "'");
    return Rat(BigInt(num), q);
  } catch (const Error&) {
    throw;
  } catch (const std::exception&) {
    throw Error("malformed rational '" + s + "'");
  }
}

std::string rat_to_string(const Rat& r) {
  if (denominator(r) == 1) return numerator(r).str();
  return numerator(r).str() + "/" + denominator(r).str();
}

BigInt rat_floor(const Rat& r) {
  BigInt n = numerator(r);
  BigInt d = denominator(r);
  BigInt q = n / d;
  if (n < 0 && q * d != n) --q;
  return q;
}

Rat rat_mod1(const Rat& r) {
  Rat out = r - Rat(rat_floor(r));
  return out;
}

Rat pow2_inv(long k) {
  return Rat(BigInt(1), BigInt(1) << k);
}

Rat rat_from_double(double x) {
  if (!std::isfinite(x)) throw Error("non-finite double cannot become a rational");
  if (x == 0.0) return Rat(0);
  int exp = 0;
  double m = std::frexp(x, &exp);  // x = m * 2^exp, |m| in [0.5, 1)
  // 53 doublings make the mantissa integral.
  BigInt num(static_cast<long long>(std::ldexp(m, 53)));
  exp -= 53;
  if (exp >= 0) return Rat(num << exp);
  return Rat(num, BigInt(1) << (-exp));
}

BigInt big_lcm(const BigInt& a, const BigInt& b) {
  if (a == 0 || b == 0) return 0;
  return a / gcd(a, b) * b;
}

}  // namespace morbit

#include <doctest.h>

#include "morbit/num.hpp"

using namespace morbit;

TEST_CASE("rational parsing round-trips") {
  CHECK(rat_to_string(parse_rational("2/5")) == "2/5");
  CHECK(rat_to_string(parse_rational("-1/3")) == "-1/3");
  CHECK(rat_to_string(parse_rational("7")) == "7");
  CHECK(parse_rational("4/6") == Rat(2, 3));
  CHECK_THROWS_AS(parse_rational("1/0"), Error);
  CHECK_THROWS_AS(parse_rational("abc"), Error);
  CHECK_THROWS_AS(parse_rational(""), Error);
  CHECK_THROWS_AS(parse_rational("1/2/3"), Error);
}

TEST_CASE("floor and mod1") {
  CHECK(rat_floor(Rat(7, 2)) == 3);
  CHECK(rat_floor(Rat(-7, 2)) == -4);
  CHECK(rat_floor(Rat(-3)) == -3);
  CHECK(rat_mod1(Rat(7, 2)) == Rat(1, 2));
  CHECK(rat_mod1(Rat(-1, 4)) == Rat(3, 4));
  CHECK(rat_mod1(Rat(2)) == 0);
}

TEST_CASE("doubles convert exactly") {
  CHECK(rat_from_double(0.5) == Rat(1, 2));
  CHECK(rat_from_double(0.1) != Rat(1, 10));  // 0.1 is not dyadic
  CHECK(rat_to_double(rat_from_double(0.1)) == 0.1);
  CHECK(rat_from_double(3.0) == Rat(3));
}

TEST_CASE("Num keeps exactness through exact arithmetic") {
  Num a(Rat(1, 3)), b(Rat(1, 6));
  Num c = a + b;
  CHECK(c.exact());
  CHECK(c.rat() == Rat(1, 2));
  Num d = c * Num(2);
  CHECK(d == Num(1));
  CHECK((a - a) == Num(0));
}

TEST_CASE("Num degrades to float on mixed arithmetic") {
  Num a(Rat(1, 2)), b(0.25);
  Num c = a + b;
  CHECK(!c.exact());
  CHECK(c.value() == doctest::Approx(0.75));
  CHECK_THROWS_AS(c.rat(), Error);
}

TEST_CASE("Num comparisons and helpers") {
  CHECK(Num(Rat(1, 3)) < Num(Rat(1, 2)));
  CHECK(Num(Rat(1, 2)) == Num(0.5));  // mixed compares by value
  CHECK(num_abs(Num(Rat(-2, 5))) == Num(Rat(2, 5)));
  CHECK(num_max(Num(1), Num(2)) == Num(2));
  CHECK(num_min(Num(1), Num(2)) == Num(1));
  CHECK(Num(Rat(1, 5)).str() == "1/5");
}

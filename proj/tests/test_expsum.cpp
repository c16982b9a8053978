#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "posetx/errors.hpp"
#include "posetx/expsum.hpp"

using namespace posetx;

TEST_CASE("normalization") {
  ExpSum s = ExpSum::from_terms({{2, 6}, {1, 8}, {-2, 6}, {3, 4}});
  CHECK(s.terms().size() == 2);  // the base-6 terms cancel
  CHECK(s.leading_base() == 8);
  CHECK(s.leading_coeff() == 1);
  CHECK(s.str() == "+1*8 +3*4");
  CHECK(ExpSum().zero());
  CHECK_THROWS_AS(ExpSum::single(1, 0), std::invalid_argument);
}

TEST_CASE("evaluation") {
  ExpSum s = ExpSum::parse("+1*8 -1*6 -1*5 +1*4");
  CHECK(s.eval(0) == 0);
  CHECK(s.eval(1) == 1);
  CHECK(s.eval(2) == 19);
  CHECK(s.eval(3) == 235);  // 512 - 216 - 125 + 64
  CHECK(s.coeff_sum() == 0);
  CHECK(s.weighted_coeff_sum() == 1);
  CHECK(s.coefficient_mass() == 4);
}

TEST_CASE("string round trip") {
  const char* text = "+1*10 -3*6 +3*4 -1*3";
  CHECK(ExpSum::parse(text).str() == text);
  CHECK(ExpSum::parse("-2*5 +1*7").str() == "+1*7 -2*5");  // reordered to leading-first
  CHECK(ExpSum::parse("").zero());
  CHECK_THROWS_AS(ExpSum::parse("1*3"), ParseError);
  CHECK_THROWS_AS(ExpSum::parse("+1"), ParseError);
  CHECK_THROWS_AS(ExpSum::parse("+x*3"), ParseError);
}

TEST_CASE("product matches the two-antichain expansion") {
  ExpSum single = ExpSum::parse("+1*2 -1*1");
  ExpSum square = es_product(single, single);
  CHECK(square.str() == "+1*4 -2*2 +1*1");
  for (unsigned m = 0; m <= 6; ++m)
    CHECK(square.eval(m) == single.eval(m) * single.eval(m));
}

TEST_CASE("shift adds to every base") {
  ExpSum a2 = ExpSum::parse("+1*4 -2*2 +1*1");
  CHECK(es_shift(a2, 3).str() == "+1*7 -2*5 +1*4");
  CHECK_THROWS_AS(es_shift(a2, -1), std::invalid_argument);
}

TEST_CASE("addition and scaling") {
  ExpSum a = ExpSum::parse("+1*3 -1*2");
  ExpSum b = ExpSum::parse("+1*2 -1*3");
  CHECK(es_add(a, b).zero());
  CHECK(es_scale(a, 4).str() == "+4*3 -4*2");
  CHECK(es_scale(a, 0).zero());
}

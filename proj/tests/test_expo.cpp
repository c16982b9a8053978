#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>

#include "posetx/catalog.hpp"
#include "posetx/expo.hpp"

using namespace posetx;

TEST_CASE("inclusion-exclusion on chains") {
  for (int k = 1; k <= 6; ++k)
    for (unsigned m = 0; m <= 5; ++m)
      CHECK(e_incl_excl(m, Poset::chain(k)) ==
            pow_int(k + 1, m) - pow_int(k, m));
  CHECK(e_incl_excl(2, Poset::chain(1)) == 3);
  CHECK(e_incl_excl(0, Poset::chain(3)) == 0);
  CHECK(e_incl_excl(0, Poset()) == 1);
  CHECK(e_incl_excl(5, Poset()) == 1);
}

TEST_CASE("single added point always extends one way") {
  for (const auto& e : enumerate_catalog(5)) CHECK(e_incl_excl(1, e.poset) == 1);
}

TEST_CASE("fence values") {
  Poset n2 = fence(2);
  for (unsigned m = 0; m <= 4; ++m)
    CHECK(e_incl_excl(m, n2) ==
          pow_int(8, m) - pow_int(6, m) - pow_int(5, m) + pow_int(4, m));
}

TEST_CASE("normal form examples") {
  CHECK(exp_sum(ordinal_sum(Poset::antichain(3), Poset::chain(2))).str() ==
        "+1*10 -3*6 +3*4 -1*3");
  // two-point antichain under a one-bottom two-top poset
  Poset p7 = ordinal_sum(Poset::antichain(2), Poset::antichain(1));
  CHECK(exp_sum(ordinal_sum(Poset::antichain(2), p7)).str() == "+1*8 -2*6 +1*5");
  CHECK(exp_sum(Poset()).str() == "+1*1");
  CHECK(exp_sum(Poset::chain(3)).str() == "+1*4 -1*3");
}

TEST_CASE("subset table") {
  Poset n2 = fence(2);
  CoeffTable t = coeff_table(n2);
  CHECK(t.min_count == 2);
  CHECK(t.b.at({0, Int(8)}) == 1);
  CHECK(t.b.at({1, Int(6)}) == 1);
  CHECK(t.b.at({1, Int(5)}) == 1);
  CHECK(t.b.at({2, Int(4)}) == 1);
  Int total = 0;
  for (const auto& [key, count] : t.b) total += count;
  CHECK(total == 4);
}

TEST_CASE("normal form evaluates like inclusion-exclusion") {
  for (const auto& e : enumerate_catalog(4)) {
    ExpSum es = exp_sum(e.poset);
    for (unsigned m = 0; m <= 4; ++m) CHECK(es.eval(m) == e_incl_excl(m, e.poset));
  }
}

TEST_CASE("antichain on top closed form") {
  // one extra bottom antichain point: d^m - (d-1)^m
  for (const auto& e : enumerate_catalog(4)) {
    ExpSum got = antichain_top_formula(1, e.poset);
    CHECK(got == exp_sum(ordinal_sum(Poset::antichain(1), e.poset)));
    CHECK(got.leading_base() == e.downsets + 1);
  }
  CHECK(antichain_top_formula(3, Poset::chain(2)).str() == "+1*10 -3*6 +3*4 -1*3");
  CHECK(antichain_top_formula(2, Poset()).str() == "+1*4 -2*2 +1*1");
  for (int ell = 1; ell <= 4; ++ell)
    CHECK(antichain_top_formula(ell, Poset::antichain(2)) ==
          exp_sum(ordinal_sum(Poset::antichain(ell), Poset::antichain(2))));
  CHECK_THROWS_AS(antichain_top_formula(0, Poset()), std::invalid_argument);
}

TEST_CASE("sum rules for normal forms") {
  auto cat = enumerate_catalog(3);
  for (const auto& eo : cat)
    for (const auto& ep : cat) {
      CHECK(es_product(eo.exp, ep.exp) == exp_sum(cardinal_sum(eo.poset, ep.poset)));
      if (!eo.poset.empty())
        CHECK(es_shift(eo.exp, ep.downsets - 1) == exp_sum(ordinal_sum(eo.poset, ep.poset)));
    }
  // an antichain beside a poset multiplies the single-point form in
  for (const auto& ep : cat)
    for (int ell = 1; ell <= 3; ++ell) {
      ExpSum single = exp_sum(Poset::antichain(1));
      ExpSum factor = single;
      for (int i = 1; i < ell; ++i) factor = es_product(factor, single);
      CHECK(es_product(factor, ep.exp) ==
            exp_sum(cardinal_sum(Poset::antichain(ell), ep.poset)));
    }
}

TEST_CASE("fence closed form") {
  CHECK(fence_exp_sum(1).str() == "+1*3 -1*2");
  CHECK(fence_exp_sum(2).str() == "+1*8 -1*6 -1*5 +1*4");
  CHECK(fence_exp_sum(3).str() == "+1*21 -1*16 -1*15 -1*13 +1*12 +2*10 -1*8");
  for (int t = 1; t <= 4; ++t) CHECK(fence_exp_sum(t) == exp_sum(fence(t)));
}

TEST_CASE("map oracle") {
  for (unsigned m = 0; m <= 4; ++m) {
    CHECK(e_oracle_maps(m, Poset::antichain(1)) == (Int(1) << m) - 1);
    CHECK(e_oracle_maps(m, Poset()) == 1);
  }
  CHECK(e_oracle_maps(2, fence(2)) == 19);  // 64 - 36 - 25 + 16
  CHECK_THROWS_AS(e_oracle_maps(4, Poset::antichain(6), 100), BudgetExceededError);
}

TEST_CASE("order oracle") {
  CHECK(e_oracle_orders(1, Poset::antichain(1)) == 1);
  CHECK(e_oracle_orders(2, Poset::antichain(1)) == 3);
  CHECK(e_oracle_orders(2, Poset::antichain(2)) == 9);
  CHECK(e_oracle_orders(0, Poset::antichain(1)) == 0);
  CHECK(e_oracle_orders(0, Poset()) == 1);
  CHECK_THROWS_AS(e_oracle_orders(4, Poset::antichain(4)), BudgetExceededError);
}

TEST_CASE("oracle triangle") {
  for (const auto& e : enumerate_catalog(4)) {
    for (unsigned m = 0; m <= 3; ++m) {
      Int expected = e_incl_excl(m, e.poset);
      CHECK(e_oracle_maps(m, e.poset) == expected);
      if (e.points <= 3) CHECK(e_oracle_orders(m, e.poset) == expected);
    }
  }
}

TEST_CASE("upset partition identity") {
  Poset a1 = Poset::antichain(1);
  for (unsigned m = 0; m <= 5; ++m) CHECK(upset_partition_check(m, a1) == Int(1) << m);
  // the fence splits the power of its downset count across eight upsets
  Poset n2 = fence(2);
  for (unsigned m = 0; m <= 4; ++m) CHECK(upset_partition_check(m, n2) == pow_int(8, m));
  std::vector<ExpSum> upset_sums;
  for (Mask u : upset_masks(n2)) upset_sums.push_back(exp_sum(n2.restrict(u)));
  for (unsigned m = 0; m <= 4; ++m) {
    Int total = 0;
    for (const auto& es : upset_sums) total += es.eval(m);
    CHECK(total == pow_int(8, m));
  }
}

TEST_CASE("level recursion reproduces the next exponent") {
  for (const auto& e : enumerate_catalog(4)) {
    const Poset& p = e.poset;
    for (unsigned m = 1; m <= 3; ++m) {
      std::map<Mask, Int> table;
      for (Mask u : upset_masks(p)) table[u] = e_incl_excl(m, p.restrict(u));
      CHECK(e_next(p, table) == e_incl_excl(m + 1, p));
    }
  }
}

TEST_CASE("residual and the restricted maximum") {
  for (int k = 1; k <= 5; ++k) {
    Poset c = Poset::chain(k);
    for (unsigned m = 0; m <= 4; ++m) CHECK(residual(m, c) == pow_int(k, m));
    CHECK(d_prime(c) == k);
  }
  CHECK(residual(3, fence(2)) == 277);
  CHECK(d_prime(fence(2)) == 6);
  CHECK(2 * residual(3, fence(2)) <= (Int(1) << 2) * pow_int(6, 3));  // 554 <= 864
  for (const auto& e : enumerate_catalog(5)) {
    if (e.poset.empty()) continue;
    CHECK(d_prime(e.poset) == d_prime_exhaustive(e.poset));
    CHECK(d_prime(e.poset) <= Int(1) << (e.points - 1));
    CHECK(d_prime(e.poset) <= e.downsets - 1);
  }
  CHECK_THROWS_AS(d_prime(Poset()), std::invalid_argument);
}

TEST_CASE("divisibility") {
  CHECK(e_incl_excl(3, Poset::antichain(2)) == 49);
  CHECK((Int(49) - 1) % 6 == 0);
  CHECK(divisibility_check(Poset::antichain(2), 3, 3));
  CHECK(e_incl_excl(5, Poset::chain(1)) == 31);
  CHECK(divisibility_check(Poset::chain(1), 5, 5));
  CHECK((Int(31) - 1) % 30 == 0);
  for (const auto& e : enumerate_catalog(4)) {
    CHECK(divisibility_check(e.poset, 1, 997));  // zero divides by everything
    CHECK(divisibility_suite(e.poset, 13).all_pass());
  }
}

TEST_CASE("divisibility far beyond the suite range") {
  // m = 25 is 1 mod 4, 1 mod 6 and 1 mod 12, so 2*3*5*7 = 210 divides e - 1
  for (const Poset& p : {fence(3), Poset::antichain(5), zigzag(7)}) {
    Int value = exp_sum(p).eval(25) - 1;
    CHECK(value % 210 == 0);
    CHECK(value % 13 == 0);  // 25 = 2 * 12 + 1
  }
}

TEST_CASE("characteristic polynomial basics") {
  // one added point: z + d - 1
  for (const auto& e : enumerate_catalog(3)) {
    const Poset& p = e.poset;
    std::vector<int> emb(p.size());
    for (int x = 0; x < p.size(); ++x) emb[x] = 1 + x;
    for (const Poset& q : enumerate_extensions(1, p)) {
      CharPoly poly = char_poly(p, q, 1, emb);
      CHECK(poly.coeffs == std::vector<Int>{e.downsets - 1, 1});
    }
  }
}

TEST_CASE("characteristic polynomial rejects non-extensions") {
  Poset p = Poset::chain(2);
  Poset not_ext = Poset::antichain(4);  // added points not exactly minimal
  CHECK_THROWS_AS(char_poly(p, not_ext, 2, {2, 3}), NotAnExtensionError);
  Poset wrong_base = ordinal_sum(Poset::antichain(2), Poset::antichain(2));
  CHECK_THROWS_AS(char_poly(p, wrong_base, 2, {2, 3}), NotAnExtensionError);
  CHECK_THROWS_AS(char_poly(p, not_ext, 1, {1, 2}), NotAnExtensionError);
}

TEST_CASE("worked extension polynomials") {
  // the three five-point extensions with three added points and fourteen downsets
  auto polys_for = [](const Poset& base, const char* exp_string) {
    std::vector<CharPoly> out;
    std::vector<int> emb(base.size());
    for (int x = 0; x < base.size(); ++x) emb[x] = 3 + x;
    ExpSum want = ExpSum::parse(exp_string);
    for (const Poset& q : enumerate_extensions(3, base))
      if (exp_sum(q) == want) out.push_back(char_poly(base, q, 3, emb));
    return out;
  };
  auto over_chain = polys_for(Poset::chain(2), "+1*14 -1*10 -1*8 -1*7 +1*6 +1*5 +1*4 -1*3");
  REQUIRE(!over_chain.empty());
  for (const auto& poly : over_chain) {
    CHECK(poly.coeffs == std::vector<Int>{0, 1, 1, 1});  // z^3 + z^2 + z
    CHECK(poly.eval(1) == 3);
    CHECK(poly.eval(2) == 14);
  }
  auto first = polys_for(Poset::antichain(2), "+1*14 -2*10 +1*8 -1*7 +2*5 -1*4");
  auto second = polys_for(Poset::antichain(2), "+1*14 -1*10 -2*8 +2*6 +1*5 -1*4");
  REQUIRE(!first.empty());
  REQUIRE(!second.empty());
  CHECK(first.front().coeffs == std::vector<Int>{0, 3, 0, 1});   // z^3 + 3z
  CHECK(second.front().coeffs == std::vector<Int>{2, 0, 1, 1});  // z^3 + z^2 + 2
  CHECK(first.front().str() == "z^3 + 3z");
  CHECK(second.front().str() == "z^3 + z^2 + 2");
}

TEST_CASE("growth bounds across small classes") {
  for (const auto& e : enumerate_catalog(4))
    for (unsigned m = 1; m <= 8; ++m) {
      BoundsReport report = growth_bounds_check(e.poset, m);
      CHECK(report.all_pass());
    }
}

TEST_CASE("downset-removal bound worked numbers") {
  // removing the bottom of a two-point chain at exponent three: 3*7 <= 2*19
  Poset c2 = Poset::chain(2);
  CHECK(e_incl_excl(3, Poset::chain(1)) == 7);
  CHECK(e_incl_excl(3, c2) == 19);
  Mask d = bit(0);
  CHECK(Int(3) * 7 <= (Int(1) << popcount(c2.up_closure(d) & ~d)) * 19);
}

TEST_CASE("maximal-downset extension attains its bound") {
  for (const auto& e : enumerate_catalog(4))
    for (unsigned m = 1; m <= 5; ++m) {
      Poset q = max_downset_extension(m, e.poset);
      CHECK(d_count(q) == (Int(1) << (m - 1)) * (e.downsets + 1));
    }
  for (const auto& e : enumerate_catalog(3)) {
    for (unsigned m = 1; m <= 3; ++m) {
      Int bound = (Int(1) << (m - 1)) * (e.downsets + 1);
      for (const Poset& q : enumerate_extensions(m, e.poset)) CHECK(d_count(q) <= bound);
    }
  }
}

TEST_CASE("strict antitonicity needs at least two added points") {
  Poset a2 = Poset::antichain(2);
  Poset c2 = Poset::chain(2);
  CHECK(e_incl_excl(1, a2) == e_incl_excl(1, c2));
  for (unsigned m = 2; m <= 4; ++m) CHECK(e_incl_excl(m, a2) > e_incl_excl(m, c2));
}

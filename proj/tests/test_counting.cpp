#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "posetx/catalog.hpp"
#include "posetx/counting.hpp"

using namespace posetx;

TEST_CASE("downset enumeration on tiny posets") {
  std::vector<Mask> a2 = downset_masks(Poset::antichain(2));
  CHECK(a2 == std::vector<Mask>{0, 1, 2, 3});
  std::vector<Mask> c2 = downset_masks(Poset::chain(2));
  CHECK(c2 == std::vector<Mask>{0, 1, 3});
  CHECK(downset_masks(fence(2)).size() == 8);
  CHECK(downset_masks(Poset()).size() == 1);
}

TEST_CASE("closed forms for chains and antichains") {
  for (int k = 0; k <= 10; ++k) CHECK(d_count(Poset::antichain(k)) == Int(1) << k);
  for (int k = 0; k <= 10; ++k) CHECK(d_count(Poset::chain(k)) == k + 1);
  CHECK(d_count(Poset()) == 1);
  CHECK(d_count(zigzag(5)) == 13);
}

TEST_CASE("fibonacci downset numbers for zigzags") {
  std::vector<Int> fib = {1, 2};
  for (int i = 2; i <= 14; ++i) fib.push_back(fib[i - 1] + fib[i - 2]);
  for (int k = 1; k <= 14; ++k) CHECK(d_count(zigzag(k)) == fib[k]);
}

TEST_CASE("two-term split at the bottom of a chain") {
  Poset c2 = Poset::chain(2);
  CHECK(d_split(c2, bit(0)) == 3);  // 1 + 2
  CHECK(d_split(fence(2), fence(2).minimal_points()) == 8);
  CHECK_THROWS_AS(d_split(c2, c2.ground()), NotAntichainError);
}

TEST_CASE("split over arbitrary subsets only bounds the count") {
  auto cat = enumerate_catalog(5);
  std::mt19937_64 rng(23);
  int non_antichain_seen = 0;
  for (const auto& e : cat) {
    const Poset& p = e.poset;
    for (int t = 0; t < 8; ++t) {
      Mask a = p.ground() & rng();
      Int bound = d_split_upper_bound(p, a);
      CHECK(bound >= e.downsets);
      if (p.is_antichain(a))
        CHECK(bound == e.downsets);
      else
        ++non_antichain_seen;
    }
  }
  CHECK(non_antichain_seen > 100);
}

TEST_CASE("antichain enumeration") {
  for (int k = 1; k <= 6; ++k) {
    CHECK(antichain_masks(Poset::chain(k)).size() == static_cast<std::size_t>(k + 1));
    CHECK(a_count(Poset::antichain(k)) == Int(1) << k);
  }
  CHECK(a_count(fence(3)) == 21);
  // antichains and downsets are equinumerous
  auto cat = enumerate_catalog(5);
  for (const auto& e : cat) CHECK(a_count(e.poset) == e.downsets);
}

TEST_CASE("antichain power formula") {
  Poset a3 = Poset::antichain(3);
  CHECK(d_antichain_formula(a3, a3.ground()) == 8);  // single empty term
  auto cat = enumerate_catalog(5);
  for (const auto& e : cat) {
    CHECK(d_antichain_formula(e.poset, 0) == e.downsets);  // reduces to the antichain count
    CHECK(d_antichain_formula(e.poset, e.poset.minimal_points()) == e.downsets);
  }
}

TEST_CASE("product and ordinal rules") {
  CHECK(d_product_rule(Poset::antichain(1), Poset::chain(2)) == 6);
  CHECK(d_ordinal_rule(Poset::antichain(2), Poset::antichain(2)) == 7);
  for (int k = 2; k <= 6; ++k)
    for (int m = 1; m < k; ++m) {
      Poset p = cardinal_sum(Poset::antichain(m - 1),
                             ordinal_sum(Poset::antichain(1), Poset::antichain(k - m)));
      CHECK(d_count(p) == (Int(1) << (m - 1)) + (Int(1) << (k - 1)));
    }
}

TEST_CASE("component factorization") {
  Poset p = cardinal_sum(Poset::chain(2), cardinal_sum(fence(2), Poset::antichain(2)));
  CHECK(components(p).size() == 4);  // the antichain part is two singletons
  CHECK(d_by_components(p) == d_count(p));
  CHECK(d_by_components(p) == Int(3 * 8 * 4));
  CHECK(components(Poset()).empty());
}

TEST_CASE("vertical count boundary cases") {
  Poset o = fence(2), p = Poset::chain(3);
  CHECK(d_vertical(VerticalRelation::empty(o, p)) == d_product_rule(o, p));
  CHECK(d_vertical(VerticalRelation::total(o, p)) == d_ordinal_rule(o, p));
}

TEST_CASE("vertical count against brute force") {
  std::mt19937_64 rng(29);
  auto random_poset = [&](int max_points) {
    int k = static_cast<int>(rng() % (max_points + 1));
    std::vector<std::pair<int, int>> rel;
    for (int i = 0; i < k; ++i)
      for (int j = i + 1; j < k; ++j)
        if (rng() % 3 == 0) rel.emplace_back(i, j);
    return Poset::from_pairs(k, rel);
  };
  for (int t = 0; t < 250; ++t) {
    Poset lower = (t % 3 == 0) ? Poset::antichain(static_cast<int>(rng() % 4))
                               : random_poset(4);
    Poset upper = random_poset(4);
    std::vector<std::pair<int, int>> seed;
    for (int x = 0; x < lower.size(); ++x)
      for (int y = 0; y < upper.size(); ++y)
        if (rng() % 4 == 0) seed.emplace_back(x, y);
    VerticalRelation vr = VerticalRelation::closure(lower, upper, seed);
    Int direct = d_vertical(vr);
    CHECK(direct == Int(downset_masks(vertical_sum(vr)).size()));
    if (lower.is_antichain(lower.ground())) {
      Int powers = 0;
      for (Mask d : downset_masks(upper))
        powers += Int(1) << (lower.size() - popcount(vr.related_from(d)));
      CHECK(powers == direct);
    }
  }
}

TEST_CASE("point split holds at every point") {
  auto cat = enumerate_catalog(5);
  for (const auto& e : cat) {
    const Poset& p = e.poset;
    for (int x = 0; x < p.size(); ++x)
      CHECK(d_count(p.remove(p.down(x))) + d_count(p.remove(p.up(x))) == e.downsets);
  }
}

TEST_CASE("extremal counts") {
  for (int k = 1; k <= 6; ++k) {
    CHECK(max_d_given_minimals(k, k).max_d == Int(1) << k);
    CHECK(max_d_given_minimals(k, k).maximizers == 1);
    CHECK(max_d_given_height(k, 1).max_d == Int(1) << k);
    CHECK(max_d_given_height(k, 1).maximizers == 1);
  }
  ExtremalCount five_two = max_d_given_minimals(5, 2);
  CHECK(five_two.max_d == 18);
  CHECK(five_two.maximizers == 20);
  ExtremalCount height = max_d_given_height(4, 3);
  CHECK(height.max_d == 8);
  CHECK(height.maximizers == 24);
  CHECK_THROWS_AS(max_d_given_minimals(3, 0), std::invalid_argument);
  CHECK_THROWS_AS(max_d_given_height(3, 4), std::invalid_argument);
}

TEST_CASE("stream, memoized split and formulas agree on all small classes") {
  auto cat = enumerate_catalog(6);
  CHECK(cat.size() == 406);
  for (const auto& e : cat) {
    const Poset& p = e.poset;
    Int d = e.downsets;
    CHECK(Int(downset_masks(p).size()) == d);
    CHECK(d_split(p, p.minimal_points()) == d);
    CHECK(d_antichain_formula(p, p.minimal_points()) == d);
    CHECK(d_by_components(p) == d);
  }
}

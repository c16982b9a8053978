#pragma once
// Finite partial orders on up to 64 points, stored as one bitmask per point.
// Points are indices 0..k-1; subsets of the ground set are plain 64-bit masks,
// so closure and comparability queries are single word operations.

#include <bit>
#include <cstdint>
#include <utility>
#include <vector>

#include "posetx/errors.hpp"

namespace posetx {

using Mask = std::uint64_t;

inline constexpr int kMaxPoints = 64;

constexpr Mask bit(int i) { return Mask{1} << i; }

constexpr Mask full_mask(int k) {
  if (k <= 0) return 0;
  if (k >= 64) return ~Mask{0};
  return (Mask{1} << k) - 1;
}

inline int popcount(Mask m) { return std::popcount(m); }

/// Calls f(i) for every set bit, ascending.
template <typename F>
void for_each_bit(Mask m, F&& f) {
  while (m) {
    f(std::countr_zero(m));
    m &= m - 1;
  }
}

/// Immutable finite poset. Stores the full reflexive relation in both
/// directions: up(x) = { y | x <= y } and down(x) = { y | y <= x }.
/// Every constructor validates reflexivity, transitivity and antisymmetry.
class Poset {
 public:
  Poset() = default;  // the empty poset

  /// Smallest partial order containing the given pairs (i below j).
  /// Throws CycleError if the closure relates two distinct points both ways.
  static Poset from_pairs(int k, const std::vector<std::pair<int, int>>& relation_pairs);

  /// Adopts explicit reflexive up-closures; validates the order axioms.
  static Poset from_up_sets(int k, std::vector<Mask> up);

  static Poset antichain(int k);
  static Poset chain(int k);

  int size() const { return k_; }
  bool empty() const { return k_ == 0; }
  Mask ground() const { return full_mask(k_); }

  Mask up(int x) const { return up_[x]; }
  Mask down(int x) const { return down_[x]; }
  Mask strict_up(int x) const { return up_[x] & ~bit(x); }
  Mask strict_down(int x) const { return down_[x] & ~bit(x); }
  Mask comparable(int x) const { return up_[x] | down_[x]; }
  bool leq(int x, int y) const { return (up_[x] >> y) & 1; }

  Mask up_closure(Mask a) const;    // least upset containing a
  Mask down_closure(Mask a) const;  // least downset containing a

  Mask minimal_points() const;
  Mask maximal_points() const;

  /// Maximal cardinality of a chain; 0 for the empty poset.
  int height() const;

  /// levels()[x] = maximal cardinality of a chain with top x (1-based).
  std::vector<int> levels() const;

  bool is_antichain(Mask a) const;
  bool is_downset(Mask a) const;
  bool is_upset(Mask a) const;

  /// Largest subset of u whose complement's up-closure avoids it,
  /// i.e. ground \ up_closure(ground \ u).
  Mask interior(Mask u) const;

  /// Induced subposet on keep, reindexed 0..#keep-1 in ascending original order.
  Poset restrict(Mask keep) const;
  Poset remove(Mask drop) const { return restrict(ground() & ~drop); }

  Poset dual() const;

  /// Covering pairs (i, j) with i immediately below j, sorted lexicographically.
  std::vector<std::pair<int, int>> cover_pairs() const;

  /// A linear extension: ascending |down(x)|, ties by index.
  std::vector<int> linear_extension() const;

  bool operator==(const Poset& o) const = default;

 private:
  void validate() const;

  int k_ = 0;
  std::vector<Mask> up_;
  std::vector<Mask> down_;
};

Poset cardinal_sum(const Poset& o, const Poset& p);  // disjoint union
Poset ordinal_sum(const Poset& o, const Poset& p);   // everything in o below everything in p

/// Fence on 2t points: 0 < 1 > 2 < 3 > ... with even points minimal.
Poset fence(int t);

/// Zigzag on k points: consecutive points alternately related upward and
/// downward, zigzag(2t) == fence(t). Downset numbers follow the Fibonacci
/// recursion d(zigzag(k+2)) = d(zigzag(k+1)) + d(zigzag(k)).
Poset zigzag(int k);

/// A cross relation R between a lower and an upper poset subject to the
/// closure condition: x <= x' and (x', y) in R imply (x, y) in R, and
/// (x, y') in R and y' <= y imply (x, y) in R. Equivalently, each row is an
/// upset of the upper poset and rows shrink going up the lower poset.
/// Construction validates eagerly and throws ClosureError.
class VerticalRelation {
 public:
  VerticalRelation(Poset lower, Poset upper, const std::vector<std::pair<int, int>>& pairs);

  /// Least valid relation containing the seed pairs.
  static VerticalRelation closure(Poset lower, Poset upper,
                                  const std::vector<std::pair<int, int>>& seed_pairs);

  static VerticalRelation empty(Poset lower, Poset upper);
  static VerticalRelation total(Poset lower, Poset upper);

  const Poset& lower() const { return lower_; }
  const Poset& upper() const { return upper_; }

  Mask row(int x) const { return row_[x]; }  // upper points above lower point x
  Mask col(int y) const { return col_[y]; }  // lower points below upper point y

  /// Lower points related to at least one point of the upper subset d.
  Mask related_from(Mask d) const;

  std::vector<std::pair<int, int>> pairs() const;

  bool operator==(const VerticalRelation& o) const = default;

 private:
  VerticalRelation(Poset lower, Poset upper, std::vector<Mask> rows, bool check);
  void rebuild_cols();
  void validate() const;

  Poset lower_, upper_;
  std::vector<Mask> row_;
  std::vector<Mask> col_;
};

/// Poset on the disjoint union whose order is the lower order, the upper
/// order, and the cross relation; lower points keep their indices, upper
/// points shift by the lower size.
Poset vertical_sum(const VerticalRelation& v);

}  // namespace posetx

#pragma once
// Downset and antichain counting: brute enumeration plus the splitting
// identities, each usable as an independent cross-check of the others.

#include <unordered_map>
#include <vector>

#include "posetx/bigint.hpp"
#include "posetx/poset.hpp"

namespace posetx {

/// All downsets, each exactly once, masks ascending as integers.
std::vector<Mask> downset_masks(const Poset& p);

/// All upsets (complements of downsets), masks ascending.
std::vector<Mask> upset_masks(const Poset& p);

/// All antichains within live (default: whole ground set), masks ascending.
std::vector<Mask> antichain_masks(const Poset& p);
std::vector<Mask> antichain_masks_within(const Poset& p, Mask live);

/// Memoized downset counter over induced subposets of one parent poset.
/// Splits on the minimal antichain while it is small, otherwise on a point
/// of maximal degree (two-term recursion). The memo is keyed on the mask of
/// surviving points and lives only as long as the counter.
class DownsetCounter {
 public:
  explicit DownsetCounter(Poset p) : p_(std::move(p)) {}

  Int count(Mask live);
  Int count_all() { return count(p_.ground()); }
  const Poset& poset() const { return p_; }

 private:
  int pick_pivot(Mask live) const;

  Poset p_;
  std::unordered_map<Mask, Int> memo_;
};

/// Number of downsets (= upsets = antichains).
Int d_count(const Poset& p);

/// Number of antichains, counted by direct enumeration.
Int a_count(const Poset& p);

/// Splits d(p) over the subsets B of an antichain a: each term removes the
/// up-closure of a\B together with the down-closure of B. Throws
/// NotAntichainError when a is not an antichain.
Int d_split(const Poset& p, Mask a);

/// Same sum for an arbitrary subset; an upper bound on d(p) in general.
Int d_split_upper_bound(const Poset& p, Mask a);

/// d(p) as a sum of powers of two over the antichains of p minus a:
/// each antichain B contributes 2^#(a minus the comparability closure of B).
Int d_antichain_formula(const Poset& p, Mask a);

Int d_product_rule(const Poset& o, const Poset& p);  // d(o + p) = d(o) d(p)
Int d_ordinal_rule(const Poset& o, const Poset& p);  // d(o oplus p) = d(o) + d(p) - 1

/// Connected components of the comparability graph, ascending by lowest point.
std::vector<Mask> components(const Poset& p);

/// Factors p into components and multiplies their downset counts.
Int d_by_components(const Poset& p);

/// d of the vertical sum without building its downsets: for every downset D
/// of the upper poset, count downsets of the lower poset minus the points
/// related into D.
Int d_vertical(const VerticalRelation& v);

struct ExtremalCount {
  Int max_d;        // largest downset number in the family
  Int maximizers;   // labeled posets attaining it on a fixed ground set
};

/// Posets on k points with exactly m minimal points: maximum d is
/// 2^(m-1) + 2^(k-1), attained by an (m-1)-point antichain plus a point
/// below a (k-m)-point antichain.
ExtremalCount max_d_given_minimals(int k, int m);

/// Posets on k points of height h: maximum d is 2^(k-h) (h+1), attained by
/// a (k-h)-point antichain plus an h-point chain.
ExtremalCount max_d_given_height(int k, int h);

}  // namespace posetx

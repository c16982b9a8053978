#pragma once
// Bundled reference tables for the verification suite: the census of the 88
// isomorphism classes on up to five points with their invariants and
// exponential sums, the aggregated sums by point count / minimal-point
// count / height, extension-count tables for the classes on up to three
// points, and labeled totals. Golden data: checked against computed output,
// never derived from it.

#include <vector>

#include "posetx/bigint.hpp"

namespace posetx {

struct ReferenceClass {
  int k;
  int min_count;
  int height;
  long automorphisms;
  long copies;
  long downsets;
  const char* exp;
};

/// 88 classes, ascending point count; position is the reference index - 1.
const std::vector<ReferenceClass>& reference_census();

/// Labeled poset totals p(0)..p(6).
const std::vector<Int>& reference_labeled_counts();

/// Aggregated exponential sums by point count, k = 0..5.
const char* reference_e_k(int k);

/// Aggregated by point count and minimal-point count, 1 <= n <= k <= 5.
const char* reference_e_kn(int k, int n);

/// Aggregated by point count and height, k in {3, 4, 5}, 1 <= h <= k.
const char* reference_e_kh(int k, int h);

/// Extension counts e(m, P_n) for the nine classes with at most three
/// points (reference indices 1..9), for m = 1..9.
const std::vector<std::vector<long long>>& reference_extension_table();

/// Reference indices (1-based) of the isomorphism classes of the eight
/// upsets of the four-point fence, with multiplicity.
const std::vector<int>& reference_fence_upset_classes();

}  // namespace posetx

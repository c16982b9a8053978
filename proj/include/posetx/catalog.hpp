#pragma once
// Unlabeled enumeration: canonical forms with automorphism counts, the
// catalog of isomorphism classes ordered by (points, canonical code), the
// upset-transfer matrices over a catalog, and aggregated exponential sums.

#include <cstdint>
#include <functional>
#include <vector>

#include "posetx/counting.hpp"
#include "posetx/expsum.hpp"
#include "posetx/poset.hpp"

namespace posetx {

/// Canonical form of an isomorphism class.
///
/// The code is one byte holding the point count followed by the strict-order
/// bit matrix of the canonically labeled poset, packed column by column
/// ((0,1), (0,2), (1,2), (0,3), ...) with the most significant bit of each
/// byte first. The canonical labeling is a linear extension, found by
/// partition refinement on (chain level, down-degree, up-degree) followed by
/// backtracking over refinement-compatible orderings that minimizes the bit
/// matrix; orderings tying for the minimum are exactly the automorphisms.
struct CanonicalForm {
  std::vector<std::uint8_t> code;
  Int automorphisms;
  Poset canonical;  // the representative relabeled into canonical order
};

CanonicalForm canonical_form(const Poset& p);

/// Rebuilds the canonical representative from a code.
Poset poset_from_code(const std::vector<std::uint8_t>& code);

struct CatalogEntry {
  int index = 0;  // 1-based catalog position
  Poset poset;    // canonical representative
  int points = 0;
  int min_count = 0;
  int height = 0;
  Int automorphisms;
  Int copies;    // points! / automorphisms
  Int downsets;  // d(poset)
  ExpSum exp;
  std::vector<std::uint8_t> code;
};

/// All isomorphism classes with at most k_max points, ordered by
/// (point count, canonical code), the empty poset first, indexed from 1.
/// Classes on k points are generated by adding a maximal point above each
/// downset of each class on k-1 points, deduplicating by code. Worker
/// threads split the parent classes; the merge is order-independent.
std::vector<CatalogEntry> enumerate_catalog(int k_max, int threads = 1);

/// Streams every partial order on the fixed set {0..k-1}; k <= 5.
void for_each_labeled_poset(int k, const std::function<void(const Poset&)>& f);

/// Number of labeled posets on k points by direct streaming; k <= 5.
Int labeled_poset_count(int k);

/// Square matrices over the catalog (0-based storage, same order as the
/// entries) plus the power and extension-count tables for m = 0..m_max:
///   B counts upsets by isomorphism class, A weighs them by the downset
///   count of their interior, C = B^-1 by the triangular recursion,
///   D[m][n] = d_n^m and E[m][n] = e(m, P_n).
struct CatalogMatrices {
  int classes = 0;
  int m_max = 0;
  std::vector<std::vector<Int>> A, B, C;
  std::vector<std::vector<Int>> D, E;
};

/// Requires the catalog to contain every upset class of its members (true
/// whenever it is complete through its largest point count); throws
/// IncompleteCatalogError otherwise.
CatalogMatrices catalog_matrices(const std::vector<CatalogEntry>& cat, int m_max);

/// Copy-weighted sums of exponential sums over classes with k points,
/// optionally filtered by minimal-point count or height.
ExpSum aggregate_exp(const std::vector<CatalogEntry>& cat, int k);
ExpSum aggregate_exp_min(const std::vector<CatalogEntry>& cat, int k, int n);
ExpSum aggregate_exp_height(const std::vector<CatalogEntry>& cat, int k, int h);

/// Value forms: the number of labeled posets on m + k points whose added
/// m points are exactly the minimal ones.
Int aggregate_e_k(const std::vector<CatalogEntry>& cat, int k, unsigned m);
Int aggregate_e_kn(const std::vector<CatalogEntry>& cat, int k, int n, unsigned m);
Int aggregate_e_kh(const std::vector<CatalogEntry>& cat, int k, int h, unsigned m);

struct HistogramCheckEntry {
  int i;
  Int d_value;
  Int expected;
  Int actual;
  bool pass;
};

struct HistogramCheckReport {
  int k = 0;
  std::vector<HistogramCheckEntry> entries;
  bool gap_above_half_clear = false;  // no other d-values above 2^(k-1)
  bool top_is_unique = false;         // exactly one poset with d = 2^k
  bool all_pass() const;
};

/// Histogram of downset counts over all labeled posets on k points, checked
/// at the top of the scale: the only values above 2^(k-1) are 2^k (once)
/// and 2^(k-1) + 2^(k-i) for 2 <= i <= k with multiplicities z_i * C(k, i),
/// where z_2, z_3, z_4 = 2, 6, 20 and z_i = 2i beyond.
HistogramCheckReport top_downset_census_check(int k);

struct PrimeDivisibilityReport {
  int k = 0;
  std::vector<std::pair<unsigned, bool>> per_m;
  bool all_pass() const;
};

/// For prime k: k divides e_k(m) - 2^(mk) - (-1)^k for every m <= m_max.
PrimeDivisibilityReport aggregate_prime_divisibility(const std::vector<CatalogEntry>& cat, int k,
                                                     unsigned m_max);

}  // namespace posetx

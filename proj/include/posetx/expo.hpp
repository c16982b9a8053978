#pragma once
// e(m, p): the number of posets on m extra points plus the ground set of p
// that induce p and have exactly the extra points minimal. Computed by
// inclusion-exclusion over subsets of the minimal points, in closed
// exponential-sum form, by upset recursions, and by two brute-force oracles.

#include <map>
#include <vector>

#include "posetx/counting.hpp"
#include "posetx/expsum.hpp"
#include "posetx/poset.hpp"

namespace posetx {

inline constexpr long long kDefaultOracleBudget = 100'000'000;

/// Alternating sum over subsets B of the minimal points of d(p - B)^m.
Int e_incl_excl(unsigned m, const Poset& p);

/// b(i, j) = number of i-element subsets B of the minimal points with
/// d(p - B) = j. Row 0 has a single entry 1 at j = d(p), and the entries
/// sum to 2^#Min(p).
struct CoeffTable {
  std::map<std::pair<int, Int>, Int> b;
  int min_count = 0;
};
CoeffTable coeff_table(const Poset& p);

/// Exponential-sum normal form of e(m, p); leading term is 1 * d(p)^m.
ExpSum exp_sum(const Poset& p);

/// Closed form for an antichain of size ell stacked on top of... below p:
/// bases 2^i + d(p) - 1 with signed binomial coefficients; equals
/// exp_sum(ordinal_sum(antichain(ell), p)).
ExpSum antichain_top_formula(int ell, const Poset& p);

/// Closed form for fences via products of Fibonacci numbers indexed by gap
/// sequences; equals exp_sum(fence(t)).
ExpSum fence_exp_sum(int t);

/// Counts maps from points of p to nonempty subsets of an m-set that are
/// monotone under inclusion, by exhaustive search. Independent of the
/// inclusion-exclusion path. Throws BudgetExceededError when the raw
/// candidate count (2^m - 1)^k exceeds the budget.
Int e_oracle_maps(unsigned m, const Poset& p, long long budget = kDefaultOracleBudget);

/// All extension posets on m + k points: indices 0..m-1 are the new minimal
/// points, indices m..m+k-1 carry p. Throws BudgetExceededError when
/// m + k > 7.
std::vector<Poset> enumerate_extensions(unsigned m, const Poset& p);

/// Counts the extension posets by explicit construction and validation.
Int e_oracle_orders(unsigned m, const Poset& p);

/// Sum of e(m, p|U) over all upsets U; equals d(p)^m.
Int upset_partition_check(unsigned m, const Poset& p);

/// One level of the upset recursion: given e(m, p|U) for every upset U,
/// returns e(m+1, p) = sum over upsets of d(interior(U)) * e(m, p|U).
Int e_next(const Poset& p, const std::map<Mask, Int>& e_by_upset);

/// d(p)^m - e(m, p); always nonnegative.
Int residual(unsigned m, const Poset& p);

/// Largest downset count over single-point deletions; agrees with the
/// maximum over all proper subsets because d is monotone under insertion.
Int d_prime(const Poset& p);

/// Maximum of d over all proper subsets, by exhaustive scan (cross-check).
Int d_prime_exhaustive(const Poset& p);

/// Whether prime divides e(m, p) - 1.
bool divisibility_check(const Poset& p, unsigned m, const Int& prime);

struct DivisibilityReport {
  struct Entry {
    unsigned m;
    long modulus;
    bool pass;
  };
  std::vector<Entry> entries;
  bool all_pass() const;
};

/// For every m <= m_max checks the divisors of e(m, p) - 1 that the
/// exponential-sum form guarantees: 2 always, 6 for odd m, 30 for
/// m = 1 mod 4, 42 for m = 1 mod 6, 210 for m = 1 mod 12, and each prime
/// p' <= 13 whenever m = 1 mod (p' - 1).
DivisibilityReport divisibility_suite(const Poset& p, unsigned m_max);

/// Characteristic polynomial of an extension q of p: coefficient i counts
/// the downsets D of p for which exactly i of the added minimal points lie
/// outside the q-down-closure of D. Normalized, degree m, with
/// value d(p) at 1 and d(q) at 2 (verified internally).
struct CharPoly {
  std::vector<Int> coeffs;  // coeffs[i] multiplies z^i, size m + 1

  Int eval(const Int& z) const;
  Int p0() const { return coeffs.empty() ? Int(0) : coeffs.front(); }
  int degree() const { return static_cast<int>(coeffs.size()) - 1; }
  std::string str() const;
  bool operator==(const CharPoly&) const = default;
};

/// embedding[x] is the q-index carrying p-point x; the remaining m q-points
/// must be exactly the minimal points of q. Throws NotAnExtensionError.
CharPoly char_poly(const Poset& p, const Poset& q, unsigned m, const std::vector<int>& embedding);

/// The extension with m-1 isolated extra points plus one extra point below
/// all of p; attains the maximal downset count 2^(m-1) (d(p) + 1) among
/// extensions.
Poset max_downset_extension(unsigned m, const Poset& p);

struct BoundCheck {
  const char* name;
  bool applicable;
  bool pass;
};

struct BoundsReport {
  std::vector<BoundCheck> checks;
  bool asymptotic_forms_disagree = false;  // ratio-bound precondition variants
  bool all_pass() const;
};

/// Evaluates the growth and residual inequalities for p at exponent m with
/// exact integer arithmetic (cross-multiplied where a real bound appears).
BoundsReport growth_bounds_check(const Poset& p, unsigned m);

}  // namespace posetx

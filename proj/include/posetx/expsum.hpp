#pragma once
// Exponential-sum normal form: a finite sum of coeff * base^m with positive
// integer bases, kept with bases strictly decreasing and no zero coefficients.

#include <map>
#include <string>
#include <vector>

#include "posetx/bigint.hpp"

namespace posetx {

class ExpSum {
 public:
  struct Term {
    Int coeff;
    Int base;
    bool operator==(const Term&) const = default;
  };

  ExpSum() = default;  // the zero sum

  static ExpSum single(Int coeff, Int base);
  static ExpSum from_terms(std::vector<Term> terms);        // merges and normalizes
  static ExpSum from_map(const std::map<Int, Int>& by_base);

  const std::vector<Term>& terms() const { return terms_; }
  bool zero() const { return terms_.empty(); }

  Int eval(unsigned m) const;
  Int leading_base() const;       // 0 for the zero sum
  Int leading_coeff() const;
  Int coeff_sum() const;          // sum of coefficients
  Int weighted_coeff_sum() const; // sum of coeff * base
  Int coefficient_mass() const;   // sum of |coeff|

  /// Serialization with explicit sign, leading term first: "+1*8 -2*6 +1*5".
  std::string str() const;
  static ExpSum parse(const std::string& text);

  bool operator==(const ExpSum&) const = default;

 private:
  std::vector<Term> terms_;
};

ExpSum es_add(const ExpSum& a, const ExpSum& b);
ExpSum es_scale(const ExpSum& a, const Int& c);

/// Pointwise product: bases multiply pairwise, coefficients multiply.
ExpSum es_product(const ExpSum& a, const ExpSum& b);

/// Increases every base by s.
ExpSum es_shift(const ExpSum& a, const Int& s);

}  // namespace posetx

#include "posetx/expsum.hpp"

#include <sstream>
#include <stdexcept>

#include "posetx/errors.hpp"

namespace posetx {

ExpSum ExpSum::single(Int coeff, Int base) {
  return from_terms({Term{std::move(coeff), std::move(base)}});
}

ExpSum ExpSum::from_terms(std::vector<Term> terms) {
  std::map<Int, Int> by_base;
  for (auto& t : terms) by_base[t.base] += t.coeff;
  return from_map(by_base);
}

ExpSum ExpSum::from_map(const std::map<Int, Int>& by_base) {
  ExpSum s;
  for (auto it = by_base.rbegin(); it != by_base.rend(); ++it) {
    if (it->second == 0) continue;
    if (it->first <= 0) throw std::invalid_argument("bases must be positive");
    s.terms_.push_back(Term{it->second, it->first});
  }
  return s;
}

Int ExpSum::eval(unsigned m) const {
  Int total = 0;
  for (const auto& t : terms_) total += t.coeff * pow_int(t.base, m);
  return total;
}

Int ExpSum::leading_base() const { return terms_.empty() ? Int(0) : terms_.front().base; }

Int ExpSum::leading_coeff() const { return terms_.empty() ? Int(0) : terms_.front().coeff; }

Int ExpSum::coeff_sum() const {
  Int s = 0;
  for (const auto& t : terms_) s += t.coeff;
  return s;
}

Int ExpSum::weighted_coeff_sum() const {
  Int s = 0;
  for (const auto& t : terms_) s += t.coeff * t.base;
  return s;
}

Int ExpSum::coefficient_mass() const {
  Int s = 0;
  for (const auto& t : terms_) s += boost::multiprecision::abs(t.coeff);
  return s;
}

std::string ExpSum::str() const {
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms_) {
    if (!first) os << ' ';
    first = false;
    if (t.coeff >= 0) os << '+';
    os << t.coeff.str() << '*' << t.base.str();
  }
  return os.str();
}

ExpSum ExpSum::parse(const std::string& text) {
  std::istringstream is(text);
  std::vector<Term> terms;
  std::string tok;
  while (is >> tok) {
    auto star = tok.find('*');
    if (star == std::string::npos || star == 0 || star + 1 == tok.size())
      throw ParseError(1, "bad exponential-sum term '" + tok + "'");
    if (tok[0] != '+' && tok[0] != '-')
      throw ParseError(1, "term needs an explicit sign: '" + tok + "'");
    try {
      Int coeff(tok[0] == '+' ? tok.substr(1, star - 1) : tok.substr(0, star));
      Int base(tok.substr(star + 1));
      terms.push_back(ExpSum::Term{coeff, base});
    } catch (const std::exception&) {
      throw ParseError(1, "bad exponential-sum term '" + tok + "'");
    }
  }
  return from_terms(std::move(terms));
}

ExpSum es_add(const ExpSum& a, const ExpSum& b) {
  std::map<Int, Int> by_base;
  for (const auto& t : a.terms()) by_base[t.base] += t.coeff;
  for (const auto& t : b.terms()) by_base[t.base] += t.coeff;
  return ExpSum::from_map(by_base);
}

ExpSum es_scale(const ExpSum& a, const Int& c) {
  std::map<Int, Int> by_base;
  for (const auto& t : a.terms()) by_base[t.base] = t.coeff * c;
  return ExpSum::from_map(by_base);
}

ExpSum es_product(const ExpSum& a, const ExpSum& b) {
  std::map<Int, Int> by_base;
  for (const auto& s : a.terms())
    for (const auto& t : b.terms()) by_base[s.base * t.base] += s.coeff * t.coeff;
  return ExpSum::from_map(by_base);
}

ExpSum es_shift(const ExpSum& a, const Int& s) {
  if (s < 0) throw std::invalid_argument("shift must be nonnegative");
  std::map<Int, Int> by_base;
  for (const auto& t : a.terms()) by_base[t.base + s] += t.coeff;
  return ExpSum::from_map(by_base);
}

}  // namespace posetx

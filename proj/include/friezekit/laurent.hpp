#pragma once

#include <gmpxx.h>

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "friezekit/error.hpp"

namespace fk {

using Exponents = std::vector<int>;

// Graded order: total degree ascending, then lexicographic ascending.
struct GradedLex {
  bool operator()(const Exponents& a, const Exponents& b) const;
};

using TermMap = std::map<Exponents, mpz_class, GradedLex>;

class LaurentPoly {
 public:
  LaurentPoly() = default;
  explicit LaurentPoly(std::vector<std::string> vars);
  LaurentPoly(std::vector<std::string> vars, TermMap terms);

  static LaurentPoly constant(const mpz_class& c);
  static LaurentPoly variable(const std::string& name);
  static LaurentPoly monomial(std::vector<std::string> vars, Exponents exp,
                              const mpz_class& coeff = 1);

  const std::vector<std::string>& vars() const { return vars_; }
  const TermMap& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  bool is_monomial() const { return terms_.size() == 1; }
  bool is_constant() const;
  mpz_class constant_term() const;
  int var_index(const std::string& name) const;

  void add_term(const Exponents& exp, const mpz_class& coeff);

  // Re-express over a table that contains every variable in use.
  LaurentPoly over(const std::vector<std::string>& vars) const;
  // Drop variables that appear with exponent zero in every term.
  LaurentPoly trimmed() const;

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& q);
  LaurentPoly& operator-=(const LaurentPoly& q);
  LaurentPoly& operator*=(const LaurentPoly& q);
  LaurentPoly& operator*=(const mpz_class& c);

  friend LaurentPoly operator+(LaurentPoly p, const LaurentPoly& q) { return p += q; }
  friend LaurentPoly operator-(LaurentPoly p, const LaurentPoly& q) { return p -= q; }
  friend LaurentPoly operator*(LaurentPoly p, const LaurentPoly& q) { return p *= q; }
  friend LaurentPoly operator*(LaurentPoly p, const mpz_class& c) { return p *= c; }
  friend LaurentPoly operator*(const mpz_class& c, LaurentPoly p) { return p *= c; }

  bool operator==(const LaurentPoly& q) const;
  bool operator!=(const LaurentPoly& q) const { return !(*this == q); }

 private:
  std::vector<std::string> vars_;
  TermMap terms_;
};

std::vector<std::string> merge_vars(const std::vector<std::string>& a,
                                    const std::vector<std::string>& b);

LaurentPoly monomial_quotient(const LaurentPoly& p, const LaurentPoly& m);
LaurentPoly specialize_ones(const LaurentPoly& p, const std::vector<std::string>& names);
mpz_class evaluate_ones(const LaurentPoly& p);
// Substitutes var -> var * factor.
LaurentPoly absorb_factor(const LaurentPoly& p, const std::string& var, const std::string& factor);
LaurentPoly chebyshev_apply(unsigned k, const LaurentPoly& p);

std::string to_text(const LaurentPoly& p);
LaurentPoly parse_text(const std::string& s);

std::string term_text(const std::vector<std::string>& vars, const Exponents& e,
                      const mpz_class& c, bool leading);
// First term (in canonical order) where p and q differ, or empty.
std::string first_difference(const LaurentPoly& p, const LaurentPoly& q);

// Natural ordering of names such as t2 < t10.
bool natural_less(const std::string& a, const std::string& b);

}  // namespace fk

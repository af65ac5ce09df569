#pragma once

#include <compare>
#include <map>
#include <set>
#include <utility>
#include <vector>

#include "coxdef/coxeter.hpp"
#include "coxdef/rational.hpp"

namespace coxdef {

// Canonical parameter t_{ijk}: i < j, 1 <= k <= m_ij, only for finite m_ij.
// The opposite-order symbol t_{jik} is represented through the defining
// identification t_{jik} = t_{ij,-k}^{-1}: canonical index (i,j,-k mod m)
// with negated exponent.
struct ParamIndex {
  int i = 0, j = 0, k = 0;
  auto operator<=>(const ParamIndex&) const = default;
};

// (canonical index, sign of the exponent) for a possibly non-canonical
// symbol t_{ijk}; validates k against m_ij.
std::pair<ParamIndex, int> make_param(const CoxeterMatrix& M, int i, int j, int k);

using Monomial = std::vector<std::pair<ParamIndex, int>>;  // sorted, exps != 0

// Exact multivariate Laurent polynomial over the rationals.  Terms are kept
// sorted by monomial with nonzero coefficients; the zero polynomial has no
// terms.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  explicit LaurentPoly(const Rational& c);
  static LaurentPoly variable(const ParamIndex& v, int exp = 1);
  static LaurentPoly monomial(Monomial m, const Rational& c);

  bool is_zero() const { return terms_.empty(); }
  bool is_one() const;
  bool is_monomial() const { return terms_.size() == 1; }
  bool is_constant() const;
  const Rational& constant_term() const;  // coefficient of the empty monomial

  const std::vector<std::pair<Monomial, Rational>>& terms() const { return terms_; }
  std::set<ParamIndex> variables() const;

  LaurentPoly operator-() const;
  LaurentPoly operator+(const LaurentPoly&) const;
  LaurentPoly operator-(const LaurentPoly&) const;
  LaurentPoly operator*(const LaurentPoly&) const;
  LaurentPoly& operator+=(const LaurentPoly& o) { return *this = *this + o; }
  LaurentPoly& operator-=(const LaurentPoly& o) { return *this = *this - o; }
  LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }
  LaurentPoly scaled(const Rational& c) const;

  // Inverse of a one-term polynomial; throws invalid_input otherwise.
  LaurentPoly invert_unit() const;

  bool operator==(const LaurentPoly&) const = default;

  // Normalizing constructor used by arithmetic and deserialization.
  static LaurentPoly from_terms(std::vector<std::pair<Monomial, Rational>> terms);

 private:
  std::vector<std::pair<Monomial, Rational>> terms_;
};

// The coefficient twist t_{ijk} |-> t_{jik}; in canonical variables the
// exponent of t_{ij,k} moves, negated, to t_{ij,(-k mod m_ij)}.  A ring
// involution.
LaurentPoly sigma_twist(const CoxeterMatrix& M, const LaurentPoly& p);

// Evaluation at nonzero rationals.  Every variable of p must be assigned.
using RationalAssignment = std::map<ParamIndex, Rational>;
Rational evaluate(const LaurentPoly& p, const RationalAssignment& q);

// The assignment v |-> value of sigma(v) under q, so that
// evaluate(sigma_twist(M,p), q) == evaluate(p, sigma_assignment(M,q)).
RationalAssignment sigma_assignment(const CoxeterMatrix& M, const RationalAssignment& q);

// All canonical parameters of M, sorted.
std::vector<ParamIndex> all_params(const CoxeterMatrix& M);

// Seeded generic point: small positive rationals, reproducible across
// platforms.  Used by witness searches and obstruction evaluation.
RationalAssignment generic_point(const CoxeterMatrix& M, std::uint64_t seed);

// e_0, ..., e_n of the given values (e_0 = 1).
std::vector<LaurentPoly> elementary_symmetric(const std::vector<LaurentPoly>& vals);

std::string to_string(const LaurentPoly& p);

}  // namespace coxdef

#pragma once

#include <vector>

#include "coxdef/laurent.hpp"
#include "coxdef/rational.hpp"

namespace coxdef {

// Exact arithmetic in Q(zeta_N): rational polynomials of degree < phi(N)
// reduced modulo the N-th cyclotomic polynomial.
class CyclotomicField {
 public:
  explicit CyclotomicField(long N);

  long conductor() const { return N_; }
  int degree() const { return degree_; }

  // Coefficient vector of length degree() in the basis 1, x, ..., x^{d-1}.
  using Value = std::vector<Rational>;

  Value zero() const { return Value(degree_, Rational(0)); }
  Value from_rational(const Rational& c) const;
  Value one() const { return from_rational(1); }
  Value zeta_pow(long e) const;  // zeta_N^e

  Value add(const Value& a, const Value& b) const;
  Value sub(const Value& a, const Value& b) const;
  Value neg(const Value& a) const;
  Value mul(const Value& a, const Value& b) const;
  Value inv(const Value& a) const;  // throws invalid_input on zero
  bool is_zero(const Value& a) const;
  bool is_rational(const Value& a, const Rational& c) const;

  // Integer coefficients of Phi_N (monic, ascending).
  const std::vector<Integer>& cyclotomic_polynomial() const { return phi_; }

  std::string str(const Value& a) const;

 private:
  Value reduce(std::vector<Rational> poly) const;

  long N_;
  int degree_;
  std::vector<Integer> phi_;
  // x^{degree-1+t} mod Phi for t = 1..degree-1, used by mul.
  std::vector<std::vector<Rational>> powers_;
};

// Ascending integer coefficients of Phi_n, computed by iterated exact
// division of x^n - 1 by the Phi_d for proper divisors d.
std::vector<Integer> cyclotomic_polynomial(long n);

// The root-of-unity point t_{ijk} = zeta_N^{k N / m_ij}, N = conductor of M.
// Sends the deformed algebra onto the group algebra.
CyclotomicField::Value specialize_group(const CyclotomicField& F, const CoxeterMatrix& M,
                                        const LaurentPoly& p);

}  // namespace coxdef

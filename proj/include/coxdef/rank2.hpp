#pragma once

#include <utility>
#include <vector>

#include "coxdef/laurent.hpp"

namespace coxdef {

// Exact model of the deformed algebra of a single finite pair {i,j}, i < j,
// m = m_ij < infinity.  With a = s_i s_j and s = s_i, the algebra is a free
// left module of rank 2m over the coefficient ring with basis
// {a^d, a^d s : 0 <= d < m}; a^m reduces through the minimal relation
// prod_k (a - t_{ijk}) = 0 and s conjugates coefficients by sigma and a to
// a^{-1}.  Everything downstream that touches a braid rule is validated
// against this model.
class Rank2Model {
 public:
  // p(a) + q(a)*s, coefficient vectors of length m (degree < m).
  struct Elem {
    std::vector<LaurentPoly> even, odd;
  };

  Rank2Model(const CoxeterMatrix& M, int i, int j);

  int order() const { return m_; }
  int small_letter() const { return i_; }
  int large_letter() const { return j_; }

  Elem zero() const;
  Elem one() const;
  Elem basis_elem(int d, bool odd_side) const;  // a^d or a^d s

  Elem add(const Elem& x, const Elem& y) const;
  Elem scale(const Elem& x, const LaurentPoly& c) const;
  Elem mul(const Elem& x, const Elem& y) const;
  Elem right_gen(const Elem& x, int letter) const;  // multiply by s_i or s_j
  Elem from_word(const Word& w) const;              // fold letters
  bool is_zero(const Elem& x) const;
  bool equal(const Elem& x, const Elem& y) const;

  // e_0..e_m of t_{ij,1..m}.
  const std::vector<LaurentPoly>& elementary() const { return e_; }

  // Polynomial vectors for a^{-1} and a^{m}.
  const std::vector<LaurentPoly>& a_inverse() const { return a_inv_; }
  const std::vector<LaurentPoly>& a_top() const { return a_m_; }

  // Conjugation by s: sigma on coefficients, a -> a^{-1}.
  std::vector<LaurentPoly> hat(const std::vector<LaurentPoly>& p) const;

  std::vector<LaurentPoly> poly_mul(const std::vector<LaurentPoly>& p,
                                    const std::vector<LaurentPoly>& q) const;
  std::vector<LaurentPoly> mul_by_a(const std::vector<LaurentPoly>& p) const;
  std::vector<LaurentPoly> mul_by_a_inv(const std::vector<LaurentPoly>& p) const;

 private:
  const CoxeterMatrix* M_;
  int i_, j_, m_;
  std::vector<LaurentPoly> e_;
  std::vector<LaurentPoly> a_inv_;
  std::vector<LaurentPoly> a_m_;
};

// The relation of the pair {i,j}, written as a rewrite of one length-m
// alternating word into the opposite one plus strictly shorter alternating
// words, with exact coefficients.  The forward rule rewrites the word
// starting with the larger letter; the backward rule is its inverse.
struct DeformedBraidRule {
  Word lhs;
  Word lead_word;  // opposite alternating word, same length
  LaurentPoly lead;  // unit monomial; 1 at the group point
  std::vector<std::pair<Word, LaurentPoly>> shorter;  // vanish at the group point
};

// (forward, backward); validated inside the rank-2 model and against the
// closed leading-coefficient formula (-1)^{m+1} (prod_k t_{ijk})^{-1}.
std::pair<DeformedBraidRule, DeformedBraidRule> make_braid_rules(const CoxeterMatrix& M,
                                                                 int i, int j);

}  // namespace coxdef

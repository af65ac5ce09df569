#include "coxdef/rank2.hpp"

#include <algorithm>

namespace coxdef {

Rank2Model::Rank2Model(const CoxeterMatrix& M, int i, int j) : M_(&M) {
  if (i > j) std::swap(i, j);
  i_ = i;
  j_ = j;
  m_ = M.order(i, j);
  if (m_ == CoxeterMatrix::kInfinity)
    throw invalid_input("rank-2 model needs a finite order");

  std::vector<LaurentPoly> ts;
  for (int k = 1; k <= m_; ++k) ts.push_back(LaurentPoly::variable(ParamIndex{i, j, k}));
  e_ = elementary_symmetric(ts);

  // prod (a - t_k) = 0  <=>  a^m = sum_{d<m} -(-1)^{m-d} e_{m-d} a^d
  a_m_.assign(m_, LaurentPoly());
  for (int d = 0; d < m_; ++d) {
    LaurentPoly c = e_[m_ - d];
    if ((m_ - d) % 2 == 0) c = -c;
    a_m_[d] = c;
  }
  // a^{-1} = sum_{d=1..m} (-1)^{d+1} e_{m-d} e_m^{-1} a^{d-1}
  const LaurentPoly em_inv = e_[m_].invert_unit();
  a_inv_.assign(m_, LaurentPoly());
  for (int d = 1; d <= m_; ++d) {
    LaurentPoly c = e_[m_ - d] * em_inv;
    if (d % 2 == 0) c = -c;
    a_inv_[d - 1] = c;
  }
}

Rank2Model::Elem Rank2Model::zero() const {
  return Elem{std::vector<LaurentPoly>(m_), std::vector<LaurentPoly>(m_)};
}

Rank2Model::Elem Rank2Model::one() const {
  Elem x = zero();
  x.even[0] = LaurentPoly(Rational(1));
  return x;
}

Rank2Model::Elem Rank2Model::basis_elem(int d, bool odd_side) const {
  if (d < 0 || d >= m_) throw invalid_input("rank-2 basis exponent out of range");
  Elem x = zero();
  (odd_side ? x.odd : x.even)[d] = LaurentPoly(Rational(1));
  return x;
}

Rank2Model::Elem Rank2Model::add(const Elem& x, const Elem& y) const {
  Elem r = x;
  for (int d = 0; d < m_; ++d) {
    r.even[d] += y.even[d];
    r.odd[d] += y.odd[d];
  }
  return r;
}

Rank2Model::Elem Rank2Model::scale(const Elem& x, const LaurentPoly& c) const {
  Elem r = x;
  for (int d = 0; d < m_; ++d) {
    r.even[d] *= c;
    r.odd[d] *= c;
  }
  return r;
}

std::vector<LaurentPoly> Rank2Model::mul_by_a(const std::vector<LaurentPoly>& p) const {
  std::vector<LaurentPoly> r(m_);
  for (int d = 0; d + 1 < m_; ++d) r[d + 1] = p[d];
  const LaurentPoly& spill = p[m_ - 1];
  if (!spill.is_zero())
    for (int d = 0; d < m_; ++d) r[d] += spill * a_m_[d];
  return r;
}

std::vector<LaurentPoly> Rank2Model::mul_by_a_inv(const std::vector<LaurentPoly>& p) const {
  std::vector<LaurentPoly> r(m_);
  for (int d = 1; d < m_; ++d) r[d - 1] = p[d];
  const LaurentPoly& spill = p[0];
  if (!spill.is_zero())
    for (int d = 0; d < m_; ++d) r[d] += spill * a_inv_[d];
  return r;
}

std::vector<LaurentPoly> Rank2Model::poly_mul(const std::vector<LaurentPoly>& p,
                                              const std::vector<LaurentPoly>& q) const {
  // Horner in a: result = sum_d p_d * (a^d * q)
  std::vector<LaurentPoly> r(m_);
  std::vector<LaurentPoly> shifted = q;
  for (int d = 0; d < m_; ++d) {
    if (!p[d].is_zero())
      for (int s = 0; s < m_; ++s) r[s] += p[d] * shifted[s];
    if (d + 1 < m_) shifted = mul_by_a(shifted);
  }
  return r;
}

std::vector<LaurentPoly> Rank2Model::hat(const std::vector<LaurentPoly>& p) const {
  std::vector<LaurentPoly> r(m_);
  std::vector<LaurentPoly> power(m_);
  power[0] = LaurentPoly(Rational(1));
  for (int d = 0; d < m_; ++d) {
    const LaurentPoly tw = sigma_twist(*M_, p[d]);
    if (!tw.is_zero())
      for (int s = 0; s < m_; ++s) r[s] += tw * power[s];
    if (d + 1 < m_) power = mul_by_a_inv(power);
  }
  return r;
}

Rank2Model::Elem Rank2Model::mul(const Elem& x, const Elem& y) const {
  // (p1 + q1 s)(p2 + q2 s) = [p1 p2 + q1 hat(q2)] + [p1 q2 + q1 hat(p2)] s
  Elem r = zero();
  const auto hq2 = hat(y.odd);
  const auto hp2 = hat(y.even);
  auto acc = [&](std::vector<LaurentPoly>& dst, const std::vector<LaurentPoly>& prod) {
    for (int d = 0; d < m_; ++d) dst[d] += prod[d];
  };
  acc(r.even, poly_mul(x.even, y.even));
  acc(r.even, poly_mul(x.odd, hq2));
  acc(r.odd, poly_mul(x.even, y.odd));
  acc(r.odd, poly_mul(x.odd, hp2));
  return r;
}

Rank2Model::Elem Rank2Model::right_gen(const Elem& x, int letter) const {
  Elem g = zero();
  if (letter == i_) {
    g.odd[0] = LaurentPoly(Rational(1));  // s
  } else if (letter == j_) {
    g.odd = a_inv_;  // s_j = a^{-1} s
  } else {
    throw invalid_input("letter outside the rank-2 pair");
  }
  return mul(x, g);
}

Rank2Model::Elem Rank2Model::from_word(const Word& w) const {
  Elem x = one();
  for (int letter : w) x = right_gen(x, letter);
  return x;
}

bool Rank2Model::is_zero(const Elem& x) const {
  for (int d = 0; d < m_; ++d)
    if (!x.even[d].is_zero() || !x.odd[d].is_zero()) return false;
  return true;
}

bool Rank2Model::equal(const Elem& x, const Elem& y) const {
  for (int d = 0; d < m_; ++d)
    if (x.even[d] != y.even[d] || x.odd[d] != y.odd[d]) return false;
  return true;
}

namespace {

Word alternating(int first, int second, int len) {
  Word w(len);
  for (int t = 0; t < len; ++t) w[t] = (t % 2 == 0) ? first : second;
  return w;
}

// Word of the basis monomial a^e (even=false) or a^e s (even side handled by
// caller); e may be negative.  a = s_i s_j, s = s_i.
Word word_of_power(int i, int j, int e, bool with_s) {
  if (!with_s) {
    if (e >= 0) return alternating(i, j, 2 * e);
    return alternating(j, i, -2 * e);
  }
  if (e >= 0) return alternating(i, j, 2 * e + 1);
  return alternating(j, i, -2 * e - 1);
}

}  // namespace

std::pair<DeformedBraidRule, DeformedBraidRule> make_braid_rules(const CoxeterMatrix& M,
                                                                 int i, int j) {
  if (i > j) std::swap(i, j);
  const int m = M.order(i, j);
  if (m == CoxeterMatrix::kInfinity)
    throw invalid_input("no braid rule for an infinite order");
  Rank2Model model(M, i, j);
  const auto& e = model.elementary();
  const LaurentPoly em_inv = e[m].invert_unit();

  // Multiply the relation sum_d (-1)^{m-d} e_{m-d} a^d = 0 by the monomial
  // carrying alt(j,m), then read the expansion off against alternating words.
  DeformedBraidRule fwd;
  fwd.lhs = alternating(j, i, m);
  const bool odd = m % 2 == 1;
  for (int d = 1; d <= m; ++d) {
    LaurentPoly c = e[m - d] * em_inv;
    const int sign_exp = odd ? (m - d) : (m - d + 1);
    if (sign_exp % 2 == 1) c = -c;
    const int power = odd ? d - (m + 1) / 2 : d - m / 2;
    Word w = word_of_power(i, j, power, odd);
    if (static_cast<int>(w.size()) == m) {
      fwd.lead_word = std::move(w);
      fwd.lead = std::move(c);
    } else {
      fwd.shorter.push_back({std::move(w), std::move(c)});
    }
  }

  DeformedBraidRule bwd;
  bwd.lhs = fwd.lead_word;
  bwd.lead_word = fwd.lhs;
  bwd.lead = fwd.lead.invert_unit();
  for (const auto& [w, c] : fwd.shorter) bwd.shorter.push_back({w, -(bwd.lead * c)});

  // Validate both directions inside the model.
  for (const DeformedBraidRule* rule : {&fwd, &bwd}) {
    Rank2Model::Elem rhs = model.scale(model.from_word(rule->lead_word), rule->lead);
    for (const auto& [w, c] : rule->shorter)
      rhs = model.add(rhs, model.scale(model.from_word(w), c));
    if (!model.equal(model.from_word(rule->lhs), rhs))
      throw std::logic_error("braid rule failed model validation");
  }
  // Leading coefficient must be (-1)^{m+1} (prod_k t_{ijk})^{-1}.
  LaurentPoly expected = e[m].invert_unit();
  if (m % 2 == 0) expected = -expected;
  if (fwd.lead != expected)
    throw std::logic_error("braid rule leading coefficient mismatch");

  return {std::move(fwd), std::move(bwd)};
}

}  // namespace coxdef

#include "coxdef/cyclotomic.hpp"

#include <algorithm>
#include <sstream>

namespace coxdef {

namespace {

// Exact division of integer polynomials (ascending coefficients); the
// divisor must be monic up to sign of its leading coefficient +-1.
std::vector<Integer> poly_div_exact(std::vector<Integer> num, const std::vector<Integer>& den) {
  const std::size_t dn = den.size() - 1;
  if (num.size() < den.size()) throw invalid_input("poly_div_exact: degree underflow");
  std::vector<Integer> quot(num.size() - dn, Integer(0));
  const Integer& lead = den.back();
  for (std::size_t d = num.size(); d-- > dn;) {
    Integer c = num[d];
    if (c == 0) continue;
    if (c % lead != 0) throw invalid_input("poly_div_exact: not divisible");
    c /= lead;
    quot[d - dn] = c;
    for (std::size_t t = 0; t <= dn; ++t) num[d - dn + t] -= c * den[t];
  }
  for (const Integer& c : num)
    if (c != 0) throw invalid_input("poly_div_exact: nonzero remainder");
  return quot;
}

}  // namespace

std::vector<Integer> cyclotomic_polynomial(long n) {
  if (n < 1) throw invalid_input("cyclotomic index must be >= 1");
  // Phi_n = (x^n - 1) / prod_{d | n, d < n} Phi_d
  std::vector<Integer> num(n + 1, Integer(0));
  num[0] = -1;
  num[n] = 1;
  for (long d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    num = poly_div_exact(std::move(num), cyclotomic_polynomial(d));
  }
  return num;
}

CyclotomicField::CyclotomicField(long N) : N_(N), phi_(cyclotomic_polynomial(N)) {
  degree_ = static_cast<int>(phi_.size()) - 1;
  // Seed x^degree mod Phi and extend multiplicatively.
  std::vector<Rational> xd(degree_, Rational(0));
  for (int t = 0; t < degree_; ++t) xd[t] = Rational(-phi_[t]);  // Phi monic
  powers_.push_back(xd);
  for (int t = 1; t < degree_; ++t) {
    const std::vector<Rational>& prev = powers_.back();
    std::vector<Rational> next(degree_, Rational(0));
    // multiply prev by x, reduce the spill
    for (int s = 0; s + 1 < degree_; ++s) next[s + 1] = prev[s];
    const Rational spill = prev[degree_ - 1];
    if (spill != 0)
      for (int s = 0; s < degree_; ++s) next[s] += spill * powers_[0][s];
    powers_.push_back(std::move(next));
  }
}

CyclotomicField::Value CyclotomicField::from_rational(const Rational& c) const {
  Value v = zero();
  v[0] = c;
  return v;
}

CyclotomicField::Value CyclotomicField::reduce(std::vector<Rational> poly) const {
  Value v = zero();
  for (std::size_t d = 0; d < poly.size(); ++d) {
    if (poly[d] == 0) continue;
    if (d < static_cast<std::size_t>(degree_)) {
      v[d] += poly[d];
    } else {
      const auto& row = powers_[d - degree_];
      for (int s = 0; s < degree_; ++s) v[s] += poly[d] * row[s];
    }
  }
  return v;
}

CyclotomicField::Value CyclotomicField::zeta_pow(long e) const {
  long r = e % N_;
  if (r < 0) r += N_;
  std::vector<Rational> poly(r + 1, Rational(0));
  poly[r] = 1;
  return reduce(std::move(poly));
}

CyclotomicField::Value CyclotomicField::add(const Value& a, const Value& b) const {
  Value v = a;
  for (int s = 0; s < degree_; ++s) v[s] += b[s];
  return v;
}

CyclotomicField::Value CyclotomicField::sub(const Value& a, const Value& b) const {
  Value v = a;
  for (int s = 0; s < degree_; ++s) v[s] -= b[s];
  return v;
}

CyclotomicField::Value CyclotomicField::neg(const Value& a) const {
  Value v = a;
  for (auto& c : v) c = -c;
  return v;
}

CyclotomicField::Value CyclotomicField::mul(const Value& a, const Value& b) const {
  std::vector<Rational> prod(2 * degree_ - 1, Rational(0));
  for (int s = 0; s < degree_; ++s) {
    if (a[s] == 0) continue;
    for (int t = 0; t < degree_; ++t)
      if (b[t] != 0) prod[s + t] += a[s] * b[t];
  }
  return reduce(std::move(prod));
}

bool CyclotomicField::is_zero(const Value& a) const {
  return std::all_of(a.begin(), a.end(), [](const Rational& c) { return c == 0; });
}

bool CyclotomicField::is_rational(const Value& a, const Rational& c) const {
  if (a[0] != c) return false;
  for (int s = 1; s < degree_; ++s)
    if (a[s] != 0) return false;
  return true;
}

CyclotomicField::Value CyclotomicField::inv(const Value& a) const {
  if (is_zero(a)) throw invalid_input("cyclotomic inverse of zero");
  // extended Euclid in Q[x] against Phi_N (irreducible over Q)
  std::vector<Rational> r0(phi_.size());
  for (std::size_t s = 0; s < phi_.size(); ++s) r0[s] = Rational(phi_[s]);
  std::vector<Rational> r1(a.begin(), a.end());
  while (!r1.empty() && r1.back() == 0) r1.pop_back();
  std::vector<Rational> s0{Rational(0)}, s1{Rational(1)};  // coeffs of `a`

  auto deg = [](const std::vector<Rational>& p) { return static_cast<int>(p.size()) - 1; };
  while (deg(r1) > 0) {
    // divide r0 by r1
    std::vector<Rational> rem = r0;
    std::vector<Rational> quot(std::max<int>(deg(r0) - deg(r1) + 1, 1), Rational(0));
    for (int d = deg(rem); d >= deg(r1); --d) {
      const Rational c = rem[d] / r1.back();
      if (c == 0) continue;
      quot[d - deg(r1)] = c;
      for (int t = 0; t <= deg(r1); ++t) rem[d - deg(r1) + t] -= c * r1[t];
    }
    while (!rem.empty() && rem.back() == 0) rem.pop_back();
    // s_{n+1} = s_{n-1} - q s_n
    std::vector<Rational> s2(std::max(s0.size(), quot.size() + s1.size()), Rational(0));
    for (std::size_t t = 0; t < s0.size(); ++t) s2[t] = s0[t];
    for (std::size_t u = 0; u < quot.size(); ++u)
      for (std::size_t t = 0; t < s1.size(); ++t) s2[u + t] -= quot[u] * s1[t];
    while (s2.size() > 1 && s2.back() == 0) s2.pop_back();
    r0 = std::move(r1);
    r1 = std::move(rem);
    s0 = std::move(s1);
    s1 = std::move(s2);
    if (r1.empty()) throw invalid_input("cyclotomic inverse: common factor (bug)");
  }
  // r1 is a nonzero constant: a * s1 = r1 mod Phi
  const Rational c = r1[0];
  std::vector<Rational> inv(s1.size());
  for (std::size_t t = 0; t < s1.size(); ++t) inv[t] = s1[t] / c;
  return reduce(std::move(inv));
}

std::string CyclotomicField::str(const Value& a) const {
  std::ostringstream os;
  os << "[";
  for (int s = 0; s < degree_; ++s) {
    if (s) os << ",";
    os << rational_str(a[s]);
  }
  os << "]";
  return os.str();
}

CyclotomicField::Value specialize_group(const CyclotomicField& F, const CoxeterMatrix& M,
                                        const LaurentPoly& p) {
  const long N = F.conductor();
  CyclotomicField::Value total = F.zero();
  for (const auto& [mono, c] : p.terms()) {
    long e = 0;
    for (const auto& [v, ex] : mono) {
      const int m = M.order(v.i, v.j);
      if (m == CoxeterMatrix::kInfinity)
        throw invalid_input("specialize_group: parameter for infinite order");
      if (N % m != 0) throw invalid_input("specialize_group: conductor mismatch");
      e += (static_cast<long>(v.k) * (N / m) % N) * ex;
    }
    CyclotomicField::Value term = F.zeta_pow(e);
    for (auto& coeff : term) coeff *= c;
    total = F.add(total, term);
  }
  return total;
}

}  // namespace coxdef

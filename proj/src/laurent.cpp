#include "coxdef/laurent.hpp"

#include <algorithm>
#include <random>
#include <sstream>

namespace coxdef {

std::pair<ParamIndex, int> make_param(const CoxeterMatrix& M, int i, int j, int k) {
  if (i == j) throw invalid_input("parameter index needs i != j");
  const int m = M.order(i, j);
  if (m == CoxeterMatrix::kInfinity)
    throw invalid_input("no parameters for an infinite order");
  if (k < 1 || k > m) throw invalid_input("parameter residue k out of range 1..m");
  if (i < j) return {ParamIndex{i, j, k}, 1};
  // t_{jik} = t_{ij,-k}^{-1}; -k mod m represented in 1..m.
  const int kk = (k == m) ? m : m - k;
  return {ParamIndex{j, i, kk}, -1};
}

LaurentPoly::LaurentPoly(const Rational& c) {
  if (c != 0) terms_.push_back({Monomial{}, c});
}

LaurentPoly LaurentPoly::variable(const ParamIndex& v, int exp) {
  if (exp == 0) return LaurentPoly(Rational(1));
  return monomial(Monomial{{v, exp}}, Rational(1));
}

LaurentPoly LaurentPoly::monomial(Monomial m, const Rational& c) {
  if (c == 0) return LaurentPoly();
  std::sort(m.begin(), m.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  LaurentPoly p;
  p.terms_.push_back({std::move(m), c});
  return p;
}

bool LaurentPoly::is_one() const {
  return terms_.size() == 1 && terms_[0].first.empty() && terms_[0].second == 1;
}

bool LaurentPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].first.empty());
}

const Rational& LaurentPoly::constant_term() const {
  static const Rational zero = 0;
  for (const auto& [m, c] : terms_)
    if (m.empty()) return c;
  return zero;
}

std::set<ParamIndex> LaurentPoly::variables() const {
  std::set<ParamIndex> out;
  for (const auto& [m, c] : terms_)
    for (const auto& [v, e] : m) out.insert(v);
  return out;
}

LaurentPoly LaurentPoly::from_terms(std::vector<std::pair<Monomial, Rational>> terms) {
  for (auto& [m, c] : terms)
    std::sort(m.begin(), m.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
  std::sort(terms.begin(), terms.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  LaurentPoly p;
  for (auto& [m, c] : terms) {
    if (!p.terms_.empty() && p.terms_.back().first == m)
      p.terms_.back().second += c;
    else
      p.terms_.push_back({std::move(m), c});
    if (p.terms_.back().second == 0) p.terms_.pop_back();
  }
  return p;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly p = *this;
  for (auto& [m, c] : p.terms_) c = -c;
  return p;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
  // merge of two sorted term lists
  LaurentPoly p;
  auto a = terms_.begin(), b = o.terms_.begin();
  while (a != terms_.end() || b != o.terms_.end()) {
    if (b == o.terms_.end() || (a != terms_.end() && a->first < b->first)) {
      p.terms_.push_back(*a++);
    } else if (a == terms_.end() || b->first < a->first) {
      p.terms_.push_back(*b++);
    } else {
      Rational c = a->second + b->second;
      if (c != 0) p.terms_.push_back({a->first, std::move(c)});
      ++a;
      ++b;
    }
  }
  return p;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const { return *this + (-o); }

namespace {
Monomial mul_monomials(const Monomial& x, const Monomial& y) {
  Monomial r;
  auto a = x.begin();
  auto b = y.begin();
  while (a != x.end() || b != y.end()) {
    if (b == y.end() || (a != x.end() && a->first < b->first)) {
      r.push_back(*a++);
    } else if (a == x.end() || b->first < a->first) {
      r.push_back(*b++);
    } else {
      const int e = a->second + b->second;
      if (e != 0) r.push_back({a->first, e});
      ++a;
      ++b;
    }
  }
  return r;
}
}  // namespace

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
  std::vector<std::pair<Monomial, Rational>> prod;
  prod.reserve(terms_.size() * o.terms_.size());
  for (const auto& [ma, ca] : terms_)
    for (const auto& [mb, cb] : o.terms_) prod.push_back({mul_monomials(ma, mb), ca * cb});
  return from_terms(std::move(prod));
}

LaurentPoly LaurentPoly::scaled(const Rational& c) const {
  if (c == 0) return LaurentPoly();
  LaurentPoly p = *this;
  for (auto& [m, coeff] : p.terms_) coeff *= c;
  return p;
}

LaurentPoly LaurentPoly::invert_unit() const {
  if (terms_.size() != 1)
    throw invalid_input("invert_unit: not a unit (needs exactly one term)");
  Monomial m = terms_[0].first;
  for (auto& [v, e] : m) e = -e;
  return monomial(std::move(m), Rational(1) / terms_[0].second);
}

LaurentPoly sigma_twist(const CoxeterMatrix& M, const LaurentPoly& p) {
  std::vector<std::pair<Monomial, Rational>> out;
  out.reserve(p.terms().size());
  for (const auto& [mono, c] : p.terms()) {
    Monomial img;
    for (const auto& [v, e] : mono) {
      const int m = M.order(v.i, v.j);
      const int kk = (v.k == m) ? m : m - v.k;
      img.push_back({ParamIndex{v.i, v.j, kk}, -e});
    }
    out.push_back({std::move(img), c});
  }
  return LaurentPoly::from_terms(std::move(out));
}

Rational evaluate(const LaurentPoly& p, const RationalAssignment& q) {
  Rational total = 0;
  for (const auto& [mono, c] : p.terms()) {
    Rational term = c;
    for (const auto& [v, e] : mono) {
      auto it = q.find(v);
      if (it == q.end()) throw invalid_input("evaluate: unassigned parameter");
      if (it->second == 0) throw invalid_input("evaluate: parameter assigned zero");
      Rational base = e > 0 ? it->second : Rational(1) / it->second;
      for (int t = 0; t < std::abs(e); ++t) term *= base;
    }
    total += term;
  }
  return total;
}

RationalAssignment sigma_assignment(const CoxeterMatrix& M, const RationalAssignment& q) {
  RationalAssignment out;
  for (const auto& [v, val] : q) {
    const int m = M.order(v.i, v.j);
    const int kk = (v.k == m) ? m : m - v.k;
    auto it = q.find(ParamIndex{v.i, v.j, kk});
    if (it == q.end()) throw invalid_input("sigma_assignment: assignment not total");
    out[v] = Rational(1) / it->second;
  }
  return out;
}

std::vector<ParamIndex> all_params(const CoxeterMatrix& M) {
  std::vector<ParamIndex> out;
  for (const auto& [pair, m] : M.orders())
    if (m != CoxeterMatrix::kInfinity)
      for (int k = 1; k <= m; ++k) out.push_back({pair.first, pair.second, k});
  return out;
}

RationalAssignment generic_point(const CoxeterMatrix& M, std::uint64_t seed) {
  // mt19937_64 has a pinned sequence, so outputs are stable everywhere.
  std::mt19937_64 gen(seed * 0x9e3779b97f4a7c15ull + 12345);
  RationalAssignment q;
  for (const ParamIndex& v : all_params(M)) {
    const long num = 2 + static_cast<long>(gen() % 23);
    const long den = 2 + static_cast<long>(gen() % 23);
    q[v] = Rational(num, den);
  }
  return q;
}

std::vector<LaurentPoly> elementary_symmetric(const std::vector<LaurentPoly>& vals) {
  std::vector<LaurentPoly> e(vals.size() + 1);
  e[0] = LaurentPoly(Rational(1));
  for (std::size_t n = 0; n < vals.size(); ++n)
    for (std::size_t d = std::min(n + 1, vals.size()); d >= 1; --d)
      e[d] = e[d] + e[d - 1] * vals[n];
  return e;
}

std::string to_string(const LaurentPoly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [mono, c] : p.terms()) {
    if (!first) os << (c > 0 ? " + " : " - ");
    if (first && c < 0) os << "-";
    first = false;
    const Rational a = c > 0 ? c : Rational(-c);
    if (a != 1 || mono.empty()) os << rational_str(a);
    bool star = a != 1 || mono.empty();
    for (const auto& [v, e] : mono) {
      if (star) os << "*";
      star = true;
      os << "t(" << v.i << "," << v.j << "," << v.k << ")";
      if (e != 1) os << "^" << e;
    }
  }
  return os.str();
}

}  // namespace coxdef

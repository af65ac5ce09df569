#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "coxdef/coxeter.hpp"
#include "coxdef/laurent.hpp"
#include "coxdef/rank2.hpp"

namespace coxdef {

// --- coefficient rings ------------------------------------------------------
//
// The rewriting engine is generic over the coefficient ring.  A ring supplies
// exact arithmetic, a zero test, and the involution sigma that a generator
// drags coefficients through.  Three instances matter: the full symbolic ring
// of Laurent polynomials, a seeded generic rational point (values are tracked
// together with their sigma-images, since a bare number cannot be twisted),
// and nothing else -- the root-of-unity point is handled by specializing
// symbolic results.

struct SymbolicRing {
  using Value = LaurentPoly;

  explicit SymbolicRing(const CoxeterMatrix& m) : M(&m) {}

  Value from_poly(const LaurentPoly& p) const { return p; }
  Value zero() const { return LaurentPoly(); }
  Value one() const { return LaurentPoly(Rational(1)); }
  Value add(const Value& a, const Value& b) const { return a + b; }
  Value mul(const Value& a, const Value& b) const { return a * b; }
  Value neg(const Value& a) const { return -a; }
  bool is_zero(const Value& a) const { return a.is_zero(); }
  bool is_one(const Value& a) const { return a.is_one(); }
  Value sigma(const Value& a) const { return sigma_twist(*M, a); }

  const CoxeterMatrix* M;
};

// Value of a polynomial at a generic point together with the value of its
// sigma-twist there; sigma acts by swapping the two components.
struct QPair {
  Rational val, tw;
  bool operator==(const QPair&) const = default;
};

struct GenericPointRing {
  using Value = QPair;

  GenericPointRing(const CoxeterMatrix& m, RationalAssignment q)
      : M(&m), q_(std::move(q)), qs_(sigma_assignment(m, q_)) {}

  Value from_poly(const LaurentPoly& p) const {
    return {evaluate(p, q_), evaluate(p, qs_)};
  }
  Value zero() const { return {Rational(0), Rational(0)}; }
  Value one() const { return {Rational(1), Rational(1)}; }
  Value add(const Value& a, const Value& b) const { return {a.val + b.val, a.tw + b.tw}; }
  Value mul(const Value& a, const Value& b) const { return {a.val * b.val, a.tw * b.tw}; }
  Value neg(const Value& a) const { return {-a.val, -a.tw}; }
  bool is_zero(const Value& a) const { return a.val == 0 && a.tw == 0; }
  bool is_one(const Value& a) const { return a.val == 1 && a.tw == 1; }
  Value sigma(const Value& a) const { return {a.tw, a.val}; }

  const RationalAssignment& assignment() const { return q_; }

  const CoxeterMatrix* M;

 private:
  RationalAssignment q_, qs_;
};

// --- algebra elements -------------------------------------------------------

// Finite left-coefficient combination of spanning-set elements T_{w(x)},
// keyed by the canonical reduced word of x.  No zero coefficients are stored.
template <typename V>
struct AlgebraElement {
  std::map<Word, V, ShortLex> terms;

  bool is_zero() const { return terms.empty(); }
  bool operator==(const AlgebraElement&) const = default;

  bool even() const {
    for (const auto& [w, c] : terms)
      if (w.size() % 2 != 0) return false;
    return true;
  }
};

// max key length; -1 for the zero element
template <typename V>
int filtration_degree(const AlgebraElement<V>& x) {
  int d = -1;
  for (const auto& [w, c] : x.terms) d = std::max<int>(d, static_cast<int>(w.size()));
  return d;
}

// Connected components of the odd-order graph on I, each sorted, ordered by
// least vertex.  Letter counts summed over a component are braid-invariant.
std::vector<std::vector<int>> odd_components(const CoxeterMatrix& M);

// Per-component maxima over the keys of x of the component letter counts.
template <typename V>
std::vector<int> multidegree(const CoxeterMatrix& M, const AlgebraElement<V>& x) {
  const auto comps = odd_components(M);
  std::vector<int> gen_to_comp(M.rank());
  for (std::size_t c = 0; c < comps.size(); ++c)
    for (int g : comps[c]) gen_to_comp[g] = static_cast<int>(c);
  std::vector<int> deg(comps.size(), 0);
  for (const auto& [w, coeff] : x.terms) {
    std::vector<int> cnt(comps.size(), 0);
    for (int g : w) ++cnt[gen_to_comp[g]];
    for (std::size_t c = 0; c < comps.size(); ++c) deg[c] = std::max(deg[c], cnt[c]);
  }
  return deg;
}

// --- rewriting strategy -----------------------------------------------------

struct Strategy {
  bool fold_from_right = false;   // fold words right-to-left instead
  bool invert_tiebreak = false;   // prefer ShortLex-greatest braid-path steps
};

// --- engine -----------------------------------------------------------------
//
// Normal forms onto the spanning set via the deformed braid rules.  The
// strategy (fold direction, braid-path tie-break) makes normal_form a total
// deterministic function for every Coxeter matrix; strategy-independence is
// the observable shadow of flatness, checked elsewhere, never assumed.
template <typename Ring>
class Engine {
 public:
  using V = typename Ring::Value;
  using Elem = AlgebraElement<V>;

  Engine(const CoxeterMatrix& M, GroupContext& G, Ring ring, Strategy strategy = {},
         Budget budget = {})
      : M_(&M), G_(&G), ring_(std::move(ring)), strat_(strategy), budget_(budget) {
    for (const auto& [pair, m] : M.orders()) {
      if (m == CoxeterMatrix::kInfinity) continue;
      auto [fwd, bwd] = make_braid_rules(M, pair.first, pair.second);
      rules_.emplace(pair, std::make_pair(convert_rule(fwd), convert_rule(bwd)));
    }
  }

  const CoxeterMatrix& matrix() const { return *M_; }
  const Ring& ring() const { return ring_; }
  const Strategy& strategy() const { return strat_; }

  Elem zero() const { return {}; }

  Elem one() const {
    Elem x;
    x.terms.emplace(Word{}, ring_.one());
    return x;
  }

  // T of a single word, canonicalized.
  Elem basis(const Word& w) {
    Elem x;
    x.terms.emplace(canonical_word(*M_, w, budget_), ring_.one());
    return x;
  }

  void add_scaled(Elem& dst, const Elem& src, const V& c) const {
    if (ring_.is_zero(c)) return;
    for (const auto& [w, v] : src.terms) {
      auto it = dst.terms.find(w);
      if (it == dst.terms.end()) {
        dst.terms.emplace(w, ring_.mul(c, v));
      } else {
        it->second = ring_.add(it->second, ring_.mul(c, v));
        if (ring_.is_zero(it->second)) dst.terms.erase(it);
      }
    }
  }

  Elem scaled(const Elem& x, const V& c) const {
    Elem r;
    add_scaled(r, x, c);
    return r;
  }

  Elem add(const Elem& x, const Elem& y) const {
    Elem r = x;
    add_scaled(r, y, ring_.one());
    return r;
  }

  // Twist every coefficient by sigma^k.
  Elem twisted(const Elem& x, int k) const {
    if (k % 2 == 0) return x;
    Elem r;
    for (const auto& [w, c] : x.terms) r.terms.emplace(w, ring_.sigma(c));
    return r;
  }

  // X * s_gen
  Elem append(const Elem& x, int gen) {
    Elem r;
    for (const auto& [w, c] : x.terms) add_scaled(r, kernel_append(w, gen), c);
    return r;
  }

  // s_gen * X  (coefficients of X get twisted on the way through)
  Elem prepend(int gen, const Elem& x) {
    Elem r;
    for (const auto& [w, c] : x.terms)
      add_scaled(r, kernel_prepend(gen, w), ring_.sigma(c));
    return r;
  }

  // Normal form of T_w under this engine's strategy.
  Elem normal_form(const Word& w) {
    M_->check_word(w);
    if (strat_.fold_from_right) {
      Elem x = one();
      for (auto it = w.rbegin(); it != w.rend(); ++it) x = prepend(*it, x);
      return x;
    }
    Elem x = one();
    for (int g : w) x = append(x, g);
    return x;
  }

  // Bilinear product; T_u (c T_v) = sigma^{l(u)}(c) T_u T_v.
  Elem multiply(const Elem& x, const Elem& y) {
    Elem r;
    for (const auto& [u, cu] : x.terms) {
      for (const auto& [v, cv] : y.terms) {
        const V coeff =
            ring_.mul(cu, u.size() % 2 == 1 ? ring_.sigma(cv) : cv);
        add_scaled(r, product_of_basis(u, v), coeff);
      }
    }
    return r;
  }

  std::size_t cache_size() const { return append_cache_.size() + prepend_cache_.size(); }

 private:
  struct Rule {
    Word lead_word;
    V lead;
    std::vector<std::pair<Word, V>> shorter;
  };

  Rule convert_rule(const DeformedBraidRule& r) const {
    Rule out;
    out.lead_word = r.lead_word;
    out.lead = ring_.from_poly(r.lead);
    for (const auto& [w, c] : r.shorter) out.shorter.push_back({w, ring_.from_poly(c)});
    return out;
  }

  // The rule rewriting the alternating word that starts with `first`.
  const Rule& rule_for(int first, int second) const {
    const auto& pair_rules =
        rules_.at({std::min(first, second), std::max(first, second)});
    return first > second ? pair_rules.first : pair_rules.second;
  }

  // Rewrite T_{from} along a braid path to `to`:
  //   T_{from} = lead * T_{to} + sum_k c_k T_{v_k},   |v_k| < |from|.
  // Coefficients picked up at prefix position p are twisted by sigma^p.
  std::pair<V, std::vector<std::pair<Word, V>>> apply_path(const Word& from,
                                                           const Word& to) {
    V lead = ring_.one();
    std::vector<std::pair<Word, V>> sides;
    if (from == to) return {lead, sides};
    const auto path = braid_path(*M_, from, to, strat_.invert_tiebreak, budget_);
    for (std::size_t step = 0; step + 1 < path.size(); ++step) {
      const Word& w = path[step];
      const Word& next = path[step + 1];
      std::size_t p = 0;
      while (w[p] == next[p]) ++p;
      const Rule& rule = rule_for(w[p], next[p] /* = other letter */);
      const int m = M_->order(w[p], next[p]);
      const bool twist = p % 2 == 1;
      for (const auto& [lam, c] : rule.shorter) {
        Word side(w.begin(), w.begin() + p);
        side.insert(side.end(), lam.begin(), lam.end());
        side.insert(side.end(), w.begin() + p + m, w.end());
        sides.push_back({std::move(side), ring_.mul(lead, twist ? ring_.sigma(c) : c)});
      }
      lead = ring_.mul(lead, twist ? ring_.sigma(rule.lead) : rule.lead);
    }
    return {lead, sides};
  }

  // Normal form of T_w for a reduced word w: braid-path to the canonical
  // word, then recurse on the strictly shorter side terms.
  Elem convert_reduced(const Word& w) {
    const Word target = canonical_word(*M_, w, budget_);
    auto [lead, sides] = apply_path(w, target);
    Elem r;
    r.terms.emplace(target, std::move(lead));
    for (const auto& [v, c] : sides) add_scaled(r, normal_form(v), c);
    return r;
  }

  // T_{w(x)} * s_gen for canonical x.
  const Elem& kernel_append(const Word& canon, int gen) {
    const auto key = std::make_pair(canon, gen);
    auto it = append_cache_.find(key);
    if (it != append_cache_.end()) return it->second;

    Elem result;
    const int xid = G_->id_of(canon);
    const int yid = G_->right(xid, gen);
    if (G_->length(yid) > static_cast<int>(canon.size())) {
      Word w = canon;
      w.push_back(gen);
      result = convert_reduced(w);
    } else {
      // descent: rewrite x onto a reduced word ending in the generator,
      // cancel the square exactly, recurse on the side terms
      const Word& u = G_->word(yid);
      Word target = u;
      target.push_back(gen);
      auto [lead, sides] = apply_path(canon, target);
      result.terms.emplace(u, std::move(lead));
      for (const auto& [v, c] : sides) {
        Word vi = v;
        vi.push_back(gen);
        add_scaled(result, normal_form(vi), c);
      }
    }
    budget_.charge(append_cache_.size() + 1, "kernel cache");
    return append_cache_.emplace(key, std::move(result)).first->second;
  }

  // s_gen * T_{w(x)} for canonical x.
  const Elem& kernel_prepend(int gen, const Word& canon) {
    const auto key = std::make_pair(gen, canon);
    auto it = prepend_cache_.find(key);
    if (it != prepend_cache_.end()) return it->second;

    Elem result;
    const int xid = G_->id_of(canon);
    const int yid = G_->left(gen, xid);
    if (G_->length(yid) > static_cast<int>(canon.size())) {
      Word w{gen};
      w.insert(w.end(), canon.begin(), canon.end());
      result = convert_reduced(w);
    } else {
      const Word& u = G_->word(yid);
      Word target{gen};
      target.insert(target.end(), u.begin(), u.end());
      auto [lead, sides] = apply_path(canon, target);
      result.terms.emplace(u, ring_.sigma(lead));
      for (const auto& [v, c] : sides) {
        Word iv{gen};
        iv.insert(iv.end(), v.begin(), v.end());
        add_scaled(result, normal_form(iv), ring_.sigma(c));
      }
    }
    budget_.charge(prepend_cache_.size() + 1, "kernel cache");
    return prepend_cache_.emplace(key, std::move(result)).first->second;
  }

  // T_u * T_v for canonical words, by folding one onto the other.
  Elem product_of_basis(const Word& u, const Word& v) {
    if (strat_.fold_from_right) {
      Elem x;
      x.terms.emplace(v, ring_.one());
      for (auto it = u.rbegin(); it != u.rend(); ++it) x = prepend(*it, x);
      return x;
    }
    Elem x;
    x.terms.emplace(u, ring_.one());
    for (int g : v) x = append(x, g);
    return x;
  }

  const CoxeterMatrix* M_;
  GroupContext* G_;
  Ring ring_;
  Strategy strat_;
  Budget budget_;
  std::map<std::pair<int, int>, std::pair<Rule, Rule>> rules_;  // (fwd, bwd)
  std::map<std::pair<Word, int>, Elem> append_cache_;
  std::map<std::pair<int, Word>, Elem> prepend_cache_;
};

using SymbolicEngine = Engine<SymbolicRing>;
using SymbolicElement = AlgebraElement<LaurentPoly>;

// --- operations on top of the engine ----------------------------------------

// sigma_0 with base index `base`: t_{ijk} -> t_{jik} on coefficients, and on
// even words a_{ij} -> a_{ji} (base in {i,j}) or a_{base,i} a_{j,base}.
// Throws invalid_input on odd elements.
SymbolicElement sigma0(SymbolicEngine& E, int base, const SymbolicElement& x);

struct IsoCheckReport {
  bool ok = true;
  std::vector<std::string> lines;
};

// Verifies in the engine: a_ij a_ji = 1, the triple relations
// a_ij a_jp a_pi = 1, the minimal polynomials of the a_ij, that conjugation
// by s_base realizes sigma_0 on even elements, and sigma_0^2 = id.
IsoCheckReport iso_check(const CoxeterMatrix& M, int base = 0, Budget budget = {});

struct StructureConstants {
  std::vector<Word> basis;  // canonical words, ShortLex, length <= L
  // products[x][y] = T_{basis[x]} * T_{basis[y]}
  std::vector<std::vector<SymbolicElement>> products;
};

StructureConstants structure_constants(const CoxeterMatrix& M, int max_len,
                                       Budget budget = {});

}  // namespace coxdef

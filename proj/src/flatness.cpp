#include "coxdef/flatness.hpp"

#include <algorithm>
#include <random>

namespace coxdef {

ObstructionRelation determinant_obstruction(const CoxeterMatrix& M,
                                            const std::vector<int>& triple,
                                            const Budget& budget) {
  if (triple.size() != 3) throw invalid_input("obstruction needs a 3-element subset");
  std::vector<int> t = triple;
  std::sort(t.begin(), t.end());
  if (t[0] == t[1] || t[1] == t[2]) throw invalid_input("triple indices must be distinct");
  const int i = t[0], j = t[1], k = t[2];
  if (!rank3_is_finite(M.order(i, j), M.order(i, k), M.order(j, k)))
    throw invalid_input("determinant obstruction needs a finite rank-3 triple");

  const auto full = enumerate_full_group(M.parabolic(t), 64, budget);
  if (!full) throw invalid_input("parabolic did not close (budget too small?)");
  const long order_W = static_cast<long>(full->size());

  ObstructionRelation rel;
  rel.triple = t;
  rel.D = order_W / 2;

  Monomial mono;
  // cyclic pairs (i,j), (j,k), (k,i); the last one is reversed, so its block
  // enters the canonical monomial inverted
  const std::array<std::pair<int, int>, 3> cyclic{{{i, j}, {j, k}, {k, i}}};
  for (const auto& [a, b] : cyclic) {
    const int m = M.order(a, b);
    if (rel.D % m != 0) throw std::logic_error("m_ij does not divide |W_+|");
    const long exp = rel.D / m;
    rel.exponents.push_back({a, b, m, exp});
    for (int l = 1; l <= m; ++l) {
      const auto [v, sign] = make_param(M, a, b, l);
      mono.push_back({v, static_cast<int>(sign * exp)});
    }
  }
  // k = m of a pair maps to itself under reversal, exponents may merge
  rel.monomial = LaurentPoly::monomial(Monomial{}, 1);
  for (const auto& [v, e] : mono)
    rel.monomial *= LaurentPoly::variable(v, e);
  return rel;
}

FlatnessReport is_flat(const CoxeterMatrix& M, bool with_obstructions,
                       const Budget& budget) {
  FlatnessReport rep;
  const int r = M.rank();
  for (int i = 0; i < r; ++i)
    for (int j = i + 1; j < r; ++j)
      for (int k = j + 1; k < r; ++k) {
        if (rank3_is_finite(M.order(i, j), M.order(i, k), M.order(j, k))) {
          rep.offending_triples.push_back({i, j, k});
          if (with_obstructions)
            rep.obstructions.push_back(determinant_obstruction(M, {i, j, k}, budget));
        }
      }
  rep.flat = rep.offending_triples.empty();
  return rep;
}

namespace {

std::string strategy_name(const Strategy& s) {
  std::string name = s.fold_from_right ? "fold-right" : "fold-left";
  name += s.invert_tiebreak ? "/tiebreak-max" : "/tiebreak-min";
  return name;
}

// Stable uniform draw (uniform_int_distribution varies across libraries).
int draw(std::mt19937_64& gen, int n) { return static_cast<int>(gen() % n); }

Word random_word(std::mt19937_64& gen, int rank, int max_len) {
  Word w(draw(gen, max_len + 1));
  for (auto& g : w) g = draw(gen, rank);
  return w;
}

}  // namespace

WitnessSearchResult find_nonflat_witness(const CoxeterMatrix& M, int bound,
                                         std::uint64_t seed, std::size_t assoc_samples,
                                         const Budget& budget) {
  WitnessSearchResult res;
  res.bound = bound;
  res.seed = seed;
  res.assignment = generic_point(M, seed);

  GroupContext G(M, budget);
  const GenericPointRing ring(M, res.assignment);
  Engine<GenericPointRing> base(M, G, ring, Strategy{false, false}, budget);
  Engine<GenericPointRing> folded(M, G, ring, Strategy{true, false}, budget);
  Engine<GenericPointRing> tied(M, G, ring, Strategy{false, true}, budget);

  const int r = M.rank();

  // ShortLex scan.  The base and inverted-tiebreak normal forms are carried
  // down the prefix walk; the right-fold one is refolded per word (its
  // kernels are cached, so that is linear in the length).
  struct Frame {
    Word word;
    PairElement nf_base, nf_tied;
  };
  for (int len = 1; len <= bound && !res.witness; ++len) {
    // depth-first in lexicographic order over words of exactly `len` letters
    std::vector<Frame> stack;
    stack.push_back({Word{}, base.one(), tied.one()});
    std::vector<int> cursor{0};
    while (!cursor.empty() && !res.witness) {
      if (cursor.back() == r) {
        cursor.pop_back();
        stack.pop_back();
        if (!cursor.empty()) ++cursor.back();
        continue;
      }
      const int g = cursor.back();
      Frame next;
      next.word = stack.back().word;
      next.word.push_back(g);
      next.nf_base = base.append(stack.back().nf_base, g);
      next.nf_tied = tied.append(stack.back().nf_tied, g);
      if (static_cast<int>(next.word.size()) == len) {
        ++res.words_checked;
        PairElement nf_fold = folded.normal_form(next.word);
        if (next.nf_base != next.nf_tied) {
          Witness w;
          w.kind = Witness::Kind::strategy;
          w.word = next.word;
          w.strategy_a = strategy_name(base.strategy());
          w.strategy_b = strategy_name(tied.strategy());
          w.lhs = next.nf_base;
          w.rhs = next.nf_tied;
          res.witness = std::move(w);
        } else if (next.nf_base != nf_fold) {
          Witness w;
          w.kind = Witness::Kind::strategy;
          w.word = next.word;
          w.strategy_a = strategy_name(base.strategy());
          w.strategy_b = strategy_name(folded.strategy());
          w.lhs = next.nf_base;
          w.rhs = nf_fold;
          res.witness = std::move(w);
        }
        ++cursor.back();
      } else {
        stack.push_back(std::move(next));
        cursor.push_back(0);
      }
    }
  }

  if (!res.witness) {
    std::mt19937_64 gen(seed ^ 0xabcdef1234567890ull);
    const int len = std::min(bound, 6);
    for (std::size_t s = 0; s < assoc_samples && !res.witness; ++s) {
      const Word u = random_word(gen, r, len);
      const Word v = random_word(gen, r, len);
      const Word w = random_word(gen, r, len);
      ++res.triples_checked;
      PairElement X = base.normal_form(u);
      PairElement Y = base.normal_form(v);
      PairElement Z = base.normal_form(w);
      PairElement left = base.multiply(base.multiply(X, Y), Z);
      PairElement right = base.multiply(X, base.multiply(Y, Z));
      if (left != right) {
        Witness wit;
        wit.kind = Witness::Kind::associativity;
        wit.triple = {u, v, w};
        wit.lhs = left;
        wit.rhs = right;
        res.witness = std::move(wit);
      }
    }
  }
  return res;
}

}  // namespace coxdef

#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "coxdef/algebra.hpp"

namespace coxdef {

// The monomial identity forced on the parameters of a finite rank-3 parabolic
// by taking determinants in a putative free module of rank D = |W_+|:
//   prod over the cyclic pairs (i,j),(j,k),(k,i) of (prod_l t_{ab,l})^{D/m_ab} = 1.
// In canonical variables the reversed pair (k,i) contributes inverted, so the
// stored monomial has exponent -D/m_ik on that block.  It evaluates to 1 at
// the root-of-unity point and generically to something else.
struct ObstructionRelation {
  std::vector<int> triple;  // sorted
  long D = 0;
  struct PairExponent {
    int a = 0, b = 0;  // ordered pair as it occurs in the cyclic product
    int m = 0;
    long exponent = 0;  // D/m, positive
  };
  std::vector<PairExponent> exponents;
  LaurentPoly monomial;  // canonical-variable form of the product
};

struct FlatnessReport {
  bool flat = true;
  std::vector<std::vector<int>> offending_triples;
  std::vector<ObstructionRelation> obstructions;
};

// Flat iff no 3-subset generates a finite parabolic; rank <= 2 is always
// flat.  Obstruction relations are attached per offending triple unless
// `with_obstructions` is off (they need a group enumeration each).
FlatnessReport is_flat(const CoxeterMatrix& M, bool with_obstructions = true,
                       const Budget& budget = {});

ObstructionRelation determinant_obstruction(const CoxeterMatrix& M,
                                            const std::vector<int>& triple,
                                            const Budget& budget = {});

// --- empirical non-flatness witnesses ----------------------------------------

using PairElement = AlgebraElement<QPair>;

struct Witness {
  enum class Kind { strategy, associativity };
  Kind kind = Kind::strategy;
  // strategy case: the word whose normal form depends on the strategy
  Word word;
  std::string strategy_a, strategy_b;
  // associativity case: the offending triple of words
  std::array<Word, 3> triple;
  PairElement lhs, rhs;
};

struct WitnessSearchResult {
  std::optional<Witness> witness;
  int bound = 0;
  std::uint64_t seed = 0;
  std::size_t words_checked = 0;
  std::size_t triples_checked = 0;
  RationalAssignment assignment;
};

// At the seeded generic point, scans all words in ShortLex order up to the
// bound comparing the fixed strategy against fold-direction reversal and
// braid-path tie-break inversion, then samples seeded random triples for
// associativity failure.  Returns the first discrepancy found.
WitnessSearchResult find_nonflat_witness(const CoxeterMatrix& M, int bound,
                                         std::uint64_t seed, std::size_t assoc_samples = 200,
                                         const Budget& budget = {});

}  // namespace coxdef

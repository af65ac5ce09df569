#pragma once

#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <unordered_map>
#include <utility>
#include <vector>

#include "coxdef/rational.hpp"

namespace coxdef {

// A word in the generators s_0 .. s_{rank-1}.
using Word = std::vector<int>;

// ShortLex: shorter first, then lexicographic.
struct ShortLex {
  bool operator()(const Word& a, const Word& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  }
};

struct WordHash {
  std::size_t operator()(const Word& w) const noexcept {
    std::size_t h = 0x9e3779b97f4a7c15ull;
    for (int x : w) h = h * 1099511628211ull + static_cast<std::size_t>(x) + 1;
    return h;
  }
};

// Symmetric matrix of orders m_ij over {0,...,rank-1}, keyed on pairs i<j.
// Finite orders are >= 2; kInfinity marks m_ij = infinity.
class CoxeterMatrix {
 public:
  static constexpr int kInfinity = std::numeric_limits<int>::max();

  CoxeterMatrix(int rank, std::map<std::pair<int, int>, int> orders);

  int rank() const { return rank_; }
  int order(int i, int j) const;
  bool finite_order(int i, int j) const { return order(i, j) != kInfinity; }

  const std::map<std::pair<int, int>, int>& orders() const { return orders_; }

  void check_word(const Word& w) const;

  // Restriction to a subset of the index set.  `table[new] = old`.
  CoxeterMatrix parabolic(const std::vector<int>& subset,
                          std::vector<int>* table = nullptr) const;

  // lcm of the finite orders (1 when there are none); conductor of the
  // cyclotomic field used by the root-of-unity specialization.
  long conductor() const;

  bool operator==(const CoxeterMatrix&) const = default;

  // Convenience constructors.
  static CoxeterMatrix dihedral(int m);  // rank 2
  static CoxeterMatrix rank3(int m01, int m02, int m12);
  static CoxeterMatrix uniform(int rank, int m);  // all orders equal

 private:
  int rank_;
  std::map<std::pair<int, int>, int> orders_;
};

int sign_character(const Word& w);

// S = 1/m12 + 1/m13 + 1/m23 > 1, with 1/inf = 0; i.e. the triple is one of
// the finite rank-3 types (2,2,m), (2,3,3), (2,3,4), (2,3,5).
bool rank3_is_finite(int m12, int m13, int m23);

// --- Tits' word machinery -------------------------------------------------
//
// Braid moves replace an alternating {i,j}-subword of length m_ij by the
// opposite alternation.  The orbit of a word under braid moves is finite;
// a word is reduced iff no word in its orbit has two equal adjacent letters.

struct BraidMove {
  int pos;  // start of the alternating subword
  int len;  // m_ij
};

std::vector<BraidMove> braid_moves(const CoxeterMatrix& M, const Word& w);
Word apply_braid_move(const CoxeterMatrix& M, const Word& w, const BraidMove& mv);

// Orbit of w under braid moves, ShortLex-sorted.
std::vector<Word> braid_orbit(const CoxeterMatrix& M, const Word& w,
                              const Budget& budget = {});

bool is_reduced(const CoxeterMatrix& M, const Word& w, const Budget& budget = {});

// Square deletion via the braid-move orbit until reduced, then the ShortLex
// minimum of the orbit.  Total and deterministic for every Coxeter matrix.
Word canonical_word(const CoxeterMatrix& M, const Word& w, const Budget& budget = {});

// Shortest braid-move path from `from` to `to` (reduced words of one group
// element).  Among shortest paths the backtracking step prefers the ShortLex
// least predecessor word, or the greatest when `invert_tiebreak` is set.
std::vector<Word> braid_path(const CoxeterMatrix& M, const Word& from, const Word& to,
                             bool invert_tiebreak = false, const Budget& budget = {});

// --- Group element table --------------------------------------------------
//
// Lazily grown table of group elements (as canonical words) with memoized
// one-generator products.  This is the only group oracle in the library; no
// reflection representation is used, so infinite groups work uniformly.
class GroupContext {
 public:
  explicit GroupContext(const CoxeterMatrix& M, Budget budget = {});

  const CoxeterMatrix& matrix() const { return *M_; }
  const Budget& budget() const { return budget_; }

  int identity() const { return 0; }
  int id_of(const Word& any_word);  // canonicalizes
  const Word& word(int id) const { return words_[id]; }
  int length(int id) const { return static_cast<int>(words_[id].size()); }

  int right(int id, int gen);  // id * s_gen
  int left(int gen, int id);   // s_gen * id
  int product(int a, int b);   // fold words

  std::size_t size() const { return words_.size(); }

 private:
  int intern(Word canonical);

  const CoxeterMatrix* M_;
  Budget budget_;
  std::vector<Word> words_;
  std::unordered_map<Word, int, WordHash> index_;
  std::map<std::pair<int, int>, int> right_memo_;
  std::map<std::pair<int, int>, int> left_memo_;
};

// All elements of length <= max_len, grouped by length.  Throws
// budget_exceeded when the ball grows past the budget.
std::vector<std::vector<Word>> enumerate_elements(const CoxeterMatrix& M, int max_len,
                                                  const Budget& budget = {});

std::vector<std::size_t> growth_series(const CoxeterMatrix& M, int max_len,
                                       const Budget& budget = {});

// Full enumeration of a finite group; empty optional if the ball is still
// open at `max_len` (or the budget is hit first).
std::optional<std::vector<Word>> enumerate_full_group(const CoxeterMatrix& M,
                                                      int max_len = 64,
                                                      const Budget& budget = {});

}  // namespace coxdef

#pragma once

#include <vector>

#include "coxdef/algebra.hpp"

namespace coxdef {

// Orders m_1..m_r of a polygonal Fuchsian group Gamma(m_1,...,m_r), r >= 3;
// entries >= 2 or CoxeterMatrix::kInfinity.
struct FuchsianSignature {
  std::vector<int> orders;
};

void validate(const FuchsianSignature& sig);

// Rank-r Coxeter matrix with m_{i,i+1} = m_i cyclically and infinity
// elsewhere.  The Hecke algebra of the signature is the even subalgebra of
// the deformed algebra of this matrix, under c_j -> a_{j,j+1}.
CoxeterMatrix cyclic_matrix(const FuchsianSignature& sig);

// sum_j (1 - 1/m_j) >= 2, exactly (1/inf = 0).
bool fuchsian_is_flat(const FuchsianSignature& sig);

// A letter c_j^{e} of a word in the Fuchsian generators.
struct CLetter {
  int j = 0;
  int exp = 1;  // +1 or -1
};

struct HeckeBasisEntry {
  Word word;                    // even canonical word in the s_i
  std::vector<CLetter> c_expr;  // the same element written in the c_j
};

// Even elements of length <= max_len with their c-generator expressions.
std::vector<HeckeBasisEntry> hecke_basis(const FuchsianSignature& sig, int max_len,
                                         const Budget& budget = {});

// Translation of one even word into c-letters (pairs telescope through
// consecutive generators).
std::vector<CLetter> c_expression(const FuchsianSignature& sig, const Word& even_word);

}  // namespace coxdef

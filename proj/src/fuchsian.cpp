#include "coxdef/fuchsian.hpp"

namespace coxdef {

void validate(const FuchsianSignature& sig) {
  if (sig.orders.size() < 3) throw invalid_input("signature needs r >= 3 orders");
  for (int m : sig.orders)
    if (m != CoxeterMatrix::kInfinity && m < 2)
      throw invalid_input("signature orders must be >= 2 or infinity");
}

CoxeterMatrix cyclic_matrix(const FuchsianSignature& sig) {
  validate(sig);
  const int r = static_cast<int>(sig.orders.size());
  std::map<std::pair<int, int>, int> orders;
  for (int i = 0; i < r; ++i)
    for (int j = i + 1; j < r; ++j) orders[{i, j}] = CoxeterMatrix::kInfinity;
  for (int i = 0; i < r; ++i) {
    const int a = i, b = (i + 1) % r;
    orders[{std::min(a, b), std::max(a, b)}] = sig.orders[i];
  }
  return CoxeterMatrix(r, std::move(orders));
}

bool fuchsian_is_flat(const FuchsianSignature& sig) {
  validate(sig);
  Rational total = 0;
  for (int m : sig.orders) {
    total += 1;
    if (m != CoxeterMatrix::kInfinity) total -= Rational(1, m);
  }
  return total >= 2;
}

std::vector<CLetter> c_expression(const FuchsianSignature& sig, const Word& even_word) {
  validate(sig);
  if (even_word.size() % 2 != 0) throw invalid_input("c-expression needs an even word");
  std::vector<CLetter> out;
  for (std::size_t t = 0; t + 1 < even_word.size(); t += 2) {
    const int p = even_word[t], q = even_word[t + 1];
    if (p == q) continue;
    // a_{pq} telescopes through consecutive c's: c_p c_{p+1} ... c_{q-1}
    if (p < q)
      for (int c = p; c < q; ++c) out.push_back({c, 1});
    else
      for (int c = p - 1; c >= q; --c) out.push_back({c, -1});
  }
  return out;
}

std::vector<HeckeBasisEntry> hecke_basis(const FuchsianSignature& sig, int max_len,
                                         const Budget& budget) {
  const CoxeterMatrix M = cyclic_matrix(sig);
  std::vector<HeckeBasisEntry> out;
  for (const auto& layer : enumerate_elements(M, max_len, budget))
    for (const Word& w : layer) {
      if (w.size() % 2 != 0) continue;
      out.push_back({w, c_expression(sig, w)});
    }
  return out;
}

}  // namespace coxdef

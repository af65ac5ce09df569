#include "coxdef/algebra.hpp"

#include <numeric>

namespace coxdef {

std::vector<std::vector<int>> odd_components(const CoxeterMatrix& M) {
  std::vector<int> parent(M.rank());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& [pair, m] : M.orders())
    if (m != CoxeterMatrix::kInfinity && m % 2 == 1)
      parent[find(pair.first)] = find(pair.second);
  std::map<int, std::vector<int>> groups;
  for (int g = 0; g < M.rank(); ++g) groups[find(g)].push_back(g);
  std::vector<std::vector<int>> out;
  for (auto& [root, members] : groups) out.push_back(std::move(members));
  return out;
}

SymbolicElement sigma0(SymbolicEngine& E, int base, const SymbolicElement& x) {
  const CoxeterMatrix& M = E.matrix();
  if (base < 0 || base >= M.rank()) throw invalid_input("sigma0: base index out of range");
  if (!x.even()) throw invalid_input("sigma0: element must be even");
  SymbolicElement out;
  for (const auto& [w, c] : x.terms) {
    SymbolicElement img = E.one();
    for (std::size_t t = 0; t + 1 < w.size(); t += 2) {
      const int p = w[t], q = w[t + 1];
      // a_pq -> a_qp when base is involved, else a_{base,p} a_{q,base}
      Word iw;
      if (p == base || q == base)
        iw = {q, p};
      else
        iw = {base, p, q, base};
      img = E.multiply(img, E.normal_form(iw));
    }
    E.add_scaled(out, img, sigma_twist(M, c));
  }
  return out;
}

IsoCheckReport iso_check(const CoxeterMatrix& M, int base, Budget budget) {
  IsoCheckReport rep;
  GroupContext G(M, budget);
  SymbolicEngine E(M, G, SymbolicRing(M), {}, budget);
  const SymbolicElement one = E.one();
  auto check = [&](bool ok, const std::string& what) {
    rep.ok = rep.ok && ok;
    rep.lines.push_back(std::string(ok ? "ok: " : "FAIL: ") + what);
  };

  const int r = M.rank();
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) {
      if (i == j) continue;
      auto prod = E.multiply(E.normal_form({i, j}), E.normal_form({j, i}));
      check(prod == one,
            "a(" + std::to_string(i) + "," + std::to_string(j) + ") has inverse a(" +
                std::to_string(j) + "," + std::to_string(i) + ")");
    }

  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j)
      for (int p = 0; p < r; ++p) {
        if (i == j || j == p || p == i) continue;
        auto prod = E.multiply(
            E.multiply(E.normal_form({i, j}), E.normal_form({j, p})),
            E.normal_form({p, i}));
        check(prod == one,
              "triple relation a(" + std::to_string(i) + "," + std::to_string(j) +
                  ")a(" + std::to_string(j) + "," + std::to_string(p) + ")a(" +
                  std::to_string(p) + "," + std::to_string(i) + ") = 1");
      }

  for (const auto& [pair, m] : M.orders()) {
    if (m == CoxeterMatrix::kInfinity) continue;
    std::vector<LaurentPoly> ts;
    for (int k = 1; k <= m; ++k)
      ts.push_back(LaurentPoly::variable(ParamIndex{pair.first, pair.second, k}));
    const auto e = elementary_symmetric(ts);
    const SymbolicElement a = E.normal_form({pair.first, pair.second});
    SymbolicElement power = E.one();
    SymbolicElement sum;
    for (int d = 0; d <= m; ++d) {
      LaurentPoly c = e[m - d];
      if ((m - d) % 2 == 1) c = -c;
      E.add_scaled(sum, power, c);
      if (d < m) power = E.multiply(power, a);
    }
    check(sum.is_zero(), "minimal polynomial of a(" + std::to_string(pair.first) + "," +
                             std::to_string(pair.second) + ") vanishes");
  }

  // Conjugation by s_base realizes sigma_0 on even elements.
  const SymbolicElement sb = E.normal_form({base});
  const auto layers = enumerate_elements(M, 4, budget);
  for (const auto& layer : layers)
    for (const Word& w : layer) {
      if (w.size() % 2 != 0) continue;
      const SymbolicElement x = E.basis(w);
      const SymbolicElement conj = E.multiply(sb, E.multiply(x, sb));
      check(conj == sigma0(E, base, x), "s_base conjugation equals sigma_0 on T_w");
    }

  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) {
      if (i == j) continue;
      const SymbolicElement x = E.normal_form({i, j});
      check(sigma0(E, base, sigma0(E, base, x)) == x, "sigma_0 is an involution on a(i,j)");
    }

  return rep;
}

StructureConstants structure_constants(const CoxeterMatrix& M, int max_len, Budget budget) {
  StructureConstants table;
  for (const auto& layer : enumerate_elements(M, max_len, budget))
    table.basis.insert(table.basis.end(), layer.begin(), layer.end());
  GroupContext G(M, budget);
  SymbolicEngine E(M, G, SymbolicRing(M), {}, budget);
  table.products.resize(table.basis.size());
  for (std::size_t x = 0; x < table.basis.size(); ++x) {
    table.products[x].reserve(table.basis.size());
    for (std::size_t y = 0; y < table.basis.size(); ++y)
      table.products[x].push_back(
          E.multiply(E.basis(table.basis[x]), E.basis(table.basis[y])));
  }
  return table;
}

}  // namespace coxdef

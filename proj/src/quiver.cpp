#include "coxdef/quiver.hpp"

#include <algorithm>

#include "coxdef/coxeter.hpp"

namespace coxdef {

Quiver build_quiver(const CoxeterMatrix& M) {
  Quiver q;
  q.rank = M.rank();
  q.vertices.push_back("N");
  q.vertices.push_back("S");
  for (int i = 0; i < M.rank(); ++i) q.vertices.push_back("e" + std::to_string(i));
  for (const auto& [pair, m] : M.orders())
    if (m != CoxeterMatrix::kInfinity) q.finite_pairs.push_back(pair);
  auto disk = [](int a, int b) {
    return "d" + std::to_string(a) + "_" + std::to_string(b);
  };
  for (const auto& [p, qq] : q.finite_pairs) {
    q.vertices.push_back(disk(p, qq));
    q.vertices.push_back(disk(qq, p));
  }
  for (int i = 0; i < M.rank(); ++i) {
    q.arrows.push_back({"fN" + std::to_string(i), "N", "e" + std::to_string(i)});
    q.arrows.push_back({"fS" + std::to_string(i), "S", "e" + std::to_string(i)});
  }
  for (const auto& [p, qq] : q.finite_pairs) {
    q.arrows.push_back({"h" + std::to_string(p) + "_" + std::to_string(qq),
                        "e" + std::to_string(p), disk(p, qq)});
    q.arrows.push_back({"h" + std::to_string(qq) + "_" + std::to_string(p),
                        "e" + std::to_string(qq), disk(qq, p)});
    q.arrows.push_back({"g" + std::to_string(p) + "_" + std::to_string(qq),
                        disk(p, qq), disk(qq, p)});
    q.arrows.push_back({"g" + std::to_string(qq) + "_" + std::to_string(p),
                        disk(qq, p), disk(p, qq)});
  }
  for (const auto& [p, s] : q.finite_pairs) {
    const std::string P = std::to_string(p), Q = std::to_string(s);
    q.relations.push_back("g" + P + "_" + Q + " h" + P + "_" + Q + " fN" + P +
                          " = h" + Q + "_" + P + " fN" + Q);
    q.relations.push_back("g" + Q + "_" + P + " h" + Q + "_" + P + " fS" + Q +
                          " = h" + P + "_" + Q + " fS" + P);
    q.relations.push_back("(g" + P + "_" + Q + " g" + Q + "_" + P + ")^" +
                          std::to_string(M.order(p, s)) + " = 1");
  }
  return q;
}

// --- matrix helpers ----------------------------------------------------------

CycMat mat_identity(const CyclotomicField& F, int n) {
  CycMat I(n, std::vector<CyclotomicField::Value>(n, F.zero()));
  for (int r = 0; r < n; ++r) I[r][r] = F.one();
  return I;
}

CycMat mat_mul(const CyclotomicField& F, const CycMat& A, const CycMat& B) {
  const int n = static_cast<int>(A.size());
  const int k = static_cast<int>(B.size());
  if (n == 0 || k == 0) return {};
  if (static_cast<int>(A[0].size()) != k) throw invalid_input("matrix shape mismatch");
  const int m = static_cast<int>(B[0].size());
  CycMat C(n, std::vector<CyclotomicField::Value>(m, F.zero()));
  for (int r = 0; r < n; ++r)
    for (int t = 0; t < k; ++t) {
      if (F.is_zero(A[r][t])) continue;
      for (int c = 0; c < m; ++c)
        if (!F.is_zero(B[t][c])) C[r][c] = F.add(C[r][c], F.mul(A[r][t], B[t][c]));
    }
  return C;
}

CycMat mat_add(const CyclotomicField& F, const CycMat& A, const CycMat& B) {
  CycMat C = A;
  for (std::size_t r = 0; r < C.size(); ++r)
    for (std::size_t c = 0; c < C[r].size(); ++c) C[r][c] = F.add(C[r][c], B[r][c]);
  return C;
}

CycMat mat_sub(const CyclotomicField& F, const CycMat& A, const CycMat& B) {
  CycMat C = A;
  for (std::size_t r = 0; r < C.size(); ++r)
    for (std::size_t c = 0; c < C[r].size(); ++c) C[r][c] = F.sub(C[r][c], B[r][c]);
  return C;
}

CycMat mat_scale(const CyclotomicField& F, const CycMat& A,
                 const CyclotomicField::Value& c) {
  CycMat C = A;
  for (auto& row : C)
    for (auto& x : row) x = F.mul(x, c);
  return C;
}

bool mat_is_zero(const CyclotomicField& F, const CycMat& A) {
  for (const auto& row : A)
    for (const auto& x : row)
      if (!F.is_zero(x)) return false;
  return true;
}

CycMat mat_inverse(const CyclotomicField& F, const CycMat& A) {
  const int n = static_cast<int>(A.size());
  CycMat work = A;
  CycMat inv = mat_identity(F, n);
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    for (int r = col; r < n; ++r)
      if (!F.is_zero(work[r][col])) {
        pivot = r;
        break;
      }
    if (pivot < 0) throw invalid_input("matrix not invertible");
    std::swap(work[pivot], work[col]);
    std::swap(inv[pivot], inv[col]);
    const auto pinv = F.inv(work[col][col]);
    for (int c = 0; c < n; ++c) {
      work[col][c] = F.mul(work[col][c], pinv);
      inv[col][c] = F.mul(inv[col][c], pinv);
    }
    for (int r = 0; r < n; ++r) {
      if (r == col || F.is_zero(work[r][col])) continue;
      const auto factor = work[r][col];
      for (int c = 0; c < n; ++c) {
        work[r][c] = F.sub(work[r][c], F.mul(factor, work[col][c]));
        inv[r][c] = F.sub(inv[r][c], F.mul(factor, inv[col][c]));
      }
    }
  }
  return inv;
}

// --- representations and modules ---------------------------------------------

EvenRep regular_even_rep(const CoxeterMatrix& M, const CyclotomicField& F,
                         const Budget& budget) {
  const auto all = enumerate_full_group(M, 512, budget);
  if (!all) throw invalid_input("regular representation needs a finite group");
  GroupContext G(M, budget);
  std::vector<int> even_ids;
  std::map<int, int> index;  // group id -> basis index
  for (const Word& w : *all)
    if (w.size() % 2 == 0) {
      const int id = G.id_of(w);
      index[id] = static_cast<int>(even_ids.size());
      even_ids.push_back(id);
    }
  EvenRep rep;
  rep.dim = static_cast<int>(even_ids.size());
  for (int p = 0; p < M.rank(); ++p)
    for (int q = p + 1; q < M.rank(); ++q) {
      CycMat mat(rep.dim, std::vector<CyclotomicField::Value>(rep.dim, F.zero()));
      const int a = G.id_of({p, q});
      for (int c = 0; c < rep.dim; ++c) {
        const int img = G.product(a, even_ids[c]);
        mat[index.at(img)][c] = F.one();
      }
      rep.a[{p, q}] = std::move(mat);
    }
  return rep;
}

EvenRep trivial_even_rep(const CoxeterMatrix& M, const CyclotomicField& F) {
  EvenRep rep;
  rep.dim = 1;
  for (int p = 0; p < M.rank(); ++p)
    for (int q = p + 1; q < M.rank(); ++q) rep.a[{p, q}] = CycMat{{F.one()}};
  return rep;
}

namespace {

CycMat rep_of(const CyclotomicField& F, const EvenRep& rep, int p, int q) {
  if (p == q) return mat_identity(F, rep.dim);
  if (p < q) return rep.a.at({p, q});
  return mat_inverse(F, rep.a.at({q, p}));
}

}  // namespace

QuiverModule module_from_rep(const CoxeterMatrix& M, const CyclotomicField& F,
                             const EvenRep& rep, int base) {
  QuiverModule mod;
  const int D = rep.dim;
  mod.dim_N = mod.dim_S = D;
  mod.dim_edge.assign(M.rank(), D);
  for (int i = 0; i < M.rank(); ++i) {
    mod.f_N.push_back(mat_identity(F, D));
    mod.f_S.push_back(rep_of(F, rep, i, base));  // transport along the base edge
  }
  for (const auto& [pair, m] : M.orders()) {
    if (m == CoxeterMatrix::kInfinity) continue;
    const auto [p, q] = pair;
    mod.dim_disk[{p, q}] = mod.dim_disk[{q, p}] = D;
    mod.h[{p, q}] = mat_identity(F, D);
    mod.h[{q, p}] = mat_identity(F, D);
    mod.g[{p, q}] = mat_identity(F, D);        // north half-monodromy
    mod.g[{q, p}] = rep_of(F, rep, p, q);      // south half carries a_pq
  }
  return mod;
}

namespace {

void check_shape(const CycMat& A, int rows, int cols, const char* what) {
  if (static_cast<int>(A.size()) != rows ||
      (rows > 0 && static_cast<int>(A[0].size()) != cols))
    throw invalid_input(std::string("dimension mismatch in ") + what);
}

}  // namespace

std::vector<std::string> verify_module(const CoxeterMatrix& M, const CyclotomicField& F,
                                       const QuiverModule& mod) {
  const int r = M.rank();
  if (static_cast<int>(mod.f_N.size()) != r || static_cast<int>(mod.f_S.size()) != r ||
      static_cast<int>(mod.dim_edge.size()) != r)
    throw invalid_input("module arrows do not match the rank");
  for (int i = 0; i < r; ++i) {
    check_shape(mod.f_N[i], mod.dim_edge[i], mod.dim_N, "f_N");
    check_shape(mod.f_S[i], mod.dim_edge[i], mod.dim_S, "f_S");
  }
  for (const auto& [pair, m] : M.orders()) {
    if (m == CoxeterMatrix::kInfinity) continue;
    const auto [p, q] = pair;
    for (auto [a, b] : {std::pair{p, q}, std::pair{q, p}}) {
      if (!mod.dim_disk.count({a, b}) || !mod.h.count({a, b}) || !mod.g.count({a, b}))
        throw invalid_input("module is missing a disk arrow");
      check_shape(mod.h.at({a, b}), mod.dim_disk.at({a, b}), mod.dim_edge[a], "h");
      check_shape(mod.g.at({a, b}), mod.dim_disk.at({b, a}), mod.dim_disk.at({a, b}),
                  "g");
    }
  }

  std::vector<std::string> violations;
  for (const auto& [pair, m] : M.orders()) {
    if (m == CoxeterMatrix::kInfinity) continue;
    const auto [p, q] = pair;
    const std::string P = std::to_string(p), Q = std::to_string(q);
    const CycMat north =
        mat_sub(F, mat_mul(F, mod.g.at({p, q}), mat_mul(F, mod.h.at({p, q}), mod.f_N[p])),
                mat_mul(F, mod.h.at({q, p}), mod.f_N[q]));
    if (!mat_is_zero(F, north))
      violations.push_back("north triangle fails for pair {" + P + "," + Q + "}");
    const CycMat south =
        mat_sub(F, mat_mul(F, mod.g.at({q, p}), mat_mul(F, mod.h.at({q, p}), mod.f_S[q])),
                mat_mul(F, mod.h.at({p, q}), mod.f_S[p]));
    if (!mat_is_zero(F, south))
      violations.push_back("south triangle fails for pair {" + P + "," + Q + "}");
    CycMat power = mat_identity(F, mod.dim_disk.at({q, p}));
    const CycMat loop = mat_mul(F, mod.g.at({p, q}), mod.g.at({q, p}));
    for (int t = 0; t < m; ++t) power = mat_mul(F, power, loop);
    if (!mat_is_zero(F, mat_sub(F, power, mat_identity(F, mod.dim_disk.at({q, p})))))
      violations.push_back("monodromy order fails for pair {" + P + "," + Q + "}: (g" +
                           P + "_" + Q + " g" + Q + "_" + P + ")^" + std::to_string(m) +
                           " != 1");
  }
  return violations;
}

CyclotomicField::Value evaluate_functional(const CyclotomicField& F,
                                           const TauFunctional& fn,
                                           const std::map<ParamIndex, Rational>& tau) {
  auto total = F.zero();
  for (const auto& [v, c] : fn) {
    auto it = tau.find(v);
    if (it == tau.end()) continue;
    total = F.add(total, F.mul(c, F.from_rational(it->second)));
  }
  return total;
}

// --- first-order deformation --------------------------------------------------

namespace {

// Equations are sums  A_e X_{u_e} B_e + sum_v tau_v R_v = 0  over square
// D x D matrices; unknowns are the arrow corrections.
struct Term {
  int u = 0;
  CycMat A, B;
};

struct Equation {
  std::vector<Term> terms;
  std::map<ParamIndex, CycMat> tau;
};

struct Definition {
  int u = 0;
  std::vector<Term> terms;
  std::map<ParamIndex, CycMat> tau;
};

// X_u = -A^{-1} (other terms + tau part) B^{-1}
Definition solve_single(const CyclotomicField& F, const Equation& eq, int u) {
  int found = -1;
  for (std::size_t t = 0; t < eq.terms.size(); ++t)
    if (eq.terms[t].u == u) {
      if (found >= 0) throw std::logic_error("solve_single: unknown occurs twice");
      found = static_cast<int>(t);
    }
  if (found < 0) throw std::logic_error("solve_single: unknown not present");
  const CycMat Ai = mat_inverse(F, eq.terms[found].A);
  const CycMat Bi = mat_inverse(F, eq.terms[found].B);
  const CycMat nAi = mat_scale(F, Ai, F.neg(F.one()));
  Definition def;
  def.u = u;
  for (std::size_t t = 0; t < eq.terms.size(); ++t) {
    if (static_cast<int>(t) == found) continue;
    def.terms.push_back(
        {eq.terms[t].u, mat_mul(F, nAi, eq.terms[t].A), mat_mul(F, eq.terms[t].B, Bi)});
  }
  for (const auto& [v, R] : eq.tau)
    def.tau[v] = mat_mul(F, nAi, mat_mul(F, R, Bi));
  return def;
}

void substitute(const CyclotomicField& F, Equation& eq, const Definition& def) {
  std::vector<Term> out;
  for (const Term& t : eq.terms) {
    if (t.u != def.u) {
      out.push_back(t);
      continue;
    }
    for (const Term& d : def.terms)
      out.push_back({d.u, mat_mul(F, t.A, d.A), mat_mul(F, d.B, t.B)});
    for (const auto& [v, R] : def.tau) {
      const CycMat contrib = mat_mul(F, t.A, mat_mul(F, R, t.B));
      auto it = eq.tau.find(v);
      if (it == eq.tau.end())
        eq.tau[v] = contrib;
      else
        it->second = mat_add(F, it->second, contrib);
    }
  }
  eq.terms = std::move(out);
}

struct ScalarRow {
  std::map<long, CyclotomicField::Value> cols;
  TauFunctional tau;
};

// Incremental exact Gauss keyed by pivot column; only columns accepted by
// `pivotable` are eliminated.
struct GaussState {
  const CyclotomicField* F;
  std::map<long, ScalarRow> pivots;  // pivot col -> normalized row

  void reduce(ScalarRow& row) const {
    for (;;) {
      const ScalarRow* prow = nullptr;
      long pcol = -1;
      CyclotomicField::Value factor;
      for (const auto& [c, v] : row.cols) {
        auto pit = pivots.find(c);
        if (pit != pivots.end()) {
          prow = &pit->second;
          pcol = c;
          factor = v;
          break;
        }
      }
      if (!prow) return;
      // row -= factor * pivot_row; the pivot row's own column (implicit 1)
      // cancels exactly
      row.cols.erase(pcol);
      for (const auto& [c, v] : prow->cols) {
        const auto delta = F->mul(factor, v);
        auto rit = row.cols.find(c);
        if (rit == row.cols.end()) {
          if (!F->is_zero(delta)) row.cols[c] = F->neg(delta);
        } else {
          rit->second = F->sub(rit->second, delta);
          if (F->is_zero(rit->second)) row.cols.erase(rit);
        }
      }
      for (const auto& [v, c] : prow->tau) {
        const auto delta = F->mul(factor, c);
        auto tit = row.tau.find(v);
        if (tit == row.tau.end()) {
          if (!F->is_zero(delta)) row.tau[v] = F->neg(delta);
        } else {
          tit->second = F->sub(tit->second, delta);
          if (F->is_zero(tit->second)) row.tau.erase(tit);
        }
      }
    }
  }

  template <typename Pred>
  bool insert(ScalarRow row, Pred pivotable) {
    reduce(row);
    for (const auto& [c, v] : row.cols) {
      if (!pivotable(c)) continue;
      const auto inv = F->inv(v);
      ScalarRow norm;
      for (const auto& [cc, vv] : row.cols)
        if (cc != c) norm.cols[cc] = F->mul(vv, inv);
      for (const auto& [tv, tc] : row.tau) norm.tau[tv] = F->mul(tc, inv);
      pivots.emplace(c, std::move(norm));
      return true;
    }
    residuals.push_back(std::move(row));
    return false;
  }

  std::vector<ScalarRow> residuals;
};

}  // namespace

DeformationResult first_order_deformation(const CoxeterMatrix& M,
                                          const CyclotomicField& F,
                                          const QuiverModule& mod,
                                          const std::map<ParamIndex, Rational>& tau) {
  if (!verify_module(M, F, mod).empty())
    throw invalid_input("first-order deformation needs a module satisfying the relations");
  const int D = mod.dim_N;
  if (mod.dim_S != D) throw invalid_input("deformation needs equal space dimensions");
  for (int d : mod.dim_edge)
    if (d != D) throw invalid_input("deformation needs equal space dimensions");
  for (const auto& [k, d] : mod.dim_disk)
    if (d != D) throw invalid_input("deformation needs equal space dimensions");
  const long N = F.conductor();

  // unknown ids: f_N (0..r-1), f_S (r..2r-1), then h and g per ordered pair
  const int r = M.rank();
  std::vector<std::pair<int, int>> ordered_pairs;
  for (const auto& [pair, m] : M.orders())
    if (m != CoxeterMatrix::kInfinity) {
      ordered_pairs.push_back(pair);
      ordered_pairs.push_back({pair.second, pair.first});
    }
  std::sort(ordered_pairs.begin(), ordered_pairs.end());
  auto pair_pos = [&](int a, int b) {
    return static_cast<int>(std::lower_bound(ordered_pairs.begin(), ordered_pairs.end(),
                                             std::make_pair(a, b)) -
                            ordered_pairs.begin());
  };
  const int P = static_cast<int>(ordered_pairs.size());
  auto id_fN = [&](int i) { return i; };
  auto id_fS = [&](int i) { return r + i; };
  auto id_h = [&](int a, int b) { return 2 * r + pair_pos(a, b); };
  auto id_g = [&](int a, int b) { return 2 * r + P + pair_pos(a, b); };
  const int n_unknowns = 2 * r + 2 * P;

  const CycMat I = mat_identity(F, D);
  const CycMat nI = mat_scale(F, I, F.neg(F.one()));

  std::vector<Equation> all_equations;  // kept for the final verification
  std::vector<ScalarRow> global_pool;
  std::vector<GaussState> pair_systems;
  std::map<int, Definition> definitions;

  auto scalarize = [&](const Equation& eq) {
    std::vector<ScalarRow> rows(static_cast<std::size_t>(D) * D);
    for (const Term& t : eq.terms) {
      for (int rr = 0; rr < D; ++rr)
        for (int cc = 0; cc < D; ++cc) {
          ScalarRow& row = rows[rr * D + cc];
          for (int a = 0; a < D; ++a) {
            if (F.is_zero(t.A[rr][a])) continue;
            for (int b = 0; b < D; ++b) {
              if (F.is_zero(t.B[b][cc])) continue;
              const long col = static_cast<long>(t.u) * D * D + a * D + b;
              const auto add = F.mul(t.A[rr][a], t.B[b][cc]);
              auto it = row.cols.find(col);
              if (it == row.cols.end())
                row.cols[col] = add;
              else {
                it->second = F.add(it->second, add);
                if (F.is_zero(it->second)) row.cols.erase(it);
              }
            }
          }
        }
    }
    for (const auto& [v, R] : eq.tau)
      for (int rr = 0; rr < D; ++rr)
        for (int cc = 0; cc < D; ++cc)
          if (!F.is_zero(R[rr][cc])) rows[rr * D + cc].tau[v] = R[rr][cc];
    return rows;
  };

  for (const auto& [pair, m] : M.orders()) {
    if (m == CoxeterMatrix::kInfinity) continue;
    const auto [p, q] = pair;
    const CycMat& FNp = mod.f_N[p];
    const CycMat& FNq = mod.f_N[q];
    const CycMat& FSp = mod.f_S[p];
    const CycMat& FSq = mod.f_S[q];
    const CycMat& Hpq = mod.h.at({p, q});
    const CycMat& Hqp = mod.h.at({q, p});
    const CycMat& Gpq = mod.g.at({p, q});
    const CycMat& Gqp = mod.g.at({q, p});

    Equation north;  // g_pq h_pq f_Np - h_qp f_Nq = 0
    north.terms.push_back({id_g(p, q), I, mat_mul(F, Hpq, FNp)});
    north.terms.push_back({id_h(p, q), Gpq, FNp});
    north.terms.push_back({id_fN(p), mat_mul(F, Gpq, Hpq), I});
    north.terms.push_back({id_h(q, p), nI, FNq});
    north.terms.push_back({id_fN(q), mat_scale(F, Hqp, F.neg(F.one())), I});

    Equation south;  // g_qp h_qp f_Sq - h_pq f_Sp = 0
    south.terms.push_back({id_g(q, p), I, mat_mul(F, Hqp, FSq)});
    south.terms.push_back({id_h(q, p), Gqp, FSq});
    south.terms.push_back({id_fS(q), mat_mul(F, Gqp, Hqp), I});
    south.terms.push_back({id_h(p, q), nI, FSp});
    south.terms.push_back({id_fS(p), mat_scale(F, Hpq, F.neg(F.one())), I});

    // monodromy: sum_k P_{<k} (Z - zeta^k tau_k) P_{>k} = 0,
    // Z = g'_pq G_qp + G_pq g'_qp, all products polynomials in Gbar
    Equation mono;
    const CycMat Gbar = mat_mul(F, Gpq, Gqp);
    std::vector<CycMat> below(m + 2), above(m + 2);
    below[1] = I;  // prod over l < k
    for (int k = 2; k <= m; ++k)
      below[k] = mat_mul(F, below[k - 1],
                         mat_sub(F, Gbar, mat_scale(F, I, F.zeta_pow((k - 1) * (N / m)))));
    above[m] = I;  // prod over l > k
    for (int k = m - 1; k >= 1; --k)
      above[k] = mat_mul(F, mat_sub(F, Gbar, mat_scale(F, I, F.zeta_pow((k + 1) * (N / m)))),
                         above[k + 1]);
    for (int k = 1; k <= m; ++k) {
      mono.terms.push_back({id_g(p, q), below[k], mat_mul(F, Gqp, above[k])});
      mono.terms.push_back({id_g(q, p), mat_mul(F, below[k], Gpq), above[k]});
      const CycMat R = mat_scale(
          F, mat_mul(F, below[k], above[k]),
          F.neg(F.zeta_pow(static_cast<long>(k) * (N / m))));
      const ParamIndex v{p, q, k};
      auto it = mono.tau.find(v);
      if (it == mono.tau.end())
        mono.tau[v] = R;
      else
        it->second = mat_add(F, it->second, R);
    }

    all_equations.push_back(north);
    all_equations.push_back(south);
    all_equations.push_back(mono);

    // eliminate h'_qp through the north triangle, then g'_qp through the
    // south one; the monodromy equation is what remains of the pair
    const Definition def_hqp = solve_single(F, north, id_h(q, p));
    substitute(F, south, def_hqp);
    const Definition def_gqp = solve_single(F, south, id_g(q, p));
    substitute(F, mono, def_gqp);
    definitions.emplace(def_hqp.u, def_hqp);
    definitions.emplace(def_gqp.u, def_gqp);

    // per-pair scalar elimination over the remaining local unknowns
    auto rows = scalarize(mono);
    GaussState gauss{&F, {}, {}};
    const long lo_h = static_cast<long>(id_h(p, q)) * D * D;
    const long lo_g = static_cast<long>(id_g(p, q)) * D * D;
    auto local = [&](long col) {
      return (col >= lo_h && col < lo_h + D * D) || (col >= lo_g && col < lo_g + D * D);
    };
    for (auto& row : rows)
      if (!row.cols.empty() || !row.tau.empty()) gauss.insert(std::move(row), local);
    for (auto& res : gauss.residuals) global_pool.push_back(res);
    gauss.residuals.clear();
    pair_systems.push_back(std::move(gauss));
  }

  // global phase: eliminate the shared f' entries, leaving tau conditions
  GaussState global{&F, {}, {}};
  auto f_col = [&](long col) { return col < static_cast<long>(2 * r) * D * D; };
  for (auto& row : global_pool)
    if (!row.cols.empty() || !row.tau.empty()) global.insert(row, f_col);

  DeformationResult result;
  {
    // reduce the tau-only residuals to a basis of conditions
    GaussState taured{&F, {}, {}};
    auto decode = [](long c) {
      return ParamIndex{static_cast<int>(c / (256 * 256)),
                        static_cast<int>((c / 256) % 256), static_cast<int>(c % 256)};
    };
    for (auto& row : global.residuals) {
      if (!row.cols.empty()) throw std::logic_error("non-f column survived elimination");
      ScalarRow as_cols;
      for (const auto& [v, c] : row.tau)
        as_cols.cols[(static_cast<long>(v.i) * 256 + v.j) * 256 + v.k] = c;
      taured.insert(std::move(as_cols), [](long) { return true; });
    }
    for (const auto& [col, row] : taured.pivots) {
      TauFunctional fn;
      fn[decode(col)] = F.one();
      for (const auto& [c, v] : row.cols) fn[decode(c)] = v;
      result.conditions.push_back(std::move(fn));
    }
  }

  result.feasible = true;
  for (std::size_t t = 0; t < result.conditions.size(); ++t) {
    if (!F.is_zero(evaluate_functional(F, result.conditions[t], tau))) {
      result.feasible = false;
      result.violated = static_cast<int>(t);
      break;
    }
  }
  if (!result.feasible) return result;

  // --- back-substitute a concrete solution ------------------------------------
  std::vector<CycMat> value(n_unknowns);
  for (auto& vmat : value) vmat = CycMat(D, std::vector<CyclotomicField::Value>(D, F.zero()));
  auto tau_of = [&](const TauFunctional& fn) { return evaluate_functional(F, fn, tau); };

  // f' entries from the global pivots (free entries stay zero); pivot rows may
  // reference later pivots, so resolve by repeated passes (the pivot graph is
  // acyclic by construction of incremental Gauss)
  {
    std::map<long, CyclotomicField::Value> solved;
    // iterate until fixed point; pivot count is small
    bool changed = true;
    while (changed) {
      changed = false;
      for (const auto& [col, row] : global.pivots) {
        if (solved.count(col)) continue;
        bool ready = true;
        auto acc = F.neg(tau_of(row.tau));
        for (const auto& [c, v] : row.cols) {
          if (global.pivots.count(c)) {
            auto it = solved.find(c);
            if (it == solved.end()) {
              ready = false;
              break;
            }
            acc = F.sub(acc, F.mul(v, it->second));
          }
          // non-pivot columns are free = 0
        }
        if (ready) {
          solved[col] = acc;
          changed = true;
        }
      }
    }
    if (solved.size() != global.pivots.size())
      throw std::logic_error("cyclic pivot dependency in global phase");
    for (const auto& [col, v] : solved) {
      const int u = static_cast<int>(col / (D * D));
      const int entry = static_cast<int>(col % (D * D));
      value[u][entry / D][entry % D] = v;
    }
  }

  // per-pair locals likewise
  for (auto& gauss : pair_systems) {
    std::map<long, CyclotomicField::Value> solved;
    bool changed = true;
    while (changed) {
      changed = false;
      for (const auto& [col, row] : gauss.pivots) {
        if (solved.count(col)) continue;
        bool ready = true;
        auto acc = F.neg(tau_of(row.tau));
        for (const auto& [c, v] : row.cols) {
          if (gauss.pivots.count(c)) {
            auto it = solved.find(c);
            if (it == solved.end()) {
              ready = false;
              break;
            }
            acc = F.sub(acc, F.mul(v, it->second));
          } else {
            // f' column (already fixed) or free local (zero)
            const int u = static_cast<int>(c / (D * D));
            if (u < 2 * r) {
              const int entry = static_cast<int>(c % (D * D));
              acc = F.sub(acc, F.mul(v, value[u][entry / D][entry % D]));
            }
          }
        }
        if (ready) {
          solved[col] = acc;
          changed = true;
        }
      }
    }
    if (solved.size() != gauss.pivots.size())
      throw std::logic_error("cyclic pivot dependency in pair phase");
    for (const auto& [col, v] : solved) {
      const int u = static_cast<int>(col / (D * D));
      const int entry = static_cast<int>(col % (D * D));
      value[u][entry / D][entry % D] = v;
    }
  }

  // eliminated arrows from their definitions
  for (const auto& [u, def] : definitions) {
    CycMat X(D, std::vector<CyclotomicField::Value>(D, F.zero()));
    for (const Term& t : def.terms)
      X = mat_add(F, X, mat_mul(F, t.A, mat_mul(F, value[t.u], t.B)));
    for (const auto& [v, R] : def.tau) {
      auto it = tau.find(v);
      if (it != tau.end())
        X = mat_add(F, X, mat_scale(F, R, F.from_rational(it->second)));
    }
    value[u] = std::move(X);
  }

  // final check: every first-order equation must hold exactly
  for (const Equation& eq : all_equations) {
    CycMat acc(D, std::vector<CyclotomicField::Value>(D, F.zero()));
    for (const Term& t : eq.terms)
      acc = mat_add(F, acc, mat_mul(F, t.A, mat_mul(F, value[t.u], t.B)));
    for (const auto& [v, R] : eq.tau) {
      auto it = tau.find(v);
      if (it != tau.end()) acc = mat_add(F, acc, mat_scale(F, R, F.from_rational(it->second)));
    }
    if (!mat_is_zero(F, acc))
      throw std::logic_error("first-order solution failed verification");
  }

  QuiverModule corr = mod;
  for (int i = 0; i < r; ++i) {
    corr.f_N[i] = value[id_fN(i)];
    corr.f_S[i] = value[id_fS(i)];
  }
  for (const auto& [pair, m] : M.orders()) {
    if (m == CoxeterMatrix::kInfinity) continue;
    const auto [p, q] = pair;
    corr.h[{p, q}] = value[id_h(p, q)];
    corr.h[{q, p}] = value[id_h(q, p)];
    corr.g[{p, q}] = value[id_g(p, q)];
    corr.g[{q, p}] = value[id_g(q, p)];
  }
  result.correction = std::move(corr);
  return result;
}

}  // namespace coxdef

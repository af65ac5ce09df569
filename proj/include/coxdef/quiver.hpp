#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "coxdef/cyclotomic.hpp"
#include "coxdef/laurent.hpp"

namespace coxdef {

// Path-algebra presentation of the cellular-sheaf category on the quotient
// orbifold: vertices N, S, one per edge midpoint, and one per (ordered
// finite pair) disk sector; arrows are the restrictions f, h and the
// half-monodromies g.  For each finite pair p < q the relations are
//   (N)  g_pq h_pq f_Np = h_qp f_Nq          (transport past the north pole)
//   (S)  g_qp h_qp f_Sq = h_pq f_Sp          (transport past the south pole)
//   (M)  (g_pq g_qp)^{m_pq} = 1,
// deformed in the last case to prod_k (g_pq g_qp - t_pqk) = 0.
struct Quiver {
  int rank = 0;
  std::vector<std::pair<int, int>> finite_pairs;  // p < q
  std::vector<std::string> vertices;
  struct Arrow {
    std::string name, from, to;
  };
  std::vector<Arrow> arrows;
  std::vector<std::string> relations;
};

Quiver build_quiver(const CoxeterMatrix& M);

// Matrices over Q(zeta_N); rows index the target space.
using CycMat = std::vector<std::vector<CyclotomicField::Value>>;

CycMat mat_identity(const CyclotomicField& F, int n);
CycMat mat_mul(const CyclotomicField& F, const CycMat& A, const CycMat& B);
CycMat mat_add(const CyclotomicField& F, const CycMat& A, const CycMat& B);
CycMat mat_sub(const CyclotomicField& F, const CycMat& A, const CycMat& B);
CycMat mat_scale(const CyclotomicField& F, const CycMat& A,
                 const CyclotomicField::Value& c);
bool mat_is_zero(const CyclotomicField& F, const CycMat& A);
CycMat mat_inverse(const CyclotomicField& F, const CycMat& A);  // throws if singular

// One exact matrix per arrow.
struct QuiverModule {
  int dim_N = 0, dim_S = 0;
  std::vector<int> dim_edge;                    // per generator
  std::map<std::pair<int, int>, int> dim_disk;  // per ordered finite pair
  std::vector<CycMat> f_N, f_S;                 // V_N -> V_i, V_S -> V_i
  std::map<std::pair<int, int>, CycMat> h;      // V_i -> V_ij
  std::map<std::pair<int, int>, CycMat> g;      // V_ij -> V_ji
};

// A representation of the even subgroup by the images of the a_pq = s_p s_q.
struct EvenRep {
  int dim = 0;
  std::map<std::pair<int, int>, CycMat> a;  // p < q (every pair, finite or not)
};

// Left-regular representation of W_+ (finite W required).
EvenRep regular_even_rep(const CoxeterMatrix& M, const CyclotomicField& F,
                         const Budget& budget = {});

// dim-1 trivial representation.
EvenRep trivial_even_rep(const CoxeterMatrix& M, const CyclotomicField& F);

// Local-system module attached to a representation: f_N and h are identity
// in the chosen trivializations, f_S and the south half-monodromies carry
// the representation.  Satisfies every relation of B by construction of the
// transports; verify_module re-checks that from scratch.
QuiverModule module_from_rep(const CoxeterMatrix& M, const CyclotomicField& F,
                             const EvenRep& rep, int base = 0);

// List of violated relations (empty means the module is a B-module).
// Dimension mismatches throw invalid_input.
std::vector<std::string> verify_module(const CoxeterMatrix& M, const CyclotomicField& F,
                                       const QuiverModule& mod);

// Linear functional on the deformation directions tau_{ijk}.
using TauFunctional = std::map<ParamIndex, CyclotomicField::Value>;

CyclotomicField::Value evaluate_functional(const CyclotomicField& F,
                                           const TauFunctional& fn,
                                           const std::map<ParamIndex, Rational>& tau);

struct DeformationResult {
  bool feasible = false;
  // Conditions on tau required for first-order deformability (a reduced
  // basis; empty means unconditionally deformable at first order).
  std::vector<TauFunctional> conditions;
  // Index of the first violated condition when infeasible.
  int violated = -1;
  // First-order corrections to all arrows when feasible.
  std::optional<QuiverModule> correction;
};

// Solves, exactly over Q(zeta_N), the linear system for first-order
// corrections of all arrow matrices such that the deformed relations with
// t_ijk = zeta^k (1 + tau_ijk) hold modulo second order.  The module must be
// a local system (all arrows square invertible) satisfying the undeformed
// relations.
DeformationResult first_order_deformation(const CoxeterMatrix& M,
                                          const CyclotomicField& F,
                                          const QuiverModule& mod,
                                          const std::map<ParamIndex, Rational>& tau);

}  // namespace coxdef

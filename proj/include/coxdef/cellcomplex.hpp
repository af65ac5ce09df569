#pragma once

#include <optional>
#include <vector>

#include "coxdef/coxeter.hpp"

namespace coxdef {

// The 2-complex attached to a Coxeter matrix: vertices are group elements,
// edges join w and s_i w, and every coset of a finite dihedral parabolic
// carries a 2m-gon along the cycle w, s_i w, s_j s_i w, ...
struct CellComplex2 {
  std::vector<Word> vertices;  // canonical words, ShortLex order

  struct Edge {
    int v0 = 0, v1 = 0;  // indices into `vertices`, v1 = s_gen * v0
    int gen = 0;
  };
  std::vector<Edge> edges;

  struct Face {
    int i = 0, j = 0;        // the pair, i < j
    std::vector<int> cycle;  // 2*m_ij vertex indices around the boundary
  };
  std::vector<Face> faces;

  bool full = false;  // whole finite group rather than a length ball
  int ball_radius = -1;

  int vertex_index(const Word& w) const;
};

// Ball of radius max_len; faces are kept only when their whole boundary
// cycle lies in the ball.
CellComplex2 build_sigma_ball(const CoxeterMatrix& M, int max_len,
                              const Budget& budget = {});

// Full complex of a finite group.  Throws invalid_input when the group does
// not close within the budget.
CellComplex2 build_sigma_full(const CoxeterMatrix& M, const Budget& budget = {});

inline long euler_characteristic(const CellComplex2& c) {
  return static_cast<long>(c.vertices.size()) - static_cast<long>(c.edges.size()) +
         static_cast<long>(c.faces.size());
}

// The quotient orbifold: two vertices, one edge per generator, and one disk
// per finite pair with a Z_{m_ij} orbifold point at its center.  Pairs with
// m_ij = infinity bound no disk (their boundary cycle never closes).
struct OrbifoldStats {
  int vertices = 2;  // N and S
  int edges = 0;     // e_i, one per generator
  struct Disk {
    int i = 0, j = 0;
    int isotropy = 0;  // m_ij
  };
  std::vector<Disk> disks;
};

OrbifoldStats orbifold_stats(const CoxeterMatrix& M);

}  // namespace coxdef

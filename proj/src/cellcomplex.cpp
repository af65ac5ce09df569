#include "coxdef/cellcomplex.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace coxdef {

int CellComplex2::vertex_index(const Word& w) const {
  auto it = std::lower_bound(vertices.begin(), vertices.end(), w, ShortLex{});
  if (it == vertices.end() || *it != w) throw invalid_input("vertex not in complex");
  return static_cast<int>(it - vertices.begin());
}

namespace {

CellComplex2 build_from_vertices(const CoxeterMatrix& M, std::vector<Word> verts,
                                 const Budget& budget) {
  CellComplex2 c;
  std::sort(verts.begin(), verts.end(), ShortLex{});
  c.vertices = std::move(verts);

  GroupContext G(M, budget);
  std::map<int, int> gid_to_vertex;  // group id -> vertex index
  std::vector<int> vertex_gid(c.vertices.size());
  for (std::size_t v = 0; v < c.vertices.size(); ++v) {
    const int gid = G.id_of(c.vertices[v]);
    gid_to_vertex[gid] = static_cast<int>(v);
    vertex_gid[v] = gid;
  }
  auto lookup = [&](int gid) -> int {
    auto it = gid_to_vertex.find(gid);
    return it == gid_to_vertex.end() ? -1 : it->second;
  };

  for (std::size_t v = 0; v < c.vertices.size(); ++v)
    for (int g = 0; g < M.rank(); ++g) {
      const int ug = G.left(g, vertex_gid[v]);
      const int u = lookup(ug);
      if (u < 0) continue;
      // each edge is recorded once, from its smaller endpoint
      if (static_cast<int>(v) < u) c.edges.push_back({static_cast<int>(v), u, g});
    }

  for (const auto& [pair, m] : M.orders()) {
    if (m == CoxeterMatrix::kInfinity) continue;
    const int i = pair.first, j = pair.second;
    std::set<int> used;  // vertices already on a face of this pair
    for (std::size_t v = 0; v < c.vertices.size(); ++v) {
      if (used.count(static_cast<int>(v))) continue;
      // walk the boundary cycle w, s_i w, s_j s_i w, ... (2m steps)
      std::vector<int> cycle{static_cast<int>(v)};
      int gid = vertex_gid[v];
      bool inside = true;
      for (int t = 0; t < 2 * m - 1; ++t) {
        gid = G.left(t % 2 == 0 ? i : j, gid);
        const int u = lookup(gid);
        if (u < 0) {
          inside = false;
          break;
        }
        cycle.push_back(u);
      }
      if (!inside) continue;
      for (int u : cycle) used.insert(u);
      c.faces.push_back({i, j, std::move(cycle)});
    }
  }
  return c;
}

}  // namespace

CellComplex2 build_sigma_ball(const CoxeterMatrix& M, int max_len, const Budget& budget) {
  std::vector<Word> verts;
  for (const auto& layer : enumerate_elements(M, max_len, budget))
    verts.insert(verts.end(), layer.begin(), layer.end());
  CellComplex2 c = build_from_vertices(M, std::move(verts), budget);
  c.full = false;
  c.ball_radius = max_len;
  return c;
}

CellComplex2 build_sigma_full(const CoxeterMatrix& M, const Budget& budget) {
  auto all = enumerate_full_group(M, 512, budget);
  if (!all)
    throw invalid_input("full complex needs a finite group (ball did not close)");
  CellComplex2 c = build_from_vertices(M, std::move(*all), budget);
  c.full = true;
  return c;
}

OrbifoldStats orbifold_stats(const CoxeterMatrix& M) {
  OrbifoldStats s;
  s.edges = M.rank();
  for (const auto& [pair, m] : M.orders())
    if (m != CoxeterMatrix::kInfinity) s.disks.push_back({pair.first, pair.second, m});
  return s;
}

}  // namespace coxdef

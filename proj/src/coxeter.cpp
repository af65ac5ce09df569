#include "coxdef/coxeter.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>
#include <string>

namespace coxdef {

CoxeterMatrix::CoxeterMatrix(int rank, std::map<std::pair<int, int>, int> orders)
    : rank_(rank), orders_(std::move(orders)) {
  if (rank < 1) throw invalid_input("Coxeter matrix rank must be >= 1");
  for (int i = 0; i < rank; ++i)
    for (int j = i + 1; j < rank; ++j) {
      auto it = orders_.find({i, j});
      if (it == orders_.end())
        throw invalid_input("missing order for pair {" + std::to_string(i) + "," +
                            std::to_string(j) + "}");
      if (it->second != kInfinity && it->second < 2)
        throw invalid_input("order m_ij must be >= 2 or infinity");
    }
  if (orders_.size() != static_cast<std::size_t>(rank) * (rank - 1) / 2)
    throw invalid_input("Coxeter matrix has entries outside the index set");
}

int CoxeterMatrix::order(int i, int j) const {
  if (i == j || i < 0 || j < 0 || i >= rank_ || j >= rank_)
    throw invalid_input("bad generator pair");
  if (i > j) std::swap(i, j);
  return orders_.at({i, j});
}

void CoxeterMatrix::check_word(const Word& w) const {
  for (int x : w)
    if (x < 0 || x >= rank_)
      throw invalid_input("word letter " + std::to_string(x) + " out of range");
}

CoxeterMatrix CoxeterMatrix::parabolic(const std::vector<int>& subset,
                                       std::vector<int>* table) const {
  if (subset.empty()) throw invalid_input("parabolic subset must be nonempty");
  std::vector<int> sub = subset;
  std::sort(sub.begin(), sub.end());
  sub.erase(std::unique(sub.begin(), sub.end()), sub.end());
  for (int x : sub)
    if (x < 0 || x >= rank_) throw invalid_input("parabolic subset index out of range");
  std::map<std::pair<int, int>, int> orders;
  for (std::size_t a = 0; a < sub.size(); ++a)
    for (std::size_t b = a + 1; b < sub.size(); ++b)
      orders[{static_cast<int>(a), static_cast<int>(b)}] = order(sub[a], sub[b]);
  if (table) *table = sub;
  return CoxeterMatrix(static_cast<int>(sub.size()), std::move(orders));
}

long CoxeterMatrix::conductor() const {
  long n = 1;
  for (const auto& [pair, m] : orders_)
    if (m != kInfinity) n = std::lcm(n, static_cast<long>(m));
  return n;
}

CoxeterMatrix CoxeterMatrix::dihedral(int m) {
  return CoxeterMatrix(2, {{{0, 1}, m}});
}

CoxeterMatrix CoxeterMatrix::rank3(int m01, int m02, int m12) {
  return CoxeterMatrix(3, {{{0, 1}, m01}, {{0, 2}, m02}, {{1, 2}, m12}});
}

CoxeterMatrix CoxeterMatrix::uniform(int rank, int m) {
  std::map<std::pair<int, int>, int> orders;
  for (int i = 0; i < rank; ++i)
    for (int j = i + 1; j < rank; ++j) orders[{i, j}] = m;
  return CoxeterMatrix(rank, std::move(orders));
}

int sign_character(const Word& w) { return w.size() % 2 == 0 ? 1 : -1; }

bool rank3_is_finite(int m12, int m13, int m23) {
  // 1/m12 + 1/m13 + 1/m23 > 1 with 1/inf = 0, over exact rationals.
  Rational s = 0;
  for (int m : {m12, m13, m23}) {
    if (m != CoxeterMatrix::kInfinity) {
      if (m < 2) throw invalid_input("order must be >= 2 or infinity");
      s += Rational(1, m);
    }
  }
  return s > 1;
}

std::vector<BraidMove> braid_moves(const CoxeterMatrix& M, const Word& w) {
  std::vector<BraidMove> moves;
  const int n = static_cast<int>(w.size());
  for (int p = 0; p + 1 < n; ++p) {
    const int a = w[p], b = w[p + 1];
    if (a == b) continue;
    const int m = M.order(a, b);
    if (m == CoxeterMatrix::kInfinity || p + m > n) continue;
    bool alternating = true;
    for (int t = 2; t < m; ++t)
      if (w[p + t] != w[p + (t % 2)]) {
        alternating = false;
        break;
      }
    if (alternating) moves.push_back({p, m});
  }
  return moves;
}

Word apply_braid_move(const CoxeterMatrix& M, const Word& w, const BraidMove& mv) {
  (void)M;
  Word r = w;
  for (int t = 0; t < mv.len; ++t) r[mv.pos + t] = w[mv.pos + ((t + 1) % 2)];
  return r;
}

namespace {

// BFS over the braid-move orbit.  The visitor sees each word once; returning
// false aborts the search.
template <typename Visit>
void orbit_bfs(const CoxeterMatrix& M, const Word& start, const Budget& budget,
               Visit visit) {
  std::set<Word> seen;
  std::deque<Word> queue;
  seen.insert(start);
  queue.push_back(start);
  if (!visit(start)) return;
  while (!queue.empty()) {
    Word w = std::move(queue.front());
    queue.pop_front();
    for (const BraidMove& mv : braid_moves(M, w)) {
      Word u = apply_braid_move(M, w, mv);
      if (seen.insert(u).second) {
        budget.charge(seen.size(), "braid orbit");
        if (!visit(u)) return;
        queue.push_back(std::move(u));
      }
    }
  }
}

int find_square(const Word& w) {
  for (std::size_t p = 0; p + 1 < w.size(); ++p)
    if (w[p] == w[p + 1]) return static_cast<int>(p);
  return -1;
}

}  // namespace

std::vector<Word> braid_orbit(const CoxeterMatrix& M, const Word& w, const Budget& budget) {
  M.check_word(w);
  std::vector<Word> out;
  orbit_bfs(M, w, budget, [&](const Word& u) {
    out.push_back(u);
    return true;
  });
  std::sort(out.begin(), out.end(), ShortLex{});
  return out;
}

bool is_reduced(const CoxeterMatrix& M, const Word& w, const Budget& budget) {
  M.check_word(w);
  bool reduced = true;
  orbit_bfs(M, w, budget, [&](const Word& u) {
    if (find_square(u) >= 0) {
      reduced = false;
      return false;
    }
    return true;
  });
  return reduced;
}

Word canonical_word(const CoxeterMatrix& M, const Word& w, const Budget& budget) {
  M.check_word(w);
  Word cur = w;
  for (;;) {
    std::optional<std::pair<Word, int>> square;  // word in orbit with a square
    Word best = cur;
    orbit_bfs(M, cur, budget, [&](const Word& u) {
      const int p = find_square(u);
      if (p >= 0) {
        square = {u, p};
        return false;
      }
      if (ShortLex{}(u, best)) best = u;
      return true;
    });
    if (!square) return best;
    Word shorter = square->first;
    shorter.erase(shorter.begin() + square->second, shorter.begin() + square->second + 2);
    cur = std::move(shorter);
  }
}

std::vector<Word> braid_path(const CoxeterMatrix& M, const Word& from, const Word& to,
                             bool invert_tiebreak, const Budget& budget) {
  if (from == to) return {from};
  std::map<Word, int> dist;
  std::deque<Word> queue;
  dist[from] = 0;
  queue.push_back(from);
  bool found = false;
  while (!queue.empty() && !found) {
    Word w = std::move(queue.front());
    queue.pop_front();
    const int d = dist[w];
    for (const BraidMove& mv : braid_moves(M, w)) {
      Word u = apply_braid_move(M, w, mv);
      if (dist.emplace(u, d + 1).second) {
        budget.charge(dist.size(), "braid path");
        if (u == to) found = true;
        queue.push_back(std::move(u));
      }
    }
  }
  if (!found)
    throw invalid_input("no braid path: words do not represent the same element");

  // Walk back from the target, picking the extreme predecessor at each step.
  std::vector<Word> rpath{to};
  Word cur = to;
  while (cur != from) {
    const int d = dist[cur];
    std::optional<Word> pick;
    for (const BraidMove& mv : braid_moves(M, cur)) {
      Word u = apply_braid_move(M, cur, mv);
      auto it = dist.find(u);
      if (it == dist.end() || it->second != d - 1) continue;
      if (!pick || (invert_tiebreak ? ShortLex{}(*pick, u) : ShortLex{}(u, *pick)))
        pick = std::move(u);
    }
    cur = *pick;
    rpath.push_back(cur);
  }
  return {rpath.rbegin(), rpath.rend()};
}

GroupContext::GroupContext(const CoxeterMatrix& M, Budget budget)
    : M_(&M), budget_(budget) {
  intern(Word{});
}

int GroupContext::intern(Word canonical) {
  auto it = index_.find(canonical);
  if (it != index_.end()) return it->second;
  budget_.charge(words_.size() + 1, "group elements");
  const int id = static_cast<int>(words_.size());
  index_.emplace(canonical, id);
  words_.push_back(std::move(canonical));
  return id;
}

int GroupContext::id_of(const Word& any_word) {
  M_->check_word(any_word);
  int id = 0;
  for (int g : any_word) id = right(id, g);
  return id;
}

int GroupContext::right(int id, int gen) {
  auto key = std::make_pair(id, gen);
  auto it = right_memo_.find(key);
  if (it != right_memo_.end()) return it->second;
  Word w = words_[id];
  w.push_back(gen);
  const int r = intern(canonical_word(*M_, w, budget_));
  right_memo_.emplace(key, r);
  return r;
}

int GroupContext::left(int gen, int id) {
  auto key = std::make_pair(gen, id);
  auto it = left_memo_.find(key);
  if (it != left_memo_.end()) return it->second;
  Word w{gen};
  w.insert(w.end(), words_[id].begin(), words_[id].end());
  const int r = intern(canonical_word(*M_, w, budget_));
  left_memo_.emplace(key, r);
  return r;
}

int GroupContext::product(int a, int b) {
  int id = a;
  for (int g : words_[b]) id = right(id, g);
  return id;
}

std::vector<std::vector<Word>> enumerate_elements(const CoxeterMatrix& M, int max_len,
                                                  const Budget& budget) {
  if (max_len < 0) throw invalid_input("length bound must be >= 0");
  GroupContext G(M, budget);
  std::vector<std::vector<Word>> layers;
  layers.push_back({Word{}});
  std::vector<int> frontier{G.identity()};
  std::set<int> seen{G.identity()};
  for (int len = 1; len <= max_len; ++len) {
    std::vector<int> next;
    for (int id : frontier)
      for (int g = 0; g < M.rank(); ++g) {
        const int nid = G.right(id, g);
        if (G.length(nid) == len && seen.insert(nid).second) next.push_back(nid);
      }
    if (next.empty()) break;
    std::vector<Word> layer;
    layer.reserve(next.size());
    for (int id : next) layer.push_back(G.word(id));
    std::sort(layer.begin(), layer.end(), ShortLex{});
    layers.push_back(std::move(layer));
    frontier = std::move(next);
  }
  return layers;
}

std::vector<std::size_t> growth_series(const CoxeterMatrix& M, int max_len,
                                       const Budget& budget) {
  std::vector<std::size_t> counts;
  for (const auto& layer : enumerate_elements(M, max_len, budget))
    counts.push_back(layer.size());
  return counts;
}

std::optional<std::vector<Word>> enumerate_full_group(const CoxeterMatrix& M, int max_len,
                                                      const Budget& budget) {
  const auto layers = enumerate_elements(M, max_len, budget);
  // The ball closed strictly before the bound: the group is finite.
  if (static_cast<int>(layers.size()) > max_len) return std::nullopt;
  std::vector<Word> all;
  for (const auto& layer : layers) all.insert(all.end(), layer.begin(), layer.end());
  return all;
}

}  // namespace coxdef

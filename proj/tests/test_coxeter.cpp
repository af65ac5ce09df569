#include <doctest.h>

#include <set>

#include "coxdef/coxeter.hpp"

using namespace coxdef;

TEST_CASE("matrix construction and validation") {
  const auto M = CoxeterMatrix::rank3(2, 3, 5);
  CHECK(M.order(0, 1) == 2);
  CHECK(M.order(2, 1) == 5);
  CHECK(M.conductor() == 30);
  CHECK_THROWS_AS(CoxeterMatrix(2, {}), invalid_input);
  CHECK_THROWS_AS(CoxeterMatrix(2, {{{0, 1}, 1}}), invalid_input);
  CHECK_THROWS_AS(M.order(0, 0), invalid_input);

  std::vector<int> table;
  const auto sub = M.parabolic({2, 0}, &table);
  CHECK(sub.rank() == 2);
  CHECK(table == std::vector<int>{0, 2});
  CHECK(sub.order(0, 1) == 3);
  CHECK_THROWS_AS(M.parabolic({}), invalid_input);
}

TEST_CASE("sign character") {
  CHECK(sign_character({}) == 1);
  CHECK(sign_character({0}) == -1);
  CHECK(sign_character({0, 1}) == 1);
}

TEST_CASE("rank-3 finiteness classification") {
  const int inf = CoxeterMatrix::kInfinity;
  CHECK(rank3_is_finite(2, 3, 5));
  CHECK_FALSE(rank3_is_finite(2, 3, 6));
  CHECK_FALSE(rank3_is_finite(2, 2, inf));
  CHECK(rank3_is_finite(2, 2, 7));
  CHECK(rank3_is_finite(2, 3, 3));
  CHECK(rank3_is_finite(2, 3, 4));
  CHECK_FALSE(rank3_is_finite(3, 3, 3));
  CHECK_FALSE(rank3_is_finite(2, 4, 5));
}

TEST_CASE("is_reduced") {
  const auto M = CoxeterMatrix::dihedral(3);
  CHECK_FALSE(is_reduced(M, {0, 0}));
  CHECK(is_reduced(M, {}));
  CHECK(is_reduced(M, {0, 1, 0}));
  CHECK_FALSE(is_reduced(M, {0, 1, 0, 1}));  // braid move exposes a square
  CHECK_THROWS_AS(is_reduced(M, {0, 7}), invalid_input);
}

TEST_CASE("canonical word") {
  const auto M3 = CoxeterMatrix::dihedral(3);
  CHECK(canonical_word(M3, {1, 0, 1}) == Word{0, 1, 0});
  CHECK(canonical_word(M3, {0, 1, 0, 1}) == Word{1, 0, 1});
  const auto M2 = CoxeterMatrix::dihedral(2);
  CHECK(canonical_word(M2, {0, 1, 1, 0}) == Word{});
  // idempotent
  const auto A3 = CoxeterMatrix::rank3(3, 2, 3);
  for (const auto& layer : enumerate_elements(A3, 4))
    for (const Word& w : layer) CHECK(canonical_word(A3, w) == w);
}

TEST_CASE("enumerate and growth") {
  const auto M3 = CoxeterMatrix::dihedral(3);
  CHECK(growth_series(M3, 3) == std::vector<std::size_t>{1, 2, 2, 1});
  CHECK(growth_series(M3, 10) == std::vector<std::size_t>{1, 2, 2, 1});

  const auto M4 = CoxeterMatrix::dihedral(4);
  CHECK(growth_series(M4, 8) == std::vector<std::size_t>{1, 2, 2, 2, 1});

  const auto A3 = CoxeterMatrix::rank3(2, 3, 3);
  const auto layers = enumerate_elements(A3, 6);
  std::size_t total = 0;
  for (const auto& layer : layers) total += layer.size();
  CHECK(total == 24);
  CHECK(layers.size() == 7);
  CHECK(layers[6].size() == 1);

  const auto E = CoxeterMatrix::uniform(3, 3);
  CHECK(growth_series(E, 2) == std::vector<std::size_t>{1, 3, 6});

  const auto R1 = CoxeterMatrix(1, {});
  CHECK(growth_series(R1, 5) == std::vector<std::size_t>{1, 1});

  CHECK(enumerate_elements(CoxeterMatrix::dihedral(5), 0).size() == 1);
}

TEST_CASE("dihedral ball structure for every finite order") {
  for (int m = 2; m <= 7; ++m) {
    const auto M = CoxeterMatrix::dihedral(m);
    const auto counts = growth_series(M, m + 2);
    REQUIRE(static_cast<int>(counts.size()) == m + 1);
    CHECK(counts.front() == 1);
    CHECK(counts.back() == 1);
    std::size_t total = 0;
    for (auto c : counts) total += c;
    CHECK(total == static_cast<std::size_t>(2 * m));
    for (int l = 1; l < m; ++l) CHECK(counts[l] == 2);
  }
}

TEST_CASE("finiteness predicate matches ball closure for triples up to 5") {
  for (int a = 2; a <= 5; ++a)
    for (int b = a; b <= 5; ++b)
      for (int c = b; c <= 5; ++c) {
        const auto M = CoxeterMatrix::rank3(a, b, c);
        // the largest finite group here is H3 with 120 elements and
        // longest word of length 15
        const bool closed = enumerate_full_group(M, 16).has_value();
        CHECK(closed == rank3_is_finite(a, b, c));
      }
}

TEST_CASE("all reduced words of one element form a single braid orbit") {
  // generate reduced words by brute force and compare against the orbit
  const auto M = CoxeterMatrix::uniform(3, 3);
  GroupContext G(M);
  std::map<int, std::set<Word>> reduced_words;
  std::vector<Word> frontier{{}};
  for (int len = 1; len <= 6; ++len) {
    std::vector<Word> next;
    for (const Word& w : frontier)
      for (int g = 0; g < 3; ++g) {
        Word u = w;
        u.push_back(g);
        if (is_reduced(M, u)) {
          reduced_words[G.id_of(u)].insert(u);
          next.push_back(u);
        }
      }
    frontier = std::move(next);
  }
  for (const auto& [id, words] : reduced_words) {
    const auto orbit = braid_orbit(M, *words.begin());
    CHECK(std::set<Word>(orbit.begin(), orbit.end()) == words);
  }
}

TEST_CASE("group context products") {
  const auto M = CoxeterMatrix::rank3(2, 3, 3);
  GroupContext G(M);
  const int x = G.id_of({0, 1, 2});
  const int y = G.id_of({1, 0});
  // (s0 s1 s2)(s1 s0) computed one way or the other agree
  Word concat{0, 1, 2, 1, 0};
  CHECK(G.product(x, y) == G.id_of(concat));
  CHECK(G.word(G.identity()).empty());
  // canonical_word and plain folding land on the same element
  CHECK(G.id_of(canonical_word(M, concat)) == G.id_of(concat));
}

TEST_CASE("budget guards") {
  Budget tiny;
  tiny.limit = 3;
  const auto M = CoxeterMatrix::rank3(3, 3, 3);
  CHECK_THROWS_AS(enumerate_elements(M, 5, tiny), budget_exceeded);
}

TEST_CASE("braid path endpoints and tie-break") {
  const auto M = CoxeterMatrix::uniform(3, 3);
  // two reduced words of the longest element of the (3,3)-parabolic
  const Word a{0, 1, 0}, b{1, 0, 1};
  const auto p = braid_path(M, a, b);
  REQUIRE(p.size() == 2);
  CHECK(p.front() == a);
  CHECK(p.back() == b);
  CHECK_THROWS_AS(braid_path(M, {0}, {1}), invalid_input);
}

#include <doctest.h>

#include <random>

#include "coxdef/laurent.hpp"

using namespace coxdef;

namespace {

// small random Laurent polynomials over the parameters of M
LaurentPoly random_poly(const CoxeterMatrix& M, std::mt19937_64& gen) {
  const auto vars = all_params(M);
  std::vector<std::pair<Monomial, Rational>> terms;
  const int nterms = 1 + static_cast<int>(gen() % 4);
  for (int t = 0; t < nterms; ++t) {
    Monomial mono;
    for (const ParamIndex& v : vars)
      if (gen() % 3 == 0) {
        const int e = static_cast<int>(gen() % 5) - 2;
        if (e != 0) mono.push_back({v, e});
      }
    const long num = static_cast<long>(gen() % 19) - 9;
    terms.push_back({std::move(mono), Rational(num, 1 + static_cast<long>(gen() % 7))});
  }
  return LaurentPoly::from_terms(std::move(terms));
}

}  // namespace

TEST_CASE("parameter canonicalization") {
  const auto M = CoxeterMatrix::dihedral(3);
  auto [v, sign] = make_param(M, 0, 1, 2);
  CHECK(v == ParamIndex{0, 1, 2});
  CHECK(sign == 1);
  // t_{10k} = t_{01,-k}^{-1}
  auto [w, s2] = make_param(M, 1, 0, 1);
  CHECK(w == ParamIndex{0, 1, 2});
  CHECK(s2 == -1);
  auto [w3, s3] = make_param(M, 1, 0, 3);  // k = m maps to itself
  CHECK(w3 == ParamIndex{0, 1, 3});
  CHECK(s3 == -1);
  CHECK_THROWS_AS(make_param(M, 0, 1, 0), invalid_input);
  CHECK_THROWS_AS(make_param(M, 0, 1, 4), invalid_input);
  CHECK_THROWS_AS(make_param(CoxeterMatrix::dihedral(CoxeterMatrix::kInfinity), 0, 1, 1),
                  invalid_input);
}

TEST_CASE("ring arithmetic") {
  const ParamIndex t{0, 1, 1}, u{0, 1, 2};
  const auto T = LaurentPoly::variable(t);
  const auto U = LaurentPoly::variable(u);
  CHECK((T + (-T)).is_zero());
  CHECK(T.invert_unit() == LaurentPoly::variable(t, -1));
  CHECK((T + U) * T.invert_unit() == LaurentPoly(Rational(1)) + U * T.invert_unit());
  CHECK_THROWS_AS((T + U).invert_unit(), invalid_input);
  CHECK((T * T.invert_unit()).is_one());
  CHECK(LaurentPoly(Rational(0)).is_zero());
}

TEST_CASE("sigma twist on variables") {
  const auto M3 = CoxeterMatrix::dihedral(3);
  // sigma(t_{011}) = t_{012}^{-1}
  CHECK(sigma_twist(M3, LaurentPoly::variable({0, 1, 1})) ==
        LaurentPoly::variable({0, 1, 2}, -1));
  const auto M2 = CoxeterMatrix::dihedral(2);
  // k = 2 = m is self-paired, so only the exponent flips
  CHECK(sigma_twist(M2, LaurentPoly::variable({0, 1, 2})) ==
        LaurentPoly::variable({0, 1, 2}, -1));
}

TEST_CASE("sigma twist is a ring involution") {
  const auto M = CoxeterMatrix::rank3(2, 3, 4);
  std::mt19937_64 gen(7);
  for (int trial = 0; trial < 25; ++trial) {
    const auto p = random_poly(M, gen);
    const auto q = random_poly(M, gen);
    CHECK(sigma_twist(M, sigma_twist(M, p)) == p);
    CHECK(sigma_twist(M, p * q) == sigma_twist(M, p) * sigma_twist(M, q));
    CHECK(sigma_twist(M, p + q) == sigma_twist(M, p) + sigma_twist(M, q));
  }
}

TEST_CASE("rational evaluation") {
  const auto M = CoxeterMatrix::dihedral(2);
  RationalAssignment q;
  q[{0, 1, 1}] = Rational(2, 3);
  q[{0, 1, 2}] = Rational(5, 1);
  CHECK(evaluate(LaurentPoly(Rational(1)), q) == 1);
  CHECK(evaluate(LaurentPoly::variable({0, 1, 1}), q) == Rational(2, 3));
  const auto t = LaurentPoly::variable({0, 1, 1});
  CHECK(evaluate(t * t.invert_unit(), q) == 1);
  RationalAssignment empty;
  CHECK_THROWS_AS(evaluate(t, empty), invalid_input);
}

TEST_CASE("evaluation is a ring homomorphism") {
  const auto M = CoxeterMatrix::rank3(2, 3, 3);
  const auto q = generic_point(M, 11);
  std::mt19937_64 gen(13);
  for (int trial = 0; trial < 25; ++trial) {
    const auto p1 = random_poly(M, gen);
    const auto p2 = random_poly(M, gen);
    CHECK(evaluate(p1 * p2, q) == evaluate(p1, q) * evaluate(p2, q));
    CHECK(evaluate(p1 + p2, q) == evaluate(p1, q) + evaluate(p2, q));
  }
}

TEST_CASE("sigma assignment matches twisted evaluation") {
  const auto M = CoxeterMatrix::rank3(2, 3, 4);
  const auto q = generic_point(M, 3);
  const auto qs = sigma_assignment(M, q);
  std::mt19937_64 gen(17);
  for (int trial = 0; trial < 10; ++trial) {
    const auto p = random_poly(M, gen);
    CHECK(evaluate(sigma_twist(M, p), q) == evaluate(p, qs));
  }
}

TEST_CASE("generic point reproducibility") {
  const auto M = CoxeterMatrix::rank3(2, 3, 3);
  CHECK(generic_point(M, 0) == generic_point(M, 0));
  CHECK(generic_point(M, 0) != generic_point(M, 1));
  for (const auto& [v, val] : generic_point(M, 0)) CHECK(val > 0);
}

TEST_CASE("elementary symmetric polynomials") {
  const auto M = CoxeterMatrix::dihedral(3);
  std::vector<LaurentPoly> ts;
  for (int k = 1; k <= 3; ++k) ts.push_back(LaurentPoly::variable({0, 1, k}));
  const auto e = elementary_symmetric(ts);
  REQUIRE(e.size() == 4);
  CHECK(e[0].is_one());
  CHECK(e[1] == ts[0] + ts[1] + ts[2]);
  CHECK(e[3] == ts[0] * ts[1] * ts[2]);
  CHECK(e[2] == ts[0] * ts[1] + ts[0] * ts[2] + ts[1] * ts[2]);
}

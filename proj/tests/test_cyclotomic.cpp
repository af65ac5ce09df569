#include <doctest.h>

#include "coxdef/cyclotomic.hpp"

using namespace coxdef;

namespace {
std::vector<Integer> ints(std::initializer_list<long> xs) {
  return std::vector<Integer>(xs.begin(), xs.end());
}
}  // namespace

TEST_CASE("cyclotomic polynomials") {
  CHECK(cyclotomic_polynomial(1) == ints({-1, 1}));
  CHECK(cyclotomic_polynomial(2) == ints({1, 1}));
  CHECK(cyclotomic_polynomial(3) == ints({1, 1, 1}));
  CHECK(cyclotomic_polynomial(4) == ints({1, 0, 1}));
  CHECK(cyclotomic_polynomial(6) == ints({1, -1, 1}));
  CHECK(cyclotomic_polynomial(12) == ints({1, 0, -1, 0, 1}));
  CHECK(cyclotomic_polynomial(30) == ints({1, 1, 0, -1, -1, -1, 0, 1, 1}));
}

TEST_CASE("field arithmetic") {
  CyclotomicField F(12);
  CHECK(F.degree() == 4);
  const auto z = F.zeta_pow(1);
  // zeta^12 = 1, zeta^6 = -1
  CHECK(F.is_rational(F.zeta_pow(12), 1));
  CHECK(F.is_rational(F.zeta_pow(6), -1));
  CHECK(F.is_rational(F.mul(z, F.zeta_pow(11)), 1));
  // inverses
  for (long e = 0; e < 12; ++e) {
    const auto v = F.add(F.zeta_pow(e), F.from_rational(Rational(3, 7)));
    if (F.is_zero(v)) continue;
    CHECK(F.is_rational(F.mul(v, F.inv(v)), 1));
  }
  CHECK_THROWS_AS(F.inv(F.zero()), invalid_input);
}

TEST_CASE("sums and products of all m-th roots of unity") {
  for (int m = 2; m <= 7; ++m) {
    CyclotomicField F(m);
    auto sum = F.zero();
    auto prod = F.one();
    for (int k = 1; k <= m; ++k) {
      sum = F.add(sum, F.zeta_pow(k));
      prod = F.mul(prod, F.zeta_pow(k));
    }
    CHECK(F.is_zero(sum));
    CHECK(F.is_rational(prod, (m % 2 == 0) ? -1 : 1));  // (-1)^{m+1}
  }
}

TEST_CASE("group specialization of parameters") {
  const auto M2 = CoxeterMatrix::dihedral(2);
  CyclotomicField F2(M2.conductor());
  // t_{011} -> -1 for m = 2
  CHECK(F2.is_rational(specialize_group(F2, M2, LaurentPoly::variable({0, 1, 1})), -1));

  // e1 = sum_k t_{01k} -> 0 for every m
  for (int m = 2; m <= 6; ++m) {
    const auto M = CoxeterMatrix::dihedral(m);
    CyclotomicField F(M.conductor());
    LaurentPoly e1;
    LaurentPoly prod(Rational(1));
    for (int k = 1; k <= m; ++k) {
      e1 += LaurentPoly::variable({0, 1, k});
      prod *= LaurentPoly::variable({0, 1, k});
    }
    CHECK(F.is_zero(specialize_group(F, M, e1)));
    CHECK(F.is_rational(specialize_group(F, M, prod), (m % 2 == 0) ? -1 : 1));
  }
}

TEST_CASE("specializing the sigma twist fixes the group point") {
  // sigma(t_{ijk}) = t_{jik} and both specialize to the same root of unity,
  // which is exactly why the evaluation ideal is two-sided
  const auto M = CoxeterMatrix::rank3(2, 3, 4);
  CyclotomicField F(M.conductor());
  for (const ParamIndex& v : all_params(M)) {
    const auto p = LaurentPoly::variable(v);
    const auto lhs = specialize_group(F, M, sigma_twist(M, p));
    const auto rhs = specialize_group(F, M, p);
    CHECK(F.is_zero(F.sub(lhs, rhs)));
  }
}

TEST_CASE("mixed-conductor specialization") {
  const auto M = CoxeterMatrix::rank3(2, 3, 3);
  CyclotomicField F(M.conductor());
  CHECK(F.conductor() == 6);
  // t_{011} has order 2: specializes to zeta_6^3 = -1
  CHECK(F.is_rational(specialize_group(F, M, LaurentPoly::variable({0, 1, 1})), -1));
  // t_{021} specializes to zeta_6^2, a primitive cube root: 1 + z + z^2 = 0
  const auto z = specialize_group(F, M, LaurentPoly::variable({0, 2, 1}));
  const auto z2 = F.mul(z, z);
  CHECK(F.is_zero(F.add(F.one(), F.add(z, z2))));
}

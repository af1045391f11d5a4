#include "doctest.h"
#include "wiener/claims.hpp"
#include "wiener/errors.hpp"
#include "wiener/families.hpp"
#include "wiener/polynomial.hpp"

using namespace wiener;

namespace {

WienerPolynomial w(std::initializer_list<long> d) {
  std::vector<mpz_class> v;
  for (long x : d) v.emplace_back(x);
  return WienerPolynomial(v);
}

ReducedPolynomial r(std::initializer_list<long> c) {
  std::vector<mpz_class> v;
  for (long x : c) v.emplace_back(x);
  return ReducedPolynomial(v);
}

}  // namespace

TEST_SUITE("polynomial") {
  TEST_CASE("from distributions") {
    CHECK(wiener_polynomial(DistanceDistribution(3, {3})) == w({3}));
    CHECK(to_string(wiener_polynomial(DistanceDistribution(4, {5, 1}))) == "5x + 1x^2");
    CHECK(wiener_polynomial(DistanceDistribution(5, {4, 6})) == w({4, 6}));
    CHECK_THROWS_AS(WienerPolynomial({}), DomainError);
    CHECK_THROWS_AS(WienerPolynomial({3, 0, 1}), DomainError);
  }

  TEST_CASE("reduce") {
    CHECK(reduce(w({5, 1})) == r({5, 1}));
    CHECK(reduce(w({6})).degree() == 0);
    CHECK(reduce(w({3, 2, 1})) == r({3, 2, 1}));
  }

  TEST_CASE("evaluation") {
    const auto v = evaluate(w({2, 1}), {1.0, 0.0});
    CHECK(v.real() == doctest::Approx(3.0));
    const auto sqrt2_cubic = r({6, 4, 3, 2});
    CHECK(std::abs(evaluate(sqrt2_cubic, {0.0, std::sqrt(2.0)})) < 1e-12);
    CHECK(resilience(w({2, 1}), 0.5) == doctest::Approx(1.25));
    CHECK(resilience(w({2, 1}), mpq_class(1, 2)) == mpq_class(5, 4));
    CHECK(resilience(w({2, 1}), mpq_class(1)) == 3);
  }

  TEST_CASE("Gaussian evaluation") {
    const auto t6 = reduce(wiener_polynomial(distance_distribution(unit_root_tree())));
    CHECK(evaluate_gaussian(t6, {0, 1}) == GaussianRational{0, 0});
    CHECK(evaluate_gaussian(r({5, 1}), {0, 1}) == GaussianRational{5, 1});
    CHECK(evaluate_gaussian(r({6, 4, 3, 2}), {0, 2}) == GaussianRational{-6, -8});
    CHECK(evaluate_gaussian(r({6, 4, 3, 2}), {mpq_class(-3, 2), 0}) == GaussianRational{0, 0});
  }

  TEST_CASE("Wiener index") {
    CHECK(wiener_index(w({7})) == 7);
    CHECK(wiener_index(w({2, 1})) == 4);
    CHECK(wiener_index(w({3, 2, 1})) == 10);
    CHECK(wiener_index(w({5, 1})) == 7);
  }

  TEST_CASE("Enestrom-Kakeya annulus") {
    auto a = enestrom_kakeya(r({4, 3, 2, 1}));
    CHECK(a.r == mpq_class(4, 3));
    CHECK(a.R == 2);
    a = enestrom_kakeya(r({5, 1}));
    CHECK(a.r == 5);
    CHECK(a.R == 5);
    a = enestrom_kakeya(r({4, 4, 2}));
    CHECK(a.r == 1);
    CHECK(a.R == 2);
    CHECK_THROWS_AS(enestrom_kakeya(r({6})), DomainError);
  }

  TEST_CASE("large coefficients stay exact") {
    const auto p = closed_form_polynomial(FamilySpec{Family::broom, {5, 1000000 - 5}});
    REQUIRE(p);
    CHECK(p->coefficient(2) == mpz_class(999996) * 999995 / 2 + 3);
    CHECK(resilience(*p, mpq_class(1)) == mpz_class(1000000) * 999999 / 2);
  }
}

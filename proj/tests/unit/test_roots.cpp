#include <algorithm>

#include "doctest.h"
#include "wiener/claims.hpp"
#include "wiener/families.hpp"
#include "wiener/roots.hpp"

using namespace wiener;

namespace {

ReducedPolynomial r(std::initializer_list<long> c) {
  std::vector<mpz_class> v;
  for (long x : c) v.emplace_back(x);
  return ReducedPolynomial(v);
}

}  // namespace

TEST_SUITE("roots") {
  TEST_CASE("closed-form examples") {
    auto rs = roots(r({5, 1}));
    REQUIRE(rs.size() == 1);
    CHECK(rs[0].exact);
    CHECK(rs[0].exact_form == "-5");

    rs = roots(r({4, 6}));
    REQUIRE(rs.size() == 1);
    CHECK(rs[0].exact_form == "-2/3");

    CHECK(roots(r({6})).empty());
  }

  TEST_CASE("nearby real root is not snapped to a rational one") {
    // (x+2)(2x^3+5x^2+3x+3); the cubic has a real root near -2.1.
    const auto rs = roots(r({6, 9, 13, 9, 2}));
    REQUIRE(rs.size() == 4);
    CHECK_FALSE(rs[0].exact);
    CHECK(rs[0].re == doctest::Approx(-2.0).epsilon(0.1));
    CHECK(rs[0].re < -2.05);
    CHECK(rs[1].exact_form == "-2");
  }

  TEST_CASE("factorable cubic") {
    const auto rs = roots(r({6, 4, 3, 2}));
    REQUIRE(rs.size() == 3);
    CHECK(rs[0].re == doctest::Approx(-1.5));
    CHECK(rs[0].im == 0.0);
    CHECK(rs[0].exact_form == "-3/2");
    CHECK(rs[1].re == doctest::Approx(0.0));
    CHECK(rs[1].im == doctest::Approx(-std::sqrt(2.0)));
    CHECK(rs[2].im == doctest::Approx(std::sqrt(2.0)));
    CHECK(rs[2].exact);
  }

  TEST_CASE("quadratic surds") {
    const auto rs = roots(r({3, 2, 1}));  // P_4
    REQUIRE(rs.size() == 2);
    CHECK(rs[0].exact_form == "-1-i*sqrt(2)");
    CHECK(rs[1].exact_form == "-1+i*sqrt(2)");

    const auto gn = roots(reduce(family_polynomial(FamilySpec{Family::g_n, {6}})));
    REQUIRE(gn.size() == 2);
    CHECK(gn[1].exact_form == "-2+i*sqrt(6)");
  }

  TEST_CASE("repeated roots") {
    // (x+1)^2 (x+2) = 2 + 5x + 4x^2 + x^3
    const auto rs = roots(r({2, 5, 4, 1}));
    REQUIRE(rs.size() == 3);
    CHECK(rs[0].exact_form == "-2");
    CHECK(rs[1].exact_form == "-1");
    CHECK(rs[2].exact_form == "-1");
  }

  TEST_CASE("Aberth converges on paths") {
    for (int n : {10, 40, 100}) {
      const auto p = reduce(family_polynomial(FamilySpec{Family::path, {n}}));
      const auto a = aberth(p.coefficients());
      CHECK(a.converged);
      CHECK(a.roots.size() == static_cast<std::size_t>(n - 2));
      const auto rs = roots(p);
      CHECK(rs.size() == static_cast<std::size_t>(n - 2));
      for (const auto& z : rs) CHECK(z.residual <= 1e-9);
    }
  }

  TEST_CASE("sorted by real then imaginary part") {
    const auto rs = roots(reduce(family_polynomial(FamilySpec{Family::path, {12}})));
    CHECK(std::is_sorted(rs.begin(), rs.end(), [](const ComplexRoot& a, const ComplexRoot& b) {
      return a.re < b.re || (a.re == b.re && a.im < b.im);
    }));
  }

  TEST_CASE("residual measure") {
    CHECK(relative_residual(r({5, 1}), {-5.0, 0.0}) == 0.0);
    CHECK(relative_residual(r({5, 1}), {0.0, 0.0}) == doctest::Approx(1.0));
  }

  TEST_CASE("purely imaginary roots") {
    auto im = purely_imaginary_roots(r({6, 4, 3, 2}));
    REQUIRE(im.size() == 1);
    CHECK(im[0].exact);
    CHECK(im[0].b_squared_lo == 2);
    CHECK(im[0].text == "sqrt(2)");

    const auto t6 = reduce(wiener_polynomial(distance_distribution(unit_root_tree())));
    im = purely_imaginary_roots(t6);
    CHECK(std::any_of(im.begin(), im.end(), [](const ImaginaryRoot& x) { return x.exact && x.b_squared_lo == 1; }));

    CHECK(purely_imaginary_roots(r({5, 1})).empty());
    CHECK(purely_imaginary_roots(r({3, 2, 1})).empty());
  }

  TEST_CASE("irrational imaginary roots are isolated") {
    // (x^2 + 3)(x + 1) = 3 + 3x + x^2 + x^3
    const auto im = purely_imaginary_roots(r({3, 3, 1, 1}));
    REQUIRE(im.size() == 1);
    CHECK(im[0].exact);
    CHECK(im[0].b == doctest::Approx(std::sqrt(3.0)));
    // b^2 = (3 +- sqrt(5))/2: (x^4 + 3x^2 + 1)(x + 1)
    const auto irr = purely_imaginary_roots(r({1, 1, 3, 3, 1, 1}));
    REQUIRE(irr.size() == 2);
    CHECK_FALSE(irr[0].exact);
    CHECK(irr[0].b_squared_hi - irr[0].b_squared_lo <= mpq_class(1, mpz_class(1) << 40));
  }

  TEST_CASE("surd formatting") {
    CHECK(format_surd(-1, 1, -2) == "-1+i*sqrt(2)");
    CHECK(format_surd(0, 1, -1) == "i");
    CHECK(format_surd(mpq_class(1, 2), -2, 2) == "1/2-2*sqrt(2)");
    CHECK(format_surd(-3, 0, 5) == "-3");
  }
}

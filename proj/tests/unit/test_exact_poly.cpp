#include "doctest.h"
#include "wiener/exact_poly.hpp"

using namespace wiener::exact;

namespace {

QPoly q(std::initializer_list<long> c) {
  QPoly p;
  for (long v : c) p.emplace_back(v);
  trim(p);
  return p;
}

}  // namespace

TEST_SUITE("exact") {
  TEST_CASE("arithmetic") {
    const QPoly a = q({-1, 0, 1});  // x^2 - 1
    const QPoly b = q({1, 1});      // x + 1
    auto [quot, rem] = divmod(a, b);
    CHECK(quot == q({-1, 1}));
    CHECK(rem.empty());
    CHECK(mul(b, q({-1, 1})) == a);
    CHECK(derivative(q({5, 3, 2})) == q({3, 4}));
    CHECK(degree(QPoly{}) == -1);
    CHECK(degree(q({0, 0, 0})) == -1);
  }

  TEST_CASE("gcd is monic") {
    // (x+2)(x+3) and (x+2)(2x+1)
    const QPoly g = gcd(mul(q({2, 1}), q({3, 1})), mul(q({2, 1}), q({1, 2})));
    CHECK(g == q({2, 1}));
    CHECK(gcd(q({1, 1}), q({2, 1})) == q({1}));
    CHECK(gcd(QPoly{}, QPoly{}).empty());
  }

  TEST_CASE("primitive part") {
    QPoly p{mpq_class(1, 2), mpq_class(3, 4)};
    const auto prim = primitive(p);
    CHECK(prim == std::vector<mpz_class>{2, 3});
  }

  TEST_CASE("square-free decomposition") {
    // (x+1)^3 (x+2)
    QPoly p = mul(mul(q({1, 1}), q({1, 1})), mul(q({1, 1}), q({2, 1})));
    const auto f = squarefree_factors(p);
    REQUIRE(f.size() == 2);
    bool saw1 = false, saw3 = false;
    for (const auto& [factor, m] : f) {
      if (m == 1) saw1 = factor == q({2, 1});
      if (m == 3) saw3 = factor == q({1, 1});
    }
    CHECK(saw1);
    CHECK(saw3);
  }

  TEST_CASE("Sturm counting") {
    // (x+1)(x+2)(x^2+1): two real roots.
    const QPoly p = mul(mul(q({1, 1}), q({2, 1})), q({1, 0, 1}));
    const SturmSequence s(p);
    CHECK(s.count_real() == 2);
    CHECK(s.count_in(-3, 0) == 2);
    CHECK(s.count_in(-2, 0) == 1);  // half-open: -2 excluded
    CHECK(s.count_in(-1, 0) == 0);
    CHECK(root_bound(p) > 2);
  }

  TEST_CASE("isolation and rational detection") {
    // (2x+3)(x^2-2): roots -3/2 and +-sqrt(2)
    const QPoly p = mul(q({3, 2}), q({-2, 0, 1}));
    const mpq_class width(1, 1 << 20);
    auto roots = isolate_real_roots(p, -root_bound(p), root_bound(p), width);
    REQUIRE(roots.size() == 3);
    int rational = 0;
    for (auto& r : roots) {
      CHECK(r.lo <= r.hi);
      if (try_rational(p, r)) {
        ++rational;
        CHECK(r.lo == mpq_class(-3, 2));
        CHECK(r.exact);
      }
    }
    CHECK(rational == 1);
    CHECK(evaluate(p, mpq_class(-3, 2)) == 0);
    CHECK(sign_at(p, 0) < 0);
  }
}

#include "doctest.h"
#include "oracles.hpp"
#include "wiener/claims.hpp"
#include "wiener/enumerate.hpp"
#include "wiener/errors.hpp"
#include "wiener/families.hpp"

using namespace wiener;

namespace {

std::vector<mpz_class> z(std::initializer_list<long> v) {
  std::vector<mpz_class> out;
  for (long x : v) out.emplace_back(x);
  return out;
}

WienerPolynomial bfs(const FamilySpec& spec) { return wiener_polynomial(distance_distribution(family_graph(spec))); }

}  // namespace

TEST_SUITE("families") {
  TEST_CASE("parse and print") {
    const auto s = FamilySpec::parse("double_star:2,5");
    CHECK(s.family == Family::double_star);
    CHECK(s.params == std::vector<std::int64_t>{2, 5});
    CHECK(s.to_string() == "double_star:2,5");
    CHECK(s.order() == 5);
    CHECK(FamilySpec::parse("broom:4,16").order() == 20);
    CHECK_THROWS_AS(FamilySpec::parse("double_star"), ParseError);
    CHECK_THROWS_AS(FamilySpec::parse("nope:3"), ParseError);
    CHECK_THROWS_AS(FamilySpec::parse("path:3,4"), ParseError);
    CHECK_THROWS_AS(FamilySpec::parse("path:x"), ParseError);
    CHECK_THROWS_AS(FamilySpec::parse("broom:4,"), ParseError);
  }

  TEST_CASE("closed forms") {
    CHECK(family_polynomial(FamilySpec{Family::double_star, {2, 5}}).counts() == z({4, 4, 2}));
    CHECK(family_polynomial(FamilySpec{Family::t_n, {6}}).counts() == z({5, 5, 4, 1}));
    CHECK(family_polynomial(FamilySpec{Family::diameter2, {4, 3}}).counts() == z({3, 3}));
    CHECK(family_polynomial(FamilySpec{Family::g_n, {6}}).counts() == z({10, 4, 1}));
    CHECK(family_polynomial(FamilySpec{Family::star, {5}}).counts() == z({4, 6}));
    CHECK(family_polynomial(FamilySpec{Family::broom, {4, 2}}).counts() == z({5, 5, 3, 2}));
  }

  TEST_CASE("broom closed forms match BFS") {
    CHECK(bfs(FamilySpec{Family::broom, {4, 6}}).counts() == z({9, 23, 7, 6}));
    CHECK(bfs(FamilySpec{Family::broom, {5, 7}}).counts() == z({11, 31, 9, 8, 7}));
  }

  TEST_CASE("closed form agrees with construction up to order 60") {
    for (std::int64_t n = 5; n <= 60; ++n) {
      std::vector<FamilySpec> specs = {
          {Family::complete, {n}}, {Family::complete_minus_edge, {n}}, {Family::star, {n}},
          {Family::path, {n}},     {Family::t_n, {n}},                 {Family::g_n, {n}},
          {Family::broom, {4, n - 4}},
      };
      if (n >= 6) specs.push_back({Family::broom, {5, n - 5}});
      for (std::int64_t k = 2; k <= n / 2; ++k) specs.push_back({Family::double_star, {k, n}});
      for (std::int64_t m : {n - 1, n, n * (n - 1) / 2 - 1}) specs.push_back({Family::diameter2, {n, m}});
      for (const auto& spec : specs) {
        INFO(spec.to_string());
        const auto closed = closed_form_polynomial(spec);
        REQUIRE(closed.has_value());
        CHECK(*closed == bfs(spec));
      }
    }
  }

  TEST_CASE("graph shapes") {
    CHECK(tree_canonical_form(family_graph(FamilySpec{Family::path_with_pendants, {5, 3, 4}})) ==
          tree_canonical_form(family_graph(FamilySpec{Family::t_n, {9}})));
    const Graph b = family_graph(FamilySpec{Family::broom, {4, 5}});
    CHECK(b.is_tree());
    CHECK(b.degree(3) == 6);
    CHECK(b.degree(0) == 1);
    const Graph f7 = max_real_tree_16();
    CHECK(f7.order() == 16);
    CHECK(distance_distribution(f7).counts() ==
          std::vector<std::uint64_t>{15, 15, 14, 13, 12, 11, 10, 9, 6, 5, 4, 3, 2, 1});
    CHECK(distance_distribution(max_real_tree_17()).counts() ==
          std::vector<std::uint64_t>{16, 25, 18, 17, 16, 15, 14, 5, 4, 3, 2, 1});
  }

  TEST_CASE("parameter validation") {
    CHECK_THROWS_AS(validate(FamilySpec{Family::double_star, {3, 5}}), DomainError);
    CHECK_THROWS_AS(validate(FamilySpec{Family::t_n, {4}}), DomainError);
    CHECK_THROWS_AS(validate(FamilySpec{Family::diameter2, {4, 6}}), DomainError);
    CHECK_THROWS_AS(validate(FamilySpec{Family::diameter2, {4, 2}}), DomainError);
    CHECK_THROWS_AS(validate(FamilySpec{Family::broom, {2, 3}}), DomainError);
    CHECK_THROWS_AS(family_graph(FamilySpec{Family::path, {1000}}), DomainError);
    // Closed forms do not need the graph.
    CHECK(family_polynomial(FamilySpec{Family::path, {1000}}).degree() == 999);
  }

  TEST_CASE("dense construction") {
    auto d = dense_construct(1, 1);
    CHECK(d.spec.params == std::vector<std::int64_t>{4, 3});
    CHECK(d.root == -1);
    d = dense_construct(2, 1);
    CHECK(d.spec.params == std::vector<std::int64_t>{6, 10});
    CHECK(d.root == -2);
    d = dense_construct(1, 2);
    CHECK(d.spec.params == std::vector<std::int64_t>{6, 5});
    CHECK(d.root == mpq_class(-1, 2));
    for (std::int64_t a = 1; a <= 50; ++a) {
      for (std::int64_t b = 1; b <= 50; ++b) {
        mpq_class want(-a, b);
        want.canonicalize();
        CHECK(dense_construct(a, b).root == want);
      }
    }
    CHECK_THROWS_AS(dense_construct(0, 1), DomainError);
  }

  TEST_CASE("tree dense construction") {
    CHECK(tree_dense_construct(1, 2, 5).params == std::vector<std::int64_t>{10, 20});
    CHECK(tree_dense_construct(1, 1, 5).params == std::vector<std::int64_t>{5, 15});
    CHECK(tree_dense_construct(2, 1, 5).params == std::vector<std::int64_t>{5, 25});
    CHECK_THROWS_AS(tree_dense_construct(1, 1, 4), DomainError);
  }

  TEST_CASE("leaf augmentation by BFS") {
    const Graph p3 = family_graph(FamilySpec{Family::path, {3}});
    const Graph t1 = leaf_augment(p3);
    CHECK(t1.order() == 6);
    CHECK(t1.is_tree());
    // The BFS oracle gives (5,5,4,1); (x+1)^2 (2x + x^2) would be (2,5,4,1).
    CHECK(wiener_polynomial(distance_distribution(t1)).counts() == z({5, 5, 4, 1}));
    CHECK(times_x_plus_one_squared(WienerPolynomial(z({2, 1}))) == z({2, 5, 4, 1}));

    const Graph k2 = family_graph(FamilySpec{Family::path, {2}});
    CHECK(tree_canonical_form(leaf_augment(k2)) == tree_canonical_form(family_graph(FamilySpec{Family::path, {4}})));

    const Graph t2 = leaf_augment(t1);
    CHECK(t2.order() == 12);
    CHECK(distance_distribution(t2).counts() == oracle::floyd_distribution(12, t2.edges()));
    CHECK(tree_canonical_form(family_graph(FamilySpec{Family::leaf_augmented, {3, 2}})) == tree_canonical_form(t2));

    CHECK_THROWS_AS(leaf_augment(Graph(1)), DomainError);
    CHECK_THROWS_AS(leaf_augment(sqrt2_graph()), DomainError);
  }

  TEST_CASE("augmented trees differ from the squared factor by n x") {
    for (int n = 2; n <= 9; ++n) {
      for (const Graph& t : all_trees(n)) {
        const auto w0 = wiener_polynomial(distance_distribution(t));
        auto predicted = times_x_plus_one_squared(w0);
        predicted[0] += n;
        const auto w1 = wiener_polynomial(distance_distribution(leaf_augment(t)));
        CHECK(w1.counts() == predicted);
      }
    }
  }
}

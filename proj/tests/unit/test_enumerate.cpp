#include <set>

#include "doctest.h"
#include "oracles.hpp"
#include "wiener/claims.hpp"
#include "wiener/enumerate.hpp"
#include "wiener/errors.hpp"

using namespace wiener;

namespace {

std::set<std::vector<std::uint64_t>> as_set(const ConnectedSweep& s) {
  std::set<std::vector<std::uint64_t>> out;
  for (const auto& c : s.classes) out.insert(c.distribution.counts());
  return out;
}

}  // namespace

TEST_SUITE("enumerate") {
  TEST_CASE("order 2") {
    const auto s = enumerate_connected_distributions(2);
    CHECK(s.stats.instances_examined == 1);
    CHECK(s.stats.labeled_graphs == 2);
    REQUIRE(s.classes.size() == 1);
    CHECK(s.classes[0].distribution.counts() == std::vector<std::uint64_t>{1});
  }

  TEST_CASE("labeled connected counts match the recurrence") {
    for (int n = 1; n <= 7; ++n) {
      const mpz_class want = oracle::labeled_connected(n);
      if (n == 1) {
        CHECK(want == 1);
        continue;
      }
      const auto s = enumerate_connected_distributions(n);
      CHECK(mpz_class(static_cast<unsigned long>(s.stats.instances_examined)) == want);
      CHECK(s.stats.labeled_graphs == (std::uint64_t{1} << (n * (n - 1) / 2)));
    }
    CHECK(oracle::labeled_connected(4) == 38);
    CHECK(oracle::labeled_connected(7) == 1866256);
    CHECK(oracle::labeled_connected(8) == 251548592);
  }

  TEST_CASE("distinct distributions match Floyd-Warshall brute force") {
    for (int n = 2; n <= 6; ++n) CHECK(as_set(enumerate_connected_distributions(n)) == oracle::connected_distributions(n));
  }

  TEST_CASE("sweep output is sorted, unique and represented") {
    const auto s = enumerate_connected_distributions(6);
    CHECK(s.stats.distinct_distributions == s.classes.size());
    for (std::size_t i = 1; i < s.classes.size(); ++i) CHECK(s.classes[i - 1].distribution < s.classes[i].distribution);
    for (const auto& c : s.classes) CHECK(distance_distribution(c.representative) == c.distribution);
  }

  TEST_CASE("job partitioning does not change the result") {
    const auto one = enumerate_connected_distributions(6, {1, false});
    const auto four = enumerate_connected_distributions(6, {4, false});
    CHECK(one.stats.instances_examined == four.stats.instances_examined);
    REQUIRE(one.classes.size() == four.classes.size());
    for (std::size_t i = 0; i < one.classes.size(); ++i) {
      CHECK(one.classes[i].distribution == four.classes[i].distribution);
      CHECK(one.classes[i].representative == four.classes[i].representative);
    }
  }

  TEST_CASE("order limits") {
    CHECK_THROWS_AS(enumerate_connected_distributions(8), DomainError);
    CHECK_THROWS_AS(enumerate_connected_distributions(9, {1, true}), DomainError);
    CHECK_THROWS_AS(enumerate_connected_distributions(1), DomainError);
  }

  TEST_CASE("free tree counts") {
    const std::uint64_t known[] = {1, 1, 1, 2, 3, 6, 11, 23, 47, 106, 235, 551, 1301, 3159, 7741, 19320, 48629};
    for (int n = 1; n <= 17; ++n) {
      std::uint64_t count = 0;
      FreeTreeGenerator gen(n);
      while (gen.next()) ++count;
      CHECK(count == known[n - 1]);
      CHECK(mpz_class(static_cast<unsigned long>(count)) == oracle::free_trees(n));
    }
  }

  TEST_CASE("trees are distinct and agree with Pruefer enumeration") {
    for (int n = 1; n <= 8; ++n) {
      std::set<std::string> codes;
      std::size_t count = 0;
      enumerate_trees(n, [&](const Graph& t) {
        ++count;
        CHECK(t.is_tree());
        CHECK(t.edge_count() == static_cast<std::size_t>(n - 1));
        codes.insert(oracle::tree_code(oracle::adjacency(t)));
      });
      CHECK(codes.size() == count);
      CHECK(codes == oracle::prufer_tree_codes(n));
    }
  }

  TEST_CASE("order 4 trees") {
    const auto trees = all_trees(4);
    REQUIRE(trees.size() == 2);
    std::set<std::vector<std::uint64_t>> ds;
    for (const auto& t : trees) ds.insert(distance_distribution(t).counts());
    CHECK(ds == std::set<std::vector<std::uint64_t>>{{3, 3}, {3, 2, 1}});
  }

  TEST_CASE("level sequences") {
    FreeTreeGenerator gen(5);
    REQUIRE(gen.next());
    CHECK(gen.levels().size() == 5);
    CHECK(gen.levels()[0] == 0);
    CHECK(graph_from_levels(gen.levels()) == gen.graph());
    CHECK_THROWS_AS(FreeTreeGenerator(0), DomainError);
    CHECK_THROWS_AS(FreeTreeGenerator(kMaxTreeOrder + 1), DomainError);
  }

  TEST_CASE("canonical form separates trees") {
    for (int n = 2; n <= 10; ++n) {
      std::set<std::string> codes;
      for (const auto& t : all_trees(n)) codes.insert(tree_canonical_form(t));
      CHECK(codes.size() == all_trees(n).size());
    }
  }
}

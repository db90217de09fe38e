#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <cstdlib>
#include <set>

#include "alpha_extremal/canonical.hpp"
#include "alpha_extremal/enumeration.hpp"
#include "alpha_extremal/families.hpp"
#include "alpha_extremal/parallel.hpp"
#include "oracles/oracles.hpp"

using namespace alpha_extremal;

TEST_CASE("small class sizes", "[enumeration]") {
  CHECK(count({.rank = 1, .n = 3}) == 1);
  CHECK(count({.rank = 1, .n = 4}) == 2);
  CHECK(count({.rank = 1, .n = 5}) == 5);
  CHECK(count({.rank = 1, .n = 6, .girth = 6}) == 1);
  CHECK(count({.rank = 2, .n = 4}) == 1);
  const auto k4e = enumerate({.rank = 2, .n = 4});
  REQUIRE(k4e.size() == 1);
  CHECK(is_isomorphic(k4e[0], make_theta(1, 2, 2)));
}

TEST_CASE("unicyclic n = 5 matches the hand list", "[enumeration]") {
  const auto graphs = enumerate({.rank = 1, .n = 5});
  const std::vector<Graph> expected{
      make_cycle(5),
      make_pendant_cycle(5, 4),
      make_cycle_with_paths(5, 3, 1),
      make_pendant_cycle(5, 3),
      attach_pendant_path(attach_pendant_path(make_cycle(3), 0, 1), 1, 1),
  };
  REQUIRE(graphs.size() == expected.size());
  for (const auto& e : expected) {
    CHECK(std::any_of(graphs.begin(), graphs.end(), [&](const Graph& g) { return is_isomorphic(g, e); }));
  }
}

TEST_CASE("bicyclic n = 5 with B1 contains two triangles at a vertex", "[enumeration]") {
  const auto graphs = enumerate({.rank = 2, .n = 5, .subclass = BicyclicSubclass::kB1});
  REQUIRE(graphs.size() == 1);
  CHECK(is_isomorphic(graphs[0], make_twin_cycles(5, 3)));
}

TEST_CASE("infeasible filters are rejected", "[enumeration]") {
  CHECK_THROWS_AS(enumerate({.rank = 1, .n = 5, .girth = 6}), std::invalid_argument);
  CHECK_THROWS_AS(enumerate({.rank = 1, .n = 5, .girth = 2}), std::invalid_argument);
  CHECK_THROWS_AS(enumerate({.rank = 1, .n = 5, .pendants = 3}), std::invalid_argument);
  CHECK_THROWS_AS(enumerate({.rank = 1, .n = 6, .girth = 3, .pendants = 1}), std::invalid_argument);
  CHECK_THROWS_AS(enumerate({.rank = 1, .n = 6, .subclass = BicyclicSubclass::kB1}), std::invalid_argument);
  CHECK_THROWS_AS(enumerate({.rank = 3, .n = 6}), std::invalid_argument);
  CHECK_THROWS_AS(count({.rank = 1, .n = 13}), std::invalid_argument);
}

TEST_CASE("emitted graphs satisfy the filter and are pairwise non-isomorphic", "[enumeration][property]") {
  for (int rank = 0; rank <= 2; ++rank) {
    for (int n = 4; n <= 7; ++n) {
      const auto graphs = enumerate({.rank = rank, .n = n});
      std::set<std::string> keys;
      for (const auto& g : graphs) {
        const auto d = classify(g);
        CHECK(d.rank == rank);
        CHECK(g.order() == n);
        keys.insert(canonical_key(g));
      }
      CHECK(keys.size() == graphs.size());
      for (std::size_t i = 0; i < graphs.size(); ++i) {
        for (std::size_t j = i + 1; j < graphs.size(); ++j) {
          if (graphs[i].degrees() != graphs[j].degrees()) continue;
          CHECK_FALSE(oracle::isomorphic(graphs[i], graphs[j]));
        }
      }
    }
  }
}

TEST_CASE("enumeration output is deterministic and sorted by key", "[enumeration]") {
  const ClassFilter f{.rank = 2, .n = 7, .pendants = 2};
  const auto a = enumerate(f);
  const auto b = enumerate(f);
  CHECK(a == b);
  const auto keys = enumerate_keys(f);
  CHECK(std::is_sorted(keys.begin(), keys.end()));
  for (std::size_t i = 0; i < a.size(); ++i) CHECK(canonical_key(a[i]) == keys[i]);
  CHECK(count(f) == a.size());
}

TEST_CASE("enumeration agrees with the labeled brute force at n <= 6", "[enumeration][oracle]") {
  for (int rank = 0; rank <= 2; ++rank) {
    for (int n = 3; n <= 6; ++n) {
      const auto reps = oracle::labeled_classes(n, rank);
      CHECK(count({.rank = rank, .n = n}) == reps.size());
      for (int g = 3; g <= n; ++g) {
        const auto want = std::count_if(reps.begin(), reps.end(), [&](const auto& r) { return r.girth == g; });
        CHECK(count({.rank = rank, .n = n, .girth = g}) == static_cast<std::size_t>(want));
      }
      for (int k = 0; k <= n - 3; ++k) {
        const auto want = std::count_if(reps.begin(), reps.end(), [&](const auto& r) { return r.pendants == k; });
        CHECK(count({.rank = rank, .n = n, .pendants = k}) == static_cast<std::size_t>(want));
      }
    }
  }
}

TEST_CASE("connected graph generator matches known counts", "[enumeration]") {
  const std::vector<std::size_t> expected{1, 1, 2, 6, 21, 112, 853};
  for (int n = 1; n <= 7; ++n) CHECK(enumerate_connected(n).size() == expected[n - 1]);
  for (int n = 3; n <= 5; ++n) CHECK(enumerate_connected(n).size() == oracle::all_connected(n).size());
}

TEST_CASE("worker count honours the environment", "[enumeration]") {
  ::setenv("ALPHA_EXTREMAL_THREADS", "3", 1);
  CHECK(worker_count() == 3);
  ::setenv("ALPHA_EXTREMAL_THREADS", "junk", 1);
  CHECK(worker_count() >= 1);
  ::unsetenv("ALPHA_EXTREMAL_THREADS");
}

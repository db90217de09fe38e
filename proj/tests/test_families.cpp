#include <catch2/catch_amalgamated.hpp>

#include "alpha_extremal/canonical.hpp"
#include "alpha_extremal/families.hpp"
#include "oracles/oracles.hpp"

using namespace alpha_extremal;

namespace {

std::vector<int> sorted_degrees(const Graph& g) {
  auto d = g.degrees();
  std::sort(d.rbegin(), d.rend());
  return d;
}

/// Lengths of the pendant paths hanging at `root`, longest first.
std::vector<int> path_lengths_at(const Graph& g, Vertex root) {
  std::vector<int> out;
  for (Vertex first : g.neighbors(root)) {
    Vertex prev = root;
    Vertex cur = first;
    int len = 1;
    while (g.degree(cur) == 2) {
      const auto nb = g.neighbors(cur);
      const Vertex next = nb[0] == prev ? nb[1] : nb[0];
      prev = cur;
      cur = next;
      ++len;
    }
    if (g.degree(cur) == 1) out.push_back(len);
  }
  std::sort(out.rbegin(), out.rend());
  return out;
}

}  // namespace

TEST_CASE("cycles and paths", "[families]") {
  CHECK(girth(make_cycle(3)) == 3);
  CHECK(make_path(2) == Graph(2, {{0, 1}}));
  CHECK(pendant_count(make_cycle(5)) == 0);
  CHECK(cycle_rank(make_cycle(5)) == 1);
  CHECK(make_path(6).size() == 5);
  CHECK_THROWS_AS(make_cycle(2), std::invalid_argument);
  CHECK_THROWS_AS(make_path(0), std::invalid_argument);
}

TEST_CASE("pendant cycle U_n(g)", "[families]") {
  const Graph u53 = make_pendant_cycle(5, 3);
  CHECK(sorted_degrees(u53) == std::vector<int>{4, 2, 2, 1, 1});
  CHECK(u53.degree(0) == 4);
  CHECK(girth(u53) == 3);
  CHECK(make_pendant_cycle(6, 6) == make_cycle(6));
  CHECK(pendant_count(make_pendant_cycle(7, 4)) == 3);
  CHECK(make_pendant_cycle(7, 4).size() == 7);
  CHECK_THROWS_AS(make_pendant_cycle(5, 2), std::invalid_argument);
  CHECK_THROWS_AS(make_pendant_cycle(5, 6), std::invalid_argument);
}

TEST_CASE("cycle with almost equal paths U_n(t,k)", "[families]") {
  CHECK(path_lengths_at(make_cycle_with_paths(8, 3, 2), 0) == std::vector<int>{3, 2});
  const Graph u734 = make_cycle_with_paths(7, 3, 4);
  CHECK(path_lengths_at(u734, 0) == std::vector<int>{1, 1, 1, 1});
  CHECK(is_isomorphic(u734, make_pendant_cycle(7, 3)));
  const Graph u943 = make_cycle_with_paths(9, 4, 3);
  CHECK(path_lengths_at(u943, 0) == std::vector<int>{2, 2, 1});
  CHECK(pendant_count(u943) == 3);
  CHECK(oracle::girth(u943) == 4);
  CHECK_THROWS_AS(make_cycle_with_paths(6, 3, 4), std::invalid_argument);
  CHECK_THROWS_AS(make_cycle_with_paths(6, 3, 0), std::invalid_argument);
}

TEST_CASE("theta graphs", "[families]") {
  const Graph t122 = make_theta(1, 2, 2);
  CHECK(t122.order() == 4);
  CHECK(t122.size() == 5);
  CHECK(oracle::girth(t122) == 3);
  CHECK(make_theta(2, 2, 2).order() == 5);
  CHECK(girth(make_theta(2, 2, 2)) == 4);
  CHECK(make_theta(2, 3, 3).order() == 7);
  CHECK(oracle::girth(make_theta(2, 3, 3)) == 5);
  CHECK(make_theta(1, 2, 2).degree(0) == 3);
  CHECK(make_theta(1, 2, 2).degree(1) == 3);
  CHECK_THROWS_AS(make_theta(1, 1, 2), std::invalid_argument);
  CHECK_THROWS_AS(make_theta(2, 1, 3), std::invalid_argument);
}

TEST_CASE("theta graphs with pendants", "[families]") {
  const Graph c222 = make_theta_with_pendants(2, 2, 2, 1);
  CHECK(c222.order() == 6);
  CHECK(c222.max_degree() == 4);
  CHECK(make_theta_with_pendants(1, 2, 2, 0) == make_theta(1, 2, 2));
  CHECK(sorted_degrees(make_theta_with_pendants(2, 3, 3, 1)) == std::vector<int>{4, 3, 2, 2, 2, 2, 2, 1});
  CHECK(classify(c222).subclass == BicyclicSubclass::kB2);
}

TEST_CASE("twin cycles B_n^1(g)", "[families]") {
  const Graph b53 = make_twin_cycles(5, 3);
  CHECK(is_isomorphic(b53, coalesce(make_cycle(3), 0, make_cycle(3), 0)));
  CHECK(pendant_count(b53) == 0);
  const Graph b73 = make_twin_cycles(7, 3);
  CHECK(b73.degree(0) == 6);
  CHECK(pendant_count(b73) == 2);
  const auto d = classify(make_twin_cycles(9, 4));
  CHECK(d.girth == 4);
  CHECK(d.rank == 2);
  CHECK(d.subclass == BicyclicSubclass::kB1);
  CHECK_THROWS_AS(make_twin_cycles(6, 4), std::invalid_argument);
}

TEST_CASE("butterfly with paths", "[families]") {
  const Graph b61 = make_butterfly_with_paths(6, 1);
  CHECK(b61.degree(0) == 5);
  CHECK(pendant_count(b61) == 1);
  CHECK(path_lengths_at(make_butterfly_with_paths(8, 3), 0) == std::vector<int>{1, 1, 1});
  const Graph b92 = make_butterfly_with_paths(9, 2);
  CHECK(path_lengths_at(b92, 0) == std::vector<int>{2, 2});
  CHECK(classify(b92).girth == 3);
  CHECK(classify(b92).pendants == 2);
  CHECK(classify(b92).subclass == BicyclicSubclass::kB1);
  CHECK_THROWS_AS(make_butterfly_with_paths(6, 2), std::invalid_argument);
  CHECK_THROWS_AS(make_butterfly_with_paths(6, 0), std::invalid_argument);
}

TEST_CASE("diamond with paths", "[families]") {
  CHECK(is_isomorphic(make_diamond_with_paths(5, 1), make_theta_with_pendants(1, 2, 2, 1)));
  CHECK(path_lengths_at(make_diamond_with_paths(8, 4), 0) == std::vector<int>{1, 1, 1, 1});
  const Graph d92 = make_diamond_with_paths(9, 2);
  CHECK(path_lengths_at(d92, 0) == std::vector<int>{3, 2});
  CHECK(pendant_count(d92) == 2);
  CHECK(classify(d92).subclass == BicyclicSubclass::kB2);
  CHECK_THROWS_AS(make_diamond_with_paths(6, 3), std::invalid_argument);
}

TEST_CASE("figure graphs", "[families]") {
  const Graph g5 = make_figure_graph(FigureGraph::kG5);
  CHECK(sorted_degrees(g5) == std::vector<int>{4, 2, 2, 2, 1, 1, 1, 1});
  CHECK(cycle_rank(g5) == 0);
  const Graph g1 = make_figure_graph(FigureGraph::kG1);
  CHECK(g1.order() == 5);
  CHECK(g1.size() == 6);
  CHECK(classify(g1).rank == 2);
  CHECK(make_figure_graph(FigureGraph::kG2).order() == 6);
  CHECK(make_figure_graph(FigureGraph::kG3).order() == 8);
  CHECK(make_figure_graph(FigureGraph::kG4).order() == 8);
  CHECK_FALSE(parse_figure_graph("G6").has_value());
}

TEST_CASE("attach_pendant_path", "[families]") {
  const Graph g = attach_pendant_path(make_cycle(3), 0, 2);
  CHECK(g.order() == 5);
  CHECK(path_lengths_at(g, 0) == std::vector<int>{2});
  CHECK(is_isomorphic(attach_pendant_path(make_cycle(4), 0, 1), make_pendant_cycle(5, 4)));
  CHECK(is_isomorphic(attach_pendant_path(attach_pendant_path(make_cycle(3), 0, 1), 0, 1), make_pendant_cycle(5, 3)));
  CHECK_THROWS_AS(attach_pendant_path(make_cycle(3), 3, 1), std::invalid_argument);
  CHECK_THROWS_AS(attach_pendant_path(make_cycle(3), 0, 0), std::invalid_argument);
}

TEST_CASE("coalesce", "[families]") {
  CHECK(is_isomorphic(coalesce(make_cycle(3), 0, make_cycle(3), 0), make_twin_cycles(5, 3)));
  CHECK(is_isomorphic(coalesce(make_path(2), 0, make_cycle(4), 0), make_pendant_cycle(5, 4)));
  CHECK(is_isomorphic(coalesce(make_cycle(3), 0, make_path(3), 1), make_pendant_cycle(5, 3)));
  const Graph g = coalesce(make_theta(2, 2, 2), 2, make_cycle(4), 1);
  CHECK(g.order() == 5 + 4 - 1);
  CHECK(g.size() == 6 + 4);
  CHECK_THROWS_AS(coalesce(make_cycle(3), 5, make_cycle(3), 0), std::invalid_argument);
}

TEST_CASE("family specs by name", "[families]") {
  CHECK(parse_family_name("ThetaPendant") == FamilyName::kThetaPendant);
  CHECK(parse_family_name("FrakB2_k") == FamilyName::kFrakB2k);
  CHECK_FALSE(parse_family_name("nonsense").has_value());
  CHECK(build_family({FamilyName::kUtk, {9, 4, 3}}) == make_cycle_with_paths(9, 4, 3));
  CHECK(build_family({FamilyName::kFig1, {5}}) == make_figure_graph(FigureGraph::kG5));
  CHECK_THROWS_AS(build_family({FamilyName::kTheta, {2, 2}}), std::invalid_argument);
  CHECK_THROWS_AS(build_family({FamilyName::kFig1, {6}}), std::invalid_argument);
}

TEST_CASE("family invariants over all parameters", "[families][property]") {
  for (int n = 3; n <= 12; ++n) {
    for (int g = 3; g <= n; ++g) {
      const Graph u = make_pendant_cycle(n, g);
      const auto d = classify(u);
      CHECK(d.girth == g);
      CHECK(d.pendants == n - g);
      CHECK(d.rank == 1);
    }
    for (int t = 3; t < n; ++t) {
      for (int k = 1; k <= n - t; ++k) {
        const Graph u = make_cycle_with_paths(n, t, k);
        const auto lengths = path_lengths_at(u, 0);
        CHECK(static_cast<int>(lengths.size()) == k);
        CHECK(lengths.front() - lengths.back() <= 1);
        CHECK(pendant_count(u) == k);
        CHECK(is_connected(u));
      }
    }
    for (int g = 3; 2 * g - 1 <= n; ++g) CHECK(classify(make_twin_cycles(n, g)).subclass == BicyclicSubclass::kB1);
  }
  for (int p = 1; p <= 4; ++p) {
    for (int q = std::max(p, 2); q <= 5; ++q) {
      for (int r = q; r <= 5; ++r) {
        const Graph t = make_theta(p, q, r);
        CHECK(t.order() == p + q + r - 1);
        CHECK(girth(t) == p + q);
        const auto degs = t.degrees();
        CHECK(std::count(degs.begin(), degs.end(), 3) == 2);
        for (int pend = 0; pend <= 2; ++pend) {
          CHECK(classify(make_theta_with_pendants(p, q, r, pend)).subclass == BicyclicSubclass::kB2);
        }
      }
    }
  }
}

TEST_CASE("girth extremal theta family", "[families]") {
  CHECK(make_girth_theta_extremal(5, 4) == make_theta(2, 2, 2));
  CHECK(make_girth_theta_extremal(9, 5) == make_theta_with_pendants(2, 3, 3, 2));
  CHECK_THROWS_AS(make_girth_theta_extremal(6, 5), std::invalid_argument);
}

#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "alpha_extremal/enumeration.hpp"
#include "alpha_extremal/families.hpp"
#include "alpha_extremal/spectral.hpp"
#include "oracles/oracles.hpp"

using namespace alpha_extremal;
using Catch::Matchers::WithinAbs;

TEST_CASE("alpha is restricted to [0,1)", "[spectral]") {
  CHECK(Alpha(0.0).value() == 0.0);
  CHECK(Alpha(0.99).value() == 0.99);
  CHECK_THROWS_AS(Alpha(1.0), std::invalid_argument);
  CHECK_THROWS_AS(Alpha(-0.1), std::invalid_argument);
  CHECK_THROWS_AS(Alpha(std::nan("")), std::invalid_argument);
}

TEST_CASE("alpha matrix entries", "[spectral]") {
  const auto edge = alpha_matrix(make_path(2), Alpha(0.5));
  CHECK(edge(0, 0) == 0.5);
  CHECK(edge(0, 1) == 0.5);
  CHECK(edge(1, 0) == 0.5);
  CHECK(edge(1, 1) == 0.5);

  const auto adj = alpha_matrix(make_cycle(3), Alpha(0.0));
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) CHECK(adj(i, j) == (i == j ? 0.0 : 1.0));
  }
  const auto half_q = alpha_matrix(make_cycle(3), Alpha(0.5));
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) CHECK(half_q(i, j) == (i == j ? 1.0 : 0.5));
  }
}

TEST_CASE("spectral radius examples", "[spectral]") {
  for (double a : {0.0, 0.3, 0.7, 0.95}) {
    CHECK_THAT(rho(make_cycle(7), Alpha(a)), WithinAbs(2.0, 1e-12));
    CHECK_THAT(rho(make_path(2), Alpha(a)), WithinAbs(1.0, 1e-12));
  }
  CHECK_THAT(rho(make_theta(1, 3, 3), Alpha(0.5)), WithinAbs(2.5, 1e-10));
  CHECK_THROWS_AS(rho(Graph(4, {{0, 1}, {2, 3}}), Alpha(0.5)), std::invalid_argument);
}

TEST_CASE("solver result carries a positive unit Perron vector", "[spectral]") {
  const auto res = spectral_radius(make_theta_with_pendants(2, 3, 3, 2), Alpha(0.4));
  double norm = 0.0;
  for (double v : res.perron) {
    CHECK(v > 0.0);
    norm += v * v;
  }
  CHECK_THAT(norm, WithinAbs(1.0, 1e-12));
  CHECK(res.residual <= 1e-12);
  CHECK(res.iterations > 0);
}

TEST_CASE("solver handles crowded spectra near alpha = 1", "[spectral]") {
  const Graph g = make_theta_with_pendants(3, 4, 4, 1);
  for (double a : {0.95, 0.99}) {
    const auto res = spectral_radius(g, Alpha(a));
    CHECK_THAT(res.rho, WithinAbs(oracle::jacobi_rho(g, a), 1e-9));
    CHECK(res.residual <= 1e-12);
  }
}

TEST_CASE("convergence failures are reported", "[spectral]") {
  SolverOptions opts;
  opts.max_iterations = 2;
  opts.power_budget = 10;
  CHECK_THROWS_AS(spectral_radius(make_theta_with_pendants(2, 3, 3, 1), Alpha(0.5), opts), ConvergenceError);
}

TEST_CASE("lower bound examples", "[spectral]") {
  const auto c6 = lower_bounds(make_cycle(6), Alpha(0.3));
  CHECK(c6.average_degree == 2.0);
  CHECK_THAT(rho(make_cycle(6), Alpha(0.3)), WithinAbs(2.0, 1e-12));
  CHECK_THAT(lower_bounds(make_star(4), Alpha(0.5)).max_degree, WithinAbs(2.5, 1e-15));
  const Graph c1 = make_theta_with_pendants(2, 2, 2, 1);
  const auto lb = lower_bounds(c1, Alpha(0.75));
  CHECK_THAT(lb.max_degree, WithinAbs(3.0 + 0.0625 / 0.75, 1e-12));
  CHECK(rho(c1, Alpha(0.75)) >= lb.max_degree);
}

TEST_CASE("upper bound examples", "[spectral]") {
  const Graph g3 = make_figure_graph(FigureGraph::kG3);
  CHECK_THAT(upper_bounds(g3, Alpha(0.5)).degree_average, WithinAbs(8.0 / 3.0, 1e-12));
  for (double a : {0.2, 0.5, 0.8}) {
    const auto ub = upper_bounds(make_cycle(5), Alpha(a));
    CHECK_THAT(ub.degree_average, WithinAbs(2.0, 1e-12));
    CHECK_THAT(ub.edge_degree, WithinAbs(2.0, 1e-12));
  }
  const Graph u = make_pendant_cycle(6, 3);
  CHECK(rho(u, Alpha(0.75)) < upper_bounds(u, Alpha(0.75)).degree_average);
  CHECK_THROWS_AS(upper_bounds(Graph(1), Alpha(0.5)), std::invalid_argument);
}

TEST_CASE("edge-degree bound is tight on semiregular bipartite graphs at alpha 1/2", "[spectral]") {
  const Graph k23 = make_theta(2, 2, 2);
  CHECK_THAT(rho(k23, Alpha(0.5)), WithinAbs(upper_bounds(k23, Alpha(0.5)).edge_degree, 1e-10));
  CHECK(rho(k23, Alpha(0.3)) < upper_bounds(k23, Alpha(0.3)).edge_degree - 1e-9);
}

TEST_CASE("polynomial evaluation", "[spectral]") {
  CHECK_THAT(evaluate_polynomial("rho_C133", Alpha(0.5), 0.0), WithinAbs(2.5, 1e-15));
  const double r = rho(make_theta_with_pendants(2, 2, 2, 1), Alpha(0.5));
  CHECK(std::abs(evaluate_polynomial("f_C222", Alpha(0.5), r)) < 1e-8);
  CHECK(evaluate_polynomial("g_C233", Alpha(0.5), 8.0 / 3.0) < 0.0);
  CHECK_THROWS_AS(evaluate_polynomial("nope", Alpha(0.5), 1.0), std::invalid_argument);
}

TEST_CASE("polynomial roots are the largest roots", "[spectral]") {
  // Bisection above the computed rho must find no sign change.
  struct Case {
    ExtremalPolynomial p;
    Graph g;
  };
  const std::vector<Case> cases{{ExtremalPolynomial::kFC222, make_theta_with_pendants(2, 2, 2, 1)},
                                {ExtremalPolynomial::kGC233, make_theta_with_pendants(2, 3, 3, 1)},
                                {ExtremalPolynomial::kH1G5, make_figure_graph(FigureGraph::kG5)},
                                {ExtremalPolynomial::kH2G3, make_figure_graph(FigureGraph::kG3)}};
  for (double a : {0.0, 0.3, 0.5, 0.8}) {
    for (const auto& c : cases) {
      const double r = rho(c.g, Alpha(a));
      CHECK(std::abs(evaluate_polynomial(c.p, Alpha(a), r)) < 1e-8);
      double prev = evaluate_polynomial(c.p, Alpha(a), r + 1e-6);
      for (double x = r + 1e-3; x < r + 20.0; x += 1e-3) {
        const double v = evaluate_polynomial(c.p, Alpha(a), x);
        CHECK((v > 0) == (prev > 0));
        prev = v;
      }
    }
  }
}

TEST_CASE("power iteration agrees with Jacobi on small graphs", "[spectral][oracle]") {
  for (int n = 2; n <= 6; ++n) {
    for (const auto& g : enumerate_connected(n)) {
      for (double a : {0.0, 0.5, 0.9}) CHECK_THAT(rho(g, Alpha(a)), WithinAbs(oracle::jacobi_rho(g, a), 1e-9));
    }
  }
}

TEST_CASE("bounds and Perron positivity hold on connected graphs", "[spectral][property]") {
  for (int n = 2; n <= 7; ++n) {
    for (const auto& g : enumerate_connected(n)) {
      const bool regular = is_regular(g);
      for (int i = 0; i <= 9; ++i) {
        const Alpha a(i / 10.0);
        const auto res = spectral_radius(g, a);
        const auto lo = lower_bounds(g, a);
        const auto hi = upper_bounds(g, a);
        CHECK(*std::min_element(res.perron.begin(), res.perron.end()) > 0.0);
        CHECK(lo.average_degree <= res.rho + 1e-10);
        CHECK(lo.max_degree <= res.rho + 1e-10);
        CHECK(res.rho <= hi.degree_average + 1e-10);
        CHECK(res.rho <= hi.edge_degree + 1e-10);
        CHECK((std::abs(res.rho - lo.average_degree) < 1e-10) == regular);
      }
    }
  }
}

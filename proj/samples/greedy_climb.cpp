// Hill-climbs rho_alpha inside the unicyclic graphs of fixed girth by single
// edge rotations toward larger Perron entries, starting from the weakest
// member of the class.
//
//   greedy_climb [n] [girth] [alpha]

#include <cstdio>
#include <cstdlib>

#include "alpha_extremal.hpp"

using namespace alpha_extremal;

int main(int argc, char** argv) {
  const int n = argc > 1 ? std::atoi(argv[1]) : 9;
  const int g = argc > 2 ? std::atoi(argv[2]) : 4;
  const Alpha alpha(argc > 3 ? std::atof(argv[3]) : 0.5);

  auto members = enumerate(ClassFilter{.rank = 1, .n = n, .girth = g});
  if (members.empty()) {
    std::fprintf(stderr, "no unicyclic graph with n=%d and girth %d\n", n, g);
    return 1;
  }
  Graph cur = members.front();
  double cur_rho = rho(cur, alpha);
  for (const auto& m : members) {
    if (const double r = rho(m, alpha); r < cur_rho) {
      cur = m;
      cur_rho = r;
    }
  }
  std::printf("class size %zu, start rho %.12f\n", members.size(), cur_rho);

  for (int step = 1;; ++step) {
    const auto res = spectral_radius(cur, alpha);
    Graph best = cur;
    double best_rho = cur_rho;
    for (Vertex u = 0; u < cur.order(); ++u) {
      for (Vertex v = 0; v < cur.order(); ++v) {
        if (u == v || res.perron[u] < res.perron[v]) continue;
        for (Vertex w : cur.neighbors(v)) {
          if (w == u || cur.has_edge(u, w)) continue;
          Graph next;
          try {
            next = rotate_edges(cur, u, v, {w});
          } catch (const std::invalid_argument&) {
            continue;
          }
          if (cycle_rank(next) != 1 || girth(next) != g) continue;
          if (const double r = rho(next, alpha); r > best_rho) {
            best = std::move(next);
            best_rho = r;
          }
        }
      }
    }
    if (best_rho <= cur_rho) break;
    std::printf("step %d: rho %.12f  %s\n", step, best_rho, canonical_key(best).c_str());
    cur = std::move(best);
    cur_rho = best_rho;
  }

  const bool extremal = is_isomorphic(cur, make_pendant_cycle(n, g));
  std::printf("final rho %.12f, %s U_n(g)\n", cur_rho, extremal ? "isomorphic to" : "not isomorphic to");
  return extremal ? 0 : 1;
}

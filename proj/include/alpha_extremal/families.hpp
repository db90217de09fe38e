#ifndef ALPHA_EXTREMAL_FAMILIES_HPP
#define ALPHA_EXTREMAL_FAMILIES_HPP

#include <algorithm>
#include <cctype>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "alpha_extremal/graph.hpp"

namespace alpha_extremal {

// Constructors for the named extremal families.
//
// Labeling conventions (relied on by tests and by the transforms):
//   cycle      0..n-1 in cyclic order.
//   path       0-1-...-(n-1).
//   theta      vertices 0 and 1 are the two branch vertices; interior vertices
//              of the p-, q- and r-paths follow from 2 upwards, each path
//              listed from the 0 end.
//   attachment vertex for every pendant/path family is 0; new vertices are
//              appended after the base in attachment order.

namespace detail {

inline void require(bool ok, const std::string& what) {
  if (!ok) throw std::invalid_argument(what);
}

/// Lengths of k almost-equal paths of total length `total`; longer ones first.
inline std::vector<int> balanced_lengths(int total, int k) {
  std::vector<int> out(static_cast<std::size_t>(k), total / k);
  for (int i = 0; i < total % k; ++i) ++out[i];
  return out;
}

inline void append_path(std::vector<Edge>& edges, int& next, Vertex root, int length) {
  Vertex prev = root;
  for (int i = 0; i < length; ++i) {
    edges.push_back({prev, next});
    prev = next++;
  }
}

inline void append_cycle_through(std::vector<Edge>& edges, int& next, Vertex root, int length) {
  Vertex prev = root;
  for (int i = 0; i < length - 1; ++i) {
    edges.push_back({prev, next});
    prev = next++;
  }
  edges.push_back({root, prev});
}

}  // namespace detail

inline Graph make_cycle(int n) {
  detail::require(n >= 3, "cycle needs n >= 3");
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
  edges.push_back({0, n - 1});
  return Graph(n, edges);
}

inline Graph make_path(int n) {
  detail::require(n >= 1, "path needs n >= 1");
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
  return Graph(n, edges);
}

/// Star K_{1,leaves} centred at 0.
inline Graph make_star(int leaves) {
  detail::require(leaves >= 1, "star needs at least one leaf");
  std::vector<Edge> edges;
  for (int i = 1; i <= leaves; ++i) edges.push_back({0, i});
  return Graph(leaves + 1, edges);
}

/// U_n(g): g-cycle with n-g pendant vertices at vertex 0.
inline Graph make_pendant_cycle(int n, int g) {
  detail::require(g >= 3 && g <= n, "U_n(g) needs 3 <= g <= n");
  std::vector<Edge> edges;
  int next = 1;
  detail::append_cycle_through(edges, next, 0, g);
  for (int i = g; i < n; ++i) edges.push_back({0, next++});
  return Graph(n, edges);
}

/// U_n(t,k): t-cycle with k almost-equal pendant paths (total length n-t) at vertex 0.
inline Graph make_cycle_with_paths(int n, int t, int k) {
  detail::require(t >= 3 && k >= 1 && k <= n - t, "U_n(t,k) needs t >= 3 and 1 <= k <= n-t");
  std::vector<Edge> edges;
  int next = 1;
  detail::append_cycle_through(edges, next, 0, t);
  for (int len : detail::balanced_lengths(n - t, k)) detail::append_path(edges, next, 0, len);
  return Graph(n, edges);
}

inline void validate_theta(int p, int q, int r) {
  detail::require(p >= 1 && p <= q && q <= r, "theta needs 1 <= p <= q <= r");
  detail::require(q >= 2, "theta allows at most one path of length 1");
}

/// C(p,q,r): branch vertices 0 and 1 joined by paths of lengths p, q, r.
inline Graph make_theta(int p, int q, int r) {
  validate_theta(p, q, r);
  std::vector<Edge> edges;
  int next = 2;
  for (int len : {p, q, r}) {
    Vertex prev = 0;
    for (int i = 0; i + 1 < len; ++i) {
      edges.push_back({prev, next});
      prev = next++;
    }
    edges.push_back({std::min(prev, 1), std::max(prev, 1)});
  }
  return Graph(p + q + r - 1, edges);
}

/// C^t_{p,q,r}: C(p,q,r) with t pendant vertices at branch vertex 0.
inline Graph make_theta_with_pendants(int p, int q, int r, int t) {
  detail::require(t >= 0, "pendant count must be non-negative");
  const Graph base = make_theta(p, q, r);
  auto edges = base.edges();
  int next = base.order();
  for (int i = 0; i < t; ++i) edges.push_back({0, next++});
  return Graph(next, edges);
}

/// B_n^1(g): two g-cycles sharing vertex 0, plus n-2g+1 pendant vertices at 0.
inline Graph make_twin_cycles(int n, int g) {
  detail::require(g >= 3 && n >= 2 * g - 1, "B_n^1(g) needs g >= 3 and n >= 2g-1");
  std::vector<Edge> edges;
  int next = 1;
  detail::append_cycle_through(edges, next, 0, g);
  detail::append_cycle_through(edges, next, 0, g);
  while (next < n) edges.push_back({0, next++});
  return Graph(n, edges);
}

/// Butterfly (two triangles 0-1-2 and 0-3-4) with k almost-equal paths of
/// total length n-5 at the shared vertex 0.
inline Graph make_butterfly_with_paths(int n, int k) {
  detail::require(k >= 1 && k <= n - 5, "butterfly family needs 1 <= k <= n-5");
  std::vector<Edge> edges{{0, 1}, {1, 2}, {0, 2}, {0, 3}, {3, 4}, {0, 4}};
  int next = 5;
  for (int len : detail::balanced_lengths(n - 5, k)) detail::append_path(edges, next, 0, len);
  return Graph(n, edges);
}

/// Diamond C(1,2,2) with k almost-equal paths of total length n-4 at branch vertex 0.
inline Graph make_diamond_with_paths(int n, int k) {
  detail::require(k >= 1 && k <= n - 4, "diamond family needs 1 <= k <= n-4");
  auto edges = make_theta(1, 2, 2).edges();
  int next = 4;
  for (int len : detail::balanced_lengths(n - 4, k)) detail::append_path(edges, next, 0, len);
  return Graph(n, edges);
}

/// Hangs a new path of `length` vertices at v; new vertices are n, n+1, ...
inline Graph attach_pendant_path(const Graph& g, Vertex v, int length) {
  detail::require(g.contains(v), "attach_pendant_path: vertex out of range");
  detail::require(length >= 1, "attach_pendant_path: length must be >= 1");
  auto edges = g.edges();
  int next = g.order();
  detail::append_path(edges, next, v, length);
  return Graph(next, edges);
}

/// G1(u,v)G2: identifies u in g1 with v in g2.
///
/// Vertices of g1 keep their labels. Vertex v of g2 becomes u; the other
/// vertices of g2 follow g1's in their original order.
inline Graph coalesce(const Graph& g1, Vertex u, const Graph& g2, Vertex v) {
  detail::require(g1.contains(u), "coalesce: u out of range");
  detail::require(g2.contains(v), "coalesce: v out of range");
  const int n1 = g1.order();
  auto map = [&](Vertex w) -> Vertex {
    if (w == v) return u;
    return n1 + (w < v ? w : w - 1);
  };
  auto edges = g1.edges();
  for (const auto& e : g2.edges()) {
    Vertex a = map(e.u);
    Vertex b = map(e.v);
    edges.push_back({std::min(a, b), std::max(a, b)});
  }
  return Graph(n1 + g2.order() - 1, edges);
}

enum class FigureGraph { kG1, kG2, kG3, kG4, kG5 };

/// Special graphs G1..G5 used in the girth-5 and pendant-edge comparisons.
inline Graph make_figure_graph(FigureGraph which) {
  switch (which) {
    case FigureGraph::kG1:
      // C(1,2,2) with a pendant at the degree-2 vertex 2.
      return attach_pendant_path(make_theta(1, 2, 2), 2, 1);
    case FigureGraph::kG2:
      // C(2,2,2) with a pendant at the degree-2 vertex 2.
      return attach_pendant_path(make_theta(2, 2, 2), 2, 1);
    case FigureGraph::kG3:
      // C(2,3,3) with a pendant at vertex 2, the interior of the 2-path.
      return attach_pendant_path(make_theta(2, 3, 3), 2, 1);
    case FigureGraph::kG4:
      // C(2,3,3) with a pendant at vertex 3, first interior vertex of a 3-path.
      return attach_pendant_path(make_theta(2, 3, 3), 3, 1);
    case FigureGraph::kG5: {
      // Tree: centre 0 with three 2-paths and one pendant edge.
      Graph g(1);
      for (int i = 0; i < 3; ++i) g = attach_pendant_path(g, 0, 2);
      return attach_pendant_path(g, 0, 1);
    }
  }
  throw std::invalid_argument("unknown figure graph");
}

inline std::optional<FigureGraph> parse_figure_graph(std::string_view name) {
  if (name == "G1" || name == "1") return FigureGraph::kG1;
  if (name == "G2" || name == "2") return FigureGraph::kG2;
  if (name == "G3" || name == "3") return FigureGraph::kG3;
  if (name == "G4" || name == "4") return FigureGraph::kG4;
  if (name == "G5" || name == "5") return FigureGraph::kG5;
  return std::nullopt;
}

enum class FamilyName { kCycle, kPath, kUg, kUtk, kTheta, kThetaPendant, kB1g, kFrakB1k, kFrakB2k, kFig1 };

struct FamilySpec {
  FamilyName name;
  std::vector<int> params;
};

inline std::optional<FamilyName> parse_family_name(std::string_view text) {
  std::string s(text);
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
  if (s == "cycle") return FamilyName::kCycle;
  if (s == "path") return FamilyName::kPath;
  if (s == "u_g" || s == "ug") return FamilyName::kUg;
  if (s == "u_tk" || s == "utk") return FamilyName::kUtk;
  if (s == "theta") return FamilyName::kTheta;
  if (s == "thetapendant" || s == "theta_pendant") return FamilyName::kThetaPendant;
  if (s == "b1_g" || s == "b1g") return FamilyName::kB1g;
  if (s == "frakb1_k" || s == "frakb1k") return FamilyName::kFrakB1k;
  if (s == "frakb2_k" || s == "frakb2k") return FamilyName::kFrakB2k;
  if (s == "fig1") return FamilyName::kFig1;
  return std::nullopt;
}

/// Builds a family member from its parameter tuple:
///   Cycle(n) Path(n) U_g(n,g) U_tk(n,t,k) Theta(p,q,r) ThetaPendant(p,q,r,t)
///   B1_g(n,g) FrakB1_k(n,k) FrakB2_k(n,k) Fig1(i) with i in 1..5.
inline Graph build_family(const FamilySpec& spec) {
  const auto& p = spec.params;
  auto arity = [&](std::size_t want) {
    detail::require(p.size() == want, "family expects " + std::to_string(want) + " parameters, got " +
                                          std::to_string(p.size()));
  };
  switch (spec.name) {
    case FamilyName::kCycle: arity(1); return make_cycle(p[0]);
    case FamilyName::kPath: arity(1); return make_path(p[0]);
    case FamilyName::kUg: arity(2); return make_pendant_cycle(p[0], p[1]);
    case FamilyName::kUtk: arity(3); return make_cycle_with_paths(p[0], p[1], p[2]);
    case FamilyName::kTheta: arity(3); return make_theta(p[0], p[1], p[2]);
    case FamilyName::kThetaPendant: arity(4); return make_theta_with_pendants(p[0], p[1], p[2], p[3]);
    case FamilyName::kB1g: arity(2); return make_twin_cycles(p[0], p[1]);
    case FamilyName::kFrakB1k: arity(2); return make_butterfly_with_paths(p[0], p[1]);
    case FamilyName::kFrakB2k: arity(2); return make_diamond_with_paths(p[0], p[1]);
    case FamilyName::kFig1: {
      arity(1);
      detail::require(p[0] >= 1 && p[0] <= 5, "Fig1 index must be 1..5");
      return make_figure_graph(static_cast<FigureGraph>(p[0] - 1));
    }
  }
  throw std::invalid_argument("unknown family");
}

/// Extremal graph of the fixed-girth bicyclic class: C(floor(g/2), ceil(g/2),
/// ceil(g/2)) with n - ceil(3g/2) + 1 pendant vertices at a branch vertex.
inline Graph make_girth_theta_extremal(int n, int g) {
  const int lo = g / 2;
  const int hi = (g + 1) / 2;
  const int pendants = n - (3 * g + 1) / 2 + 1;
  detail::require(g >= 3 && pendants >= 0, "needs g >= 3 and ceil(3g/2) - 1 <= n");
  return make_theta_with_pendants(lo, hi, hi, pendants);
}

}  // namespace alpha_extremal

#endif  // ALPHA_EXTREMAL_FAMILIES_HPP

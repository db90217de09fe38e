#ifndef ALPHA_EXTREMAL_TRANSFORMS_HPP
#define ALPHA_EXTREMAL_TRANSFORMS_HPP

#include <algorithm>
#include <optional>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

#include "alpha_extremal/families.hpp"
#include "alpha_extremal/graph.hpp"

namespace alpha_extremal {

// Graph rewrites whose effect on rho_alpha is governed by the extremal lemmas.
// They only perform the rewrite; checking the spectral contract is the
// caller's job (see verify.hpp). Inputs are never modified.

namespace detail {

inline Graph with_edges(int n, std::vector<Edge> edges) {
  for (auto& e : edges) {
    if (e.u > e.v) std::swap(e.u, e.v);
  }
  return Graph(n, edges);
}

inline std::vector<Edge> without(std::vector<Edge> edges, Edge drop) {
  if (drop.u > drop.v) std::swap(drop.u, drop.v);
  auto it = std::find(edges.begin(), edges.end(), drop);
  if (it != edges.end()) edges.erase(it);
  return edges;
}

}  // namespace detail

/// Removes every edge vw (w in moved) and adds uw instead.
///
/// Requires moved to be non-empty and disjoint from N(u) + {u}, with every
/// w in N(v). Rejects rewrites that would leave the graph disconnected.
inline Graph rotate_edges(const Graph& g, Vertex u, Vertex v, const std::vector<Vertex>& moved) {
  detail::require(g.contains(u) && g.contains(v) && u != v, "rotate_edges: bad vertices");
  detail::require(!moved.empty(), "rotate_edges: moved set is empty");
  std::set<Vertex> distinct(moved.begin(), moved.end());
  detail::require(distinct.size() == moved.size(), "rotate_edges: repeated vertex in moved set");
  auto edges = g.edges();
  for (Vertex w : moved) {
    detail::require(g.contains(w) && g.has_edge(v, w), "rotate_edges: moved vertex not adjacent to v");
    detail::require(w != u && !g.has_edge(u, w), "rotate_edges: moved vertex already adjacent to u");
    edges = detail::without(std::move(edges), {v, w});
    edges.push_back({u, w});
  }
  Graph out = detail::with_edges(g.order(), std::move(edges));
  detail::require(is_connected(out) || !is_connected(g), "rotate_edges: rewrite disconnects the graph");
  return out;
}

/// The internal path containing edge uv, or nullopt.
///
/// Walks from the edge in both directions through degree-2 vertices; the path
/// is internal when both ends have degree >= 3. A cycle whose only branch
/// vertex is w counts as a closed internal path from w back to w.
/// The returned sequence starts and ends at the two end vertices.
inline std::optional<std::vector<Vertex>> internal_path_through(const Graph& g, Vertex u, Vertex v) {
  if (!g.contains(u) || !g.contains(v) || !g.has_edge(u, v)) return std::nullopt;
  auto extend = [&](Vertex from, Vertex to, std::vector<Vertex>& trail) -> bool {
    Vertex prev = from;
    Vertex cur = to;
    for (int step = 0; step <= g.order(); ++step) {
      trail.push_back(cur);
      if (g.degree(cur) != 2) return g.degree(cur) >= 3;
      Vertex nxt = g.neighbors(cur)[0] == prev ? g.neighbors(cur)[1] : g.neighbors(cur)[0];
      prev = cur;
      cur = nxt;
      if (cur == to && prev == from) return false;
    }
    return false;
  };
  std::vector<Vertex> forward;
  std::vector<Vertex> backward;
  if (!extend(u, v, forward) || !extend(v, u, backward)) return std::nullopt;
  std::vector<Vertex> path(backward.rbegin(), backward.rend());
  path.insert(path.end(), forward.begin(), forward.end());
  return path;
}

/// Replaces edge uv, which must lie on an internal path, by u-w-v with a new vertex w = n.
inline Graph subdivide_edge(const Graph& g, Vertex u, Vertex v) {
  detail::require(g.contains(u) && g.contains(v) && g.has_edge(u, v), "subdivide_edge: uv is not an edge");
  detail::require(internal_path_through(g, u, v).has_value(), "subdivide_edge: uv is not on an internal path");
  auto edges = detail::without(g.edges(), {u, v});
  const Vertex w = g.order();
  edges.push_back({u, w});
  edges.push_back({v, w});
  return detail::with_edges(g.order() + 1, std::move(edges));
}

struct GraphPair {
  Graph first;
  Graph second;
};

/// Pendant paths of k and l new vertices at adjacent u and v, before and after
/// moving one vertex from the longer path to the shorter one:
/// first = base + P_k at u + P_l at v, second = base + P_{k-1} at u + P_{l+1} at v.
inline GraphPair shift_pendant_path(const Graph& base, Vertex u, Vertex v, int k, int l) {
  detail::require(base.contains(u) && base.contains(v) && base.has_edge(u, v), "shift_pendant_path: uv is not an edge");
  detail::require(base.degree(u) >= 2 && base.degree(v) >= 2, "shift_pendant_path: u and v need degree >= 2");
  detail::require(l >= 0 && k - l >= 2, "shift_pendant_path: needs l >= 0 and k - l >= 2");
  auto hang = [&](int at_u, int at_v) {
    Graph g = base;
    if (at_u > 0) g = attach_pendant_path(g, u, at_u);
    if (at_v > 0) g = attach_pendant_path(g, v, at_v);
    return g;
  };
  return {hang(k, l), hang(k - 1, l + 1)};
}

namespace detail {

inline bool is_bridge(const Graph& g, Vertex a, Vertex b) {
  auto edges = without(g.edges(), {a, b});
  return !is_connected(Graph(g.order(), edges));
}

/// Vertices of the pendant path that starts with edge root-first, root excluded,
/// ending at a leaf; empty if that branch is not a bare path.
inline std::vector<Vertex> pendant_path_from(const Graph& g, Vertex root, Vertex first) {
  std::vector<Vertex> path;
  Vertex prev = root;
  Vertex cur = first;
  while (true) {
    path.push_back(cur);
    if (g.degree(cur) == 1) return path;
    if (g.degree(cur) != 2 || static_cast<int>(path.size()) > g.order()) return {};
    Vertex nxt = g.neighbors(cur)[0] == prev ? g.neighbors(cur)[1] : g.neighbors(cur)[0];
    if (nxt == root) return {};
    prev = cur;
    cur = nxt;
  }
}

inline bool on_cycle(const Graph& g, Vertex u) {
  for (Vertex w : g.neighbors(u)) {
    if (!is_bridge(g, u, w)) return true;
  }
  return false;
}

}  // namespace detail

/// Replaces the pendant path of length l >= 2 that starts at u's neighbour
/// `first` by l pendant edges at u. u must lie on a cycle.
inline Graph path_to_star(const Graph& g, Vertex u, Vertex first) {
  detail::require(g.contains(u) && g.contains(first) && g.has_edge(u, first), "path_to_star: bad path start");
  detail::require(detail::on_cycle(g, u), "path_to_star: u is not on a cycle");
  auto path = detail::pendant_path_from(g, u, first);
  detail::require(path.size() >= 2, "path_to_star: no pendant path of length >= 2 at u");
  auto edges = g.edges();
  for (std::size_t i = 1; i < path.size(); ++i) {
    edges = detail::without(std::move(edges), {path[i - 1], path[i]});
    edges.push_back({u, path[i]});
  }
  return detail::with_edges(g.order(), std::move(edges));
}

/// Same as above, choosing the longest pendant path at u (smallest start vertex on ties).
inline Graph path_to_star(const Graph& g, Vertex u) {
  detail::require(g.contains(u), "path_to_star: u out of range");
  Vertex best = -1;
  std::size_t best_len = 0;
  for (Vertex w : g.neighbors(u)) {
    auto path = detail::pendant_path_from(g, u, w);
    if (path.size() > best_len) {
      best = w;
      best_len = path.size();
    }
  }
  detail::require(best >= 0 && best_len >= 2, "path_to_star: no pendant path of length >= 2 at u");
  return path_to_star(g, u, best);
}

/// H1 = G1(v1,u)G2 and H2 = G1(v2,u)G2, for N(v1) - v2 a proper subset of N(v2) - v1.
inline GraphPair coalescence_shift(const Graph& g1, Vertex v1, Vertex v2, const Graph& g2, Vertex u) {
  detail::require(g1.contains(v1) && g1.contains(v2) && v1 != v2, "coalescence_shift: bad v1/v2");
  detail::require(g2.contains(u), "coalescence_shift: u out of range");
  detail::require(g2.order() >= 2, "coalescence_shift: G2 must have at least two vertices");
  std::vector<Vertex> n1;
  std::vector<Vertex> n2;
  for (Vertex w : g1.neighbors(v1)) {
    if (w != v2) n1.push_back(w);
  }
  for (Vertex w : g1.neighbors(v2)) {
    if (w != v1) n2.push_back(w);
  }
  const bool subset = std::includes(n2.begin(), n2.end(), n1.begin(), n1.end());
  detail::require(subset && n1.size() < n2.size(), "coalescence_shift: neighbourhood inclusion fails");
  return {coalesce(g1, v1, g2, u), coalesce(g1, v2, g2, u)};
}

}  // namespace alpha_extremal

#endif  // ALPHA_EXTREMAL_TRANSFORMS_HPP

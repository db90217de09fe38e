#ifndef ALPHA_EXTREMAL_ENUMERATION_HPP
#define ALPHA_EXTREMAL_ENUMERATION_HPP

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "alpha_extremal/canonical.hpp"
#include "alpha_extremal/families.hpp"
#include "alpha_extremal/graph.hpp"

namespace alpha_extremal {

/// Selects connected graphs of a given order and cycle rank.
///
/// rank 1 and 2 are the unicyclic and bicyclic classes; rank 0 (trees) is
/// also accepted and is used by the exhaustive lemma scopes.
struct ClassFilter {
  int rank = 1;
  int n = 3;
  std::optional<int> girth;
  std::optional<int> pendants;
  std::optional<BicyclicSubclass> subclass;

  bool accepts(const ClassDescriptor& d) const {
    if (d.rank != rank) return false;
    if (girth && d.girth != girth) return false;
    if (pendants && d.pendants != *pendants) return false;
    if (subclass && d.subclass != *subclass) return false;
    return true;
  }
};

/// Usable n per rank before runtime grows sharply; callers may exceed it.
inline int practical_order_limit(int rank) { return rank == 2 ? 9 : 10; }

namespace detail {

inline void validate_filter(const ClassFilter& f) {
  require(f.rank >= 0 && f.rank <= 2, "enumerate: rank must be 0, 1 or 2");
  require(f.n >= 1 && f.n <= 12, "enumerate: n must be in [1, 12]");
  require(!(f.girth && f.pendants), "enumerate: girth and pendant constraints are exclusive");
  require(!f.subclass || f.rank == 2, "enumerate: subclass needs rank 2");
  if (f.girth) require(*f.girth >= 3 && *f.girth <= f.n, "enumerate: girth must be in [3, n]");
  if (f.pendants) require(*f.pendants >= 0 && *f.pendants <= f.n - 3, "enumerate: pendants must be in [0, n-3]");
}

/// Two cycles of lengths a and b joined by a path of length `bridge`
/// (bridge = 0 means they share a vertex).
inline Graph make_cycle_pair(int a, int b, int bridge) {
  std::vector<Edge> edges;
  int next = 1;
  append_cycle_through(edges, next, 0, a);
  Vertex joint = 0;
  if (bridge > 0) {
    append_path(edges, next, 0, bridge);
    joint = next - 1;
  }
  append_cycle_through(edges, next, joint, b);
  return Graph(next, edges);
}

/// Every leafless connected graph of the rank with at most n vertices
/// (the single vertex for trees).
inline std::vector<Graph> bases(int rank, int n) {
  std::vector<Graph> out;
  if (rank == 0) {
    out.emplace_back(1);
  } else if (rank == 1) {
    for (int t = 3; t <= n; ++t) out.push_back(make_cycle(t));
  } else {
    for (int p = 1; p <= n; ++p) {
      for (int q = std::max(p, 2); p + q <= n + 1; ++q) {
        for (int r = q; p + q + r - 1 <= n; ++r) out.push_back(make_theta(p, q, r));
      }
    }
    for (int a = 3; 2 * a - 1 <= n; ++a) {
      for (int b = a; a + b - 1 <= n; ++b) {
        for (int bridge = 0; a + b + bridge - 1 <= n; ++bridge) out.push_back(make_cycle_pair(a, b, bridge));
      }
    }
  }
  return out;
}

inline Graph add_leaf(const Graph& g, Vertex at) {
  auto edges = g.edges();
  edges.push_back({at, g.order()});
  return Graph(g.order() + 1, edges);
}

/// One representative per isomorphism class of the graphs obtained from `base`
/// by growing trees to order n, as key -> canonical graph.
inline std::map<std::string, Graph> grow(const Graph& base, int n) {
  std::map<std::string, Graph> layer;
  {
    const auto form = canonical_form(base);
    layer.emplace(form.key(), relabel(base, form.labeling));
  }
  for (int order = base.order(); order < n; ++order) {
    std::map<std::string, Graph> next;
    for (const auto& [key, g] : layer) {
      for (Vertex v = 0; v < g.order(); ++v) {
        Graph child = add_leaf(g, v);
        const auto form = canonical_form(child);
        auto k = form.key();
        if (!next.contains(k)) next.emplace(std::move(k), relabel(child, form.labeling));
      }
    }
    layer = std::move(next);
  }
  return layer;
}

}  // namespace detail

/// Every connected graph matching the filter, one per isomorphism class,
/// in canonical labeling and sorted by canonical key.
///
/// Leafless bases (cycles; thetas, figure-eights and dumbbells) are grown by
/// repeated leaf attachment with canonical deduplication at every order.
/// Every tree attachment arises this way since deleting a leaf of a graph
/// with a given base keeps the base.
inline std::vector<Graph> enumerate(const ClassFilter& filter) {
  detail::validate_filter(filter);
  std::map<std::string, Graph> found;
  for (const Graph& base : detail::bases(filter.rank, filter.n)) {
    if (filter.girth && girth(base) != filter.girth) continue;
    if (filter.subclass && classify(base).subclass != *filter.subclass) continue;
    for (auto& [key, g] : detail::grow(base, filter.n)) {
      if (filter.accepts(classify(g))) found.emplace(key, std::move(g));
    }
  }
  std::vector<Graph> out;
  out.reserve(found.size());
  for (auto& [key, g] : found) out.push_back(std::move(g));
  return out;
}

/// Every connected graph of order n, any size, one per isomorphism class,
/// canonically labelled and sorted by key. Grown from K1 by adding a vertex
/// joined to a non-empty subset: every connected graph has a vertex whose
/// removal leaves it connected. Practical up to n = 8 (11117 graphs).
inline std::vector<Graph> enumerate_connected(int n) {
  detail::require(n >= 1 && n <= 9, "enumerate_connected: n must be in [1, 9]");
  std::map<std::string, Graph> layer;
  layer.emplace(canonical_key(Graph(1)), Graph(1));
  for (int order = 1; order < n; ++order) {
    std::map<std::string, Graph> next;
    for (const auto& [key, g] : layer) {
      const auto base_edges = g.edges();
      for (unsigned mask = 1; mask < (1U << order); ++mask) {
        auto edges = base_edges;
        for (int v = 0; v < order; ++v) {
          if (mask & (1U << v)) edges.push_back({v, order});
        }
        Graph child(order + 1, edges);
        const auto form = canonical_form(child);
        auto k = form.key();
        if (!next.contains(k)) next.emplace(std::move(k), relabel(child, form.labeling));
      }
    }
    layer = std::move(next);
  }
  std::vector<Graph> out;
  out.reserve(layer.size());
  for (auto& [key, g] : layer) out.push_back(std::move(g));
  return out;
}

/// Keys of enumerate(filter), in the same order.
inline std::vector<std::string> enumerate_keys(const ClassFilter& filter) {
  std::vector<std::string> keys;
  for (const auto& g : enumerate(filter)) keys.push_back(canonical_key(g));
  return keys;
}

inline std::size_t count(const ClassFilter& filter) {
  detail::validate_filter(filter);
  std::set<std::string> keys;
  for (const Graph& base : detail::bases(filter.rank, filter.n)) {
    if (filter.girth && girth(base) != filter.girth) continue;
    if (filter.subclass && classify(base).subclass != *filter.subclass) continue;
    if (base.order() == filter.n) {
      if (filter.accepts(classify(base))) keys.insert(canonical_key(base));
      continue;
    }
    for (const auto& [key, g] : detail::grow(base, filter.n - 1)) {
      for (Vertex v = 0; v < g.order(); ++v) {
        Graph child = detail::add_leaf(g, v);
        if (filter.accepts(classify(child))) keys.insert(canonical_key(child));
      }
    }
  }
  return keys.size();
}

}  // namespace alpha_extremal

#endif  // ALPHA_EXTREMAL_ENUMERATION_HPP

#ifndef ALPHA_EXTREMAL_GRAPH_HPP
#define ALPHA_EXTREMAL_GRAPH_HPP

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <istream>
#include <numeric>
#include <optional>
#include <ostream>
#include <queue>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace alpha_extremal {

using Vertex = int;

struct Edge {
  Vertex u;
  Vertex v;

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Simple undirected graph on vertices 0..n-1.
///
/// Immutable after construction. Every constructor validates symmetry and
/// simplicity, so a Graph value always satisfies both. Disconnected graphs
/// are representable; operations that need connectivity check it themselves.
class Graph {
 public:
  Graph() = default;

  /// Edgeless graph on n vertices.
  explicit Graph(int n) : adj_(static_cast<std::size_t>(check_order(n))) {}

  Graph(int n, std::span<const Edge> edges) : Graph(n) {
    for (const auto& e : edges) {
      if (e.u < 0 || e.v < 0 || e.u >= n || e.v >= n) {
        throw std::invalid_argument("edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                                    ") out of range for n=" + std::to_string(n));
      }
      if (e.u == e.v) {
        throw std::invalid_argument("self-loop at vertex " + std::to_string(e.u));
      }
      adj_[e.u].push_back(e.v);
      adj_[e.v].push_back(e.u);
    }
    for (auto& row : adj_) {
      std::sort(row.begin(), row.end());
      if (std::adjacent_find(row.begin(), row.end()) != row.end()) {
        throw std::invalid_argument("repeated edge");
      }
    }
    size_ = static_cast<int>(edges.size());
  }

  Graph(int n, std::initializer_list<Edge> edges)
      : Graph(n, std::span<const Edge>(edges.begin(), edges.size())) {}

  int order() const { return static_cast<int>(adj_.size()); }
  int size() const { return size_; }

  std::span<const Vertex> neighbors(Vertex v) const { return adj_.at(v); }
  int degree(Vertex v) const { return static_cast<int>(adj_.at(v).size()); }

  bool has_edge(Vertex u, Vertex v) const {
    const auto& row = adj_.at(u);
    return std::binary_search(row.begin(), row.end(), v);
  }

  bool contains(Vertex v) const { return v >= 0 && v < order(); }

  /// All edges with u < v, in lexicographic order.
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    out.reserve(static_cast<std::size_t>(size_));
    for (Vertex u = 0; u < order(); ++u) {
      for (Vertex v : adj_[u]) {
        if (u < v) out.push_back({u, v});
      }
    }
    return out;
  }

  std::vector<int> degrees() const {
    std::vector<int> d(adj_.size());
    for (std::size_t v = 0; v < adj_.size(); ++v) d[v] = static_cast<int>(adj_[v].size());
    return d;
  }

  int max_degree() const {
    int best = 0;
    for (const auto& row : adj_) best = std::max(best, static_cast<int>(row.size()));
    return best;
  }

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  static int check_order(int n) {
    if (n < 0) throw std::invalid_argument("negative vertex count");
    return n;
  }

  std::vector<std::vector<Vertex>> adj_;
  int size_ = 0;
};

/// Rebuilds `g` with vertex v renamed to perm[v].
inline Graph relabel(const Graph& g, std::span<const Vertex> perm) {
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(g.size()));
  for (const auto& e : g.edges()) {
    Vertex a = perm[e.u];
    Vertex b = perm[e.v];
    edges.push_back({std::min(a, b), std::max(a, b)});
  }
  return Graph(g.order(), edges);
}

/// Breadth-first distances from `source`; -1 marks unreachable vertices.
inline std::vector<int> bfs_distances(const Graph& g, Vertex source) {
  std::vector<int> dist(static_cast<std::size_t>(g.order()), -1);
  std::queue<Vertex> frontier;
  dist[source] = 0;
  frontier.push(source);
  while (!frontier.empty()) {
    Vertex u = frontier.front();
    frontier.pop();
    for (Vertex w : g.neighbors(u)) {
      if (dist[w] < 0) {
        dist[w] = dist[u] + 1;
        frontier.push(w);
      }
    }
  }
  return dist;
}

inline bool is_connected(const Graph& g) {
  if (g.order() == 0) return false;
  auto dist = bfs_distances(g, 0);
  return std::none_of(dist.begin(), dist.end(), [](int d) { return d < 0; });
}

/// Length of a shortest cycle, or nullopt for a forest.
///
/// One BFS per root; a non-tree edge (x, y) closes a walk of length
/// dist[x] + dist[y] + 1 through the root, and the minimum over all roots
/// is exactly the girth.
inline std::optional<int> girth(const Graph& g) {
  int best = 0;
  const int n = g.order();
  std::vector<int> dist(static_cast<std::size_t>(n));
  std::vector<Vertex> parent(static_cast<std::size_t>(n));
  for (Vertex root = 0; root < n; ++root) {
    std::fill(dist.begin(), dist.end(), -1);
    std::fill(parent.begin(), parent.end(), -1);
    std::queue<Vertex> frontier;
    dist[root] = 0;
    frontier.push(root);
    while (!frontier.empty()) {
      Vertex x = frontier.front();
      frontier.pop();
      for (Vertex y : g.neighbors(x)) {
        if (dist[y] < 0) {
          dist[y] = dist[x] + 1;
          parent[y] = x;
          frontier.push(y);
        } else if (parent[x] != y) {
          int len = dist[x] + dist[y] + 1;
          if (best == 0 || len < best) best = len;
        }
      }
    }
  }
  if (best == 0) return std::nullopt;
  return best;
}

inline int pendant_count(const Graph& g) {
  int k = 0;
  for (Vertex v = 0; v < g.order(); ++v) k += g.degree(v) == 1 ? 1 : 0;
  return k;
}

inline bool is_regular(const Graph& g) {
  if (g.order() == 0) return true;
  const int d = g.degree(0);
  for (Vertex v = 1; v < g.order(); ++v) {
    if (g.degree(v) != d) return false;
  }
  return true;
}

/// Bipartite with every vertex of one side having degree a and every vertex
/// of the other side degree b, a != b.
inline bool is_semiregular_bipartite(const Graph& g) {
  if (!is_connected(g) || is_regular(g)) return false;
  std::vector<int> side(static_cast<std::size_t>(g.order()), -1);
  side[0] = 0;
  std::queue<Vertex> frontier;
  frontier.push(0);
  while (!frontier.empty()) {
    Vertex u = frontier.front();
    frontier.pop();
    for (Vertex w : g.neighbors(u)) {
      if (side[w] < 0) {
        side[w] = 1 - side[u];
        frontier.push(w);
      } else if (side[w] == side[u]) {
        return false;
      }
    }
  }
  int deg[2] = {-1, -1};
  for (Vertex v = 0; v < g.order(); ++v) {
    int& d = deg[side[v]];
    if (d < 0) d = g.degree(v);
    if (d != g.degree(v)) return false;
  }
  return true;
}

/// Cycle-space rank m - n + c; for connected graphs m - n + 1.
inline int cycle_rank(const Graph& g) { return g.size() - g.order() + 1; }

enum class BicyclicSubclass { kNotBicyclic, kB1, kB2 };

inline const char* to_string(BicyclicSubclass s) {
  switch (s) {
    case BicyclicSubclass::kB1: return "B1";
    case BicyclicSubclass::kB2: return "B2";
    case BicyclicSubclass::kNotBicyclic: break;
  }
  return "not-bicyclic";
}

struct ClassDescriptor {
  int rank = 0;
  std::optional<int> girth;
  int pendants = 0;
  BicyclicSubclass subclass = BicyclicSubclass::kNotBicyclic;
  /// Vertices of the minimal base, in increasing order; only filled for rank 2.
  std::vector<Vertex> base_vertices;
};

/// Vertices that survive repeated deletion of degree-1 vertices (the 2-core).
inline std::vector<Vertex> core_vertices(const Graph& g) {
  std::vector<int> deg = g.degrees();
  std::vector<bool> removed(static_cast<std::size_t>(g.order()), false);
  std::vector<Vertex> stack;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (deg[v] <= 1) stack.push_back(v);
  }
  while (!stack.empty()) {
    Vertex v = stack.back();
    stack.pop_back();
    if (removed[v]) continue;
    removed[v] = true;
    for (Vertex w : g.neighbors(v)) {
      if (!removed[w] && --deg[w] == 1) stack.push_back(w);
    }
  }
  std::vector<Vertex> out;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (!removed[v]) out.push_back(v);
  }
  return out;
}

namespace detail {

/// Follows a chain of degree-2 vertices (degrees taken from `deg`) starting
/// with the step from -> next; returns the first vertex whose degree is not 2,
/// or -1 if the walk closes on itself without meeting one.
inline Vertex walk_chain(const Graph& g, std::span<const int> deg, std::span<const char> keep,
                         Vertex from, Vertex next) {
  Vertex prev = from;
  Vertex cur = next;
  const int limit = g.order() + 1;
  for (int step = 0; step < limit; ++step) {
    if (deg[cur] != 2) return cur;
    Vertex nxt = -1;
    for (Vertex w : g.neighbors(cur)) {
      if (keep[w] && w != prev) {
        nxt = w;
        break;
      }
    }
    if (nxt < 0) return cur;
    prev = cur;
    cur = nxt;
  }
  return -1;
}

}  // namespace detail

/// Structural class of a connected graph.
///
/// The rank-2 subclass is read off the minimal base: B2 exactly when the base
/// is a theta graph (two degree-3 vertices joined by three internally disjoint
/// paths). A figure-eight base has a degree-4 vertex, and a dumbbell base has
/// two degree-3 vertices each of which closes a cycle on itself.
inline ClassDescriptor classify(const Graph& g) {
  if (!is_connected(g)) throw std::invalid_argument("classify: graph is not connected");
  ClassDescriptor out;
  out.rank = cycle_rank(g);
  out.girth = girth(g);
  out.pendants = pendant_count(g);
  if (out.rank != 2) return out;

  out.base_vertices = core_vertices(g);
  std::vector<char> keep(static_cast<std::size_t>(g.order()), 0);
  for (Vertex v : out.base_vertices) keep[v] = 1;
  std::vector<int> deg(static_cast<std::size_t>(g.order()), 0);
  std::vector<Vertex> branch;
  for (Vertex v : out.base_vertices) {
    for (Vertex w : g.neighbors(v)) deg[v] += keep[w];
    if (deg[v] >= 3) branch.push_back(v);
  }

  out.subclass = BicyclicSubclass::kB1;
  if (branch.size() == 2 && deg[branch[0]] == 3 && deg[branch[1]] == 3) {
    const Vertex hub = branch[0];
    bool theta = true;
    for (Vertex w : g.neighbors(hub)) {
      if (!keep[w]) continue;
      if (detail::walk_chain(g, deg, keep, hub, w) != branch[1]) theta = false;
    }
    if (theta) out.subclass = BicyclicSubclass::kB2;
  }
  return out;
}

// Edge-list text format:
//   first line "n m", then m lines "u v" with 0 <= u < v < n.
//   '#' starts a comment that runs to end of line; blank lines are ignored.

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

inline Graph read_edge_list(std::istream& in) {
  std::string raw;
  int line_no = 0;
  int n = -1;
  int m = -1;
  std::vector<Edge> edges;
  auto next_tokens = [&](std::vector<long long>& tok) -> bool {
    while (std::getline(in, raw)) {
      ++line_no;
      if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
      std::istringstream ls(raw);
      tok.clear();
      std::string word;
      while (ls >> word) {
        std::size_t used = 0;
        long long value = 0;
        try {
          value = std::stoll(word, &used);
        } catch (const std::exception&) {
          throw ParseError(line_no, "expected an integer, got '" + word + "'");
        }
        if (used != word.size()) throw ParseError(line_no, "expected an integer, got '" + word + "'");
        tok.push_back(value);
      }
      if (!tok.empty()) return true;
    }
    return false;
  };

  std::vector<long long> tok;
  if (!next_tokens(tok)) throw ParseError(line_no, "missing header line \"n m\"");
  if (tok.size() != 2) throw ParseError(line_no, "header must be \"n m\"");
  if (tok[0] <= 0 || tok[1] < 0) throw ParseError(line_no, "header values out of range");
  n = static_cast<int>(tok[0]);
  m = static_cast<int>(tok[1]);

  std::vector<std::vector<char>> seen(static_cast<std::size_t>(n), std::vector<char>(static_cast<std::size_t>(n), 0));
  while (next_tokens(tok)) {
    if (tok.size() != 2) throw ParseError(line_no, "edge line must be \"u v\"");
    if (static_cast<int>(edges.size()) == m) throw ParseError(line_no, "more than m edge lines");
    long long u = tok[0];
    long long v = tok[1];
    if (u < 0 || v < 0 || u >= n || v >= n) throw ParseError(line_no, "vertex index out of range");
    if (u == v) throw ParseError(line_no, "self-loop");
    if (u > v) std::swap(u, v);
    if (seen[u][v]) throw ParseError(line_no, "duplicate edge");
    seen[u][v] = 1;
    edges.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v)});
  }
  if (static_cast<int>(edges.size()) != m) {
    throw ParseError(line_no, "expected " + std::to_string(m) + " edges, found " + std::to_string(edges.size()));
  }
  return Graph(n, edges);
}

inline Graph read_edge_list(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  try {
    return read_edge_list(in);
  } catch (const ParseError& e) {
    throw std::runtime_error(path + ": " + e.what());
  }
}

inline void write_edge_list(std::ostream& out, const Graph& g) {
  out << g.order() << ' ' << g.size() << '\n';
  for (const auto& e : g.edges()) out << e.u << ' ' << e.v << '\n';
}

inline std::string to_edge_list(const Graph& g) {
  std::ostringstream out;
  write_edge_list(out, g);
  return out.str();
}

inline void write_edge_list(const std::string& path, const Graph& g) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  write_edge_list(out, g);
  if (!out) throw std::runtime_error("write failed: " + path);
}

}  // namespace alpha_extremal

#endif  // ALPHA_EXTREMAL_GRAPH_HPP

#ifndef ALPHA_EXTREMAL_CANONICAL_HPP
#define ALPHA_EXTREMAL_CANONICAL_HPP

#include <algorithm>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "alpha_extremal/graph.hpp"

namespace alpha_extremal {

// Canonical labeling by colour refinement plus individualization search.
//
// Refinement splits cells by (cell, multiset of neighbour cells) and orders the
// new cells by that signature, so the partition sequence depends only on the
// isomorphism type. The search individualizes every vertex of the first
// smallest non-singleton cell and keeps the lexicographically largest
// adjacency certificate over all discrete leaves. Interchangeable twins
// (N(u) - v == N(v) - u) lead to isomorphic subtrees, so only one of them is
// expanded. Exact and fast for the orders used here (n <= 12); the search is
// exponential in the automorphism group size after twin pruning.

struct CanonicalForm {
  /// labeling[v] is the canonical position of vertex v.
  std::vector<Vertex> labeling;
  /// Upper-triangle adjacency bits in canonical order, row-major.
  std::vector<bool> certificate;
  int order = 0;

  /// Printable key, e.g. "n5-3f8": order plus certificate in hex.
  std::string key() const {
    static constexpr char kHex[] = "0123456789abcdef";
    std::string out = "n" + std::to_string(order) + "-";
    const std::size_t bits = certificate.size();
    for (std::size_t i = 0; i < bits; i += 4) {
      int nibble = 0;
      for (std::size_t j = 0; j < 4; ++j) {
        nibble <<= 1;
        if (i + j < bits && certificate[i + j]) nibble |= 1;
      }
      out.push_back(kHex[nibble]);
    }
    return out;
  }
};

namespace detail {

class CanonicalSearch {
 public:
  explicit CanonicalSearch(const Graph& g) : g_(g), n_(g.order()) {
    if (n_ > 64) throw std::invalid_argument("canonical form supports at most 64 vertices");
    masks_.assign(static_cast<std::size_t>(n_), 0);
    for (Vertex v = 0; v < n_; ++v) {
      for (Vertex w : g.neighbors(v)) masks_[v] |= std::uint64_t{1} << w;
    }
  }

  CanonicalForm run() {
    std::vector<int> cells(static_cast<std::size_t>(n_), 0);
    refine(cells);
    search(cells);
    CanonicalForm out;
    out.order = n_;
    out.labeling = best_labeling_;
    out.certificate = best_;
    return out;
  }

 private:
  static int cell_count(const std::vector<int>& cells) {
    return cells.empty() ? 0 : *std::max_element(cells.begin(), cells.end()) + 1;
  }

  void refine(std::vector<int>& cells) const {
    int count = cell_count(cells);
    std::vector<std::vector<int>> sig(static_cast<std::size_t>(n_));
    while (true) {
      for (Vertex v = 0; v < n_; ++v) {
        auto& s = sig[v];
        s.assign(static_cast<std::size_t>(count) + 1, 0);
        s[0] = cells[v];
        for (Vertex w : g_.neighbors(v)) ++s[1 + static_cast<std::size_t>(cells[w])];
      }
      std::vector<const std::vector<int>*> distinct;
      distinct.reserve(static_cast<std::size_t>(n_));
      for (const auto& s : sig) distinct.push_back(&s);
      std::sort(distinct.begin(), distinct.end(), [](auto* a, auto* b) { return *a < *b; });
      distinct.erase(std::unique(distinct.begin(), distinct.end(), [](auto* a, auto* b) { return *a == *b; }),
                     distinct.end());
      const int next = static_cast<int>(distinct.size());
      for (Vertex v = 0; v < n_; ++v) {
        auto it = std::lower_bound(distinct.begin(), distinct.end(), &sig[v],
                                   [](auto* a, auto* b) { return *a < *b; });
        cells[v] = static_cast<int>(it - distinct.begin());
      }
      if (next == count) return;
      count = next;
    }
  }

  std::vector<bool> certificate_of(const std::vector<int>& cells) const {
    std::vector<Vertex> at(static_cast<std::size_t>(n_));
    for (Vertex v = 0; v < n_; ++v) at[cells[v]] = v;
    std::vector<bool> bits;
    bits.reserve(static_cast<std::size_t>(n_) * (n_ - 1) / 2);
    for (int i = 0; i < n_; ++i) {
      for (int j = i + 1; j < n_; ++j) bits.push_back(((masks_[at[i]] >> at[j]) & 1U) != 0);
    }
    return bits;
  }

  bool twins(Vertex a, Vertex b) const {
    const std::uint64_t ba = std::uint64_t{1} << a;
    const std::uint64_t bb = std::uint64_t{1} << b;
    return (masks_[a] & ~bb) == (masks_[b] & ~ba);
  }

  void search(const std::vector<int>& cells) {
    const int count = cell_count(cells);
    if (count == n_) {
      auto cert = certificate_of(cells);
      if (best_labeling_.empty() || cert > best_) {
        best_ = std::move(cert);
        best_labeling_ = cells;
      }
      return;
    }
    std::vector<int> size(static_cast<std::size_t>(count), 0);
    for (int c : cells) ++size[c];
    int target = -1;
    for (int c = 0; c < count; ++c) {
      if (size[c] > 1 && (target < 0 || size[c] < size[target])) target = c;
    }
    std::vector<Vertex> tried;
    for (Vertex v = 0; v < n_; ++v) {
      if (cells[v] != target) continue;
      if (std::any_of(tried.begin(), tried.end(), [&](Vertex u) { return twins(u, v); })) continue;
      tried.push_back(v);
      std::vector<int> child(cells);
      for (Vertex w = 0; w < n_; ++w) {
        if (child[w] > target || (child[w] == target && w != v)) ++child[w];
      }
      refine(child);
      search(child);
    }
  }

  const Graph& g_;
  int n_;
  std::vector<std::uint64_t> masks_;
  std::vector<bool> best_;
  std::vector<int> best_labeling_;
};

}  // namespace detail

inline CanonicalForm canonical_form(const Graph& g) {
  if (g.order() == 0) return {};
  return detail::CanonicalSearch(g).run();
}

inline std::string canonical_key(const Graph& g) { return canonical_form(g).key(); }

/// The graph relabelled into canonical order; isomorphic inputs give equal outputs.
inline Graph canonical_graph(const Graph& g) {
  const auto form = canonical_form(g);
  return relabel(g, form.labeling);
}

inline bool is_isomorphic(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.size() != b.size()) return false;
  auto da = a.degrees();
  auto db = b.degrees();
  std::sort(da.begin(), da.end());
  std::sort(db.begin(), db.end());
  if (da != db) return false;
  return canonical_form(a).certificate == canonical_form(b).certificate;
}

}  // namespace alpha_extremal

#endif  // ALPHA_EXTREMAL_CANONICAL_HPP

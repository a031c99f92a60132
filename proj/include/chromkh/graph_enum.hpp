#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <set>
#include <vector>

#include "graph.hpp"

namespace chromkh {

/// Upper-triangle adjacency bits of a relabelled graph, row-major.
using CanonicalKey = std::vector<std::uint8_t>;

namespace detail {

using Partition = std::vector<std::vector<int>>;
using AdjMatrix = std::vector<std::vector<char>>;

inline AdjMatrix adjacency_matrix(const SimpleGraph& g) {
  AdjMatrix a(static_cast<std::size_t>(g.vertex_count()), std::vector<char>(static_cast<std::size_t>(g.vertex_count()), 0));
  for (const Edge& e : g.edges()) a[e.a][e.b] = a[e.b][e.a] = 1;
  return a;
}

/// Equitable refinement: split cells by neighbour counts into each cell until
/// stable. Split order depends only on invariant data.
inline void refine(const AdjMatrix& adj, Partition& p) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t ci = 0; ci < p.size() && !changed; ++ci) {
      const auto& splitter = p[ci];
      for (std::size_t cj = 0; cj < p.size(); ++cj) {
        if (p[cj].size() < 2) continue;
        std::vector<std::pair<int, int>> keyed;
        for (int v : p[cj]) {
          int cnt = 0;
          for (int w : splitter) cnt += adj[v][w];
          keyed.push_back({cnt, v});
        }
        std::sort(keyed.begin(), keyed.end());
        if (keyed.front().first == keyed.back().first) continue;
        std::vector<std::vector<int>> parts;
        for (std::size_t t = 0; t < keyed.size(); ++t) {
          if (t == 0 || keyed[t].first != keyed[t - 1].first) parts.emplace_back();
          parts.back().push_back(keyed[t].second);
        }
        p.erase(p.begin() + static_cast<long>(cj));
        p.insert(p.begin() + static_cast<long>(cj), parts.begin(), parts.end());
        changed = true;
        break;
      }
    }
  }
}

inline CanonicalKey key_for(const AdjMatrix& adj, const Partition& discrete) {
  std::vector<int> order;
  for (const auto& cell : discrete) order.push_back(cell[0]);
  const std::size_t n = order.size();
  CanonicalKey key;
  key.reserve(n * (n - 1) / 2);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b) key.push_back(static_cast<std::uint8_t>(adj[order[a]][order[b]]));
  return key;
}

struct CanonSearch {
  CanonSearch(const AdjMatrix& a, long b) : adj(a), budget(b) {}

  const AdjMatrix& adj;
  long budget;
  long leaves = 0;
  std::optional<CanonicalKey> best;
  std::vector<int> best_order;
  bool exhausted = false;

  void run(Partition p) {
    if (exhausted) return;
    refine(adj, p);
    std::size_t target = p.size();
    for (std::size_t c = 0; c < p.size(); ++c)
      if (p[c].size() > 1) {
        target = c;
        break;
      }
    if (target == p.size()) {
      if (++leaves > budget) {
        exhausted = true;
        return;
      }
      CanonicalKey k = key_for(adj, p);
      if (!best || k > *best) {
        best = std::move(k);
        best_order.clear();
        for (const auto& cell : p) best_order.push_back(cell[0]);
      }
      return;
    }
    for (int v : p[target]) {
      Partition q = p;
      auto& cell = q[target];
      cell.erase(std::find(cell.begin(), cell.end(), v));
      q.insert(q.begin() + static_cast<long>(target), std::vector<int>{v});
      run(std::move(q));
      if (exhausted) return;
    }
  }
};

inline Partition degree_partition(const SimpleGraph& g) {
  auto deg = g.degrees();
  std::vector<std::pair<int, int>> keyed;
  for (int v = 0; v < g.vertex_count(); ++v) keyed.push_back({deg[v], v});
  std::sort(keyed.begin(), keyed.end());
  Partition p;
  for (std::size_t t = 0; t < keyed.size(); ++t) {
    if (t == 0 || keyed[t].first != keyed[t - 1].first) p.emplace_back();
    p.back().push_back(keyed[t].second);
  }
  return p;
}

}  // namespace detail

/// Canonical key of the isomorphism class: the lexicographically largest
/// adjacency string over all leaves of the individualisation-refinement tree.
/// Returns nullopt if more than `leaf_budget` leaves would be needed.
inline std::optional<CanonicalKey> canonical_key(const SimpleGraph& g, long leaf_budget = 1L << 40) {
  auto adj = detail::adjacency_matrix(g);
  detail::CanonSearch search(adj, leaf_budget);
  if (g.vertex_count() == 0) return CanonicalKey{};
  search.run(detail::degree_partition(g));
  if (search.exhausted) return std::nullopt;
  // Prefix the vertex count so graphs of different order never collide.
  CanonicalKey key;
  key.push_back(static_cast<std::uint8_t>(g.vertex_count() & 0xff));
  key.push_back(static_cast<std::uint8_t>(g.vertex_count() >> 8));
  key.insert(key.end(), search.best->begin(), search.best->end());
  return key;
}

/// Relabelled copy realising the canonical key; edges in lexicographic order.
inline SimpleGraph canonical_form(const SimpleGraph& g) {
  auto adj = detail::adjacency_matrix(g);
  detail::CanonSearch search(adj, 1L << 40);
  if (g.vertex_count() == 0) return g;
  search.run(detail::degree_partition(g));
  std::vector<int> pos(static_cast<std::size_t>(g.vertex_count()));
  for (std::size_t t = 0; t < search.best_order.size(); ++t) pos[search.best_order[t]] = static_cast<int>(t);
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) edges.emplace_back(pos[e.a], pos[e.b]);
  std::sort(edges.begin(), edges.end());
  return SimpleGraph(g.vertex_count(), edges);
}

inline bool are_isomorphic(const SimpleGraph& a, const SimpleGraph& b) {
  if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
  auto da = a.degrees(), db = b.degrees();
  std::sort(da.begin(), da.end());
  std::sort(db.begin(), db.end());
  if (da != db) return false;
  return canonical_key(a) == canonical_key(b);
}

/// All connected graphs on n vertices up to isomorphism, in canonical form.
/// Built by adding a vertex to each connected graph on n-1 vertices (every
/// connected graph has a non-cut vertex) and deduplicating on the key.
inline std::vector<SimpleGraph> connected_graphs(int n) {
  if (n < 1) return {};
  std::vector<SimpleGraph> level{SimpleGraph(1)};
  for (int k = 2; k <= n; ++k) {
    std::set<CanonicalKey> seen;
    std::vector<SimpleGraph> next;
    for (const SimpleGraph& g : level) {
      const int old = g.vertex_count();
      for (std::uint32_t mask = 1; mask < (1u << old); ++mask) {
        SimpleGraph h(old + 1, g.edges());
        for (int v = 0; v < old; ++v)
          if (mask >> v & 1u) h.add_edge(v, old);
        auto key = *canonical_key(h);
        if (seen.insert(key).second) next.push_back(canonical_form(h));
      }
    }
    level = std::move(next);
  }
  return level;
}

}  // namespace chromkh

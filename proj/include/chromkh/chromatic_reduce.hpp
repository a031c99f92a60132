#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <utility>
#include <vector>

#include "cube.hpp"
#include "graph.hpp"

namespace chromkh {

namespace detail {

/// The chromatic complex kept as a complex of A^{(x)V}-modules: every object
/// is a vertex partition pi standing for A^{(x) pi}, every map between
/// objects is an integer multiple of the quotient map. Edges are added one
/// at a time (cone of the quotient by the new edge) and each identity map
/// that appears is cancelled by Gaussian elimination, which keeps the complex
/// homotopy equivalent to the full cube.
class PartitionComplex {
 public:
  struct Object {
    std::vector<std::uint8_t> part;  ///< canonical block labels per vertex
    int deg = 0;
    bool alive = true;
    std::map<int, long> out;  ///< target -> coefficient
    std::set<int> in;
  };

  explicit PartitionComplex(int vertices) : n_(vertices) {
    Object o;
    o.part.resize(static_cast<std::size_t>(vertices));
    for (int v = 0; v < vertices; ++v) o.part[v] = static_cast<std::uint8_t>(v);
    objs_.push_back(std::move(o));
  }

  void add_edge(int u, int w) {
    const int before = static_cast<int>(objs_.size());
    std::vector<int> copy(static_cast<std::size_t>(before), -1);
    for (int a = 0; a < before; ++a) {
      if (!objs_[a].alive) continue;
      Object f;
      f.part = merged(objs_[a].part, u, w);
      f.deg = objs_[a].deg + 1;
      copy[a] = static_cast<int>(objs_.size());
      objs_.push_back(std::move(f));
    }
    for (int a = 0; a < before; ++a) {
      if (!objs_[a].alive) continue;
      for (auto [b, c] : std::vector<std::pair<int, long>>(objs_[a].out.begin(), objs_[a].out.end()))
        set_entry(copy[a], copy[b], c);
      set_entry(a, copy[a], (objs_[a].deg % 2) ? -1 : 1);
    }
    for (int a = 0; a < before; ++a)
      if (objs_[a].alive && objs_[a].part[u] == objs_[a].part[w]) try_cancel(a, copy[a]);
  }

  /// Cancels every remaining unit identity entry.
  void finish() {
    bool again = true;
    while (again) {
      again = false;
      for (int a = 0; a < static_cast<int>(objs_.size()); ++a) {
        if (!objs_[a].alive) continue;
        for (auto [b, c] : std::vector<std::pair<int, long>>(objs_[a].out.begin(), objs_[a].out.end()))
          if ((c == 1 || c == -1) && objs_[b].part == objs_[a].part && try_cancel(a, b)) {
            again = true;
            break;
          }
      }
    }
  }

  const std::vector<Object>& objects() const { return objs_; }
  int vertices() const { return n_; }

  std::size_t alive_count() const {
    std::size_t n = 0;
    for (const auto& o : objs_) n += o.alive;
    return n;
  }

 private:
  static std::vector<std::uint8_t> merged(const std::vector<std::uint8_t>& p, int u, int w) {
    std::vector<std::uint8_t> q = p;
    const std::uint8_t a = p[u], b = p[w];
    if (a == b) return q;
    for (auto& x : q)
      if (x == b) x = a;
    // relabel by first occurrence
    std::vector<int> map(256, -1);
    int next = 0;
    for (auto& x : q) {
      if (map[x] < 0) map[x] = next++;
      x = static_cast<std::uint8_t>(map[x]);
    }
    return q;
  }

  void set_entry(int a, int b, long c) {
    if (c == 0) return;
    objs_[a].out[b] = c;
    objs_[b].in.insert(a);
  }

  void add_to_entry(int a, int b, long c) {
    if (c == 0) return;
    auto& out = objs_[a].out;
    auto it = out.find(b);
    if (it == out.end()) {
      out.emplace(b, c);
      objs_[b].in.insert(a);
      return;
    }
    long v;
    if (__builtin_add_overflow(it->second, c, &v)) throw Overflow{};
    if (v == 0) {
      out.erase(it);
      objs_[b].in.erase(a);
    } else {
      it->second = v;
    }
  }

  bool try_cancel(int a, int b) {
    auto it = objs_[a].out.find(b);
    if (it == objs_[a].out.end()) return false;
    const long u = it->second;
    if (u != 1 && u != -1) return false;
    std::vector<std::pair<int, long>> sources, targets;
    for (int c : objs_[b].in)
      if (c != a) sources.push_back({c, objs_[c].out.at(b)});
    for (auto [d, v] : objs_[a].out)
      if (d != b) targets.push_back({d, v});
    remove(a);
    remove(b);
    for (auto [c, cb] : sources)
      for (auto [d, ad] : targets) {
        long t1, t2;
        if (__builtin_mul_overflow(ad, u, &t1) || __builtin_mul_overflow(t1, cb, &t2)) throw Overflow{};
        add_to_entry(c, d, -t2);
      }
    return true;
  }

  void remove(int a) {
    Object& o = objs_[a];
    for (auto& [b, c] : o.out) objs_[b].in.erase(a);
    for (int c : o.in) objs_[c].out.erase(a);
    o.out.clear();
    o.in.clear();
    o.alive = false;
  }

  int n_;
  std::vector<Object> objs_;
};

/// Edge order that closes cycles early: prefer edges with both ends already
/// touched, then edges touching the current vertex set.
inline std::vector<int> elimination_edge_order(const SimpleGraph& g) {
  std::vector<int> order;
  std::vector<char> used(static_cast<std::size_t>(g.edge_count()), 0), seen(static_cast<std::size_t>(g.vertex_count()), 0);
  for (int step = 0; step < g.edge_count(); ++step) {
    int pick = -1, best = -1;
    for (int e = 0; e < g.edge_count(); ++e) {
      if (used[e]) continue;
      int score = seen[g.edge(e).a] + seen[g.edge(e).b];
      if (score > best) best = score, pick = e;
    }
    if (pick < 0) break;
    used[pick] = 1;
    seen[g.edge(pick).a] = seen[g.edge(pick).b] = 1;
    order.push_back(pick);
  }
  return order;
}

/// Expands the reduced complex to Z-modules and computes H^{i,j}.
inline BigradedGroups homology_of_partition_complex(const PartitionComplex& pc, int m, const CubeOptions& opt) {
  const auto& objs = pc.objects();
  const int N = pc.vertices();
  LabelTable lt(m, N);
  std::map<int, std::vector<int>> by_deg;
  int maxdeg = 0;
  for (int a = 0; a < static_cast<int>(objs.size()); ++a)
    if (objs[a].alive) {
      by_deg[objs[a].deg].push_back(a);
      maxdeg = std::max(maxdeg, objs[a].deg);
    }
  auto comps = [&](int a) { return objs[a].part.empty() ? 0 : 1 + *std::max_element(objs[a].part.begin(), objs[a].part.end()); };

  BigradedGroups out;
  const int jmax = (m - 1) * N;
  for (int j = 0; j <= jmax; ++j) {
    if (opt.gradings && !opt.gradings->count(j)) continue;
    // offsets of each object's block in C^{deg, j}
    std::map<int, std::uint64_t> offset;
    std::map<int, std::uint64_t> dim;
    for (auto& [d, list] : by_deg) {
      std::uint64_t o = 0;
      for (int a : list) {
        offset[a] = o;
        o += lt.count(comps(a), j);
      }
      dim[d] = o;
    }
    std::map<int, SmithResult> snf;  // d^{i}: C^i -> C^{i+1}
    for (auto& [d, list] : by_deg) {
      if (!by_deg.count(d + 1)) continue;
      if (opt.i_min && d + 1 < *opt.i_min) continue;
      if (opt.i_max && d > *opt.i_max) continue;
      SparseMatrix M;
      M.cols = static_cast<int>(dim[d]);
      M.rows = static_cast<int>(dim[d + 1]);
      std::vector<std::uint8_t> img(static_cast<std::size_t>(N));
      for (int a : list) {
        const int ka = comps(a);
        if (lt.count(ka, j) == 0) continue;
        const auto& labs = lt.list(ka, j);
        std::vector<int> rep(static_cast<std::size_t>(ka), -1);
        for (int v = 0; v < N; ++v)
          if (rep[objs[a].part[v]] < 0) rep[objs[a].part[v]] = v;
        for (auto [b, c] : objs[a].out) {
          const int kb = comps(b);
          const std::size_t nl = ka ? labs.size() / static_cast<std::size_t>(ka) : 0;
          for (std::size_t li = 0; li < nl; ++li) {
            std::fill(img.begin(), img.begin() + kb, 0);
            bool zero = false;
            for (int x = 0; x < ka; ++x) {
              int y = objs[b].part[rep[x]];
              img[y] = static_cast<std::uint8_t>(img[y] + labs[li * ka + x]);
              if (img[y] >= m) zero = true;
            }
            if (zero) continue;
            M.add(static_cast<int>(offset[b] + lt.rank(img.data(), kb)), static_cast<int>(offset[a] + li), c);
          }
        }
      }
      snf[d] = smith(M);
    }
    for (auto& [d, list] : by_deg) {
      if (opt.i_min && d < *opt.i_min) continue;
      if (opt.i_max && d > *opt.i_max) continue;
      Group grp;
      long r_out = snf.count(d) ? snf[d].rank : 0;
      long r_in = snf.count(d - 1) ? snf[d - 1].rank : 0;
      grp.free = static_cast<long>(dim[d]) - r_out - r_in;
      if (snf.count(d - 1))
        for (const BigInt& q : snf[d - 1].divisors)
          for (auto& [pp, k] : prime_power_factors(q)) grp.add_torsion(pp, k);
      out.set(d, j, grp);
    }
  }
  return out;
}

}  // namespace detail

/// H_{A_m}(G) through the reduced partition complex. Falls back to the full
/// cube if a coefficient leaves the machine-integer range.
inline BigradedGroups chromatic_homology_reduced(const SimpleGraph& g, int m, const CubeOptions& opt = {}) {
  if (m < 2) throw std::invalid_argument("algebra A_m needs m >= 2");
  if (g.vertex_count() > 255) throw ResourceError("too many vertices");
  try {
    detail::PartitionComplex pc(g.vertex_count());
    for (int e : detail::elimination_edge_order(g)) pc.add_edge(g.edge(e).a, g.edge(e).b);
    pc.finish();
    return detail::homology_of_partition_complex(pc, m, opt);
  } catch (const detail::Overflow&) {
    CubeSpec spec;
    spec.elements = g.vertex_count();
    spec.m = m;
    for (const Edge& e : g.edges()) spec.joins.push_back({std::vector<std::pair<int, int>>{}, {{e.a, e.b}}});
    return cube_homology(spec, opt);
  }
}

}  // namespace chromkh

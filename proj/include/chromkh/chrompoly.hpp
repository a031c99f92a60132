#pragma once

#include <array>
#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "graph.hpp"
#include "graph_enum.hpp"
#include "polynomial.hpp"

namespace chromkh {

namespace detail {

/// lambda (lambda-1) ... (lambda-n+1)
inline IntPolynomial falling_factorial(int n) {
  IntPolynomial r{1};
  for (int k = 0; k < n; ++k) r *= IntPolynomial{-k, 1};
  return r;
}

inline IntPolynomial cycle_chromatic(int n) {
  IntPolynomial lm1{-1, 1};
  IntPolynomial r = lm1.pow(n);
  return (n % 2 == 0) ? r + lm1 : r - lm1;
}

/// Subgraphs induced by each block's edge set, vertices relabelled densely.
inline std::vector<SimpleGraph> block_subgraphs(const SimpleGraph& g) {
  auto dec = blocks(g);
  std::vector<std::vector<Edge>> per(static_cast<std::size_t>(dec.block_count));
  for (int e = 0; e < g.edge_count(); ++e) per[dec.edge_block[e]].push_back(g.edge(e));
  std::vector<SimpleGraph> out;
  for (auto& edges : per) {
    std::map<int, int> id;
    for (const Edge& e : edges) {
      id.emplace(e.a, 0);
      id.emplace(e.b, 0);
    }
    int next = 0;
    for (auto& [v, k] : id) k = next++;
    std::vector<Edge> relabelled;
    for (const Edge& e : edges) relabelled.emplace_back(id[e.a], id[e.b]);
    out.emplace_back(next, relabelled);
  }
  return out;
}

class ChromaticMemo {
 public:
  bool lookup(const CanonicalKey& k, IntPolynomial& out) {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = table_.find(k);
    if (it == table_.end()) return false;
    out = it->second;
    return true;
  }
  void store(const CanonicalKey& k, const IntPolynomial& p) {
    std::lock_guard<std::mutex> lock(mu_);
    if (table_.size() > 200000) table_.clear();
    table_.emplace(k, p);
  }

 private:
  std::mutex mu_;
  std::map<CanonicalKey, IntPolynomial> table_;
};

inline ChromaticMemo& chromatic_memo() {
  static ChromaticMemo memo;
  return memo;
}

inline IntPolynomial chromatic_connected(const SimpleGraph& g);

/// Chromatic polynomial of a 2-connected graph (or a single edge).
inline IntPolynomial chromatic_block(const SimpleGraph& b) {
  const int n = b.vertex_count(), m = b.edge_count();
  if (m == 1) return IntPolynomial{0, -1, 1};
  if (m == n * (n - 1) / 2) return falling_factorial(n);
  if (m == n) return cycle_chromatic(n);  // 2-connected with v = E is a cycle
  auto key = canonical_key(b, 4096);
  IntPolynomial cached;
  if (key && chromatic_memo().lookup(*key, cached)) return cached;
  // Delete/contract an edge at a minimum-degree vertex: the deletion then
  // tends to fall apart into smaller blocks.
  auto deg = b.degrees();
  int pick = 0, best = n + 1;
  for (int e = 0; e < m; ++e) {
    int d = std::min(deg[b.edge(e).a], deg[b.edge(e).b]);
    if (d < best) best = d, pick = e;
  }
  IntPolynomial p = chromatic_connected(delete_edge(b, pick)) - chromatic_connected(contract_edge(b, pick));
  if (key) chromatic_memo().store(*key, p);
  return p;
}

/// Connected g: product over blocks divided by lambda^(b-1).
inline IntPolynomial chromatic_connected(const SimpleGraph& g) {
  if (g.vertex_count() == 1) return IntPolynomial{0, 1};
  auto parts = block_subgraphs(g);
  IntPolynomial prod{1};
  for (const auto& b : parts) prod *= chromatic_block(b).exact_div(IntPolynomial{0, 1});
  return prod * IntPolynomial{0, 1};
}

}  // namespace detail

/// Chromatic polynomial in lambda.
inline IntPolynomial chromatic_polynomial(const SimpleGraph& g) {
  int count = 0;
  auto label = component_labels(g, &count);
  std::vector<std::vector<int>> members(static_cast<std::size_t>(count));
  for (int v = 0; v < g.vertex_count(); ++v) members[label[v]].push_back(v);
  IntPolynomial result{1};
  for (const auto& comp : members) {
    std::vector<int> pos(static_cast<std::size_t>(g.vertex_count()), -1);
    for (std::size_t t = 0; t < comp.size(); ++t) pos[comp[t]] = static_cast<int>(t);
    std::vector<Edge> edges;
    for (const Edge& e : g.edges())
      if (pos[e.a] >= 0) edges.emplace_back(pos[e.a], pos[e.b]);
    result *= detail::chromatic_connected(SimpleGraph(static_cast<int>(comp.size()), edges));
  }
  return result;
}

/// Subset expansion sum_s (-1)^|s| lambda^k(s); exponential, for testing.
inline IntPolynomial chromatic_state_sum(const SimpleGraph& g) {
  const int m = g.edge_count();
  if (m > 24) throw std::length_error("state sum limited to 24 edges");
  std::vector<BigInt> c(static_cast<std::size_t>(g.vertex_count() + 1), 0);
  std::vector<int> parent(static_cast<std::size_t>(g.vertex_count()));
  for (std::uint32_t s = 0; s < (1u << m); ++s) {
    std::iota(parent.begin(), parent.end(), 0);
    int k = g.vertex_count();
    auto find = [&](int x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    for (int e = 0; e < m; ++e) {
      if (!(s >> e & 1u)) continue;
      int a = find(g.edge(e).a), b = find(g.edge(e).b);
      if (a != b) parent[a] = b, --k;
    }
    c[k] += (__builtin_popcount(s) % 2) ? -1 : 1;
  }
  return IntPolynomial(std::move(c));
}

/// lambda = q + 1.
inline IntPolynomial to_q_basis(const IntPolynomial& p_lambda) { return p_lambda.shift(1); }

/// Evaluation at lambda = 1 + q + ... + q^(m-1), the graded rank of A_m.
inline IntPolynomial evaluate_at_qdim(const IntPolynomial& p_lambda, int m) {
  std::vector<BigInt> qd(static_cast<std::size_t>(m), 1);
  return p_lambda.compose(IntPolynomial(qd));
}

/// Multiplicity of (lambda - 1).
inline int block_count_from_polynomial(const IntPolynomial& p_lambda) {
  if (p_lambda.is_zero()) throw std::invalid_argument("zero polynomial has no block count");
  return to_q_basis(p_lambda).low_degree();
}

/// Leading coefficients (c_v, c_{v-1}, c_{v-2}, c_{v-3}).
inline std::array<BigInt, 4> farrell_coefficients(const GraphInvariants& inv) {
  BigInt E = inv.E;
  return {BigInt(1), -E, binomial(inv.E, 2) - inv.t3,
          -binomial(inv.E, 3) + (E - 2) * inv.t3 + inv.t4 - 2 * BigInt(inv.k4)};
}

}  // namespace chromkh

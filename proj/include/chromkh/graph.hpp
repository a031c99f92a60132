#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <optional>
#include <queue>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace chromkh {

using Vertex = int;

class GraphError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public std::runtime_error {
 public:
  enum class Kind { Malformed, Loop, DuplicateEdge, VertexRange };
  ParseError(Kind kind, int line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), kind_(kind), line_(line) {}
  Kind kind() const { return kind_; }
  int line() const { return line_; }

 private:
  Kind kind_;
  int line_;
};

/// Undirected edge, stored with a < b.
struct Edge {
  Vertex a = 0;
  Vertex b = 0;
  Edge() = default;
  Edge(Vertex u, Vertex v) : a(std::min(u, v)), b(std::max(u, v)) {}
  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Finite simple graph. The edge order is fixed at construction; it drives the
/// signs of every cube differential built on top of the graph.
class SimpleGraph {
 public:
  SimpleGraph() = default;
  explicit SimpleGraph(int vertex_count) : n_(vertex_count) {
    if (vertex_count < 0) throw GraphError("negative vertex count");
  }
  SimpleGraph(int vertex_count, const std::vector<Edge>& edges) : SimpleGraph(vertex_count) {
    for (const Edge& e : edges) add_edge(e.a, e.b);
  }

  int vertex_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(int index) const { return edges_.at(static_cast<std::size_t>(index)); }

  void add_edge(Vertex u, Vertex v) {
    if (u < 0 || v < 0 || u >= n_ || v >= n_) throw GraphError("vertex index out of range");
    if (u == v) throw GraphError("loop edge");
    if (has_edge(u, v)) throw GraphError("duplicate edge");
    edges_.emplace_back(u, v);
  }

  bool has_edge(Vertex u, Vertex v) const { return edge_index(u, v) >= 0; }

  int edge_index(Vertex u, Vertex v) const {
    Edge e(u, v);
    for (std::size_t i = 0; i < edges_.size(); ++i)
      if (edges_[i] == e) return static_cast<int>(i);
    return -1;
  }

  std::vector<std::vector<Vertex>> adjacency() const {
    std::vector<std::vector<Vertex>> adj(static_cast<std::size_t>(n_));
    for (const Edge& e : edges_) {
      adj[e.a].push_back(e.b);
      adj[e.b].push_back(e.a);
    }
    for (auto& row : adj) std::sort(row.begin(), row.end());
    return adj;
  }

  std::vector<int> degrees() const {
    std::vector<int> deg(static_cast<std::size_t>(n_), 0);
    for (const Edge& e : edges_) {
      ++deg[e.a];
      ++deg[e.b];
    }
    return deg;
  }

  friend bool operator==(const SimpleGraph&, const SimpleGraph&) = default;

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
};

// ---------------------------------------------------------------------------
// Edge-list text format: "v N" followed by "e a b" lines.

inline SimpleGraph parse_graph(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  std::optional<SimpleGraph> g;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string tag;
    if (!(ls >> tag)) continue;
    if (tag == "v") {
      long n = -1;
      if (g || !(ls >> n) || n < 0) throw ParseError(ParseError::Kind::Malformed, lineno, "bad vertex line");
      std::string rest;
      if (ls >> rest) throw ParseError(ParseError::Kind::Malformed, lineno, "trailing tokens");
      g.emplace(static_cast<int>(n));
    } else if (tag == "e") {
      long a = 0, b = 0;
      if (!g) throw ParseError(ParseError::Kind::Malformed, lineno, "edge before vertex line");
      if (!(ls >> a >> b)) throw ParseError(ParseError::Kind::Malformed, lineno, "bad edge line");
      std::string rest;
      if (ls >> rest) throw ParseError(ParseError::Kind::Malformed, lineno, "trailing tokens");
      if (a < 0 || b < 0 || a >= g->vertex_count() || b >= g->vertex_count())
        throw ParseError(ParseError::Kind::VertexRange, lineno, "vertex index out of range");
      if (a == b) throw ParseError(ParseError::Kind::Loop, lineno, "loop edge");
      if (g->has_edge(static_cast<Vertex>(a), static_cast<Vertex>(b)))
        throw ParseError(ParseError::Kind::DuplicateEdge, lineno, "duplicate edge");
      g->add_edge(static_cast<Vertex>(a), static_cast<Vertex>(b));
    } else {
      throw ParseError(ParseError::Kind::Malformed, lineno, "unknown record '" + tag + "'");
    }
  }
  if (!g) throw ParseError(ParseError::Kind::Malformed, lineno, "missing vertex line");
  return *g;
}

inline std::string serialize_graph(const SimpleGraph& g) {
  std::ostringstream out;
  out << "v " << g.vertex_count() << '\n';
  for (const Edge& e : g.edges()) out << "e " << e.a << ' ' << e.b << '\n';
  return out.str();
}

// ---------------------------------------------------------------------------
// Structural helpers.

/// Component index per vertex, numbered by smallest member.
inline std::vector<int> component_labels(const SimpleGraph& g, int* count = nullptr) {
  std::vector<int> parent(static_cast<std::size_t>(g.vertex_count()));
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const Edge& e : g.edges()) parent[find(e.a)] = find(e.b);
  std::vector<int> label(parent.size(), -1), root_label(parent.size(), -1);
  int next = 0;
  for (std::size_t v = 0; v < parent.size(); ++v) {
    int r = find(static_cast<int>(v));
    if (root_label[r] < 0) root_label[r] = next++;
    label[v] = root_label[r];
  }
  if (count) *count = next;
  return label;
}

inline int component_count(const SimpleGraph& g) {
  int c = 0;
  component_labels(g, &c);
  return c;
}

inline bool is_connected(const SimpleGraph& g) { return g.vertex_count() <= 1 || component_count(g) == 1; }

/// Biconnected decomposition: for each edge, the index of its block.
struct BlockDecomposition {
  std::vector<int> edge_block;
  int block_count = 0;
  std::vector<bool> is_bridge;
  std::vector<bool> is_cut_vertex;
};

inline BlockDecomposition blocks(const SimpleGraph& g) {
  const int n = g.vertex_count();
  const int m = g.edge_count();
  BlockDecomposition out;
  out.edge_block.assign(static_cast<std::size_t>(m), -1);
  out.is_bridge.assign(static_cast<std::size_t>(m), false);
  out.is_cut_vertex.assign(static_cast<std::size_t>(n), false);
  std::vector<std::vector<std::pair<int, int>>> inc(static_cast<std::size_t>(n));
  for (int i = 0; i < m; ++i) {
    inc[g.edge(i).a].push_back({g.edge(i).b, i});
    inc[g.edge(i).b].push_back({g.edge(i).a, i});
  }
  std::vector<int> disc(static_cast<std::size_t>(n), -1), low(static_cast<std::size_t>(n), 0);
  std::vector<int> edge_stack;
  int timer = 0;
  // Iterative Tarjan to stay safe on long paths.
  struct Frame {
    int v, parent_edge;
    std::size_t next;
    int children;
  };
  for (int root = 0; root < n; ++root) {
    if (disc[root] >= 0) continue;
    std::vector<Frame> stack{{root, -1, 0, 0}};
    disc[root] = low[root] = timer++;
    while (!stack.empty()) {
      Frame& f = stack.back();
      if (f.next < inc[f.v].size()) {
        auto [w, ei] = inc[f.v][f.next++];
        if (ei == f.parent_edge) continue;
        if (disc[w] < 0) {
          edge_stack.push_back(ei);
          disc[w] = low[w] = timer++;
          ++f.children;
          stack.push_back({w, ei, 0, 0});
        } else if (disc[w] < disc[f.v]) {
          edge_stack.push_back(ei);
          low[f.v] = std::min(low[f.v], disc[w]);
        }
        continue;
      }
      Frame done = f;
      stack.pop_back();
      if (stack.empty()) {
        if (done.children > 1) out.is_cut_vertex[done.v] = true;
        continue;
      }
      Frame& par = stack.back();
      low[par.v] = std::min(low[par.v], low[done.v]);
      if (low[done.v] >= disc[par.v]) {
        if (par.parent_edge >= 0) out.is_cut_vertex[par.v] = true;
        int id = out.block_count++;
        int size = 0;
        while (!edge_stack.empty()) {
          int e = edge_stack.back();
          edge_stack.pop_back();
          out.edge_block[e] = id;
          ++size;
          if (e == done.parent_edge) break;
        }
        if (size == 1) out.is_bridge[done.parent_edge] = true;
      }
    }
  }
  return out;
}

inline bool is_bridge(const SimpleGraph& g, int edge_index) { return blocks(g).is_bridge.at(edge_index); }

/// Length of the shortest cycle; 0 for forests.
inline int girth(const SimpleGraph& g) {
  const int n = g.vertex_count();
  auto adj = g.adjacency();
  int best = 0;
  for (int s = 0; s < n; ++s) {
    std::vector<int> dist(static_cast<std::size_t>(n), -1), parent(static_cast<std::size_t>(n), -1);
    std::queue<int> q;
    dist[s] = 0;
    q.push(s);
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      for (int w : adj[u]) {
        if (dist[w] < 0) {
          dist[w] = dist[u] + 1;
          parent[w] = u;
          q.push(w);
        } else if (parent[u] != w) {
          int len = dist[u] + dist[w] + 1;
          if (best == 0 || len < best) best = len;
        }
      }
    }
  }
  return best;
}

inline bool is_bipartite(const SimpleGraph& g) {
  auto adj = g.adjacency();
  std::vector<int> side(static_cast<std::size_t>(g.vertex_count()), -1);
  for (int s = 0; s < g.vertex_count(); ++s) {
    if (side[s] >= 0) continue;
    side[s] = 0;
    std::queue<int> q;
    q.push(s);
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      for (int w : adj[u]) {
        if (side[w] < 0) {
          side[w] = 1 - side[u];
          q.push(w);
        } else if (side[w] == side[u]) {
          return false;
        }
      }
    }
  }
  return true;
}

struct GraphInvariants {
  int v = 0;
  int E = 0;
  int components = 0;
  int b = 0;       ///< block count (summed over components)
  int girth = 0;   ///< 0 for forests
  bool bipartite = true;
  int p1 = 0;      ///< cyclomatic number E - v + components
  long t3 = 0;     ///< triangles
  long t4 = 0;     ///< induced 4-cycles
  long k4 = 0;     ///< K4 subgraphs
  friend bool operator==(const GraphInvariants&, const GraphInvariants&) = default;
};

inline GraphInvariants invariants(const SimpleGraph& g) {
  GraphInvariants inv;
  const int n = g.vertex_count();
  inv.v = n;
  inv.E = g.edge_count();
  inv.components = component_count(g);
  inv.b = blocks(g).block_count;
  inv.girth = girth(g);
  inv.bipartite = is_bipartite(g);
  inv.p1 = inv.E - inv.v + inv.components;
  std::vector<std::vector<char>> adj(static_cast<std::size_t>(n), std::vector<char>(static_cast<std::size_t>(n), 0));
  for (const Edge& e : g.edges()) adj[e.a][e.b] = adj[e.b][e.a] = 1;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      if (!adj[a][b]) continue;
      for (int c = b + 1; c < n; ++c) {
        if (!adj[a][c] || !adj[b][c]) continue;
        ++inv.t3;
        for (int d = c + 1; d < n; ++d)
          if (adj[a][d] && adj[b][d] && adj[c][d]) ++inv.k4;
      }
    }
  // Induced 4-cycles: choose the vertex set, then the three possible cycles.
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int c = b + 1; c < n; ++c)
        for (int d = c + 1; d < n; ++d) {
          int edges = adj[a][b] + adj[a][c] + adj[a][d] + adj[b][c] + adj[b][d] + adj[c][d];
          if (edges != 4) continue;
          // four edges on four vertices form a 4-cycle iff every vertex has degree 2
          int da = adj[a][b] + adj[a][c] + adj[a][d];
          int db = adj[a][b] + adj[b][c] + adj[b][d];
          int dc = adj[a][c] + adj[b][c] + adj[c][d];
          if (da == 2 && db == 2 && dc == 2) ++inv.t4;
        }
  return inv;
}

// ---------------------------------------------------------------------------
// Deletion and contraction.

inline SimpleGraph delete_edge(const SimpleGraph& g, int edge_index) {
  if (edge_index < 0 || edge_index >= g.edge_count()) throw GraphError("unknown edge");
  SimpleGraph out(g.vertex_count());
  for (int i = 0; i < g.edge_count(); ++i)
    if (i != edge_index) out.add_edge(g.edge(i).a, g.edge(i).b);
  return out;
}

/// Merges the endpoints of the edge into the smaller one; vertices above the
/// removed one shift down by one. Loops and parallel duplicates are dropped,
/// surviving edges keep their relative order.
inline SimpleGraph contract_edge(const SimpleGraph& g, int edge_index) {
  if (edge_index < 0 || edge_index >= g.edge_count()) throw GraphError("unknown edge");
  const Edge gone = g.edge(edge_index);
  auto relabel = [&](Vertex x) {
    if (x == gone.b) x = gone.a;
    return x > gone.b ? x - 1 : x;
  };
  SimpleGraph out(g.vertex_count() - 1);
  for (int i = 0; i < g.edge_count(); ++i) {
    if (i == edge_index) continue;
    Vertex u = relabel(g.edge(i).a), v = relabel(g.edge(i).b);
    if (u == v || out.has_edge(u, v)) continue;
    out.add_edge(u, v);
  }
  return out;
}

inline bool is_forest(const SimpleGraph& g) { return g.edge_count() == g.vertex_count() - component_count(g); }

struct ContractionStep {
  SimpleGraph graph;   ///< graph before the step
  int contracted_edge; ///< index into graph.edges()
};

/// Contracts non-bridge edges that keep the block count fixed until a tree
/// remains. The result has exactly v - b - 1 steps for a connected graph.
struct ContractionSequence {
  std::vector<ContractionStep> steps;
  SimpleGraph terminal;
};

inline ContractionSequence contraction_sequence(const SimpleGraph& g) {
  if (!is_connected(g)) throw GraphError("contraction sequence needs a connected graph");
  ContractionSequence seq;
  SimpleGraph cur = g;
  while (!is_forest(cur)) {
    const auto dec = blocks(cur);
    bool stepped = false;
    for (int e = 0; e < cur.edge_count() && !stepped; ++e) {
      if (dec.is_bridge[e]) continue;
      SimpleGraph next = contract_edge(cur, e);
      if (blocks(next).block_count != dec.block_count) continue;
      seq.steps.push_back({cur, e});
      cur = std::move(next);
      stepped = true;
    }
    if (!stepped) throw GraphError("no block-preserving contraction found");
  }
  seq.terminal = cur;
  return seq;
}

}  // namespace chromkh

#pragma once

#include <cctype>
#include <functional>
#include <map>
#include <string>
#include <variant>
#include <vector>

#include "graph.hpp"

namespace chromkh {

// Constructors for the graph families. Vertex numbering is part of the
// contract: gluing operations anchor on it.

inline SimpleGraph path_graph(int n) {
  if (n < 1) throw GraphError("path(n) needs n >= 1");
  SimpleGraph g(n);
  for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

/// P_n in the chromatic literature: the n-cycle.
inline SimpleGraph cycle_graph(int n) {
  if (n < 3) throw GraphError("cycle(n) needs n >= 3");
  SimpleGraph g = path_graph(n);
  g.add_edge(0, n - 1);
  return g;
}

inline SimpleGraph complete_graph(int n) {
  if (n < 1) throw GraphError("complete(n) needs n >= 1");
  SimpleGraph g(n);
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) g.add_edge(a, b);
  return g;
}

/// n vertices: hub 0 joined to a rim cycle on 1..n-1.
inline SimpleGraph wheel_graph(int n) {
  if (n < 4) throw GraphError("wheel(n) needs n >= 4");
  SimpleGraph g(n);
  for (int i = 1; i < n; ++i) g.add_edge(0, i);
  for (int i = 1; i + 1 < n; ++i) g.add_edge(i, i + 1);
  g.add_edge(1, n - 1);
  return g;
}

/// K_{1,n}: centre 0 and leaves 1..n.
inline SimpleGraph star_graph(int n) {
  if (n < 0) throw GraphError("star(n) needs n >= 0");
  SimpleGraph g(n + 1);
  for (int i = 1; i <= n; ++i) g.add_edge(0, i);
  return g;
}

/// Multibridge graph: u = 0 and w = 1 joined by paths of the given lengths.
/// Internal vertices are numbered path by path, walking from u towards w.
inline SimpleGraph theta_graph(const std::vector<int>& lengths) {
  if (lengths.size() < 2) throw GraphError("theta needs at least two paths");
  int ones = 0, internal = 0;
  for (int a : lengths) {
    if (a < 1) throw GraphError("theta path lengths must be >= 1");
    ones += (a == 1);
    internal += a - 1;
  }
  if (ones > 1) throw GraphError("theta with two length-1 paths is not simple");
  SimpleGraph g(2 + internal);
  int next = 2;
  for (int a : lengths) {
    int prev = 0;
    for (int s = 1; s < a; ++s) {
      g.add_edge(prev, next);
      prev = next++;
    }
    g.add_edge(prev, 1);
  }
  return g;
}

namespace detail {

/// Copies h into g with h's vertex map given; unmapped vertices (-1) are
/// appended in order. Edges already present in g are skipped.
inline SimpleGraph glue_into(const SimpleGraph& g, const SimpleGraph& h, std::vector<int> map) {
  int n = g.vertex_count();
  for (int& x : map)
    if (x < 0) x = n++;
  SimpleGraph out(n);
  for (const Edge& e : g.edges()) out.add_edge(e.a, e.b);
  for (const Edge& e : h.edges()) {
    int a = map[e.a], b = map[e.b];
    if (!out.has_edge(a, b)) out.add_edge(a, b);
  }
  return out;
}

inline Edge smallest_edge(const SimpleGraph& g) {
  if (g.edge_count() == 0) throw GraphError("edge gluing needs an edge in each operand");
  Edge best = g.edge(0);
  for (const Edge& e : g.edges()) best = std::min(best, e);
  return best;
}

/// First simple path with k edges in DFS order (start vertices ascending,
/// neighbours ascending). Empty if none exists.
inline std::vector<int> first_path(const SimpleGraph& g, int k) {
  auto adj = g.adjacency();
  std::vector<int> path;
  std::vector<char> used(static_cast<std::size_t>(g.vertex_count()), 0);
  std::function<bool(int)> dfs = [&](int v) {
    path.push_back(v);
    used[v] = 1;
    if (static_cast<int>(path.size()) == k + 1) return true;
    for (int w : adj[v])
      if (!used[w] && dfs(w)) return true;
    used[v] = 0;
    path.pop_back();
    return false;
  };
  for (int s = 0; s < g.vertex_count(); ++s)
    if (dfs(s)) return path;
  return {};
}

}  // namespace detail

/// G|H: identify the lexicographically smallest edge of each operand.
inline SimpleGraph edge_glue(const SimpleGraph& g, const SimpleGraph& h) {
  Edge eg = detail::smallest_edge(g), eh = detail::smallest_edge(h);
  std::vector<int> map(static_cast<std::size_t>(h.vertex_count()), -1);
  map[eh.a] = eg.a;
  map[eh.b] = eg.b;
  return detail::glue_into(g, h, map);
}

/// G|^k H: identify the first DFS path of k edges in each operand.
inline SimpleGraph edge_glue_k(const SimpleGraph& g, const SimpleGraph& h, int k) {
  if (k < 1) throw GraphError("edge_glue_k needs k >= 1");
  auto pg = detail::first_path(g, k), ph = detail::first_path(h, k);
  if (pg.empty() || ph.empty()) throw GraphError("operand has no path of " + std::to_string(k) + " edges");
  std::vector<int> map(static_cast<std::size_t>(h.vertex_count()), -1);
  for (int t = 0; t <= k; ++t) map[ph[t]] = pg[t];
  return detail::glue_into(g, h, map);
}

/// G*H: identify vertex 0 of each operand.
inline SimpleGraph vertex_glue(const SimpleGraph& g, const SimpleGraph& h) {
  if (g.vertex_count() == 0 || h.vertex_count() == 0) throw GraphError("vertex gluing needs nonempty operands");
  std::vector<int> map(static_cast<std::size_t>(h.vertex_count()), -1);
  map[0] = 0;
  return detail::glue_into(g, h, map);
}

/// Disjoint union plus an edge between the two vertex-0s.
inline SimpleGraph bridge(const SimpleGraph& g, const SimpleGraph& h) {
  if (g.vertex_count() == 0 || h.vertex_count() == 0) throw GraphError("bridge needs nonempty operands");
  std::vector<int> map(static_cast<std::size_t>(h.vertex_count()), -1);
  SimpleGraph out = detail::glue_into(g, h, map);
  out.add_edge(0, g.vertex_count());
  return out;
}

// ---------------------------------------------------------------------------
// Expression parser:  expr := name '(' [arg {',' arg}] ')' ; arg := int | expr

class DslError : public std::runtime_error {
 public:
  DslError(std::size_t pos, const std::string& what)
      : std::runtime_error("at " + std::to_string(pos) + ": " + what), pos_(pos) {}
  std::size_t position() const { return pos_; }

 private:
  std::size_t pos_;
};

namespace detail {

class DslParser {
 public:
  explicit DslParser(const std::string& s) : s_(s) {}

  SimpleGraph parse() {
    SimpleGraph g = expr();
    skip();
    if (pos_ != s_.size()) throw DslError(pos_, "trailing input");
    return g;
  }

 private:
  using Arg = std::variant<long, SimpleGraph>;

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Arg arg() {
    skip();
    if (pos_ < s_.size() && (std::isdigit(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '-')) {
      std::size_t start = pos_;
      if (s_[pos_] == '-') ++pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (pos_ == start + (s_[start] == '-' ? 1u : 0u)) throw DslError(start, "expected integer");
      return std::stol(s_.substr(start, pos_ - start));
    }
    return expr();
  }

  SimpleGraph expr() {
    skip();
    std::size_t start = pos_;
    while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
    std::string name = s_.substr(start, pos_ - start);
    if (name.empty()) throw DslError(start, "expected construction name");
    if (!eat('(')) throw DslError(pos_, "expected '('");
    std::vector<Arg> args;
    if (!eat(')')) {
      do args.push_back(arg());
      while (eat(','));
      if (!eat(')')) throw DslError(pos_, "expected ')'");
    }
    try {
      return apply(name, args, start);
    } catch (const GraphError& e) {
      throw DslError(start, e.what());
    }
  }

  static long as_int(const Arg& a, std::size_t at) {
    if (auto p = std::get_if<long>(&a)) return *p;
    throw DslError(at, "expected integer argument");
  }
  static const SimpleGraph& as_graph(const Arg& a, std::size_t at) {
    if (auto p = std::get_if<SimpleGraph>(&a)) return *p;
    throw DslError(at, "expected graph argument");
  }

  static SimpleGraph apply(const std::string& name, const std::vector<Arg>& args, std::size_t at) {
    auto arity = [&](std::size_t n) {
      if (args.size() != n) throw DslError(at, name + " takes " + std::to_string(n) + " argument(s)");
    };
    auto small = [&](long x) {
      if (x < -1000000 || x > 1000000) throw DslError(at, "parameter out of range");
      return static_cast<int>(x);
    };
    if (name == "cycle") return arity(1), cycle_graph(small(as_int(args[0], at)));
    if (name == "path") return arity(1), path_graph(small(as_int(args[0], at)));
    if (name == "complete") return arity(1), complete_graph(small(as_int(args[0], at)));
    if (name == "wheel") return arity(1), wheel_graph(small(as_int(args[0], at)));
    if (name == "star") return arity(1), star_graph(small(as_int(args[0], at)));
    if (name == "theta") {
      std::vector<int> lengths;
      for (const Arg& a : args) lengths.push_back(small(as_int(a, at)));
      return theta_graph(lengths);
    }
    if (name == "edge_glue") return arity(2), edge_glue(as_graph(args[0], at), as_graph(args[1], at));
    if (name == "edge_glue_k")
      return arity(3), edge_glue_k(as_graph(args[0], at), as_graph(args[1], at), small(as_int(args[2], at)));
    if (name == "vertex_glue") return arity(2), vertex_glue(as_graph(args[0], at), as_graph(args[1], at));
    if (name == "bridge") return arity(2), bridge(as_graph(args[0], at), as_graph(args[1], at));
    throw DslError(at, "unknown construction '" + name + "'");
  }

  const std::string& s_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline SimpleGraph build(const std::string& expression) { return detail::DslParser(expression).parse(); }

}  // namespace chromkh

#pragma once

#include <algorithm>
#include <array>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "graph.hpp"

namespace chromkh {

class PdError : public std::runtime_error {
 public:
  PdError(int line, const std::string& what)
      : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

/// X[i,j,k,l]: arc labels counterclockwise, i the incoming under-arc. The
/// over strand runs j-l; sign +1 when it runs from l to j.
struct Crossing {
  std::array<int, 4> x{};
  int sign = 0;
  friend bool operator==(const Crossing&, const Crossing&) = default;
};

struct LinkDiagram {
  std::vector<Crossing> crossings;
  int free_circles = 0;  ///< crossingless unknot components

  int size() const { return static_cast<int>(crossings.size()); }
  int c_plus() const {
    int n = 0;
    for (const Crossing& c : crossings) n += c.sign > 0;
    return n;
  }
  int c_minus() const { return size() - c_plus(); }
  friend bool operator==(const LinkDiagram&, const LinkDiagram&) = default;
};

namespace detail {

/// Sorted distinct arc labels; throws unless each appears exactly twice.
inline std::vector<int> arc_labels(const LinkDiagram& d) {
  std::map<int, int> count;
  for (const Crossing& c : d.crossings)
    for (int a : c.x) ++count[a];
  std::vector<int> labels;
  for (auto [a, k] : count) {
    if (k != 2) throw PdError(0, "arc " + std::to_string(a) + " appears " + std::to_string(k) + " times");
    labels.push_back(a);
  }
  return labels;
}

/// Crossing signs from the orientation implied by the under-arcs. A
/// component that never passes under is oriented by label succession.
inline std::vector<int> infer_signs(const LinkDiagram& d) {
  const int n = d.size();
  std::map<int, std::vector<std::pair<int, int>>> where;
  for (int c = 0; c < n; ++c)
    for (int p = 0; p < 4; ++p) where[d.crossings[c].x[p]].push_back({c, p});
  auto other_end = [&](int c, int p) {
    const auto& w = where.at(d.crossings[c].x[p]);
    return w[0] == std::make_pair(c, p) ? w[1] : w[0];
  };
  std::vector<int> over_entry(static_cast<std::size_t>(n), -1);
  std::vector<std::array<char, 2>> seen(static_cast<std::size_t>(n), {0, 0});
  for (int c0 = 0; c0 < n; ++c0)
    for (int s0 = 0; s0 < 2; ++s0) {
      if (seen[c0][s0]) continue;
      std::vector<std::pair<int, int>> entries;  // (crossing, entry position)
      int c = c0, p = s0;
      do {
        seen[c][p % 2] = 1;
        entries.push_back({c, p});
        auto [nc, np] = other_end(c, (p + 2) % 4);
        c = nc;
        p = np;
      } while (!(c == c0 && p == s0) && entries.size() <= static_cast<std::size_t>(4 * n));
      if (!(c == c0 && p == s0)) throw PdError(0, "strands do not close up");
      int flip = -1;
      for (auto [cc, pp] : entries)
        if (pp % 2 == 0) {
          int f = pp == 0 ? 0 : 1;
          if (flip >= 0 && f != flip) throw PdError(0, "under-arcs give inconsistent orientation");
          flip = f;
        }
      if (flip < 0) {
        // over-only component: the over strand runs l -> j when j follows l
        auto [cc, pp] = entries.front();
        const auto& x = d.crossings[cc].x;
        bool l_to_j = x[1] - x[3] == 1 || x[3] - x[1] > 1;
        int entry_if_unflipped = pp;
        flip = ((entry_if_unflipped == 3) == l_to_j) ? 0 : 1;
      }
      for (auto [cc, pp] : entries)
        if (pp % 2 == 1) over_entry[cc] = flip ? (pp + 2) % 4 : pp;
    }
  std::vector<int> signs(static_cast<std::size_t>(n));
  for (int c = 0; c < n; ++c) signs[c] = over_entry[c] == 3 ? 1 : -1;
  return signs;
}

inline std::vector<std::string> tokens_of(const std::string& line) {
  std::string s = line;
  for (char& ch : s)
    if (ch == ',' || ch == '[' || ch == ']' || ch == '(' || ch == ')' || ch == '\t') ch = ' ';
  std::istringstream in(s);
  std::vector<std::string> t;
  for (std::string w; in >> w;) t.push_back(w);
  return t;
}

}  // namespace detail

/// Checks labels and fills in missing signs from the orientation.
inline void validate_diagram(LinkDiagram& d) {
  detail::arc_labels(d);
  bool missing = std::any_of(d.crossings.begin(), d.crossings.end(), [](const Crossing& c) { return c.sign == 0; });
  if (!missing) return;
  auto s = detail::infer_signs(d);
  for (int c = 0; c < d.size(); ++c)
    if (d.crossings[c].sign == 0) d.crossings[c].sign = s[c];
}

/// One crossing per line, `X a b c d [+|-]`; brackets and commas are
/// accepted (`X[1,5,2,4]`). A line `O` adds a crossingless unknot
/// component. `#` starts a comment.
inline LinkDiagram parse_pd(const std::string& text) {
  LinkDiagram d;
  std::istringstream in(text);
  std::string line;
  int ln = 0;
  while (std::getline(in, line)) {
    ++ln;
    if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
    auto t = detail::tokens_of(line);
    if (t.empty()) continue;
    if (t[0] == "O" && t.size() == 1) {
      ++d.free_circles;
      continue;
    }
    if (t[0] != "X") throw PdError(ln, "expected 'X' or 'O'");
    if (t.size() != 5 && t.size() != 6) throw PdError(ln, "crossing needs four arc labels");
    Crossing c;
    for (int k = 0; k < 4; ++k) {
      std::size_t used = 0;
      try {
        c.x[k] = std::stoi(t[1 + k], &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != t[1 + k].size()) throw PdError(ln, "bad arc label '" + t[1 + k] + "'");
    }
    if (t.size() == 6) {
      if (t[5] == "+")
        c.sign = 1;
      else if (t[5] == "-")
        c.sign = -1;
      else
        throw PdError(ln, "sign must be + or -");
    }
    d.crossings.push_back(c);
  }
  if (d.crossings.empty() && d.free_circles == 0) throw PdError(0, "empty diagram");
  validate_diagram(d);
  return d;
}

inline std::string serialize_pd(const LinkDiagram& d) {
  std::ostringstream out;
  for (int k = 0; k < d.free_circles; ++k) out << "O\n";
  for (const Crossing& c : d.crossings)
    out << "X " << c.x[0] << ' ' << c.x[1] << ' ' << c.x[2] << ' ' << c.x[3] << ' ' << (c.sign > 0 ? '+' : '-') << '\n';
  return out.str();
}

inline nlohmann::json to_json(const LinkDiagram& d) {
  nlohmann::json js;
  js["crossings"] = nlohmann::json::array();
  for (const Crossing& c : d.crossings) js["crossings"].push_back({{"pd", c.x}, {"sign", c.sign}});
  js["free_circles"] = d.free_circles;
  js["c_plus"] = d.c_plus();
  js["c_minus"] = d.c_minus();
  return js;
}

/// Over and under exchanged at every crossing; signs flip.
inline LinkDiagram mirror(const LinkDiagram& d) {
  LinkDiagram r = d;
  for (Crossing& c : r.crossings) {
    const auto x = c.x;
    c.x = c.sign > 0 ? std::array<int, 4>{x[3], x[0], x[1], x[2]} : std::array<int, 4>{x[1], x[2], x[3], x[0]};
    c.sign = -c.sign;
  }
  return r;
}

// ---------------------------------------------------------------------------
// States

/// Arc pairs joined at crossing c by smoothing b (0: (i,j),(k,l); 1: (i,l),(j,k)).
inline std::array<std::pair<int, int>, 2> smoothing(const Crossing& c, int b) {
  const auto& x = c.x;
  if (b == 0) return {{{x[0], x[1]}, {x[2], x[3]}}};
  return {{{x[0], x[3]}, {x[1], x[2]}}};
}

struct CirclePartition {
  int count = 0;
  std::map<int, int> circle_of_arc;
};

/// Circles of the state `bits` (one entry 0/1 per crossing), numbered by
/// smallest arc label; free circles come last.
inline CirclePartition resolve(const LinkDiagram& d, const std::vector<int>& bits) {
  if (static_cast<int>(bits.size()) != d.size()) throw std::invalid_argument("state length differs from crossing count");
  auto labels = detail::arc_labels(d);
  std::map<int, int> idx;
  for (int k = 0; k < static_cast<int>(labels.size()); ++k) idx[labels[k]] = k;
  std::vector<int> parent(labels.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  };
  for (int c = 0; c < d.size(); ++c) {
    if (bits[c] != 0 && bits[c] != 1) throw std::invalid_argument("state entries must be 0 or 1");
    for (auto [a, b] : smoothing(d.crossings[c], bits[c])) {
      int ra = find(idx[a]), rb = find(idx[b]);
      if (ra != rb) parent[std::max(ra, rb)] = std::min(ra, rb);
    }
  }
  CirclePartition cp;
  std::map<int, int> root_to_circle;
  for (int k = 0; k < static_cast<int>(labels.size()); ++k) {
    int r = find(k);
    auto [it, fresh] = root_to_circle.try_emplace(r, cp.count);
    if (fresh) ++cp.count;
    cp.circle_of_arc[labels[k]] = it->second;
  }
  cp.count += d.free_circles;
  return cp;
}

/// One vertex per circle of the state, one edge per crossing whose two
/// smoothing arcs lie on distinct circles; parallel edges collapse.
inline SimpleGraph state_graph(const LinkDiagram& d, std::vector<int> bits = {}) {
  if (bits.empty()) bits.assign(static_cast<std::size_t>(d.size()), 0);
  CirclePartition cp = resolve(d, bits);
  SimpleGraph g(cp.count);
  for (int c = 0; c < d.size(); ++c) {
    auto pr = smoothing(d.crossings[c], bits[c]);
    int a = cp.circle_of_arc.at(pr[0].first), b = cp.circle_of_arc.at(pr[1].first);
    if (a != b && !g.has_edge(a, b)) g.add_edge(a, b);
  }
  return g;
}

/// Girth of the state graph before parallel edges collapse: 1 with a loop,
/// 2 with a repeated pair of circles, else the girth of state_graph.
inline int state_girth(const LinkDiagram& d, std::vector<int> bits = {}) {
  if (bits.empty()) bits.assign(static_cast<std::size_t>(d.size()), 0);
  CirclePartition cp = resolve(d, bits);
  std::set<std::pair<int, int>> seen;
  bool parallel = false;
  for (int c = 0; c < d.size(); ++c) {
    auto pr = smoothing(d.crossings[c], bits[c]);
    int a = cp.circle_of_arc.at(pr[0].first), b = cp.circle_of_arc.at(pr[1].first);
    if (a == b) return 1;
    if (!seen.insert({std::min(a, b), std::max(a, b)}).second) parallel = true;
  }
  return parallel ? 2 : girth(state_graph(d, bits));
}

// ---------------------------------------------------------------------------
// Diagrams from signed plane graphs

/// Plane multigraph with a rotation system: rotation[v] lists half-edges
/// counterclockwise, half-edge 2e at edges[e].first and 2e+1 at
/// edges[e].second. Negative edges get the opposite crossing.
struct PlaneGraph {
  int vertices = 0;
  std::vector<std::pair<int, int>> edges;
  std::vector<int> sign;
  std::vector<std::vector<int>> rotation;

  int add_vertex() {
    rotation.emplace_back();
    return vertices++;
  }
  int add_edge(int a, int b, int s = 1) {
    edges.push_back({a, b});
    sign.push_back(s);
    return static_cast<int>(edges.size()) - 1;
  }
};

/// Medial link diagram of a plane graph. With all edges positive the
/// all-0 state has one circle around each vertex, so state_graph returns
/// the graph itself (parallel edges collapsed). Each link component is
/// oriented to make c+ as small as possible.
inline LinkDiagram diagram_from_plane_graph(const PlaneGraph& pg) {
  const int E = static_cast<int>(pg.edges.size());
  if (E == 0) {
    LinkDiagram d;
    d.free_circles = pg.vertices > 0 ? pg.vertices : 1;
    return d;
  }
  // ports per crossing counterclockwise: 0 NE, 1 NW, 2 SW, 3 SE, with the
  // edge running west (first end) to east (second end)
  auto ccw_port = [](int h) { return h % 2 == 0 ? 1 : 3; };
  auto cw_port = [](int h) { return h % 2 == 0 ? 2 : 0; };
  std::vector<std::array<int, 4>> port_arc(static_cast<std::size_t>(E));
  std::vector<std::array<std::pair<int, int>, 2>> arc_ends;
  for (int v = 0; v < pg.vertices; ++v) {
    const auto& r = pg.rotation[v];
    for (std::size_t t = 0; t < r.size(); ++t) {
      int h = r[t], h2 = r[(t + 1) % r.size()];
      int a = static_cast<int>(arc_ends.size());
      arc_ends.push_back({{{h / 2, ccw_port(h)}, {h2 / 2, cw_port(h2)}}});
      port_arc[h / 2][ccw_port(h)] = a;
      port_arc[h2 / 2][cw_port(h2)] = a;
    }
  }
  if (static_cast<int>(arc_ends.size()) != 2 * E) throw std::invalid_argument("rotation system does not cover every half-edge");
  auto under_port = [&](int e) { return pg.sign[e] > 0 ? 1 : 0; };  // under strand: p and p+2

  // trace components: list of (crossing, entry port)
  std::vector<std::vector<std::pair<int, int>>> comps;
  std::vector<std::array<char, 2>> seen(static_cast<std::size_t>(E), {0, 0});
  for (int e0 = 0; e0 < E; ++e0)
    for (int s0 = 0; s0 < 2; ++s0) {
      if (seen[e0][s0]) continue;
      std::vector<std::pair<int, int>> walk;
      int e = e0, p = s0;
      do {
        seen[e][p % 2] = 1;
        walk.push_back({e, p});
        int out = (p + 2) % 4;
        const auto& ends = arc_ends[port_arc[e][out]];
        auto nxt = ends[0] == std::make_pair(e, out) ? ends[1] : ends[0];
        e = nxt.first;
        p = nxt.second;
      } while (!(e == e0 && p == s0));
      comps.push_back(std::move(walk));
    }

  auto c_plus_for = [&](std::uint64_t flips, std::vector<int>* under_in, std::vector<int>* over_in) {
    std::vector<int> ui(static_cast<std::size_t>(E), -1), oi(static_cast<std::size_t>(E), -1);
    for (std::size_t k = 0; k < comps.size(); ++k)
      for (auto [e, p] : comps[k]) {
        int entry = ((flips >> k) & 1u) ? (p + 2) % 4 : p;
        if (p % 2 == under_port(e) % 2)
          ui[e] = entry;
        else
          oi[e] = entry;
      }
    int cp = 0;
    for (int e = 0; e < E; ++e) cp += oi[e] == (ui[e] + 3) % 4;
    if (under_in) *under_in = ui;
    if (over_in) *over_in = oi;
    return cp;
  };
  std::uint64_t best = 0;
  if (comps.size() > 1 && comps.size() <= 16) {
    int best_cp = c_plus_for(0, nullptr, nullptr);
    for (std::uint64_t f = 2; f < (std::uint64_t{1} << comps.size()); f += 2) {
      int cp = c_plus_for(f, nullptr, nullptr);
      if (cp < best_cp) best_cp = cp, best = f;
    }
  }
  std::vector<int> ui, oi;
  c_plus_for(best, &ui, &oi);

  // number arcs along each oriented component
  std::vector<int> label(arc_ends.size(), 0);
  int next = 1;
  for (std::size_t k = 0; k < comps.size(); ++k) {
    std::vector<std::pair<int, int>> walk = comps[k];
    if ((best >> k) & 1u) {
      std::reverse(walk.begin(), walk.end());
      for (auto& [e, p] : walk) p = (p + 2) % 4;
    }
    for (auto [e, p] : walk) {
      int a = port_arc[e][(p + 2) % 4];
      if (!label[a]) label[a] = next++;
    }
  }
  LinkDiagram d;
  for (int e = 0; e < E; ++e) {
    Crossing c;
    const int i = ui[e];
    for (int t = 0; t < 4; ++t) c.x[t] = label[port_arc[e][(i + t) % 4]];
    c.sign = oi[e] == (i + 3) % 4 ? 1 : -1;
    d.crossings.push_back(c);
  }
  return d;
}

namespace detail {

/// Two-terminal plane graph under construction: terminal half-edges kept
/// counterclockwise (s: bottom to top, t: top to bottom).
struct TwoTerminal {
  PlaneGraph g;
  int s = 0, t = 0;
};

inline TwoTerminal path_piece(int length, int sign) {
  TwoTerminal tt;
  int prev = tt.g.add_vertex();
  tt.s = prev;
  for (int k = 0; k < length; ++k) {
    int v = tt.g.add_vertex();
    int e = tt.g.add_edge(prev, v, sign);
    tt.g.rotation[prev].push_back(2 * e);
    tt.g.rotation[v].push_back(2 * e + 1);
    prev = v;
  }
  tt.t = prev;
  return tt;
}

/// Copies b into a, merging b's terminals with the given vertices of a
/// (-1: fresh vertex). Returns b's vertex map.
inline std::vector<int> absorb(PlaneGraph& a, const PlaneGraph& b, int bs, int as, int bt, int at) {
  std::vector<int> map(static_cast<std::size_t>(b.vertices), -1);
  map[bs] = as;
  map[bt] = at;
  for (int v = 0; v < b.vertices; ++v)
    if (map[v] < 0) map[v] = a.add_vertex();
  const int off = static_cast<int>(a.edges.size());
  for (std::size_t e = 0; e < b.edges.size(); ++e) a.add_edge(map[b.edges[e].first], map[b.edges[e].second], b.sign[e]);
  for (int v = 0; v < b.vertices; ++v)
    if (v != bs && v != bt)
      for (int h : b.rotation[v]) a.rotation[map[v]].push_back(h + 2 * off);
  return map;
}

inline std::vector<int> shifted_halves(const std::vector<int>& r, int off) {
  std::vector<int> o;
  for (int h : r) o.push_back(h + 2 * off);
  return o;
}

/// b drawn above a, sharing both terminals.
inline TwoTerminal parallel(TwoTerminal a, const TwoTerminal& b) {
  const int off = static_cast<int>(a.g.edges.size());
  absorb(a.g, b.g, b.s, a.s, b.t, a.t);
  auto& rs = a.g.rotation[a.s];
  auto bs = shifted_halves(b.g.rotation[b.s], off);
  rs.insert(rs.end(), bs.begin(), bs.end());
  auto& rt = a.g.rotation[a.t];
  auto bt = shifted_halves(b.g.rotation[b.t], off);
  rt.insert(rt.begin(), bt.begin(), bt.end());
  return a;
}

/// a followed by b, a's t merged with b's s.
inline TwoTerminal series(TwoTerminal a, const TwoTerminal& b) {
  const int off = static_cast<int>(a.g.edges.size());
  auto map = absorb(a.g, b.g, b.s, a.t, b.t, -1);
  auto& rm = a.g.rotation[a.t];
  auto bs = shifted_halves(b.g.rotation[b.s], off);
  rm.insert(rm.end(), bs.begin(), bs.end());
  a.g.rotation[map[b.t]] = shifted_halves(b.g.rotation[b.t], off);
  a.t = map[b.t];
  return a;
}

/// Identifies the two terminals.
inline PlaneGraph close_terminals(const TwoTerminal& tt) {
  PlaneGraph g;
  std::vector<int> map(static_cast<std::size_t>(tt.g.vertices), -1);
  for (int v = 0; v < tt.g.vertices; ++v)
    if (v != tt.t) map[v] = g.add_vertex();
  map[tt.t] = map[tt.s];
  for (std::size_t e = 0; e < tt.g.edges.size(); ++e)
    g.add_edge(map[tt.g.edges[e].first], map[tt.g.edges[e].second], tt.g.sign[e]);
  for (int v = 0; v < tt.g.vertices; ++v) {
    if (v == tt.t) continue;
    g.rotation[map[v]] = tt.g.rotation[v];
  }
  auto& r = g.rotation[map[tt.s]];
  r.insert(r.end(), tt.g.rotation[tt.t].begin(), tt.g.rotation[tt.t].end());
  return g;
}

}  // namespace detail

/// u = 0 and w = 1 joined by paths of the given lengths, in the plane in
/// list order.
inline PlaneGraph plane_multibridge(const std::vector<int>& lengths, int sign = 1) {
  if (lengths.empty()) throw std::invalid_argument("need at least one path");
  detail::TwoTerminal acc = detail::path_piece(lengths[0], sign);
  for (std::size_t k = 1; k < lengths.size(); ++k) acc = detail::parallel(acc, detail::path_piece(lengths[k], sign));
  // renumber so the terminals are 0 and 1
  PlaneGraph& g = acc.g;
  std::vector<int> perm(static_cast<std::size_t>(g.vertices));
  std::iota(perm.begin(), perm.end(), 0);
  std::swap(perm[1], perm[acc.t]);
  PlaneGraph r;
  r.vertices = g.vertices;
  r.rotation.resize(static_cast<std::size_t>(g.vertices));
  for (std::size_t e = 0; e < g.edges.size(); ++e) r.add_edge(perm[g.edges[e].first], perm[g.edges[e].second], g.sign[e]);
  for (int v = 0; v < g.vertices; ++v) r.rotation[perm[v]] = g.rotation[v];
  return r;
}

/// Alternating diagram of the pretzel link (-a_1, ..., -a_k): state graph
/// theta(a_1, ..., a_k).
inline LinkDiagram pretzel_diagram(const std::vector<int>& a) {
  if (a.size() < 2) throw std::invalid_argument("pretzel needs at least two strands");
  for (int x : a)
    if (x < 1) throw std::invalid_argument("pretzel parameters must be >= 1");
  return diagram_from_plane_graph(plane_multibridge(a));
}

/// Diagram read off Conway notation a_1 a_2 ... a_n literally. The last
/// twist is a path, earlier ones alternate parallel/series; negative
/// entries flip their crossings, so mixed signs give a non-alternating
/// diagram. [n] is the (2,n) torus link with state graph P_n; [-P, Q] has
/// state graph P_P * P_Q.
inline LinkDiagram conway_diagram(const std::vector<int>& conway) {
  if (conway.empty()) throw std::invalid_argument("empty Conway notation");
  for (int a : conway)
    if (a == 0) throw std::invalid_argument("Conway entries must be nonzero");
  auto piece = [](int a, bool path) {
    int s = a > 0 ? 1 : -1, n = std::abs(a);
    if (path) return detail::path_piece(n, s);
    detail::TwoTerminal acc = detail::path_piece(1, s);
    for (int k = 1; k < n; ++k) acc = detail::parallel(acc, detail::path_piece(1, s));
    return acc;
  };
  const int n = static_cast<int>(conway.size());
  detail::TwoTerminal acc = piece(conway[n - 1], true);
  for (int k = n - 2; k >= 0; --k) {
    bool as_path = (n - 1 - k) % 2 == 0;
    acc = as_path ? detail::series(acc, piece(conway[k], true)) : detail::parallel(acc, piece(conway[k], false));
  }
  PlaneGraph g = n % 2 == 1 ? detail::close_terminals(acc) : acc.g;
  return diagram_from_plane_graph(g);
}

/// Alternating diagram of the rational link -P Q (P + Q - 1 crossings),
/// state graph theta(P-1, 1, Q-1) = P_P | P_Q.
inline LinkDiagram rational_diagram(int P, int Q) {
  if (P < 2 || Q < 2) throw std::invalid_argument("rational parameters must be >= 2");
  return diagram_from_plane_graph(plane_multibridge({P - 1, 1, Q - 1}));
}

/// Standard diagram of the (2,n) torus link.
inline LinkDiagram torus_diagram(int n) {
  if (n < 1) throw std::invalid_argument("torus link needs n >= 1");
  return conway_diagram({n});
}

/// Four n-cycles sharing one vertex; state graph P_n * P_n * P_n * P_n.
inline LinkDiagram ld_diagram(int n) {
  if (n < 2) throw std::invalid_argument("LD_n needs n >= 2");
  PlaneGraph g;
  int hub = g.add_vertex();
  for (int c = 0; c < 4; ++c) {
    int first = -1, prev = hub;
    for (int k = 1; k < n; ++k) {
      int v = g.add_vertex();
      int e = g.add_edge(prev, v);
      if (prev == hub) first = 2 * e;
      else g.rotation[prev].push_back(2 * e);
      g.rotation[v].push_back(2 * e + 1);
      prev = v;
    }
    int e = g.add_edge(prev, hub);
    g.rotation[prev].push_back(2 * e);
    g.rotation[hub].push_back(first);
    g.rotation[hub].push_back(2 * e + 1);
  }
  return diagram_from_plane_graph(g);
}

}  // namespace chromkh

#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <mutex>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "chromatic_complex.hpp"
#include "chrompoly.hpp"
#include "closedform.hpp"
#include "fixtures.hpp"
#include "graph.hpp"
#include "graph_dsl.hpp"
#include "graph_enum.hpp"
#include "khovanov.hpp"
#include "link_diagram.hpp"

namespace chromkh {

using Range = std::pair<int, int>;  ///< inclusive

struct VerifyConfig {
  std::optional<int> max_v;   ///< graph sweeps; the top vertex count 7 is sampled
  int sample = 200;           ///< graphs drawn at v = 7
  std::uint64_t seed = 1;
  std::optional<Range> s_range, t_range, n_range;
  std::optional<std::vector<int>> pretzel;
  std::optional<std::pair<int, int>> rational;
  std::vector<int> ms;        ///< algebras for polygon / width
  int workers = 1;
};

struct VerifyRecord {
  std::string theorem;
  std::string instance;
  nlohmann::json closed_form;
  nlohmann::json oracle;
  bool match = false;
  nlohmann::json diff;  ///< null when matching
};

inline nlohmann::json to_json(const VerifyRecord& r) {
  nlohmann::json j{{"theorem", r.theorem},
                   {"instance", r.instance},
                   {"closed_form", r.closed_form},
                   {"oracle", r.oracle},
                   {"match", r.match}};
  if (!r.match && !r.diff.is_null()) j["diff"] = r.diff;
  return j;
}

struct VerifyReport {
  std::vector<VerifyRecord> records;

  bool all_match() const {
    return std::all_of(records.begin(), records.end(), [](const VerifyRecord& r) { return r.match; });
  }
  std::size_t mismatches() const {
    return static_cast<std::size_t>(
        std::count_if(records.begin(), records.end(), [](const VerifyRecord& r) { return !r.match; }));
  }
  nlohmann::json to_json() const {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& r : records) arr.push_back(chromkh::to_json(r));
    return arr;
  }
};

inline const std::vector<std::string>& theorem_ids() {
  static const std::vector<std::string> ids{"polygon", "rankdiag", "4thkh",   "polyedge", "glueshift",      "bridge",
                                            "twocycle", "patterns2", "pretzel", "rational", "span",           "width",
                                            "det",     "density",   "jones4",  "correspondence", "2tor", "lemmasum"};
  return ids;
}

// ---------------------------------------------------------------------------
// Homology cache keyed by isomorphism class

class HomologyCache {
 public:
  BigradedGroups get(const SimpleGraph& g, int m, int workers = 1, std::optional<int> i_max = std::nullopt) {
    auto key = canonical_key(g);
    if (!key) return compute(g, m, workers, i_max);
    std::tuple<CanonicalKey, int, int> k{*key, m, i_max.value_or(-1)};
    {
      std::lock_guard<std::mutex> lock(mu_);
      auto it = memo_.find(k);
      if (it != memo_.end()) return it->second;
    }
    BigradedGroups h = compute(g, m, workers, i_max);
    std::lock_guard<std::mutex> lock(mu_);
    memo_.emplace(std::move(k), h);
    return h;
  }

 private:
  static BigradedGroups compute(const SimpleGraph& g, int m, int workers, std::optional<int> i_max) {
    CubeOptions o;
    o.workers = workers;
    o.i_max = i_max;
    return chromatic_homology(g, m, o);
  }
  std::mutex mu_;
  std::map<std::tuple<CanonicalKey, int, int>, BigradedGroups> memo_;
};

inline HomologyCache& homology_cache() {
  static HomologyCache c;
  return c;
}

// ---------------------------------------------------------------------------
// Helpers

namespace detail {

inline std::string graph_label(const SimpleGraph& g) {
  std::string s = "v" + std::to_string(g.vertex_count()) + ":";
  for (int k = 0; k < g.edge_count(); ++k)
    s += (k ? "," : "") + std::to_string(g.edge(k).a) + "-" + std::to_string(g.edge(k).b);
  return s;
}

inline nlohmann::json group_diff(const BigradedGroups& a, const BigradedGroups& b, const std::string& ik = "i",
                                 const std::string& jk = "j") {
  std::set<std::pair<int, int>> keys;
  for (auto& [k, g] : a.groups()) keys.insert(k);
  for (auto& [k, g] : b.groups()) keys.insert(k);
  nlohmann::json d = nlohmann::json::array();
  for (auto k : keys)
    if (!(a.at(k.first, k.second) == b.at(k.first, k.second)))
      d.push_back({{ik, k.first},
                   {jk, k.second},
                   {"closed_form", a.at(k.first, k.second).str()},
                   {"oracle", b.at(k.first, k.second).str()}});
  return d;
}

inline VerifyRecord groups_record(const std::string& thm, const std::string& inst, const BigradedGroups& cf,
                                  const BigradedGroups& oracle) {
  VerifyRecord r{thm, inst, to_json(cf), to_json(oracle), cf == oracle, nullptr};
  if (!r.match) r.diff = group_diff(cf, oracle);
  return r;
}

inline std::vector<int> exponents_on(const TorsionPattern& x, int first, int last) {
  std::vector<int> e;
  for (int i = first; i <= last; ++i) e.push_back(x.at(i));
  return e;
}

inline nlohmann::json exponent_diff(const std::vector<int>& cf, const std::vector<int>& obs, int first) {
  nlohmann::json d = nlohmann::json::array();
  for (std::size_t k = 0; k < cf.size() && k < obs.size(); ++k)
    if (cf[k] != obs[k]) d.push_back({{"i", first + static_cast<int>(k)}, {"closed_form", cf[k]}, {"oracle", obs[k]}});
  return d;
}

/// Connected graphs with lo <= v <= hi; vertex counts of 7 and more are
/// sampled (seeded shuffle) down to cfg.sample graphs.
inline std::vector<SimpleGraph> sweep_graphs(int lo, int hi, const VerifyConfig& cfg) {
  std::vector<SimpleGraph> out;
  for (int v = std::max(lo, 1); v <= hi; ++v) {
    auto gs = connected_graphs(v);
    if (v >= 7 && static_cast<int>(gs.size()) > cfg.sample) {
      std::mt19937_64 rng(cfg.seed + static_cast<std::uint64_t>(v));
      std::shuffle(gs.begin(), gs.end(), rng);
      gs.resize(static_cast<std::size_t>(cfg.sample));
    }
    out.insert(out.end(), gs.begin(), gs.end());
  }
  return out;
}

inline Range range_or(const std::optional<Range>& r, Range d) { return r ? *r : d; }

/// Z_2 exponent summed over q at Khovanov degree p.
inline int kh_torsion_at(const BigradedGroups& kh, int p) {
  auto t = kh.torsion_by_degree(2);
  return t.count(p) ? t[p] : 0;
}

/// Glues P_n along edge (u, w) of g; new vertices are appended.
inline SimpleGraph glue_cycle_on_edge(const SimpleGraph& g, int edge, int n) {
  SimpleGraph out(g.vertex_count() + n - 2, g.edges());
  const Edge e = g.edge(edge);
  int prev = e.a;
  for (int k = 0; k < n - 2; ++k) {
    int x = g.vertex_count() + k;
    out.add_edge(prev, x);
    prev = x;
  }
  out.add_edge(prev, e.b);
  return out;
}

/// Outerplanarity for small graphs: each block with three or more vertices
/// needs a Hamiltonian cycle whose chords pairwise do not cross.
inline bool block_outerplanar(int n, const std::vector<Edge>& es) {
  if (n <= 3) return true;
  std::vector<std::vector<char>> adj(static_cast<std::size_t>(n), std::vector<char>(static_cast<std::size_t>(n), 0));
  for (const Edge& e : es) adj[e.a][e.b] = adj[e.b][e.a] = 1;
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  do {
    if (perm[0] != 0) break;
    bool ham = true;
    for (int k = 0; k < n && ham; ++k) ham = adj[perm[k]][perm[(k + 1) % n]];
    if (!ham) continue;
    std::vector<int> pos(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) pos[perm[k]] = k;
    std::vector<std::pair<int, int>> chords;
    for (const Edge& e : es) {
      int a = std::min(pos[e.a], pos[e.b]), b = std::max(pos[e.a], pos[e.b]);
      if (b - a != 1 && b - a != n - 1) chords.push_back({a, b});
    }
    bool ok = true;
    for (std::size_t x = 0; x < chords.size() && ok; ++x)
      for (std::size_t y = x + 1; y < chords.size() && ok; ++y) {
        auto [a, b] = chords[x];
        auto [c, d] = chords[y];
        if ((a < c && c < b && b < d) || (c < a && a < d && d < b)) ok = false;
      }
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

inline bool is_outerplanar(const SimpleGraph& g) {
  auto dec = blocks(g);
  for (int b = 0; b < dec.block_count; ++b) {
    std::map<int, int> local;
    std::vector<Edge> es;
    for (int e = 0; e < g.edge_count(); ++e) {
      if (dec.edge_block[e] != b) continue;
      for (int x : {g.edge(e).a, g.edge(e).b})
        if (!local.count(x)) local[x] = static_cast<int>(local.size());
      es.emplace_back(local[g.edge(e).a], local[g.edge(e).b]);
    }
    if (!block_outerplanar(static_cast<int>(local.size()), es)) return false;
  }
  return true;
}

/// Torsion width: number of slope-one diagonals between the extreme torsion
/// groups, inclusive.
inline int torsion_width(const BigradedGroups& h) {
  int lo = INT_MAX, hi = INT_MIN;
  for (auto& [k, g] : h.groups()) {
    if (g.torsion.empty()) continue;
    lo = std::min(lo, k.first + k.second);
    hi = std::max(hi, k.first + k.second);
  }
  return lo > hi ? 0 : hi - lo + 1;
}

inline std::vector<std::vector<int>> default_pretzels() {
  return {{2, 2, 2}, {2, 2, 3}, {2, 2, 4}, {2, 2, 5}, {3, 2, 3}, {3, 2, 4}, {3, 2, 5}, {4, 2, 4}};
}

inline std::vector<std::pair<int, int>> default_rationals() {
  std::vector<std::pair<int, int>> r;
  for (int P = 2; P <= 5; ++P)
    for (int Q = P; P + Q <= 10; ++Q) r.push_back({P, Q});
  return r;
}

inline std::string join_ints(const std::vector<int>& a, const char* sep = ",") {
  std::string s;
  for (std::size_t k = 0; k < a.size(); ++k) s += (k ? sep : "") + std::to_string(a[k]);
  return s;
}

inline std::string bool_str(bool b) { return b ? "true" : "false"; }

}  // namespace detail

// ---------------------------------------------------------------------------
// Individual theorem checks

namespace detail {

inline void verify_polygon(const VerifyConfig& cfg, VerifyReport& rep) {
  auto [lo, hi] = range_or(cfg.n_range, {3, 8});
  std::vector<int> ms = cfg.ms.empty() ? std::vector<int>{2, 3} : cfg.ms;
  for (int n = std::max(lo, 3); n <= hi; ++n)
    for (int m : ms)
      rep.records.push_back(groups_record("polygon", "cycle(" + std::to_string(n) + ") m=" + std::to_string(m),
                                          cycle_homology(n, m),
                                          homology_cache().get(cycle_graph(n), m, cfg.workers)));
}

inline nlohmann::json column_json(const HomologyColumn& c) {
  return {{"i", c.i}, {"upper", c.upper.str()}, {"lower", c.lower.str()}};
}

inline void verify_rankdiag(const VerifyConfig& cfg, VerifyReport& rep) {
  for (const SimpleGraph& g : sweep_graphs(3, cfg.max_v.value_or(7), cfg)) {
    auto inv = invariants(g);
    auto h = homology_cache().get(g, 2, cfg.workers);
    auto cols = low_degree_groups(inv);
    nlohmann::json cf = nlohmann::json::array(), orc = nlohmann::json::array();
    bool ok = true;
    for (const auto& c : cols) {
      HomologyColumn o{c.i, h.at(c.i, inv.v - c.i), h.at(c.i, inv.v - c.i - 1)};
      cf.push_back(column_json(c));
      orc.push_back(column_json(o));
      ok = ok && o == c;
    }
    VerifyRecord r{"rankdiag", graph_label(g), cf, orc, ok, nullptr};
    if (!ok) r.diff = {{"closed_form", cf}, {"oracle", orc}};
    rep.records.push_back(std::move(r));
  }
}

inline void verify_4thkh(const VerifyConfig& cfg, VerifyReport& rep) {
  for (const SimpleGraph& g : sweep_graphs(4, cfg.max_v.value_or(7), cfg)) {
    auto inv = invariants(g);
    auto far = farrell_coefficients(inv);
    IntPolynomial p = chromatic_polynomial(g);
    auto h = homology_cache().get(g, 2, cfg.workers);
    auto [r3, t4] = third_fourth_groups(inv);
    nlohmann::json fcf = nlohmann::json::array(), for_ = nlohmann::json::array();
    bool ok = true;
    for (int k = 0; k < 4; ++k) {
      fcf.push_back(far[k].get_str());
      for_.push_back(p.coeff(inv.v - k).get_str());
      ok = ok && far[k] == p.coeff(inv.v - k);
    }
    long o3 = h.at(3, inv.v - 3).free;
    long o4 = h.at(4, inv.v - 4).torsion_of(2);
    ok = ok && o3 == r3 && o4 == t4;
    nlohmann::json cf{{"farrell", fcf}, {"rank_3", r3}, {"z2_4", t4}};
    nlohmann::json orc{{"farrell", for_}, {"rank_3", o3}, {"z2_4", o4}};
    VerifyRecord r{"4thkh", graph_label(g), cf, orc, ok, nullptr};
    if (!ok) r.diff = {{"closed_form", cf}, {"oracle", orc}};
    rep.records.push_back(std::move(r));
  }
}

inline std::vector<std::pair<std::string, SimpleGraph>> gluing_bases() {
  std::vector<std::pair<std::string, SimpleGraph>> b;
  for (int n = 3; n <= 6; ++n) b.push_back({"cycle(" + std::to_string(n) + ")", cycle_graph(n)});
  b.push_back({"theta(2,2,2)", theta_graph({2, 2, 2})});
  return b;
}

inline void verify_gluing(const std::string& thm, const VerifyConfig& cfg, VerifyReport& rep) {
  auto [lo, hi] = range_or(cfg.n_range, {3, 6});
  for (const auto& [name, g] : gluing_bases()) {
    auto inv = invariants(g);
    auto hg = homology_cache().get(g, 2, cfg.workers);
    for (int n = std::max(lo, 3); n <= hi; ++n) {
      const std::string cyc = "cycle(" + std::to_string(n) + ")";
      if (thm == "polyedge") {
        rep.records.push_back(groups_record(thm, "edge_glue(" + name + "," + cyc + ")", edge_glue_homology(hg, inv, n),
                                            homology_cache().get(edge_glue(g, cycle_graph(n)), 2, cfg.workers)));
      } else if (thm == "glueshift") {
        rep.records.push_back(groups_record(thm, "vertex_glue(" + name + "," + cyc + ")",
                                            vertex_glue_homology(hg, inv, n),
                                            homology_cache().get(vertex_glue(g, cycle_graph(n)), 2, cfg.workers)));
      } else {
        rep.records.push_back(groups_record(thm, "bridge(" + name + "," + cyc + ")",
                                            bridge_homology(vertex_glue_homology(hg, inv, n)),
                                            homology_cache().get(bridge(g, cycle_graph(n)), 2, cfg.workers)));
      }
    }
  }
}

inline void verify_twocycle(int glue, const VerifyConfig& cfg, VerifyReport& rep) {
  const int low = glue == 1 ? 3 : 4;
  auto [slo, shi] = range_or(cfg.s_range, {low, 7});
  auto [tlo, thi] = range_or(cfg.t_range, {low, 7});
  const std::string thm = glue == 1 ? "twocycle" : "patterns2";
  for (int s = std::max(slo, low); s <= shi; ++s)
    for (int t = std::max({tlo, low, s}); t <= thi; ++t) {
      SimpleGraph g = glue == 1 ? edge_glue(cycle_graph(s), cycle_graph(t))
                                : edge_glue_k(cycle_graph(s), cycle_graph(t), 2);
      auto inv = invariants(g);
      const int last = inv.v - inv.b - 1;
      auto x = two_cycle_torsion(s, t, glue);
      auto obs = observed_torsion(homology_cache().get(g, 2, cfg.workers), last);
      auto cf = exponents_on(x, 1, last), orc = exponents_on(obs, 1, last);
      VerifyRecord r{thm,
                     (glue == 1 ? "edge_glue(" : "edge_glue_k(") + std::string("cycle(") + std::to_string(s) +
                         "),cycle(" + std::to_string(t) + ")" + (glue == 2 ? ",2)" : ")"),
                     {{"exponents", cf}, {"pattern", x.str()}},
                     {{"exponents", orc}},
                     cf == orc,
                     nullptr};
      if (!r.match) r.diff = exponent_diff(cf, orc, 1);
      rep.records.push_back(std::move(r));
    }
}

/// Pattern against both the chromatic homology of g and the Khovanov
/// torsion of d at p = i - c-.
inline VerifyRecord family_record(const std::string& thm, const std::string& inst, const FamilyPattern& fp,
                                  const SimpleGraph& g, const LinkDiagram& d, int workers) {
  const int last = fp.range_end;
  auto chrom = observed_torsion(homology_cache().get(g, 2, workers), last);
  KhovanovOptions ko;
  ko.workers = workers;
  auto kh = khovanov_homology(d, ko);
  std::vector<int> khx;
  for (int i = 1; i <= last; ++i) khx.push_back(kh_torsion_at(kh, i - d.c_minus()));
  auto cf = exponents_on(fp.x, 1, last), ch = exponents_on(chrom, 1, last);
  VerifyRecord r{thm,
                 inst,
                 {{"case", std::string(1, fp.family_case)}, {"range_end", last}, {"exponents", cf}},
                 {{"chromatic", ch}, {"khovanov", khx}, {"c_plus", d.c_plus()}, {"c_minus", d.c_minus()}},
                 cf == ch && cf == khx,
                 nullptr};
  if (!r.match) r.diff = {{"chromatic", exponent_diff(cf, ch, 1)}, {"khovanov", exponent_diff(cf, khx, 1)}};
  return r;
}

inline void verify_pretzel(const VerifyConfig& cfg, VerifyReport& rep) {
  auto list = cfg.pretzel ? std::vector<std::vector<int>>{*cfg.pretzel} : default_pretzels();
  for (const auto& a : list) {
    if (a.size() != 3) throw std::invalid_argument("pretzel family needs three parameters");
    auto fp = pretzel_torsion(a[0], a[1], a[2]);
    rep.records.push_back(family_record("pretzel", "pretzel(" + join_ints(a) + ")", fp, theta_graph(a),
                                        pretzel_diagram(a), cfg.workers));
  }
}

/// P_P|P_Q with a 2-gon read as a doubled edge.
inline SimpleGraph rational_state_graph(int P, int Q) {
  if (Q == 2) return path_graph(2);
  if (P == 2) return cycle_graph(Q);
  return edge_glue(cycle_graph(P), cycle_graph(Q));
}

inline void verify_rational(const VerifyConfig& cfg, VerifyReport& rep) {
  auto list = cfg.rational ? std::vector<std::pair<int, int>>{*cfg.rational} : default_rationals();
  for (auto [P, Q] : list) {
    auto fp = rational_torsion(P, Q);
    rep.records.push_back(family_record("rational", "rational(-" + std::to_string(P) + " " + std::to_string(Q) + ")",
                                        fp, rational_state_graph(P, Q),
                                        rational_diagram(P, Q),
                                        cfg.workers));
  }
}

inline int hs_torsion(const GraphInvariants& inv) { return span_bounds(inv).kh_torsion_bound; }

inline void verify_span(const VerifyConfig& cfg, VerifyReport& rep) {
  const int top = std::min(cfg.max_v.value_or(6), 6);
  for (const SimpleGraph& g : sweep_graphs(1, top, cfg)) {
    auto inv = invariants(g);
    int s2 = homology_cache().get(g, 2, cfg.workers).hspan();
    rep.records.push_back({"span", "Span2 " + graph_label(g), {{"hspan", inv.v - inv.b}}, {{"hspan", s2}},
                           s2 == inv.v - inv.b, nullptr});
    if (inv.v <= 5) {
      int s3 = homology_cache().get(g, 3, cfg.workers).hspan();
      rep.records.push_back({"span", "SpanM m=3 " + graph_label(g), {{"hspan_at_least", inv.v - inv.b}},
                             {{"hspan", s3}}, s3 >= inv.v - inv.b, nullptr});
    }
  }
  std::vector<NamedDiagram> ds = fixture_diagrams();
  for (const auto& a : default_pretzels()) ds.push_back({"pretzel-" + join_ints(a, "-"), pretzel_diagram(a)});
  for (const auto& [name, d] : ds) {
    if (d.size() == 0) continue;
    KhovanovOptions ko;
    ko.workers = cfg.workers;
    auto kh = khovanov_homology(d, ko);
    const int hst = kh.hspan(true), hs = kh.hspan();
    const std::vector<int> ones(static_cast<std::size_t>(d.size()), 1);
    auto ip = invariants(state_graph(d));
    auto im = invariants(state_graph(d, ones));
    ip.girth = state_girth(d);
    im.girth = state_girth(d, ones);
    const int bp = hs_torsion(ip), bm = hs_torsion(im);
    rep.records.push_back({"span", "KhTor " + name, {{"hs_t_plus", bp}}, {{"hspan_t", hst}}, hst >= bp, nullptr});
    if (bp > 0 && bm > 0)
      rep.records.push_back({"span", "KhTor1 " + name, {{"lower", 2}, {"upper", 4}},
                             {{"hspan", hs}, {"hspan_t", hst}, {"difference", hs - hst}},
                             hs - hst >= 2 && hs - hst <= 4, nullptr});
  }
  for (const auto& a : default_pretzels()) {
    KhovanovOptions ko;
    ko.workers = cfg.workers;
    const int hst = khovanov_homology(pretzel_diagram(a), ko).hspan(true);
    const int bound = pretzel_torsion_span_bound(a);
    rep.records.push_back({"span", "KhPret pretzel(" + join_ints(a) + ")", {{"hspan_t_at_least", bound}},
                           {{"hspan_t", hst}}, hst >= bound, nullptr});
  }
}

inline void verify_width(const VerifyConfig& cfg, VerifyReport& rep) {
  std::vector<int> ms = cfg.ms.empty() ? std::vector<int>{2, 3, 4} : cfg.ms;
  const int top = std::min(cfg.max_v.value_or(5), 6);
  for (const SimpleGraph& g : sweep_graphs(1, top, cfg))
    for (int m : ms) {
      auto bounds = span_bounds(invariants(g));
      int w = homology_cache().get(g, m, cfg.workers).width_chromatic();
      rep.records.push_back({"width", graph_label(g) + " m=" + std::to_string(m), {{"hw", bounds.width(m)}},
                             {{"hw", w}}, w == bounds.width(m), nullptr});
    }
}

/// Every structural fact that follows from the knight-move decomposition.
inline void verify_det(const VerifyConfig& cfg, VerifyReport& rep) {
  for (const SimpleGraph& g : sweep_graphs(1, cfg.max_v.value_or(7), cfg)) {
    auto inv = invariants(g);
    auto h = homology_cache().get(g, 2, cfg.workers);
    auto rec = reconstruct_A2_homology(to_q_basis(chromatic_polynomial(g)), inv.v, inv.bipartite);
    const bool det = rec == h;
    const bool two_tor = h.only_torsion_order(2);
    const bool span2 = h.hspan() == inv.v - inv.b;
    bool d1 = true, support = true;
    for (int i = 0; i <= inv.v - inv.b - 1; ++i)
      d1 = d1 && h.at(i, inv.v - i).free + h.at(i, inv.v - i - 1).free > 0;
    int jmin = INT_MAX;
    for (auto& [k, grp] : h.groups()) {
      jmin = std::min(jmin, k.second);
      const int diag = k.first + k.second;
      if (k.first < 0 || k.first > inv.v - inv.b - 1) support = false;
      if (diag != inv.v && diag != inv.v - 1) support = false;
      if (diag == inv.v - 1 && !grp.torsion.empty()) support = false;
    }
    const bool jm = jmin == inv.b;
    VerifyRecord r{"det",
                   graph_label(g),
                   {{"homology", to_json(rec)}, {"hspan", inv.v - inv.b}, {"j_min", inv.b}},
                   {{"homology", to_json(h)},
                    {"hspan", h.hspan()},
                    {"j_min", jmin},
                    {"only_z2", two_tor},
                    {"d1", d1},
                    {"support", support}},
                   det && two_tor && span2 && d1 && jm && support,
                   nullptr};
    if (!r.match)
      r.diff = {{"groups", group_diff(rec, h)},
                {"only_z2", two_tor},
                {"span2", span2},
                {"d1", d1},
                {"j_min", jm},
                {"support", support}};
    rep.records.push_back(std::move(r));
  }
}

inline std::vector<std::pair<std::string, SimpleGraph>> polygon_trees(std::uint64_t seed) {
  std::vector<std::pair<std::string, SimpleGraph>> out;
  out.push_back({"edge_glue(cycle(3),edge_glue(cycle(4),cycle(5)))",
                 edge_glue(cycle_graph(3), edge_glue(cycle_graph(4), cycle_graph(5)))});
  std::mt19937_64 rng(seed);
  for (int k = 0; k < 10; ++k) {
    std::uniform_int_distribution<int> len(3, 5);
    int first = len(rng);
    SimpleGraph g = cycle_graph(first);
    std::string name = "cycle(" + std::to_string(first) + ")";
    for (int c = 0; c < 3; ++c) {
      int n = len(rng);
      if (g.vertex_count() + n - 2 > 10) break;
      std::uniform_int_distribution<int> pick(0, g.edge_count() - 1);
      int e = pick(rng);
      name += "|" + std::to_string(n) + "@" + std::to_string(g.edge(e).a) + "-" + std::to_string(g.edge(e).b);
      g = glue_cycle_on_edge(g, e, n);
    }
    out.push_back({name, g});
  }
  return out;
}

inline void verify_density(const VerifyConfig& cfg, VerifyReport& rep) {
  auto dens = [&](const std::string& inst, const SimpleGraph& g, const std::string& why) {
    auto inv = invariants(g);
    auto r = density_and_gaps(homology_cache().get(g, 2, cfg.workers), inv);
    nlohmann::json gaps = nlohmann::json::array();
    for (auto [s, l] : r.gaps) gaps.push_back({s, l});
    rep.records.push_back({"density", why + " " + inst, {{"dense", true}}, {{"dense", r.dense}, {"gaps", gaps}},
                           r.dense, nullptr});
  };
  for (const auto& [name, g] : polygon_trees(cfg.seed)) dens(name, g, "polygon-tree");
  const int top = std::min(cfg.max_v.value_or(6), 7);
  std::vector<SimpleGraph> dense_bases;
  for (const SimpleGraph& g : sweep_graphs(1, top, cfg)) {
    if (!detail::is_outerplanar(g)) continue;
    dens(graph_label(g), g, "outerplanar");
    if (g.vertex_count() <= 5 && g.edge_count() > 0 &&
        density_and_gaps(homology_cache().get(g, 2, cfg.workers), invariants(g)).dense)
      dense_bases.push_back(g);
  }
  for (const SimpleGraph& g : dense_bases)
    for (int n : {3, 4}) {
      dens(graph_label(g) + " |P" + std::to_string(n), edge_glue(g, cycle_graph(n)), "glue");
      dens(graph_label(g) + " *P" + std::to_string(n), vertex_glue(g, cycle_graph(n)), "glue");
    }
  // pretzel (-2,-2,-(n-2)): Kh torsion has a gap somewhere; the argument
  // places it at p = n - c-, which is recorded but not required
  for (int n = 4; n <= 8; ++n) {
    LinkDiagram d = pretzel_diagram({2, 2, n - 2});
    KhovanovOptions ko;
    ko.workers = cfg.workers;
    auto t = khovanov_homology(d, ko).torsion_by_degree(2);
    const int p = n - d.c_minus();
    nlohmann::json gaps = nlohmann::json::array(), tor = nlohmann::json::object();
    int prev = INT_MIN;
    for (auto [q, k] : t) {
      tor[std::to_string(q)] = k;
      if (prev != INT_MIN && q - prev > 1) gaps.push_back({prev + 1, q - prev - 1});
      prev = q;
    }
    rep.records.push_back({"density",
                           "gap pretzel(2,2," + std::to_string(n - 2) + ")",
                           {{"gap", true}, {"argued_gap_at_p", p}, {"argued_girth", n}},
                           {{"torsion_by_p", tor},
                            {"gaps", gaps},
                            {"torsion_at_argued_p", t.count(p) ? t[p] : 0},
                            {"girth", state_girth(d)}},
                           !gaps.empty(),
                           nullptr});
  }
}

/// Four coefficients of the normalized Jones polynomial from its lowest
/// degree, stepping by two, with the first made positive.
inline std::array<BigInt, 4> jones_low_end(const LaurentPolynomial& j) {
  std::array<BigInt, 4> c;
  const int lo = j.low_degree();
  const int sign = j.coeff(lo) < 0 ? -1 : 1;
  for (int k = 0; k < 4; ++k) c[k] = sign * j.coeff(lo + 2 * k);
  return c;
}

inline std::vector<NamedDiagram> jones_diagrams() {
  std::vector<NamedDiagram> ds = fixture_diagrams();
  for (int n = 7; n <= 8; ++n) ds.push_back({"torus-2-" + std::to_string(n), torus_diagram(n)});
  for (const auto& a : std::vector<std::vector<int>>{{2, 3, 4}, {3, 3, 4}, {4, 4, 4}, {2, 2, 2, 2}})
    ds.push_back({"pretzel-" + join_ints(a, "-"), pretzel_diagram(a)});
  ds.push_back({"rational-4-5", rational_diagram(4, 5)});
  return ds;
}

inline void verify_jones4(const VerifyConfig& cfg, VerifyReport& rep) {
  (void)cfg;
  for (const auto& [name, d] : jones_diagrams()) {
    if (d.size() == 0) continue;
    if (state_girth(d) < 4) continue;
    auto inv = invariants(state_graph(d));
    auto cf = jones_coefficients(inv);
    auto J = normalized_jones(d);
    auto obs = jones_low_end(J);
    nlohmann::json a = nlohmann::json::array(), b = nlohmann::json::array();
    for (int k = 0; k < 4; ++k) {
      a.push_back(cf[k].get_str());
      b.push_back(obs[k].get_str());
    }
    rep.records.push_back({"jones4", name, {{"coefficients", a}}, {{"coefficients", b}, {"jones", J.str()}},
                           cf == obs, nullptr});
  }
}

inline nlohmann::json correspondence_json(const CorrespondenceReport& r) {
  nlohmann::json pairs = nlohmann::json::array();
  for (const auto& p : r.pairs)
    pairs.push_back({{"i", p.i},
                     {"j", p.j == INT_MIN ? nlohmann::json(nullptr) : nlohmann::json(p.j)},
                     {"p", p.p},
                     {"q", p.q},
                     {"chromatic", p.chromatic.str()},
                     {"khovanov", p.khovanov.str()},
                     {"torsion_only", p.torsion_only},
                     {"match", p.match}});
  return {{"vacuous", r.vacuous},  {"girth", r.girth},         {"v", r.v},
          {"c_plus", r.c_plus},    {"c_minus", r.c_minus},     {"pairs", pairs},
          {"all_match", r.all_match}, {"offset", {r.offset_p, r.offset_q}}, {"offset_flagged", r.offset_flagged}};
}

inline void verify_correspondence(const VerifyConfig& cfg, VerifyReport& rep) {
  std::vector<NamedDiagram> ds;
  if (cfg.pretzel)
    ds.push_back({"pretzel(" + join_ints(*cfg.pretzel) + ")", pretzel_diagram(*cfg.pretzel)});
  else if (cfg.rational)
    ds.push_back({"rational(-" + std::to_string(cfg.rational->first) + " " + std::to_string(cfg.rational->second) + ")",
                  rational_diagram(cfg.rational->first, cfg.rational->second)});
  else
    ds = fixture_diagrams();
  for (const auto& [name, d] : ds) {
    auto r = correspondence_check(d, cfg.workers);
    rep.records.push_back({"correspondence", name, {{"expected", "equal for i < girth, torsion equal at i = girth"}},
                           correspondence_json(r), r.vacuous || r.all_match, nullptr});
  }
}

inline void verify_2tor(const VerifyConfig& cfg, VerifyReport& rep) {
  for (const SimpleGraph& g : sweep_graphs(1, cfg.max_v.value_or(7), cfg)) {
    auto h = homology_cache().get(g, 2, cfg.workers);
    nlohmann::json orders = nlohmann::json::array();
    std::set<std::string> seen;
    for (auto& [k, grp] : h.groups())
      for (auto& [o, n] : grp.torsion) seen.insert(o.get_str());
    for (const auto& s : seen) orders.push_back(s);
    rep.records.push_back({"2tor", graph_label(g), {{"torsion_orders", {"2"}}}, {{"torsion_orders", orders}},
                           h.only_torsion_order(2), nullptr});
  }
}

inline void verify_lemmasum(const VerifyConfig& cfg, VerifyReport& rep) {
  const int top = std::min(cfg.max_v.value_or(6), 7);
  for (const SimpleGraph& g : sweep_graphs(3, top, cfg)) {
    auto dec = blocks(g);
    int e = -1;
    for (int k = 0; k < g.edge_count() && e < 0; ++k)
      if (!dec.is_bridge[k]) e = k;
    if (e < 0) continue;
    const int v = g.vertex_count();
    auto h = homology_cache().get(g, 2, cfg.workers);
    auto hc = homology_cache().get(contract_edge(g, e), 2, cfg.workers);
    auto hd = homology_cache().get(delete_edge(g, e), 2, cfg.workers);
    BigradedGroups cf, orc;
    for (int i = 2; i <= v; ++i) {
      cf.set(i, v - i, hc.at(i - 1, v - i) + hd.at(i, v - i));
      orc.set(i, v - i, h.at(i, v - i));
    }
    auto r = groups_record("lemmasum", graph_label(g) + " e=" + std::to_string(e), cf, orc);
    rep.records.push_back(std::move(r));
  }
}

}  // namespace detail

/// Runs one theorem's default sweep (narrowed by cfg). Unknown ids throw
/// std::invalid_argument.
inline VerifyReport verify(const std::string& theorem, const VerifyConfig& cfg = {}) {
  VerifyReport rep;
  if (theorem == "polygon")
    detail::verify_polygon(cfg, rep);
  else if (theorem == "rankdiag")
    detail::verify_rankdiag(cfg, rep);
  else if (theorem == "4thkh")
    detail::verify_4thkh(cfg, rep);
  else if (theorem == "polyedge" || theorem == "glueshift" || theorem == "bridge")
    detail::verify_gluing(theorem, cfg, rep);
  else if (theorem == "twocycle")
    detail::verify_twocycle(1, cfg, rep);
  else if (theorem == "patterns2")
    detail::verify_twocycle(2, cfg, rep);
  else if (theorem == "pretzel")
    detail::verify_pretzel(cfg, rep);
  else if (theorem == "rational")
    detail::verify_rational(cfg, rep);
  else if (theorem == "span")
    detail::verify_span(cfg, rep);
  else if (theorem == "width")
    detail::verify_width(cfg, rep);
  else if (theorem == "det")
    detail::verify_det(cfg, rep);
  else if (theorem == "density")
    detail::verify_density(cfg, rep);
  else if (theorem == "jones4")
    detail::verify_jones4(cfg, rep);
  else if (theorem == "correspondence")
    detail::verify_correspondence(cfg, rep);
  else if (theorem == "2tor")
    detail::verify_2tor(cfg, rep);
  else if (theorem == "lemmasum")
    detail::verify_lemmasum(cfg, rep);
  else
    throw std::invalid_argument("unknown theorem id: " + theorem);
  return rep;
}

// ---------------------------------------------------------------------------
// Cochromatic classes split by A_m homology

struct DistinguishMember {
  SimpleGraph graph;
  BigradedGroups low;  ///< homological degrees 0 and 1
};

struct CochromaticClass {
  IntPolynomial polynomial;  ///< in lambda
  std::vector<DistinguishMember> members;
  bool split = false;
  std::vector<int> separating_j;  ///< quantum degrees where H^1 differs
};

struct DistinguishReport {
  int v = 0, m = 0;
  std::vector<CochromaticClass> classes;  ///< only classes with two or more members

  std::size_t split_count() const {
    return static_cast<std::size_t>(
        std::count_if(classes.begin(), classes.end(), [](const CochromaticClass& c) { return c.split; }));
  }
};

inline DistinguishReport distinguish(int v, int m, int workers = 1) {
  if (v < 1 || v > 7) throw std::invalid_argument("distinguish supports 1 <= v <= 7");
  if (m < 2) throw std::invalid_argument("algebra A_m needs m >= 2");
  DistinguishReport rep;
  rep.v = v;
  rep.m = m;
  std::map<std::vector<std::string>, std::vector<SimpleGraph>> by_poly;
  std::map<std::vector<std::string>, IntPolynomial> polys;
  for (const SimpleGraph& g : connected_graphs(v)) {
    IntPolynomial p = chromatic_polynomial(g);
    std::vector<std::string> key;
    for (int k = 0; k <= p.degree(); ++k) key.push_back(p.coeff(k).get_str());
    by_poly[key].push_back(g);
    polys[key] = p;
  }
  for (auto& [key, gs] : by_poly) {
    if (gs.size() < 2) continue;
    CochromaticClass c;
    c.polynomial = polys[key];
    std::set<int> js;
    for (const SimpleGraph& g : gs) {
      auto h = homology_cache().get(g, m, workers, 1).restricted(0, 1);
      for (auto& [k, grp] : h.groups()) js.insert(k.second);
      c.members.push_back({g, h});
    }
    for (int j : js) {
      for (int i = 0; i <= 1; ++i) {
        bool differs = false;
        for (const auto& mem : c.members) differs = differs || !(mem.low.at(i, j) == c.members[0].low.at(i, j));
        if (differs && i == 1) c.separating_j.push_back(j);
        if (differs) c.split = true;
      }
    }
    rep.classes.push_back(std::move(c));
  }
  return rep;
}

inline nlohmann::json to_json(const DistinguishReport& r) {
  nlohmann::json cls = nlohmann::json::array();
  for (const auto& c : r.classes) {
    nlohmann::json mem = nlohmann::json::array();
    for (const auto& m : c.members)
      mem.push_back({{"graph", detail::graph_label(m.graph)}, {"homology", to_json(m.low)}});
    cls.push_back({{"polynomial", c.polynomial.str("λ")},
                   {"split", c.split},
                   {"separating_j", c.separating_j},
                   {"members", mem}});
  }
  return {{"v", r.v}, {"m", r.m}, {"classes", cls}, {"split_classes", r.split_count()}};
}

// ---------------------------------------------------------------------------
// Conjecture observations; nothing here is asserted.

inline nlohmann::json experiment(int max_v = 5, int workers = 1) {
  nlohmann::json out;
  VerifyConfig cfg;
  // hspan over A_m against v - b
  nlohmann::json span = nlohmann::json::array();
  for (int m : {3, 4}) {
    int agree = 0, total = 0;
    nlohmann::json off = nlohmann::json::array();
    for (const SimpleGraph& g : detail::sweep_graphs(1, m == 3 ? max_v : std::min(max_v, 4), cfg)) {
      auto inv = invariants(g);
      int hs = homology_cache().get(g, m, workers).hspan();
      ++total;
      if (hs == inv.v - inv.b)
        ++agree;
      else
        off.push_back({{"graph", detail::graph_label(g)}, {"hspan", hs}, {"v_minus_b", inv.v - inv.b}});
    }
    span.push_back({{"m", m}, {"graphs", total}, {"agree", agree}, {"counterexamples", off}});
  }
  out["span_over_Am"] = span;
  // torsion width over A_3 against v - k - 1 (girth 2k) or v - k (girth 2k - 1)
  {
    int agree = 0, total = 0;
    nlohmann::json off = nlohmann::json::array();
    for (const SimpleGraph& g : detail::sweep_graphs(3, max_v, cfg)) {
      auto inv = invariants(g);
      if (inv.girth == 0) continue;
      const int k = (inv.girth + 1) / 2;
      const int predicted = inv.girth % 2 == 0 ? inv.v - k - 1 : inv.v - k;
      const int w = detail::torsion_width(homology_cache().get(g, 3, workers));
      ++total;
      if (w == predicted)
        ++agree;
      else
        off.push_back({{"graph", detail::graph_label(g)}, {"torsion_width", w}, {"predicted", predicted}});
    }
    out["torsion_width_A3"] = {{"graphs", total}, {"agree", agree}, {"counterexamples", off}};
  }
  // torsion width of cycles
  {
    nlohmann::json rows = nlohmann::json::array();
    for (int n = 3; n <= 8; ++n)
      for (int m = 2; m <= 4; ++m) {
        const int predicted = n % 2 == 0 ? m * n / 2 - 2 * m - n + 5 : (m * n - 3 * m) / 2 - n + 4;
        rows.push_back({{"n", n},
                        {"m", m},
                        {"torsion_width", detail::torsion_width(cycle_homology(n, m))},
                        {"predicted", predicted}});
      }
    out["cycle_torsion_width"] = rows;
  }
  // tails
  {
    nlohmann::json rows = nlohmann::json::array();
    auto tail_row = [&](const std::string& name, const SimpleGraph& g, long predicted, int m) {
      auto inv = invariants(g);
      auto h = homology_cache().get(g, m, workers);
      const int top = inv.v - inv.b - 1;
      long z = 0, tor = 0;
      for (auto& [k, grp] : h.groups())
        if (k.first == top) {
          z += grp.free;
          tor += grp.torsion_of(m);
        }
      rows.push_back({{"graph", name},
                      {"m", m},
                      {"predicted_copies", predicted},
                      {"free_rank", z},
                      {"Zm_count", tor},
                      {"polynomial_tail", m == 2 ? tail(g).get_str() : std::string("-")}});
    };
    long fact = 1;
    for (int n = 3; n <= 6; ++n) {
      if (n > 3) fact *= n - 2;
      tail_row("complete(" + std::to_string(n) + ")", complete_graph(n), fact, 2);
      if (n <= 5) tail_row("complete(" + std::to_string(n) + ")", complete_graph(n), fact, 3);
    }
    for (int n = 4; n <= 7; ++n) {
      tail_row("wheel(" + std::to_string(n) + ")", wheel_graph(n), n - 2, 2);
      if (n >= 5) tail_row("wheel_in(" + std::to_string(n) + ")", delete_edge(wheel_graph(n), 0), n - 3, 2);
    }
    out["tails"] = rows;
  }
  return out;
}

}  // namespace chromkh

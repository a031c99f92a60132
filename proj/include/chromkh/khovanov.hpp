#pragma once

#include <climits>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "chromatic_complex.hpp"
#include "cube.hpp"
#include "link_diagram.hpp"

namespace chromkh {

inline constexpr int kDefaultCrossingLimit = 16;

/// Khovanov cube of d: elements are arcs (then free circles), coordinate c
/// joins the arc pairs of smoothing 0 or 1 at crossing c.
inline CubeSpec khovanov_cube(const LinkDiagram& d) {
  auto labels = detail::arc_labels(d);
  std::map<int, int> idx;
  for (int k = 0; k < static_cast<int>(labels.size()); ++k) idx[labels[k]] = k;
  CubeSpec spec;
  spec.elements = static_cast<int>(labels.size()) + d.free_circles;
  spec.m = 2;
  spec.allow_split = true;
  spec.allow_identity = false;
  spec.grading = CubeSpec::Grading::Khovanov;
  for (const Crossing& c : d.crossings) {
    std::array<std::vector<std::pair<int, int>>, 2> j;
    for (int b = 0; b < 2; ++b)
      for (auto [x, y] : smoothing(c, b)) j[b].push_back({idx[x], idx[y]});
    spec.joins.push_back(j);
  }
  return spec;
}

struct KhovanovOptions {
  std::optional<int> p_min, p_max;
  std::optional<std::set<int>> q;  ///< shifted quantum degrees to keep
  bool check_d_squared = false;
  int workers = 1;
};

/// Kh^{p,q}(d) after the shift [-c-]{c+ - 2c-}.
inline BigradedGroups khovanov_homology(const LinkDiagram& d, const KhovanovOptions& o = {}) {
  const int limit = cube_dimension_limit(kDefaultCrossingLimit);
  if (d.size() > limit)
    throw ResourceError("diagram has " + std::to_string(d.size()) + " crossings; limit is " + std::to_string(limit));
  const int cm = d.c_minus(), cp = d.c_plus();
  const int qshift = cp - 2 * cm;
  CubeOptions opt;
  if (o.p_min) opt.i_min = *o.p_min + cm;
  if (o.p_max) opt.i_max = *o.p_max + cm;
  if (o.q) {
    std::set<int> raw;
    for (int q : *o.q) raw.insert(q - qshift);
    opt.gradings = raw;
  }
  opt.check_d_squared = o.check_d_squared;
  opt.workers = o.workers;
  return cube_homology(khovanov_cube(d), opt).shifted(-cm, qshift);
}

/// Unnormalized Jones polynomial from the state sum, independent of any
/// homology computation.
inline LaurentPolynomial jones_polynomial(const LinkDiagram& d) {
  const int cm = d.c_minus(), cp = d.c_plus();
  return cube_state_sum(khovanov_cube(d)) *
         LaurentPolynomial::monomial(cp - 2 * cm, BigInt(cm % 2 ? -1 : 1));
}

/// Jones polynomial divided by q + 1/q.
inline LaurentPolynomial normalized_jones(const LinkDiagram& d) {
  return jones_polynomial(d).exact_div(LaurentPolynomial(-1, IntPolynomial{1, 0, 1}));
}

// ---------------------------------------------------------------------------
// Chromatic / Khovanov correspondence

struct CorrespondencePair {
  int i = 0, j = 0, p = 0, q = 0;
  Group chromatic, khovanov;
  bool torsion_only = false;  ///< compared at i = girth
  bool match = false;
};

struct CorrespondenceReport {
  bool vacuous = false;  ///< state graph is a forest
  int girth = 0, v = 0, c_plus = 0, c_minus = 0;
  std::vector<CorrespondencePair> pairs;
  bool all_match = true;
  int offset_p = 0, offset_q = 0;  ///< best global offset found
  int offset_matches = 0;
  bool offset_flagged = false;  ///< best offset is not (0, 0)
};

namespace detail {

inline Group torsion_part(const Group& g) {
  Group t;
  t.torsion = g.torsion;
  return t;
}

inline std::vector<CorrespondencePair> correspondence_pairs(const BigradedGroups& h, const BigradedGroups& kh, int girth,
                                                            int v, int cp, int cm, int dp, int dq) {
  std::set<std::pair<int, int>> keys;  // chromatic (i, j)
  auto to_ij = [&](int p, int q) -> std::optional<std::pair<int, int>> {
    int i = p - dp + cm;
    int t = v + cp - 2 * cm - (q - dq);
    if (t % 2 != 0) return std::nullopt;
    return std::make_pair(i, t / 2);
  };
  for (auto& [k, g] : h.groups())
    if (k.first >= 0 && k.first <= girth) keys.insert(k);
  std::vector<CorrespondencePair> out;
  for (auto& [k, g] : kh.groups()) {
    auto ij = to_ij(k.first, k.second);
    if (!ij) {
      if (k.first - dp + cm >= 0 && k.first - dp + cm <= girth) {
        CorrespondencePair pr;
        pr.i = k.first - dp + cm;
        pr.j = INT_MIN;
        pr.p = k.first;
        pr.q = k.second;
        pr.khovanov = g;
        pr.torsion_only = pr.i == girth;
        pr.match = pr.torsion_only && g.torsion.empty();
        out.push_back(pr);
      }
      continue;
    }
    if (ij->first >= 0 && ij->first <= girth) keys.insert(*ij);
  }
  for (auto [i, j] : keys) {
    CorrespondencePair pr;
    pr.i = i;
    pr.j = j;
    pr.p = i - cm + dp;
    pr.q = v - 2 * j + cp - 2 * cm + dq;
    pr.chromatic = h.at(i, j);
    pr.khovanov = kh.at(pr.p, pr.q);
    pr.torsion_only = i == girth;
    pr.match = pr.torsion_only ? torsion_part(pr.chromatic) == torsion_part(pr.khovanov) : pr.chromatic == pr.khovanov;
    out.push_back(pr);
  }
  return out;
}

}  // namespace detail

/// Compares H_{A_2}(G+(d)) with Kh(d) group by group for i < girth and on
/// torsion at i = girth. The girth counts parallel edges and loops.
/// If the direct indexing fails, the best global (p, q) offset is searched
/// and reported.
inline CorrespondenceReport correspondence_check(const LinkDiagram& d, int workers = 1) {
  CorrespondenceReport r;
  SimpleGraph g = state_graph(d);
  r.girth = state_girth(d);
  r.v = g.vertex_count();
  r.c_plus = d.c_plus();
  r.c_minus = d.c_minus();
  if (r.girth == 0) {
    r.vacuous = true;
    return r;
  }
  CubeOptions co;
  co.i_max = r.girth;
  co.workers = workers;
  // a loop kills chromatic homology
  BigradedGroups h = r.girth == 1 ? BigradedGroups{} : chromatic_homology(g, 2, co);
  KhovanovOptions ko;
  ko.p_max = r.girth - r.c_minus;
  ko.workers = workers;
  BigradedGroups kh = khovanov_homology(d, ko);

  auto score = [&](const std::vector<CorrespondencePair>& prs) {
    int s = 0;
    for (const auto& p : prs) s += p.match && !(p.chromatic.is_zero() && p.khovanov.is_zero());
    return s;
  };
  r.pairs = detail::correspondence_pairs(h, kh, r.girth, r.v, r.c_plus, r.c_minus, 0, 0);
  for (const auto& p : r.pairs) r.all_match = r.all_match && p.match;
  r.offset_matches = score(r.pairs);
  if (!r.all_match) {
    const int n = d.size();
    for (int dp = -n; dp <= n; ++dp)
      for (int dq = -2 * n - 2; dq <= 2 * n + 2; ++dq) {
        auto prs = detail::correspondence_pairs(h, kh, r.girth, r.v, r.c_plus, r.c_minus, dp, dq);
        int s = score(prs);
        if (s > r.offset_matches) {
          r.offset_matches = s;
          r.offset_p = dp;
          r.offset_q = dq;
        }
      }
    r.offset_flagged = r.offset_p != 0 || r.offset_q != 0;
  }
  return r;
}

}  // namespace chromkh

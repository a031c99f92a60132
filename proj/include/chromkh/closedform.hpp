#pragma once

#include <algorithm>
#include <array>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "bigraded.hpp"
#include "chrompoly.hpp"
#include "graph.hpp"
#include "pattern.hpp"

namespace chromkh {

/// Input that no graph can produce (e.g. a polynomial with no knight-move
/// decomposition).
class IntegrityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A theorem was invoked outside its hypotheses.
class HypothesisError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// ---------------------------------------------------------------------------
// Cycles

/// H_{A_m}(P_n) from Hochschild homology of A_m for i > 0; H^0 is free and
/// is recovered from the graded Euler characteristic.
inline BigradedGroups cycle_homology(int n, int m) {
  if (n < 3) throw std::invalid_argument("cycle needs n >= 3");
  if (m < 2) throw std::invalid_argument("algebra A_m needs m >= 2");
  BigradedGroups h;
  for (int i = 1; i < n - 1; ++i) {
    if ((n - i) % 2 == 0) h.add(i, (n - i) / 2 * m, Group::Ztor(m));
    const int base = (n - i - 1) / 2 * m;
    for (int j = base + 1; j <= base + m - 1; ++j) h.add(i, j, Group::Z());
  }
  IntPolynomial chi = evaluate_at_qdim(detail::cycle_chromatic(n), m);
  for (int j = 0; j <= chi.degree(); ++j) {
    BigInt r = chi.coeff(j);
    for (auto& [k, g] : h.groups())
      if (k.second == j) r -= (k.first % 2 ? -1 : 1) * g.free;
    if (r < 0) throw IntegrityError("negative H^0 rank for cycle");
    if (r > 0) h.set(0, j, Group::Z(to_long(r)));
  }
  return h;
}

// ---------------------------------------------------------------------------
// Low homological degrees over A_2

struct HomologyColumn {
  int i = 0;
  Group upper;  ///< (i, v - i)
  Group lower;  ///< (i, v - i - 1)
  friend bool operator==(const HomologyColumn&, const HomologyColumn&) = default;
};

/// Columns i = 0, 1, 2 from bipartiteness, p1 and t3. The lower diagonal
/// follows from the knight-move pairing.
inline std::vector<HomologyColumn> low_degree_groups(const GraphInvariants& inv) {
  const long p1 = inv.p1;
  std::vector<HomologyColumn> cols(3);
  for (int i = 0; i < 3; ++i) cols[i].i = i;
  cols[0].upper = Group::Z();
  if (inv.bipartite) {
    cols[0].lower = Group::Z();
    cols[1].upper = Group::Z(p1);
    cols[2].upper = Group::Z(to_long(binomial(p1, 2))) + Group::Ztor(2, static_cast<int>(p1));
  } else {
    cols[1].upper = Group::Z(p1 - 1) + Group::Ztor(2);
    long r = to_long(binomial(p1, 2)) - inv.t3 + 1;
    if (r < 0) throw HypothesisError("negative rank at i = 2");
    cols[2].upper = Group::Z(r) + Group::Ztor(2, static_cast<int>(p1 - 1));
  }
  cols[1].lower = Group::Z(cols[0].upper.free - (inv.bipartite ? 1 : 0));
  cols[2].lower = Group::Z(cols[1].upper.free);
  return cols;
}

/// (rank H^{3,v-3}, Z_2-exponent of H^{4,v-4}); the two agree.
inline std::pair<long, long> third_fourth_groups(const GraphInvariants& inv) {
  const long p1 = inv.p1;
  long r = p1 + to_long(binomial(p1 + 1, 3)) - inv.t4;
  if (!inv.bipartite) r += -inv.t3 * (p1 - 1) + 2 * inv.k4 - 1;
  return {r, r};
}

// ---------------------------------------------------------------------------
// Knight-move reconstruction over A_2

namespace detail {

/// Fills the lower diagonal and the torsion from upper-diagonal free ranks:
/// each Z at (i, v-i), apart from the bipartite pair at i = 0, pairs with a
/// Z at (i+1, v-i-2) and a Z_2 at (i+1, v-i-1).
inline BigradedGroups knight_moves(const std::vector<long>& upper, int v, bool bipartite) {
  BigradedGroups h;
  for (int i = 0; i < static_cast<int>(upper.size()); ++i) {
    long k = upper[i] - (i == 0 && bipartite ? 1 : 0);
    if (k < 0) throw IntegrityError("negative knight-move count");
    h.add(i, v - i, Group::Z(upper[i]));
    if (k > 0) {
      h.add(i + 1, v - i - 2, Group::Z(k));
      h.add(i + 1, v - i - 1, Group::Ztor(2, static_cast<int>(k)));
    }
  }
  if (bipartite) h.add(0, v - 1, Group::Z());
  return h;
}

}  // namespace detail

/// Full A_2 homology of a connected graph from P_G(1+q), v and bipartiteness.
inline BigradedGroups reconstruct_A2_homology(const IntPolynomial& p_q, int v, bool bipartite) {
  if (p_q.degree() > v) throw IntegrityError("polynomial degree exceeds vertex count");
  // a_{v-i} = (-1)^i K_i - (-1)^i K_{i-2} + bipartite corrections at i = 0, 1
  std::vector<BigInt> K(static_cast<std::size_t>(v + 1), 0);
  for (int i = 0; i <= v; ++i) {
    BigInt k = (i % 2 ? -1 : 1) * p_q.coeff(v - i);
    if (i >= 2) k += K[i - 2];
    if (bipartite && i == 0) k -= 1;
    if (bipartite && i == 1) k += 1;
    if (k < 0) throw IntegrityError("no knight-move decomposition (negative count at i = " + std::to_string(i) + ")");
    K[i] = k;
  }
  // a triple at i needs room for its lower partner at j = v - i - 2 >= 0
  if (v >= 1 && K[v - 1] != 0) throw IntegrityError("unbalanced polynomial");
  if (K[v] != 0) throw IntegrityError("unbalanced polynomial");
  std::vector<long> upper(static_cast<std::size_t>(v + 1), 0);
  for (int i = 0; i <= v; ++i) upper[i] = to_long(K[i]) + (i == 0 && bipartite ? 1 : 0);
  while (!upper.empty() && upper.back() == 0) upper.pop_back();
  return detail::knight_moves(upper, v, bipartite);
}

// ---------------------------------------------------------------------------
// Gluing a cycle

/// H_{A_2}(G|P_n) from H_{A_2}(G). `inv` describes G.
inline BigradedGroups edge_glue_homology(const BigradedGroups& hg, const GraphInvariants& inv, int n) {
  if (n < 3) throw std::invalid_argument("glued cycle needs n >= 3");
  if (!hg.only_torsion_order(2)) throw std::invalid_argument("expected A_2 homology");
  const int v = inv.v, V = v + n - 2;
  auto S = [&](int i, int t) {
    Group s;
    for (int k = 0; k <= t; ++k) s += hg.at(i - k, v - i + k);
    return s;
  };
  std::vector<Group> upper(static_cast<std::size_t>(V + 1));
  upper[0] = Group::Z();
  for (int i = 1; i <= V; ++i) {
    if (i > n - 2)
      upper[i] = S(i, n - 2);
    else if ((n - i) % 2 == 1 && inv.bipartite)
      upper[i] = Group::Z(inv.E - v + 2) + S(i, i - 2);
    else
      upper[i] = Group::Z(inv.E - v + 1) + Group::Ztor(2) + S(i, i - 2);
  }
  const bool bip = inv.bipartite && n % 2 == 0;
  std::vector<long> ranks;
  for (const Group& g : upper) ranks.push_back(g.free);
  BigradedGroups h = detail::knight_moves(ranks, V, bip);
  // keep the torsion as the theorem states it
  for (int i = 0; i <= V; ++i) {
    Group g = h.at(i, V - i);
    g.torsion = upper[i].torsion;
    h.set(i, V - i, g);
  }
  return h;
}

/// H_{A_2}(G*P_n): the edge-glued answer one quantum degree up.
inline BigradedGroups vertex_glue_homology(const BigradedGroups& hg, const GraphInvariants& inv, int n) {
  return edge_glue_homology(hg, inv, n).shifted(0, 1);
}

/// Expanding a cut vertex into a bridge shifts everything up by one.
inline BigradedGroups bridge_homology(const BigradedGroups& h_glued) { return h_glued.shifted(0, 1); }

// ---------------------------------------------------------------------------
// Torsion patterns

/// Z_2 exponents on the upper diagonal of P_s|P_t (k = 1) or P_s|^2 P_t.
inline TorsionPattern two_cycle_torsion(int s, int t, int glue_edges) {
  using namespace pattern;
  if (glue_edges != 1 && glue_edges != 2) throw std::invalid_argument("glue_edges must be 1 or 2");
  const int lo = glue_edges == 1 ? 3 : 4;
  if (s < lo || t < lo) throw std::invalid_argument("cycle lengths too small for this gluing");
  auto tail = [&](int M) { return glue_edges == 1 ? reverse(C(M - 1)) : drop_last(reverse(C(M - 1))); };
  TorsionPattern x;
  const bool so = s % 2, to = t % 2;
  if (so && to) {
    int n = (s - 1) / 2, m = (t - 1) / 2, M = std::min(n, m);
    x.exponents = concat({C(M - 1), constant(M, 2 * std::abs(m - n) + 2), tail(M)});
  } else if (so || to) {
    int n = ((so ? s : t) - 1) / 2, m = (so ? t : s) / 2, M = std::min(n, m);
    if (n <= m)
      x.exponents = concat({C(M - 1), constant(M, 2 * (m - n) + 1), tail(M)});
    else
      x.exponents = concat({C(M - 1), {M}, repeat({M - 1, M}, n - m), tail(M)});
  } else {
    int n = s / 2, m = t / 2, M = std::min(n, m);
    x.exponents = concat({A(M - 1), {M}, repeat({M - 1, M}, std::abs(m - n)), tail(M)});
    x.start = 2;  // bipartite: nothing at i = 1
  }
  return x;
}

/// A torsion pattern for a link family together with the last homological
/// degree the statement covers.
struct FamilyPattern {
  char family_case = '?';
  TorsionPattern x;
  int range_end = 0;
};

/// Pretzel (-a1, -2, -a3).
inline FamilyPattern pretzel_torsion(int a1, int a2, int a3) {
  using namespace pattern;
  if (a2 != 2) throw std::invalid_argument("middle strand must have two crossings");
  if (a1 < 1 || a3 < 1) throw std::invalid_argument("pretzel parameters must be positive");
  if (a1 % 2 == 0 && a3 % 2 == 1) std::swap(a1, a3);
  FamilyPattern r;
  if (a1 % 2 && a3 % 2) {
    int n = (a1 + 1) / 2, m = (a3 + 1) / 2, M = std::min(n, m);
    if (n != m) {
      r.family_case = 'A';
      r.x.exponents = concat({C(M - 1), {M, M, M}});
      r.range_end = 2 * M + 1;
    } else {
      r.family_case = 'B';
      r.x.exponents = concat({C(M - 1), {M, M, M - 1}});
      r.range_end = 2 * n + 1;
    }
  } else if (a1 % 2) {
    int n = (a1 + 1) / 2, m = (a3 + 2) / 2, M = std::min(n, m);
    if (n < m) {
      r.family_case = 'C';
      r.x.exponents = concat({C(M - 1), {M, M, M}});
      r.range_end = 2 * n + 1;
    } else {
      r.family_case = 'D';
      r.x.exponents = concat({C(M - 1), {M, M - 1}});
      r.range_end = 2 * m;
    }
  } else {
    int n = (a1 + 2) / 2, m = (a3 + 2) / 2, M = std::min(n, m);
    r.family_case = 'E';
    r.x.exponents = concat({A(M - 1), {M, M - 1}});
    r.x.start = 2;
    r.range_end = 2 * M;
  }
  return r;
}

/// Rational link with Conway notation -P Q.
inline FamilyPattern rational_torsion(int P, int Q) {
  using namespace pattern;
  if (P < 2 || Q < 2) throw std::invalid_argument("rational parameters must be >= 2");
  if (P % 2 == 0 && Q % 2 == 1) std::swap(P, Q);
  FamilyPattern r;
  if (P % 2 && Q % 2) {
    int n = (P - 1) / 2, m = (Q - 1) / 2, M = std::min(n, m);
    if (n != m) {
      r.family_case = 'A';
      r.x.exponents = concat({C(M - 1), {M, M, M}});
      r.range_end = 2 * M + 1;
    } else {
      r.family_case = 'B';
      r.x.exponents = concat({C(M - 1), {M, M, M - 1}});
      r.range_end = 2 * n + 1;
    }
  } else if (P % 2) {
    int n = (P - 1) / 2, m = Q / 2, M = std::min(n, m);
    if (n < m) {
      r.family_case = 'C';
      r.x.exponents = concat({C(M - 1), {M, M, M}});
      r.range_end = 2 * n + 1;
    } else {
      r.family_case = 'D';
      r.x.exponents = concat({C(M - 1), {M, M - 1}});
      r.range_end = 2 * m;
    }
  } else {
    int n = P / 2, m = Q / 2, M = std::min(n, m);
    r.family_case = 'E';
    r.x.exponents = concat({A(M - 1), {M, M - 1}});
    r.x.start = 2;
    r.range_end = 2 * M;
  }
  return r;
}

/// Z_2 exponents of the upper diagonal of an A_2 homology, i = 1..last.
inline TorsionPattern observed_torsion(const BigradedGroups& h, int last) {
  TorsionPattern x;
  auto t = h.torsion_by_degree(2);
  for (int i = 1; i <= last; ++i) x.exponents.push_back(t.count(i) ? t[i] : 0);
  return x;
}

/// Compares a closed-form pattern with observed exponents on degrees
/// 1..last, treating positions outside the pattern as zero.
inline bool pattern_matches(const TorsionPattern& x, const TorsionPattern& observed, int last) {
  for (int i = 1; i <= last; ++i)
    if (x.at(i) != observed.at(i)) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Spans, widths, tails

struct SpanBounds {
  int hspan = 0;             ///< v - b over A_2
  int kh_torsion_bound = 0;  ///< lower bound for hspan^t of Khovanov homology
  int girth_lower_bound = 0; ///< girth - 1
  int v = 0;
  int width(int m) const { return (m - 2) * v + 2; }
};

inline SpanBounds span_bounds(const GraphInvariants& inv) {
  SpanBounds s;
  s.v = inv.v;
  s.hspan = inv.v - inv.b;
  const int top = inv.v - inv.b - 1;
  if (inv.girth >= top)
    s.kh_torsion_bound = inv.bipartite ? top - 1 : top;
  else
    s.kh_torsion_bound = inv.bipartite ? inv.girth - 1 : inv.girth;
  s.girth_lower_bound = inv.girth - 1;
  return s;
}

/// Lower bound on the torsion span of Kh for the pretzel (-a_1, ..., -a_k).
inline int pretzel_torsion_span_bound(const std::vector<int>& a) {
  if (a.size() < 2) throw std::invalid_argument("need at least two strands");
  int best = -1;
  bool all_even = true;
  for (std::size_t x = 0; x < a.size(); ++x)
    for (std::size_t y = x + 1; y < a.size(); ++y) {
      int s = a[x] + a[y];
      if (best < 0 || s < best) best = s;
      if (s % 2) all_even = false;
    }
  return all_even ? best - 1 : best;
}

/// Copies of Tl_2 in the last homological degree: |lowest coefficient of P_G(1+q)|.
inline BigInt tail(const SimpleGraph& g) {
  IntPolynomial p = to_q_basis(chromatic_polynomial(g));
  if (p.is_zero()) return 0;
  return abs(p.coeff(p.low_degree()));
}

struct DensityReport {
  bool dense = true;
  std::vector<std::pair<int, int>> gaps;  ///< (first degree without torsion, length)
};

/// Dense: torsion in every degree 2..v-b-1. Gaps: maximal torsion-free runs
/// with torsion on both sides.
inline DensityReport density_and_gaps(const BigradedGroups& h, const GraphInvariants& inv) {
  DensityReport r;
  std::vector<char> has(static_cast<std::size_t>(std::max(inv.v, 0) + 2), 0);
  for (auto& [k, g] : h.groups())
    if (!g.torsion.empty() && k.first >= 0 && k.first < static_cast<int>(has.size())) has[k.first] = 1;
  for (int i = 2; i <= inv.v - inv.b - 1; ++i)
    if (!has[i]) r.dense = false;
  int last = -1;
  for (int i = 0; i < static_cast<int>(has.size()); ++i) {
    if (!has[i]) continue;
    if (last >= 0 && i - last > 1) r.gaps.push_back({last + 1, i - last - 1});
    last = i;
  }
  return r;
}

/// First four coefficients of the normalized Jones polynomial of a thin link
/// whose all-positive graph has girth >= 4, lowest degree first.
inline std::array<BigInt, 4> jones_coefficients(const GraphInvariants& inv) {
  if (inv.girth < 4) throw HypothesisError("jones_coefficients needs girth >= 4");
  const long p1 = inv.p1;
  return {BigInt(1), BigInt(-p1), binomial(p1 + 1, 2), -binomial(p1 + 2, 3) + inv.t4};
}

}  // namespace chromkh

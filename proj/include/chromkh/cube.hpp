#pragma once

#include <array>
#include <atomic>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <map>
#include <mutex>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "bigraded.hpp"
#include "snf.hpp"

namespace chromkh {

/// A cube of resolutions over A_m = Z[x]/(x^m). Each coordinate joins pairs
/// of elements depending on its bit; components of the resulting partition
/// carry algebra labels. Changing a bit 0 -> 1 merges two components
/// (multiplication), splits one (comultiplication, m = 2 only) or leaves the
/// partition alone (identity).
struct CubeSpec {
  enum class Grading {
    LabelSum,  ///< j = sum of label exponents
    Khovanov,  ///< q = k - 2 * (label sum) + i, before shifting
  };
  int elements = 0;
  std::vector<std::array<std::vector<std::pair<int, int>>, 2>> joins;
  int m = 2;
  bool allow_split = false;
  bool allow_identity = true;
  Grading grading = Grading::LabelSum;

  int dimension() const { return static_cast<int>(joins.size()); }

  /// Label sum carried by a generator with k components at level i in
  /// grading g, or -1 if none.
  int label_sum(int k, int i, int g) const {
    if (grading == Grading::LabelSum) return (g >= 0 && g <= (m - 1) * k) ? g : -1;
    int twice = k + i - g;
    if (twice < 0 || twice % 2 != 0 || twice / 2 > k) return -1;
    return twice / 2;
  }
  int grading_of(int k, int i, int t) const { return grading == Grading::LabelSum ? t : k + i - 2 * t; }
};

struct CubeOptions {
  std::optional<int> i_min, i_max;
  std::optional<std::set<int>> gradings;  ///< restrict to these j (or q)
  bool check_d_squared = false;
  int workers = 1;
};

/// Largest cube dimension accepted; CHROMKH_MAX_CUBE_DIM overrides.
inline int cube_dimension_limit(int fallback) {
  if (const char* s = std::getenv("CHROMKH_MAX_CUBE_DIM")) {
    int v = std::atoi(s);
    if (v > 0) return v;
  }
  return fallback;
}

namespace detail {

inline const std::vector<std::vector<std::uint64_t>>& binomial_table() {
  static const auto table = [] {
    std::vector<std::vector<std::uint64_t>> c(64, std::vector<std::uint64_t>(64, 0));
    for (int n = 0; n < 64; ++n) {
      c[n][0] = 1;
      for (int k = 1; k <= n; ++k) c[n][k] = c[n - 1][k - 1] + (k <= n - 1 ? c[n - 1][k] : 0);
    }
    return c;
  }();
  return table;
}

/// Rank of a subset among subsets of equal size in colex order.
inline std::uint32_t colex_rank(std::uint32_t s) {
  const auto& C = binomial_table();
  std::uint64_t r = 0;
  int t = 0;
  while (s) {
    int pos = __builtin_ctz(s);
    r += C[pos][t + 1];
    ++t;
    s &= s - 1;
  }
  return static_cast<std::uint32_t>(r);
}

/// Component data for every state of one level, states in colex order.
struct Level {
  int i = 0;
  std::vector<std::uint32_t> states;
  std::vector<std::uint8_t> k;     ///< components per state
  std::vector<std::uint8_t> comp;  ///< states.size() x elements
  std::vector<std::uint8_t> rep;   ///< states.size() x elements: first element of each component
};

inline Level build_level(const CubeSpec& spec, int i) {
  const int n = spec.dimension(), N = spec.elements;
  Level L;
  L.i = i;
  if (i < 0 || i > n) return L;
  const std::uint64_t count = binomial_table()[n][i];
  L.states.reserve(count);
  L.k.reserve(count);
  L.comp.resize(count * static_cast<std::uint64_t>(N));
  L.rep.resize(count * static_cast<std::uint64_t>(N));
  std::vector<int> parent(static_cast<std::size_t>(N));
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::vector<int> label(static_cast<std::size_t>(N));
  auto visit = [&](std::uint32_t s) {
    std::iota(parent.begin(), parent.end(), 0);
    for (int c = 0; c < n; ++c)
      for (auto [a, b] : spec.joins[c][(s >> c) & 1u]) {
        int ra = find(a), rb = find(b);
        if (ra != rb) parent[std::max(ra, rb)] = std::min(ra, rb);
      }
    std::fill(label.begin(), label.end(), -1);
    std::size_t idx = L.states.size();
    std::uint8_t* cp = &L.comp[idx * N];
    std::uint8_t* rp = &L.rep[idx * N];
    int next = 0;
    for (int e = 0; e < N; ++e) {
      int r = find(e);
      if (label[r] < 0) {
        rp[next] = static_cast<std::uint8_t>(e);
        label[r] = next++;
      }
      cp[e] = static_cast<std::uint8_t>(label[r]);
    }
    L.states.push_back(s);
    L.k.push_back(static_cast<std::uint8_t>(next));
  };
  if (i == 0) {
    visit(0);
  } else {
    // Gosper's hack walks same-popcount words in increasing (= colex) order.
    std::uint64_t s = (1ull << i) - 1, limit = 1ull << n;
    while (s < limit) {
      visit(static_cast<std::uint32_t>(s));
      std::uint64_t c = s & (~s + 1), r = s + c;
      s = (((r ^ s) >> 2) / c) | r;
    }
  }
  return L;
}

/// Labelings of k components with values in [0, m-1] summing to t, in
/// lexicographic order, with ranking.
class LabelTable {
 public:
  LabelTable(int m, int kmax) : m_(m), kmax_(kmax) {
    const int tmax = (m - 1) * kmax;
    count_.assign(static_cast<std::size_t>(kmax + 1), std::vector<std::uint64_t>(static_cast<std::size_t>(tmax + 1), 0));
    count_[0][0] = 1;
    for (int k = 1; k <= kmax; ++k)
      for (int t = 0; t <= tmax; ++t) {
        std::uint64_t s = 0;
        for (int a = 0; a < m && a <= t; ++a) s += count_[k - 1][t - a];
        count_[k][t] = s;
      }
  }

  std::uint64_t count(int k, int t) const {
    if (k < 0 || k > kmax_ || t < 0 || t > (m_ - 1) * k) return 0;
    return count_[k][t];
  }

  std::uint64_t rank(const std::uint8_t* a, int k) const {
    int t = 0;
    for (int p = 0; p < k; ++p) t += a[p];
    std::uint64_t r = 0;
    for (int p = 0; p < k; ++p) {
      for (int v = 0; v < a[p]; ++v) r += count(k - p - 1, t - v);
      t -= a[p];
    }
    return r;
  }

  /// All labelings of (k, t), flattened k bytes each; cached.
  const std::vector<std::uint8_t>& list(int k, int t) {
    std::lock_guard<std::mutex> lock(mu_);
    auto key = std::make_pair(k, t);
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
    std::vector<std::uint8_t> out, cur(static_cast<std::size_t>(k), 0);
    std::function<void(int, int)> rec = [&](int p, int left) {
      if (p == k) {
        if (left == 0) out.insert(out.end(), cur.begin(), cur.end());
        return;
      }
      for (int v = 0; v < m_ && v <= left; ++v) {
        if (left - v > (m_ - 1) * (k - p - 1)) continue;
        cur[p] = static_cast<std::uint8_t>(v);
        rec(p + 1, left - v);
      }
    };
    rec(0, t);
    return cache_.emplace(key, std::move(out)).first->second;
  }

 private:
  int m_, kmax_;
  std::vector<std::vector<std::uint64_t>> count_;
  std::mutex mu_;
  std::map<std::pair<int, int>, std::vector<std::uint8_t>> cache_;
};

/// Offsets of each state's block inside the graded piece (level, g).
inline std::vector<std::uint64_t> block_offsets(const CubeSpec& spec, const Level& L, const LabelTable& lt, int g) {
  std::vector<std::uint64_t> off(L.states.size() + 1, 0);
  for (std::size_t s = 0; s < L.states.size(); ++s) {
    int t = spec.label_sum(L.k[s], L.i, g);
    off[s + 1] = off[s] + (t < 0 ? 0 : lt.count(L.k[s], t));
  }
  return off;
}

/// Matrix of d: C^{i,g} -> C^{i+1,g}; rows index the target.
inline SparseMatrix differential(const CubeSpec& spec, const Level& src, const Level& dst, LabelTable& lt, int g,
                                 const std::vector<std::uint64_t>& src_off,
                                 const std::vector<std::uint64_t>& dst_off) {
  const int n = spec.dimension(), N = spec.elements;
  SparseMatrix M;
  if (src_off.back() > INT32_MAX || dst_off.back() > INT32_MAX) throw ResourceError("chain group too large");
  M.cols = static_cast<int>(src_off.back());
  M.rows = static_cast<int>(dst_off.back());
  if (M.rows == 0 || M.cols == 0) return M;
  std::vector<int> tgt(static_cast<std::size_t>(N));
  std::vector<std::uint8_t> img(static_cast<std::size_t>(N)), img2(static_cast<std::size_t>(N));
  for (std::size_t si = 0; si < src.states.size(); ++si) {
    const int k = src.k[si];
    const int t = spec.label_sum(k, src.i, g);
    if (t < 0) continue;
    const auto& labs = lt.list(k, t);
    const std::uint32_t s = src.states[si];
    const std::uint8_t* rp = &src.rep[si * N];
    const std::uint8_t* cp = &src.comp[si * N];
    for (int c = 0; c < n; ++c) {
      if (s >> c & 1u) continue;
      const std::uint32_t s2 = s | (1u << c);
      const std::size_t di = colex_rank(s2);
      const int k2 = dst.k[di];
      const int t2 = spec.label_sum(k2, dst.i, g);
      const std::uint8_t* cp2 = &dst.comp[di * N];
      const long sign = (__builtin_popcount(s & ((1u << c) - 1)) & 1) ? -1 : 1;
      for (int x = 0; x < k; ++x) tgt[x] = cp2[rp[x]];
      int merged_a = -1, merged_b = -1, split_src = -1, split_new = -1;
      if (k2 == k - 1) {
        std::vector<int> seen(static_cast<std::size_t>(k2), -1);
        for (int x = 0; x < k; ++x) {
          if (seen[tgt[x]] >= 0) {
            merged_a = seen[tgt[x]];
            merged_b = x;
          }
          seen[tgt[x]] = x;
        }
      } else if (k2 == k + 1) {
        if (!spec.allow_split || spec.m != 2) throw std::logic_error("cube edge splits a component");
        std::vector<char> hit(static_cast<std::size_t>(k2), 0);
        for (int x = 0; x < k; ++x) hit[tgt[x]] = 1;
        for (int y = 0; y < k2; ++y)
          if (!hit[y]) split_new = y;
        for (int e = 0; e < N; ++e)
          if (cp2[e] == split_new) {
            split_src = cp[e];
            break;
          }
      } else if (k2 != k || !spec.allow_identity) {
        throw std::logic_error("cube edge neither merges nor splits");
      }
      if (t2 < 0) continue;
      const std::uint64_t base2 = dst_off[di];
      const std::uint64_t base = src_off[si];
      const std::size_t nl = labs.size() / static_cast<std::size_t>(std::max(k, 1));
      for (std::size_t li = 0; li < nl; ++li) {
        const std::uint8_t* a = k ? &labs[li * k] : nullptr;
        const int col = static_cast<int>(base + li);
        if (merged_a >= 0) {
          std::fill(img.begin(), img.begin() + k2, 0);
          int sum = a[merged_a] + a[merged_b];
          if (sum >= spec.m) continue;
          for (int x = 0; x < k; ++x) img[tgt[x]] = (x == merged_a || x == merged_b) ? sum : a[x];
          M.add(static_cast<int>(base2 + lt.rank(img.data(), k2)), col, sign);
        } else if (split_new >= 0) {
          for (int x = 0; x < k; ++x) img[tgt[x]] = a[x];
          const int old = tgt[split_src];
          if (a[split_src] == 1) {
            img[split_new] = 1;
            M.add(static_cast<int>(base2 + lt.rank(img.data(), k2)), col, sign);
          } else {
            std::copy(img.begin(), img.begin() + k2, img2.begin());
            img[split_new] = 1;
            M.add(static_cast<int>(base2 + lt.rank(img.data(), k2)), col, sign);
            img2[old] = 1;
            img2[split_new] = 0;
            M.add(static_cast<int>(base2 + lt.rank(img2.data(), k2)), col, sign);
          }
        } else {
          for (int x = 0; x < k; ++x) img[tgt[x]] = a[x];
          M.add(static_cast<int>(base2 + lt.rank(img.data(), k2)), col, sign);
        }
      }
    }
  }
  return M;
}

/// Sparse product B*A, used only for the d^2 = 0 self check.
inline bool product_is_zero(const SparseMatrix& A, const SparseMatrix& B) {
  std::vector<std::vector<std::pair<int, long>>> bcols(static_cast<std::size_t>(B.cols));
  for (const auto& e : B.entries) bcols[e.col].push_back({e.row, e.value});
  std::vector<std::vector<std::pair<int, long>>> acols(static_cast<std::size_t>(A.cols));
  for (const auto& e : A.entries) acols[e.col].push_back({e.row, e.value});
  std::map<int, long> acc;
  for (int c = 0; c < A.cols; ++c) {
    acc.clear();
    for (auto [mid, va] : acols[c])
      for (auto [r, vb] : bcols[mid]) acc[r] += va * vb;
    for (auto& [r, v] : acc)
      if (v != 0) return false;
  }
  return true;
}

}  // namespace detail

/// Integral homology of the cube complex, graded by (i, g). The result holds
/// H^{i,g} for every i in the requested range and every g in the filter.
inline BigradedGroups cube_homology(const CubeSpec& spec, const CubeOptions& opt = {}) {
  using namespace detail;
  const int n = spec.dimension();
  if (spec.elements > 255) throw ResourceError("too many cube elements");
  const int lo = std::max(0, opt.i_min.value_or(0));
  const int hi = std::min(n, opt.i_max.value_or(n));
  BigradedGroups out;
  if (lo > hi) return out;
  LabelTable lt(spec.m, spec.elements);

  auto gradings_at = [&](const Level& L) {
    std::set<int> gs;
    std::set<int> ks(L.k.begin(), L.k.end());
    for (int k : ks) {
      int tmax = (spec.grading == CubeSpec::Grading::LabelSum) ? (spec.m - 1) * k : k;
      for (int t = 0; t <= tmax; ++t) gs.insert(spec.grading_of(k, L.i, t));
    }
    if (opt.gradings) {
      std::set<int> f;
      for (int g : gs)
        if (opt.gradings->count(g)) f.insert(g);
      return f;
    }
    return gs;
  };

  // Results of the differential out of level i, per grading.
  struct Slice {
    std::uint64_t dim_src = 0;
    SmithResult snf;
    SparseMatrix matrix;  // kept only for the d^2 check
  };
  std::map<int, Slice> prev;  // d^{i-1}
  // Start one level early when lo > 0: only the incoming differential is needed.
  const int start = lo > 0 ? lo - 1 : lo;
  Level cur = build_level(spec, start);
  for (int i = start; i <= hi; ++i) {
    Level next = build_level(spec, i + 1);
    std::set<int> gs = gradings_at(cur);
    std::vector<int> glist(gs.begin(), gs.end());
    std::map<int, Slice> now;
    for (int g : glist) now[g];
    std::mutex mu;
    std::atomic<std::size_t> cursor{0};
    std::exception_ptr failure;
    auto work = [&] {
      for (;;) {
        std::size_t idx = cursor++;
        if (idx >= glist.size()) return;
        int g = glist[idx];
        try {
          auto so = block_offsets(spec, cur, lt, g);
          Slice sl;
          sl.dim_src = so.back();
          if (i + 1 <= n) {
            auto dof = block_offsets(spec, next, lt, g);
            SparseMatrix M = differential(spec, cur, next, lt, g, so, dof);
            sl.snf = smith(M);
            if (opt.check_d_squared) sl.matrix = std::move(M);
          }
          std::lock_guard<std::mutex> lock(mu);
          now[g] = std::move(sl);
        } catch (...) {
          std::lock_guard<std::mutex> lock(mu);
          if (!failure) failure = std::current_exception();
          cursor = glist.size();
        }
      }
    };
    const int w = std::max(1, std::min<int>(opt.workers, static_cast<int>(glist.size())));
    if (w == 1) {
      work();
    } else {
      std::vector<std::thread> pool;
      for (int t = 0; t < w; ++t) pool.emplace_back(work);
      for (auto& th : pool) th.join();
    }
    if (failure) std::rethrow_exception(failure);
    if (opt.check_d_squared)
      for (auto& [g, sl] : now) {
        auto it = prev.find(g);
        if (it != prev.end() && it->second.matrix.rows && sl.matrix.rows &&
            !product_is_zero(it->second.matrix, sl.matrix))
          throw std::logic_error("d^2 != 0 at level " + std::to_string(i) + ", grading " + std::to_string(g));
      }
    if (i >= lo) {
      for (auto& [g, sl] : now) {
        long rank_in = 0;
        std::vector<BigInt> divs;
        auto it = prev.find(g);
        if (it != prev.end()) {
          rank_in = it->second.snf.rank;
          divs = it->second.snf.divisors;
        }
        Group grp;
        grp.free = static_cast<long>(sl.dim_src) - sl.snf.rank - rank_in;
        for (const BigInt& d : divs)
          for (auto& [pp, mult] : prime_power_factors(d)) grp.add_torsion(pp, mult);
        out.set(i, g, grp);
      }
    }
    prev = std::move(now);
    cur = std::move(next);
  }
  return out;
}

/// sum over states (-1)^|s| * weight(k(s), |s|), the graded Euler
/// characteristic computed straight from the cube.
inline LaurentPolynomial cube_state_sum(const CubeSpec& spec) {
  using namespace detail;
  LaurentPolynomial total;
  const int n = spec.dimension();
  for (int i = 0; i <= n; ++i) {
    Level L = build_level(spec, i);
    std::map<int, long> kcount;
    for (auto k : L.k) ++kcount[k];
    for (auto [k, cnt] : kcount) {
      // (1 + q + ... + q^(m-1))^k or (q + q^-1)^k q^i
      LaurentPolynomial base = spec.grading == CubeSpec::Grading::LabelSum
                                   ? LaurentPolynomial(0, IntPolynomial(std::vector<BigInt>(spec.m, 1)))
                                   : LaurentPolynomial(-1, IntPolynomial{1, 0, 1});
      LaurentPolynomial p = LaurentPolynomial::monomial(0);
      for (int r = 0; r < k; ++r) p = p * base;
      if (spec.grading == CubeSpec::Grading::Khovanov) p = p * LaurentPolynomial::monomial(i);
      total += p * LaurentPolynomial::monomial(0, BigInt((i % 2 ? -1 : 1) * cnt));
    }
  }
  return total;
}

}  // namespace chromkh

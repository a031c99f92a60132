#pragma once

#include <algorithm>
#include <climits>
#include <cstdint>
#include <cstdlib>
#include <map>
#include <queue>
#include <stdexcept>
#include <utility>
#include <vector>

#include "bigint.hpp"

namespace chromkh {

class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Coordinate-format integer matrix. Duplicate coordinates are summed.
struct SparseMatrix {
  int rows = 0;
  int cols = 0;
  struct Entry {
    int row;
    int col;
    long value;
  };
  std::vector<Entry> entries;

  void add(int r, int c, long v) {
    if (v != 0) entries.push_back({r, c, v});
  }
};

/// Rank and the non-unit diagonal entries of a diagonal form reached by
/// unimodular row and column operations. The cokernel of the matrix is
/// Z^(rows - rank) plus the cyclic groups Z/d for d in `divisors`.
struct SmithResult {
  long rank = 0;
  std::vector<BigInt> divisors;
};

namespace detail {

struct Overflow {};

template <class T>
struct Arith;

template <>
struct Arith<long> {
  static long add(long a, long b) {
    long r;
    if (__builtin_add_overflow(a, b, &r)) throw Overflow{};
    return r;
  }
  static long mul(long a, long b) {
    long r;
    if (__builtin_mul_overflow(a, b, &r)) throw Overflow{};
    return r;
  }
  static long sub(long a, long b) {
    long r;
    if (__builtin_sub_overflow(a, b, &r)) throw Overflow{};
    return r;
  }
  static long magnitude(long a) {
    if (a == LONG_MIN) throw Overflow{};
    return a < 0 ? -a : a;
  }
  static bool divides(long p, long a) { return a % p == 0; }
  static long quot(long a, long p) { return a / p; }
  /// g = s*a + t*b with g = gcd(a, b) > 0
  static void gcdext(long a, long b, long& g, long& s, long& t) {
    long r0 = a, r1 = b, s0 = 1, s1 = 0, t0 = 0, t1 = 1;
    while (r1 != 0) {
      long q = r0 / r1;
      long r2 = r0 - q * r1;
      long s2 = sub(s0, mul(q, s1)), t2 = sub(t0, mul(q, t1));
      r0 = r1, r1 = r2, s0 = s1, s1 = s2, t0 = t1, t1 = t2;
    }
    if (r0 < 0) r0 = -r0, s0 = -s0, t0 = -t0;
    g = r0, s = s0, t = t0;
  }
  static BigInt big(long a) { return BigInt(a); }
};

template <>
struct Arith<BigInt> {
  static BigInt add(const BigInt& a, const BigInt& b) { return a + b; }
  static BigInt mul(const BigInt& a, const BigInt& b) { return a * b; }
  static BigInt sub(const BigInt& a, const BigInt& b) { return a - b; }
  static BigInt magnitude(const BigInt& a) { return abs(a); }
  static bool divides(const BigInt& p, const BigInt& a) { return mpz_divisible_p(a.get_mpz_t(), p.get_mpz_t()) != 0; }
  static BigInt quot(const BigInt& a, const BigInt& p) {
    BigInt q;
    mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), p.get_mpz_t());
    return q;
  }
  static void gcdext(const BigInt& a, const BigInt& b, BigInt& g, BigInt& s, BigInt& t) {
    mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  }
  static BigInt big(const BigInt& a) { return a; }
};

/// Row-major sparse integer matrix under unimodular elimination.
///
/// Phase one pivots on +-1 entries (sparsest column first, then the shortest
/// row); such a pivot needs no column operations, so its row and column just
/// disappear. Phase two handles what is left with smallest-magnitude pivots
/// and 2x2 gcd transforms on rows and columns.
template <class T>
class Eliminator {
 public:
  using A = Arith<T>;
  using Row = std::vector<std::pair<int, T>>;

  explicit Eliminator(const SparseMatrix& m)
      : rows_(static_cast<std::size_t>(m.rows)),
        col_rows_(static_cast<std::size_t>(m.cols)),
        count_(static_cast<std::size_t>(m.cols), 0),
        row_dead_(static_cast<std::size_t>(m.rows), 0),
        col_dead_(static_cast<std::size_t>(m.cols), 0) {
    auto sorted = m.entries;
    std::sort(sorted.begin(), sorted.end(), [](const auto& x, const auto& y) {
      return x.row != y.row ? x.row < y.row : x.col < y.col;
    });
    for (const auto& e : sorted) {
      Row& r = rows_[e.row];
      if (!r.empty() && r.back().first == e.col) {
        r.back().second = A::add(r.back().second, T(e.value));
        if (r.back().second == 0) r.pop_back();
      } else {
        r.push_back({e.col, T(e.value)});
      }
    }
    for (int r = 0; r < m.rows; ++r)
      for (auto& [c, v] : rows_[r]) {
        col_rows_[c].push_back(r);
        ++count_[c];
      }
  }

  SmithResult run() {
    unit_phase();
    general_phase();
    return std::move(out_);
  }

 private:
  const T* get(int r, int c) const {
    const Row& row = rows_[r];
    auto it = std::lower_bound(row.begin(), row.end(), c, [](const auto& e, int x) { return e.first < x; });
    return (it != row.end() && it->first == c) ? &it->second : nullptr;
  }

  static bool is_unit(const T& v) { return v == 1 || v == -1; }

  void touch(int col, int delta) {
    count_[col] += delta;
    if (in_unit_phase_) heap_.push({count_[col], col});
  }

  /// Live rows with a nonzero entry in column c (compacts the lazy list).
  const std::vector<int>& live_rows(int c) {
    auto& lst = col_rows_[c];
    std::sort(lst.begin(), lst.end());
    lst.erase(std::unique(lst.begin(), lst.end()), lst.end());
    std::size_t w = 0;
    for (int r : lst)
      if (!row_dead_[r] && get(r, c)) lst[w++] = r;
    lst.resize(w);
    return lst;
  }

  /// x*rk + y*rr as a new row that will live at index k.
  Row combine(const Row& rk, const T& x, const Row& rr, const T& y, int k) {
    Row res;
    res.reserve(rk.size() + rr.size());
    std::size_t a = 0, b = 0;
    while (a < rk.size() || b < rr.size()) {
      if (b == rr.size() || (a < rk.size() && rk[a].first < rr[b].first)) {
        T v = A::mul(x, rk[a].second);
        if (v != 0)
          res.push_back({rk[a].first, std::move(v)});
        else
          touch(rk[a].first, -1);
        ++a;
      } else if (a == rk.size() || rr[b].first < rk[a].first) {
        T v = A::mul(y, rr[b].second);
        if (v != 0) {
          res.push_back({rr[b].first, std::move(v)});
          col_rows_[rr[b].first].push_back(k);
          touch(rr[b].first, +1);
        }
        ++b;
      } else {
        T v = A::add(A::mul(x, rk[a].second), A::mul(y, rr[b].second));
        if (v != 0)
          res.push_back({rk[a].first, std::move(v)});
        else
          touch(rk[a].first, -1);
        ++a, ++b;
      }
    }
    return res;
  }

  void kill(int r, int c) {
    row_dead_[r] = 1;
    for (auto& [col, v] : rows_[r]) touch(col, -1);
    rows_[r].clear();
    col_dead_[c] = 1;
    ++out_.rank;
  }

  void unit_phase() {
    in_unit_phase_ = true;
    for (int c = 0; c < static_cast<int>(count_.size()); ++c)
      if (count_[c] > 0) heap_.push({count_[c], c});
    std::vector<int> deferred;
    for (;;) {
      while (!heap_.empty()) {
        auto [cnt, c] = heap_.top();
        heap_.pop();
        if (col_dead_[c] || cnt != count_[c] || cnt == 0) continue;
        const std::vector<int> live = live_rows(c);
        int pivot = -1;
        for (int r : live)
          if (is_unit(*get(r, c)) && (pivot < 0 || rows_[r].size() < rows_[pivot].size())) pivot = r;
        if (pivot < 0) {
          deferred.push_back(c);
          continue;
        }
        const T p = *get(pivot, c);  // its own inverse
        for (int r : live) {
          if (r == pivot) continue;
          T f = A::mul(*get(r, c), p);
          rows_[r] = combine(rows_[r], T(1), rows_[pivot], A::sub(T(0), f), r);
        }
        kill(pivot, c);
      }
      // Fill-in may have given a deferred column a unit entry.
      bool retry = false;
      for (int c : deferred) {
        if (col_dead_[c]) continue;
        for (int r : live_rows(c))
          if (is_unit(*get(r, c))) retry = true;
        if (retry) break;
      }
      if (!retry) break;
      for (int c : deferred)
        if (!col_dead_[c] && count_[c] > 0) heap_.push({count_[c], c});
      deferred.clear();
    }
    in_unit_phase_ = false;
    heap_ = {};
  }

  void set(int r, int c, T v) {
    Row& row = rows_[r];
    auto it = std::lower_bound(row.begin(), row.end(), c, [](const auto& e, int x) { return e.first < x; });
    bool present = it != row.end() && it->first == c;
    if (v == 0) {
      if (present) row.erase(it), --count_[c];
    } else if (present) {
      it->second = std::move(v);
    } else {
      row.insert(it, {c, std::move(v)});
      col_rows_[c].push_back(r);
      ++count_[c];
    }
  }

  /// (col_c, col_j) <- (s*col_c + t*col_j, u*col_c + w*col_j)
  void column_transform(int c, int j, const T& s, const T& t, const T& u, const T& w) {
    std::vector<int> rs = live_rows(c);
    const auto& rj = live_rows(j);
    rs.insert(rs.end(), rj.begin(), rj.end());
    std::sort(rs.begin(), rs.end());
    rs.erase(std::unique(rs.begin(), rs.end()), rs.end());
    for (int r : rs) {
      const T* pa = get(r, c);
      const T* pb = get(r, j);
      T a = pa ? *pa : T(0), b = pb ? *pb : T(0);
      set(r, c, A::add(A::mul(s, a), A::mul(t, b)));
      set(r, j, A::add(A::mul(u, a), A::mul(w, b)));
    }
  }

  void general_phase() {
    for (;;) {
      // smallest magnitude, then shortest row
      int pr = -1, pc = -1;
      T best = 0;
      for (int r = 0; r < static_cast<int>(rows_.size()); ++r) {
        if (row_dead_[r]) continue;
        for (auto& [c, v] : rows_[r]) {
          T mag = A::magnitude(v);
          if (pr < 0 || mag < best || (mag == best && rows_[r].size() < rows_[pr].size())) {
            pr = r, pc = c, best = mag;
          }
        }
      }
      if (pr < 0) return;
      for (;;) {
        for (int k : std::vector<int>(live_rows(pc))) {
          if (k == pr) continue;
          T p = *get(pr, pc), a = *get(k, pc);
          if (A::divides(p, a)) {
            rows_[k] = combine(rows_[k], T(1), rows_[pr], A::sub(T(0), A::quot(a, p)), k);
          } else {
            T g, s, t;
            A::gcdext(p, a, g, s, t);
            Row nr = combine(rows_[pr], s, rows_[k], t, pr);
            Row nk = combine(rows_[k], A::sub(T(0), A::quot(p, g)), rows_[pr], A::quot(a, g), k);
            rows_[pr] = std::move(nr);
            rows_[k] = std::move(nk);
          }
        }
        T p = *get(pr, pc);
        int bad = -1;
        for (auto& [col, v] : rows_[pr])
          if (col != pc && !A::divides(p, v)) {
            bad = col;
            break;
          }
        if (bad < 0) break;
        T b = *get(pr, bad), g, s, t;
        A::gcdext(p, b, g, s, t);
        column_transform(pc, bad, s, t, A::quot(b, g), A::sub(T(0), A::quot(p, g)));
      }
      T p = A::magnitude(*get(pr, pc));
      if (p != 1) out_.divisors.push_back(A::big(p));
      kill(pr, pc);
    }
  }

  std::vector<Row> rows_;
  std::vector<std::vector<int>> col_rows_;
  std::vector<int> count_;
  std::vector<char> row_dead_, col_dead_;
  bool in_unit_phase_ = false;
  std::priority_queue<std::pair<int, int>, std::vector<std::pair<int, int>>, std::greater<>> heap_;
  SmithResult out_;
};

}  // namespace detail

/// Rank and non-unit diagonal of a Smith-equivalent diagonal form. Runs in
/// machine integers and falls back to GMP on overflow.
inline SmithResult smith(const SparseMatrix& m) {
  try {
    return detail::Eliminator<long>(m).run();
  } catch (const detail::Overflow&) {
    return detail::Eliminator<BigInt>(m).run();
  }
}

/// Torsion of the cokernel as prime powers with multiplicity, ascending.
inline std::map<BigInt, int> torsion_primary(const SmithResult& r) {
  std::map<BigInt, int> out;
  for (const BigInt& d : r.divisors)
    for (auto& [pp, k] : prime_power_factors(d)) out[pp] += k;
  return out;
}

}  // namespace chromkh

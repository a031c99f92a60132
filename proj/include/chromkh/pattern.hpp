#pragma once

#include <initializer_list>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace chromkh {

/// Z_2 exponents x_i indexed by homological degree, x at position k sits at
/// degree start + k.
struct TorsionPattern {
  int start = 1;
  std::vector<int> exponents;

  int at(int i) const {
    int k = i - start;
    return k >= 0 && k < static_cast<int>(exponents.size()) ? exponents[k] : 0;
  }
  int last_degree() const { return start + static_cast<int>(exponents.size()) - 1; }
  std::size_t size() const { return exponents.size(); }
  friend bool operator==(const TorsionPattern&, const TorsionPattern&) = default;

  std::string str() const {
    std::ostringstream o;
    o << "(";
    for (std::size_t k = 0; k < exponents.size(); ++k) o << (k ? "," : "") << exponents[k];
    o << ")";
    if (start != 1) o << "@" << start;
    return o.str();
  }
};

namespace pattern {

using Seq = std::vector<int>;

inline void check(int p) {
  if (p < 0) throw std::invalid_argument("pattern parameter must be >= 0");
}

/// (1,1,2,2,...,p,p)
inline Seq C(int p) {
  check(p);
  Seq s;
  for (int k = 1; k <= p; ++k) s.insert(s.end(), {k, k});
  return s;
}

/// (2,1,3,2,...,p,p-1); empty for p <= 1.
inline Seq A(int p) {
  check(p);
  Seq s;
  for (int k = 2; k <= p; ++k) s.insert(s.end(), {k, k - 1});
  return s;
}

inline Seq constant(int value, int length) {
  check(length);
  return Seq(static_cast<std::size_t>(length), value);
}

inline Seq concat(std::initializer_list<Seq> parts) {
  Seq s;
  for (const Seq& p : parts) s.insert(s.end(), p.begin(), p.end());
  return s;
}

inline Seq reverse(Seq s) { return Seq(s.rbegin(), s.rend()); }

inline Seq drop_last(Seq s) {
  if (!s.empty()) s.pop_back();
  return s;
}

/// (a,b) repeated n times.
inline Seq repeat(const Seq& block, int n) {
  check(n);
  Seq s;
  for (int k = 0; k < n; ++k) s.insert(s.end(), block.begin(), block.end());
  return s;
}

}  // namespace pattern

}  // namespace chromkh

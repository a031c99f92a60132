#pragma once

#include <algorithm>
#include <climits>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>

#include <nlohmann/json.hpp>

#include "bigint.hpp"
#include "polynomial.hpp"

namespace chromkh {

/// Finitely generated abelian group Z^free plus torsion, torsion kept as
/// prime-power order -> multiplicity.
struct Group {
  long free = 0;
  std::map<BigInt, int> torsion;

  bool is_zero() const { return free == 0 && torsion.empty(); }
  int torsion_count() const {
    int n = 0;
    for (auto& [o, k] : torsion) n += k;
    return n;
  }
  /// Multiplicity of Z_order.
  int torsion_of(long order) const {
    auto it = torsion.find(BigInt(order));
    return it == torsion.end() ? 0 : it->second;
  }
  void add_torsion(const BigInt& order, int mult = 1) {
    if (mult > 0) torsion[order] += mult;
  }
  Group& operator+=(const Group& o) {
    free += o.free;
    for (auto& [ord, k] : o.torsion) torsion[ord] += k;
    return *this;
  }
  friend Group operator+(Group a, const Group& b) { return a += b; }
  friend bool operator==(const Group&, const Group&) = default;

  /// "Z^6 + Z2^4", "0" for the trivial group.
  std::string str() const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    if (free) {
      out << "Z";
      if (free > 1) out << '^' << free;
      first = false;
    }
    for (auto& [ord, k] : torsion) {
      if (!first) out << " + ";
      out << "Z" << ord.get_str();
      if (k > 1) out << '^' << k;
      first = false;
    }
    return out.str();
  }

  static Group Z(long r = 1) { return Group{r, {}}; }
  static Group Ztor(long order, int mult = 1) {
    Group g;
    if (mult > 0) g.torsion[BigInt(order)] = mult;
    return g;
  }
};

/// (i, j) -> group; zero groups are never stored.
class BigradedGroups {
 public:
  using Key = std::pair<int, int>;

  const Group& at(int i, int j) const {
    static const Group zero;
    auto it = g_.find({i, j});
    return it == g_.end() ? zero : it->second;
  }
  void set(int i, int j, Group g) {
    if (g.is_zero())
      g_.erase({i, j});
    else
      g_[{i, j}] = std::move(g);
  }
  void add(int i, int j, const Group& g) { set(i, j, at(i, j) + g); }

  const std::map<Key, Group>& groups() const { return g_; }
  bool empty() const { return g_.empty(); }
  friend bool operator==(const BigradedGroups&, const BigradedGroups&) = default;

  BigradedGroups shifted(int di, int dj) const {
    BigradedGroups r;
    for (auto& [k, g] : g_) r.g_[{k.first + di, k.second + dj}] = g;
    return r;
  }

  /// Restriction to a homological range.
  BigradedGroups restricted(int imin, int imax) const {
    BigradedGroups r;
    for (auto& [k, g] : g_)
      if (k.first >= imin && k.first <= imax) r.g_[k] = g;
    return r;
  }

  std::optional<std::pair<int, int>> i_range(bool torsion_only = false) const {
    int lo = INT_MAX, hi = INT_MIN;
    for (auto& [k, g] : g_) {
      if (torsion_only && g.torsion.empty()) continue;
      lo = std::min(lo, k.first);
      hi = std::max(hi, k.first);
    }
    if (lo > hi) return std::nullopt;
    return std::make_pair(lo, hi);
  }

  /// i_max - i_min + 1 over nonzero groups (0 when empty).
  int hspan(bool torsion_only = false) const {
    auto r = i_range(torsion_only);
    return r ? r->second - r->first + 1 : 0;
  }

  /// Number of diagonals spanned: chromatic diagonals are i+j = const with
  /// unit spacing; Khovanov diagonals j-2i = const with spacing two.
  int width_chromatic() const {
    int lo = INT_MAX, hi = INT_MIN;
    for (auto& [k, g] : g_) {
      lo = std::min(lo, k.first + k.second);
      hi = std::max(hi, k.first + k.second);
    }
    return lo > hi ? 0 : hi - lo + 1;
  }
  int width_khovanov() const {
    int lo = INT_MAX, hi = INT_MIN;
    for (auto& [k, g] : g_) {
      lo = std::min(lo, k.second - 2 * k.first);
      hi = std::max(hi, k.second - 2 * k.first);
    }
    return lo > hi ? 0 : (hi - lo) / 2 + 1;
  }

  /// sum (-1)^i free(i,j) q^j
  LaurentPolynomial euler_characteristic() const {
    LaurentPolynomial p;
    for (auto& [k, g] : g_)
      if (g.free) p.add_term(k.second, BigInt(k.first % 2 == 0 ? g.free : -g.free));
    return p;
  }

  /// Z_order multiplicity summed over j, per homological degree.
  std::map<int, int> torsion_by_degree(long order = 2) const {
    std::map<int, int> r;
    for (auto& [k, g] : g_) {
      int t = g.torsion_of(order);
      if (t) r[k.first] += t;
    }
    return r;
  }

  bool only_torsion_order(long order) const {
    for (auto& [k, g] : g_)
      for (auto& [o, n] : g.torsion)
        if (o != order) return false;
    return true;
  }

 private:
  std::map<Key, Group> g_;
};

// JSON: {"groups":[{"i":..,"j":..,"free":..,"torsion":[["2",k],...]},...]}
inline nlohmann::json to_json(const BigradedGroups& h, const std::string& ik = "i", const std::string& jk = "j") {
  nlohmann::json arr = nlohmann::json::array();
  for (auto& [k, g] : h.groups()) {
    nlohmann::json tor = nlohmann::json::array();
    for (auto& [o, n] : g.torsion) tor.push_back({o.get_str(), n});
    arr.push_back({{ik, k.first}, {jk, k.second}, {"free", g.free}, {"torsion", tor}});
  }
  return {{"groups", arr}};
}

inline BigradedGroups bigraded_from_json(const nlohmann::json& js, const std::string& ik = "i",
                                         const std::string& jk = "j") {
  BigradedGroups h;
  for (const auto& e : js.at("groups")) {
    Group g;
    g.free = e.at("free").get<long>();
    for (const auto& t : e.at("torsion")) {
      BigInt order(t.at(0).get<std::string>());
      g.add_torsion(order, t.at(1).get<int>());
    }
    h.set(e.at(ik).get<int>(), e.at(jk).get<int>(), g);
  }
  return h;
}

}  // namespace chromkh

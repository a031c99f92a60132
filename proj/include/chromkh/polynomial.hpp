#pragma once

#include <algorithm>
#include <initializer_list>
#include <sstream>
#include <string>
#include <vector>

#include "bigint.hpp"

namespace chromkh {

/// Dense integer polynomial, coefficient index = degree. Always trimmed; the
/// zero polynomial has an empty coefficient list and degree -1.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  IntPolynomial(std::initializer_list<long> coeffs) {
    for (long c : coeffs) c_.emplace_back(c);
    trim();
  }
  explicit IntPolynomial(std::vector<BigInt> coeffs) : c_(std::move(coeffs)) { trim(); }

  static IntPolynomial monomial(int degree, const BigInt& coeff = 1) {
    std::vector<BigInt> c(static_cast<std::size_t>(degree + 1), 0);
    c[degree] = coeff;
    return IntPolynomial(std::move(c));
  }

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  /// Lowest degree with a nonzero coefficient; -1 for zero.
  int low_degree() const {
    for (std::size_t i = 0; i < c_.size(); ++i)
      if (c_[i] != 0) return static_cast<int>(i);
    return -1;
  }
  BigInt coeff(int d) const { return d >= 0 && d < static_cast<int>(c_.size()) ? c_[d] : BigInt(0); }
  const std::vector<BigInt>& coeffs() const { return c_; }

  void add_term(int d, const BigInt& v) {
    if (d < 0) throw std::invalid_argument("negative degree");
    if (static_cast<int>(c_.size()) <= d) c_.resize(static_cast<std::size_t>(d + 1), 0);
    c_[d] += v;
    trim();
  }

  IntPolynomial& operator+=(const IntPolynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0);
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
  }
  IntPolynomial& operator-=(const IntPolynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0);
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
  }
  friend IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b) { return a += b; }
  friend IntPolynomial operator-(IntPolynomial a, const IntPolynomial& b) { return a -= b; }
  friend IntPolynomial operator-(IntPolynomial a) {
    for (auto& x : a.c_) x = -x;
    return a;
  }
  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<BigInt> r(a.c_.size() + b.c_.size() - 1, 0);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i] == 0) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    }
    return IntPolynomial(std::move(r));
  }
  IntPolynomial& operator*=(const IntPolynomial& o) { return *this = *this * o; }

  IntPolynomial pow(int e) const {
    IntPolynomial r{1}, base = *this;
    for (; e > 0; e >>= 1) {
      if (e & 1) r *= base;
      base *= base;
    }
    return r;
  }

  /// Exact division; throws if the remainder is nonzero or a quotient
  /// coefficient is not integral.
  IntPolynomial exact_div(const IntPolynomial& d) const {
    if (d.is_zero()) throw std::domain_error("division by zero polynomial");
    std::vector<BigInt> rem = c_;
    if (rem.size() < d.c_.size()) {
      if (is_zero()) return {};
      throw std::domain_error("inexact polynomial division");
    }
    std::vector<BigInt> q(rem.size() - d.c_.size() + 1, 0);
    const BigInt& lead = d.c_.back();
    for (std::size_t k = q.size(); k-- > 0;) {
      BigInt top = rem[k + d.c_.size() - 1];
      if (top == 0) continue;
      if (top % lead != 0) throw std::domain_error("inexact polynomial division");
      q[k] = top / lead;
      for (std::size_t j = 0; j < d.c_.size(); ++j) rem[k + j] -= q[k] * d.c_[j];
    }
    for (const auto& r : rem)
      if (r != 0) throw std::domain_error("inexact polynomial division");
    return IntPolynomial(std::move(q));
  }

  /// p(x) -> p(x + s), by Horner.
  IntPolynomial shift(long s) const {
    IntPolynomial r, lin{s, 1};
    for (std::size_t k = c_.size(); k-- > 0;) {
      r *= lin;
      r += IntPolynomial(std::vector<BigInt>{c_[k]});
    }
    return r;
  }

  /// p(q(x)) for an arbitrary substitution.
  IntPolynomial compose(const IntPolynomial& q) const {
    IntPolynomial r;
    for (std::size_t k = c_.size(); k-- > 0;) {
      r *= q;
      r += IntPolynomial(std::vector<BigInt>{c_[k]});
    }
    return r;
  }

  BigInt eval(const BigInt& x) const {
    BigInt r = 0;
    for (std::size_t k = c_.size(); k-- > 0;) r = r * x + c_[k];
    return r;
  }

  std::string str(const std::string& var = "x") const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (std::size_t k = c_.size(); k-- > 0;) {
      const BigInt& c = c_[k];
      if (c == 0) continue;
      BigInt a = abs(c);
      if (first) {
        if (c < 0) out << "-";
      } else {
        out << (c < 0 ? " - " : " + ");
      }
      if (a != 1 || k == 0) out << a.get_str();
      if (k >= 1) out << var;
      if (k >= 2) out << '^' << k;
      first = false;
    }
    return out.str();
  }

  friend bool operator==(const IntPolynomial& a, const IntPolynomial& b) { return a.c_ == b.c_; }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  std::vector<BigInt> c_;
};

/// q^offset * body, kept with body(0) != 0 unless zero.
class LaurentPolynomial {
 public:
  LaurentPolynomial() = default;
  LaurentPolynomial(int offset, IntPolynomial body) : off_(offset), body_(std::move(body)) { normalize(); }

  static LaurentPolynomial monomial(int degree, const BigInt& coeff = 1) {
    return LaurentPolynomial(degree, IntPolynomial(std::vector<BigInt>{coeff}));
  }

  bool is_zero() const { return body_.is_zero(); }
  int low_degree() const { return off_; }
  int high_degree() const { return off_ + body_.degree(); }
  BigInt coeff(int d) const { return body_.coeff(d - off_); }
  const IntPolynomial& body() const { return body_; }

  void add_term(int d, const BigInt& v) {
    if (v == 0) return;
    if (body_.is_zero()) {
      *this = monomial(d, v);
      return;
    }
    if (d < off_) {
      body_ = body_ * IntPolynomial::monomial(off_ - d);
      off_ = d;
    }
    body_.add_term(d - off_, v);
    normalize();
  }

  LaurentPolynomial& operator+=(const LaurentPolynomial& o) {
    for (int d = o.low_degree(); !o.is_zero() && d <= o.high_degree(); ++d) add_term(d, o.coeff(d));
    return *this;
  }
  friend LaurentPolynomial operator+(LaurentPolynomial a, const LaurentPolynomial& b) { return a += b; }
  friend LaurentPolynomial operator-(const LaurentPolynomial& a) { return LaurentPolynomial(a.off_, -a.body_); }
  friend LaurentPolynomial operator-(const LaurentPolynomial& a, const LaurentPolynomial& b) { return a + (-b); }
  friend LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b) {
    return LaurentPolynomial(a.off_ + b.off_, a.body_ * b.body_);
  }

  /// Exact division by a Laurent polynomial.
  LaurentPolynomial exact_div(const LaurentPolynomial& d) const {
    if (is_zero()) return {};
    return LaurentPolynomial(off_ - d.off_, body_.exact_div(d.body_));
  }

  std::string str(const std::string& var = "q") const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (int d = high_degree(); d >= low_degree(); --d) {
      BigInt c = coeff(d);
      if (c == 0) continue;
      BigInt a = abs(c);
      if (first) {
        if (c < 0) out << "-";
      } else {
        out << (c < 0 ? " - " : " + ");
      }
      if (a != 1 || d == 0) out << a.get_str();
      if (d != 0) out << var;
      if (d != 0 && d != 1) out << '^' << d;
      first = false;
    }
    return out.str();
  }

  friend bool operator==(const LaurentPolynomial& a, const LaurentPolynomial& b) {
    return a.body_ == b.body_ && (a.is_zero() || a.off_ == b.off_);
  }

 private:
  void normalize() {
    if (body_.is_zero()) {
      off_ = 0;
      return;
    }
    int low = body_.low_degree();
    if (low > 0) {
      std::vector<BigInt> c(body_.coeffs().begin() + low, body_.coeffs().end());
      body_ = IntPolynomial(std::move(c));
      off_ += low;
    }
  }
  int off_ = 0;
  IntPolynomial body_;
};

}  // namespace chromkh

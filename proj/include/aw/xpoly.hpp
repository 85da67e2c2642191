#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "aw/scalar.hpp"

namespace aw {

/// Univariate polynomial in x = cos(theta). coeffs()[k] multiplies x^k.
/// The zero polynomial has no coefficients; otherwise the leading
/// coefficient is nonzero, so equality is structural.
template <class T>
class XPoly {
 public:
  XPoly() = default;
  explicit XPoly(std::vector<T> coeffs) : c_(std::move(coeffs)) { trim(); }
  XPoly(std::initializer_list<T> coeffs) : c_(coeffs) { trim(); }

  static XPoly constant(const T& v) { return XPoly(std::vector<T>{v}); }
  static XPoly x() { return XPoly(std::vector<T>{T(0), T(1)}); }
  static XPoly monomial(std::size_t k, const T& v = T(1)) {
    std::vector<T> c(k + 1, T(0));
    c[k] = v;
    return XPoly(std::move(c));
  }
  /// x - root
  static XPoly linear(const T& root) { return XPoly(std::vector<T>{T(-root), T(1)}); }

  /// Degree, or -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<T>& coeffs() const { return c_; }

  T operator[](std::size_t k) const { return k < c_.size() ? c_[k] : T(0); }
  T leading() const { return c_.empty() ? T(0) : c_.back(); }

  T evaluate(const T& x0) const {
    T acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = T(acc * x0 + *it);
    return acc;
  }

  /// Largest coefficient magnitude; 0 for the zero polynomial.
  T max_abs_coeff() const {
    T m(0);
    for (const T& v : c_) {
      T a = ScalarTraits<T>::abs(v);
      if (m < a) m = a;
    }
    return m;
  }

  XPoly& operator+=(const XPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), T(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = T(c_[i] + o.c_[i]);
    trim();
    return *this;
  }
  XPoly& operator-=(const XPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), T(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = T(c_[i] - o.c_[i]);
    trim();
    return *this;
  }
  XPoly& operator*=(const T& s) {
    for (T& v : c_) v = T(v * s);
    trim();
    return *this;
  }
  XPoly& operator/=(const T& s) {
    for (T& v : c_) v = T(v / s);
    trim();
    return *this;
  }

  friend XPoly operator+(XPoly a, const XPoly& b) { return a += b; }
  friend XPoly operator-(XPoly a, const XPoly& b) { return a -= b; }
  friend XPoly operator-(XPoly a) { return a *= T(-1); }
  friend XPoly operator*(XPoly a, const T& s) { return a *= s; }
  friend XPoly operator*(const T& s, XPoly a) { return a *= s; }
  friend XPoly operator/(XPoly a, const T& s) { return a /= s; }

  friend XPoly operator*(const XPoly& a, const XPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<T> out(a.c_.size() + b.c_.size() - 1, T(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] = T(out[i + j] + a.c_[i] * b.c_[j]);
    }
    return XPoly(std::move(out));
  }

  friend bool operator==(const XPoly& a, const XPoly& b) { return a.c_ == b.c_; }

  /// Coefficient-wise conversion into another backend.
  template <class U, class Conv>
  XPoly<U> map(Conv&& conv) const {
    std::vector<U> out;
    out.reserve(c_.size());
    for (const T& v : c_) out.push_back(conv(v));
    return XPoly<U>(std::move(out));
  }

  std::string str(int digits = 12) const {
    if (c_.empty()) return "0";
    std::string s;
    for (std::size_t k = c_.size(); k-- > 0;) {
      if (aw::is_zero(c_[k])) continue;
      if (!s.empty()) s += " + ";
      s += "(" + ScalarTraits<T>::str(c_[k], digits) + ")";
      if (k >= 1) s += "*x";
      if (k >= 2) s += "^" + std::to_string(k);
    }
    return s;
  }

  friend std::ostream& operator<<(std::ostream& os, const XPoly& p) { return os << p.str(); }

 private:
  void trim() {
    while (!c_.empty() && aw::is_zero(c_.back())) c_.pop_back();
  }

  std::vector<T> c_;
};

}  // namespace aw

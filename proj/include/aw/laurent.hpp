#pragma once

#include <algorithm>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "aw/error.hpp"
#include "aw/scalar.hpp"

namespace aw {

/// Laurent polynomial sum_k c_k z^k with finite support, stored densely from
/// the lowest nonzero exponent. Lifts of polynomials in x = (z + 1/z)/2 are
/// symmetric (c_k = c_{-k}); shifted lifts z -> s z are not.
template <class T>
class Laurent {
 public:
  Laurent() = default;

  /// Coefficients for exponents low, low+1, ...
  Laurent(int low, std::vector<T> coeffs) : lo_(low), c_(std::move(coeffs)) { trim(); }

  static Laurent monomial(int k, const T& v) { return Laurent(k, std::vector<T>{v}); }

  bool is_zero() const { return c_.empty(); }
  /// Lowest / highest exponent with nonzero coefficient. Undefined when zero.
  int low() const { return lo_; }
  int high() const { return lo_ + static_cast<int>(c_.size()) - 1; }

  T coeff(int k) const {
    if (c_.empty() || k < lo_ || k > high()) return T(0);
    return c_[static_cast<std::size_t>(k - lo_)];
  }

  bool is_symmetric() const {
    if (c_.empty()) return true;
    if (lo_ != -high()) return false;
    for (std::size_t i = 0, j = c_.size() - 1; i < j; ++i, --j) {
      if (!(c_[i] == c_[j])) return false;
    }
    return true;
  }

  Laurent& operator+=(const Laurent& o) { return accumulate(o, T(1)); }
  Laurent& operator-=(const Laurent& o) { return accumulate(o, T(-1)); }
  Laurent& operator*=(const T& s) {
    for (T& v : c_) v = T(v * s);
    trim();
    return *this;
  }

  friend Laurent operator+(Laurent a, const Laurent& b) { return a += b; }
  friend Laurent operator-(Laurent a, const Laurent& b) { return a -= b; }
  friend Laurent operator*(Laurent a, const T& s) { return a *= s; }
  friend Laurent operator*(const T& s, Laurent a) { return a *= s; }

  friend Laurent operator*(const Laurent& a, const Laurent& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<T> out(a.c_.size() + b.c_.size() - 1, T(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] = T(out[i + j] + a.c_[i] * b.c_[j]);
    }
    return Laurent(a.lo_ + b.lo_, std::move(out));
  }

  friend bool operator==(const Laurent& a, const Laurent& b) {
    return a.c_ == b.c_ && (a.c_.empty() || a.lo_ == b.lo_);
  }

  /// The substitution z -> s*z, i.e. c_k -> c_k s^k.
  Laurent scale_argument(const T& s) const {
    if (c_.empty()) return {};
    std::vector<T> out(c_.size());
    T p = ipow(s, lo_);
    for (std::size_t i = 0; i < c_.size(); ++i) {
      out[i] = T(c_[i] * p);
      p = T(p * s);
    }
    return Laurent(lo_, std::move(out));
  }

  /// Exact quotient by (z - 1/z) via synthetic division from the top
  /// exponent. A nonzero remainder means the input was not divisible.
  Laurent divide_by_z_minus_inverse() const {
    if (c_.empty()) return {};
    std::vector<T> r = c_;
    const std::size_t n = r.size();
    if (n < 3 && is_exact_v<T>) throw InvariantError("Laurent division by (z - 1/z) leaves a remainder");
    if (n < 3) return {};
    // Quotient occupies exponents lo_+1 .. high()-1.
    std::vector<T> q(n - 2, T(0));
    for (std::size_t i = n; i-- > 2;) {
      const T top = r[i];
      q[i - 2] = top;
      r[i - 2] = T(r[i - 2] + top);
      r[i] = T(0);
    }
    // Float backends carry rounding in the last two slots; only exact
    // arithmetic can certify divisibility.
    if constexpr (is_exact_v<T>) {
      if (!aw::is_zero(r[0]) || !aw::is_zero(r[1])) {
        throw InvariantError("Laurent division by (z - 1/z) leaves a remainder");
      }
    }
    return Laurent(lo_ + 1, std::move(q));
  }

  std::string str(int digits = 12) const {
    if (c_.empty()) return "0";
    std::string s;
    for (std::size_t i = 0; i < c_.size(); ++i) {
      if (aw::is_zero(c_[i])) continue;
      if (!s.empty()) s += " + ";
      s += "(" + ScalarTraits<T>::str(c_[i], digits) + ")*z^" + std::to_string(lo_ + static_cast<int>(i));
    }
    return s;
  }

 private:
  Laurent& accumulate(const Laurent& o, const T& sign) {
    if (o.c_.empty()) return *this;
    if (c_.empty()) {
      lo_ = o.lo_;
      c_.clear();
      for (const T& v : o.c_) c_.push_back(T(v * sign));
      trim();
      return *this;
    }
    const int new_lo = std::min(lo_, o.lo_);
    const int new_hi = std::max(high(), o.high());
    std::vector<T> out(static_cast<std::size_t>(new_hi - new_lo + 1), T(0));
    for (std::size_t i = 0; i < c_.size(); ++i) out[static_cast<std::size_t>(lo_ - new_lo) + i] = c_[i];
    for (std::size_t i = 0; i < o.c_.size(); ++i) {
      T& slot = out[static_cast<std::size_t>(o.lo_ - new_lo) + i];
      slot = T(slot + o.c_[i] * sign);
    }
    lo_ = new_lo;
    c_ = std::move(out);
    trim();
    return *this;
  }

  void trim() {
    std::size_t first = 0;
    while (first < c_.size() && aw::is_zero(c_[first])) ++first;
    if (first == c_.size()) {
      c_.clear();
      lo_ = 0;
      return;
    }
    std::size_t last = c_.size();
    while (aw::is_zero(c_[last - 1])) --last;
    if (first != 0 || last != c_.size()) {
      c_ = std::vector<T>(c_.begin() + static_cast<std::ptrdiff_t>(first),
                          c_.begin() + static_cast<std::ptrdiff_t>(last));
      lo_ += static_cast<int>(first);
    }
  }

  int lo_ = 0;
  std::vector<T> c_;
};

}  // namespace aw

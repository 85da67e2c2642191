#pragma once

#include <optional>
#include <utility>

#include "aw/error.hpp"
#include "aw/scalar.hpp"
#include "aw/xpoly.hpp"

namespace aw {

/// The base q together with its quarter power u = q^{1/4}.
///
/// Exact contexts built from u always have q^{1/2} = u^2 available. A context
/// built from q alone keeps q^{1/2} only when it is rational; anything that
/// needs it (the operators, gamma_n, psi, lambda_n) then throws UsageError.
/// Float contexts always have both.
template <class T>
class QContext {
 public:
  static QContext from_u(const T& u);
  static QContext from_q(const T& q);

  const T& q() const { return q_; }
  bool has_sqrt_q() const { return sqrt_q_.has_value(); }
  const T& sqrt_q() const;
  const T& u() const;

  /// alpha = alpha_1 = (q^{1/2} + q^{-1/2}) / 2
  T alpha() const { return alpha_n(1); }
  /// 2 alpha_n = q^{n/2} + q^{-n/2}
  T alpha_n(long n) const;
  /// (q^{1/2} - q^{-1/2}) gamma_n = q^{n/2} - q^{-n/2}
  T gamma_n(long n) const;

  /// 0 < q < 1. Outside it results are still computed but flagged.
  bool in_unit_interval() const { return T(0) < q_ && q_ < T(1); }

 private:
  QContext(T q, std::optional<T> sqrt_q, std::optional<T> u)
      : q_(std::move(q)), sqrt_q_(std::move(sqrt_q)), u_(std::move(u)) {}

  T q_;
  std::optional<T> sqrt_q_;
  std::optional<T> u_;
};

/// (a;q)_k = prod_{j<k} (1 - a q^j)
template <class T>
T q_pochhammer(const T& a, const T& q, long k) {
  if (k < 0) throw UsageError("q_pochhammer: negative length");
  T result(1);
  T aqj = a;
  for (long j = 0; j < k; ++j) {
    result = T(result * (T(1) - aqj));
    aqj = T(aqj * q);
  }
  return result;
}

/// prod_{j=lo}^{hi-1} (1 - a q^j), i.e. (a;q)_hi / (a;q)_lo without division.
template <class T>
T q_pochhammer_ratio(const T& a, const T& q, long lo, long hi) {
  T result(1);
  T aqj = T(a * ipow(q, lo));
  for (long j = lo; j < hi; ++j) {
    result = T(result * (T(1) - aqj));
    aqj = T(aqj * q);
  }
  return result;
}

template <class T>
struct GammaAlpha {
  T gamma;
  T alpha;
};

template <class T>
GammaAlpha<T> gamma_alpha(const QContext<T>& ctx, long n) {
  return {ctx.gamma_n(n), ctx.alpha_n(n)};
}

template <class T>
struct UCoefficients {
  XPoly<T> u1;  ///< (alpha^2 - 1) x
  XPoly<T> u2;  ///< (alpha^2 - 1)(x^2 - 1)
};

template <class T>
UCoefficients<T> u_coefficient_polys(const QContext<T>& ctx);

}  // namespace aw

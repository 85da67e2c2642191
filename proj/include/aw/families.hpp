#pragma once

#include <vector>

#include "aw/numerics.hpp"
#include "aw/xpoly.hpp"

namespace aw {

/// Parameters (a, b, c, d) of an Askey-Wilson family over a base q.
template <class T>
struct AWParams {
  T a;
  T b;
  T c;
  T d;
  QContext<T> ctx;

  const T& q() const { return ctx.q(); }
  T abcd() const { return T(a * b * c * d); }

  /// Positivity regime: 0 < a, b, c, d < 1 and 0 < q < 1. Everything is still
  /// computed outside it; only the positivity check on b_n is relaxed.
  bool admissible() const {
    for (const T* v : {&a, &b, &c, &d}) {
      if (!(T(0) < *v && *v < T(1))) return false;
    }
    return ctx.in_unit_interval();
  }

  AWParams with(T a2, T b2, T c2, T d2) const { return {std::move(a2), std::move(b2), std::move(c2), std::move(d2), ctx}; }

  /// (a f, b f, c f, d f)
  AWParams scaled(const T& f) const { return with(T(a * f), T(b * f), T(c * f), T(d * f)); }
};

enum class Provenance { ExtractedFromSeries, ExplicitLimitFamily, Perturbed };

/// Coefficients of x P_n = P_{n+1} + a_n P_n + b_n P_{n-1}.
template <class T>
struct RecurrenceCoeffs {
  std::vector<T> a_seq;  ///< a_0, a_1, ...
  std::vector<T> b_seq;  ///< b_1, b_2, ...
  Provenance provenance = Provenance::ExtractedFromSeries;

  std::size_t size() const { return a_seq.size(); }
  const T& a(std::size_t n) const { return a_seq.at(n); }
  /// b_n for n >= 1
  const T& b(std::size_t n) const { return b_seq.at(n - 1); }
};

/// p_n(x; a, b, c, d | q) from the terminating 4phi3 in denominator-free form.
/// Leading coefficient 2^n (abcd q^{n-1}; q)_n.
template <class T>
XPoly<T> aw_series_poly(const AWParams<T>& params, int n);

/// Monic P_n = p_n / (2^n (abcd q^{n-1}; q)_n).
template <class T>
XPoly<T> aw_monic(const AWParams<T>& params, int n);

/// P_0 .. P_count-1
template <class T>
std::vector<XPoly<T>> aw_monic_family(const AWParams<T>& params, int count);

/// Solves x P_n = P_{n+1} + a_n P_n + b_n P_{n-1} for n = 0..N from the
/// series polynomials. In the exact backend the whole identity is checked
/// coefficient by coefficient. Non-positive b_n for admissible parameters
/// raises DomainError.
template <class T>
RecurrenceCoeffs<T> extract_recurrence(const AWParams<T>& params, int N);

/// Monic P_0 .. P_count-1 regenerated from recurrence coefficients.
template <class T>
std::vector<XPoly<T>> family_from_recurrence(const RecurrenceCoeffs<T>& coeffs, int count);

/// Recurrence coefficients of the monic continuous dual q-Hahn polynomials
/// q_n(x; a, b, c | q) that arise as d -> infinity.
template <class T>
struct DualHahnCoeffs {
  T a_n;
  T b_n;
};

template <class T>
DualHahnCoeffs<T> cdqhahn_coefficients(const T& a, const T& b, const T& c, const T& q, int n);

template <class T>
XPoly<T> cdqhahn_poly(const T& a, const T& b, const T& c, const QContext<T>& ctx, int n);

enum class LimitKind {
  ContinuousDualQHahn,    ///< d -> infinity
  AlSalamChihara,         ///< c, d -> infinity
  ContinuousBigQHermite,  ///< b, c, d -> infinity
  ContinuousQHermite,     ///< a, b, c, d -> infinity
};

const char* limit_kind_name(LimitKind kind);

/// Parameters that stay finite in a limit; unused slots are ignored.
template <class T>
struct LimitParams {
  T a{};
  T b{};
  T c{};
};

/// The scaled Askey-Wilson polynomial whose limit defines the family, with
/// every diverging parameter set to `large`:
///   dual q-Hahn:        p_n(x; a, b, c, L) / (aL; q)_n
///   Al-Salam-Chihara:   a^n p_n(x; a, b, L, L) / ((aL; q)_n)^2
///   big q-Hermite:      a^n p_n(x; a, L, L, L) / ((aL; q)_n)^3
///   q-Hermite:          L^{2n} p_n(x; L, L, L, L) / ((L^2; q)_n)^3
template <class T>
XPoly<T> limit_scaled(LimitKind kind, const LimitParams<T>& params, const QContext<T>& ctx, int n,
                      const T& large);

template <class T>
struct LimitEstimate {
  XPoly<T> estimate;  ///< limit_scaled at d_large
  T deviation;        ///< max coefficient gap between d_large and 10 d_large
};

/// Throws NumericError when a float backend overflows.
template <class T>
LimitEstimate<T> limit_family_eval(LimitKind kind, const LimitParams<T>& params, const QContext<T>& ctx,
                                   int n, const T& d_large);

/// (2bc)^n q^{n(n-1)} q_n(x; a, b, c | q): the d -> infinity limit of
/// p_n(x; a, b, c, d | q) / (ad; q)_n.
template <class T>
XPoly<T> cdqhahn_limit_target(const T& a, const T& b, const T& c, const QContext<T>& ctx, int n);

/// max_k |p_k - r_k|
template <class T>
T coefficient_distance(const XPoly<T>& p, const XPoly<T>& r) {
  return (p - r).max_abs_coeff();
}

}  // namespace aw

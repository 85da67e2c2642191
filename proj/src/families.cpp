#include "aw/families.hpp"

#include <string>

namespace aw {

namespace {

template <class T>
void check_normalization(const AWParams<T>& params, int n) {
  const T& q = params.q();
  const T abcd = params.abcd();
  for (int j = 0; j < n; ++j) {
    if (T(abcd * ipow(q, n - 1 + j)) == T(1)) {
      throw SingularError("Askey-Wilson normalization vanishes: abcd q^" + std::to_string(n - 1 + j) + " = 1");
    }
  }
}

}  // namespace

template <class T>
XPoly<T> aw_series_poly(const AWParams<T>& params, int n) {
  if (n < 0) throw UsageError("aw_series_poly: negative degree");
  if (is_zero(params.a)) throw SingularError("aw_series_poly: a = 0");
  check_normalization(params, n);

  const T& q = params.q();
  const T& a = params.a;
  const T abcd = params.abcd();
  const T q_minus_n = ipow(q, -n);
  const T top = T(abcd * ipow(q, n - 1));

  XPoly<T> sum;
  // prod_{j<k} (1 - 2 a q^j x + a^2 q^{2j}) built incrementally
  XPoly<T> product = XPoly<T>::constant(T(1));
  T qj(1);
  for (int k = 0; k <= n; ++k) {
    if (k > 0) {
      product = product * XPoly<T>({T(T(1) + a * a * qj * qj), T(T(-2) * a * qj)});
      qj = T(qj * q);
    }
    T coef = T(q_pochhammer(q_minus_n, q, k) * q_pochhammer(top, q, k) * ipow(q, k) / q_pochhammer(q, q, k));
    // (e;q)_n / (e;q)_k for e = ab, ac, ad, as a product over k..n-1
    coef = T(coef * q_pochhammer_ratio(T(a * params.b), q, k, n));
    coef = T(coef * q_pochhammer_ratio(T(a * params.c), q, k, n));
    coef = T(coef * q_pochhammer_ratio(T(a * params.d), q, k, n));
    if (!is_zero(coef)) sum += product * coef;
  }
  return sum * ipow(a, -n);
}

template <class T>
XPoly<T> aw_monic(const AWParams<T>& params, int n) {
  const XPoly<T> p = aw_series_poly(params, n);
  const T norm = T(ipow(T(2), n) * q_pochhammer(T(params.abcd() * ipow(params.q(), n - 1)), params.q(), n));
  if (is_zero(norm)) throw SingularError("aw_monic: normalization factor vanishes");
  return p / norm;
}

template <class T>
std::vector<XPoly<T>> aw_monic_family(const AWParams<T>& params, int count) {
  std::vector<XPoly<T>> out;
  out.reserve(static_cast<std::size_t>(count));
  for (int n = 0; n < count; ++n) out.push_back(aw_monic(params, n));
  return out;
}

template <class T>
RecurrenceCoeffs<T> extract_recurrence(const AWParams<T>& params, int N) {
  if (N < 1) throw UsageError("extract_recurrence: N must be at least 1");
  const auto family = aw_monic_family(params, N + 2);
  const XPoly<T> x = XPoly<T>::x();

  RecurrenceCoeffs<T> out;
  out.provenance = Provenance::ExtractedFromSeries;
  for (int n = 0; n <= N; ++n) {
    const auto idx = static_cast<std::size_t>(n);
    XPoly<T> rest = x * family[idx] - family[idx + 1];
    const T an = rest[idx];
    rest -= family[idx] * an;
    out.a_seq.push_back(an);
    if (n >= 1) {
      const T bn = rest[idx - 1];
      rest -= family[idx - 1] * bn;
      if (params.admissible() && !(T(0) < bn)) {
        throw DomainError("extract_recurrence: b_" + std::to_string(n) + " is not positive");
      }
      out.b_seq.push_back(bn);
    }
    if constexpr (is_exact_v<T>) {
      if (!rest.is_zero()) {
        throw InvariantError("extract_recurrence: three-term identity fails at n = " + std::to_string(n));
      }
    }
  }
  return out;
}

template <class T>
std::vector<XPoly<T>> family_from_recurrence(const RecurrenceCoeffs<T>& coeffs, int count) {
  if (count < 1) return {};
  if (static_cast<std::size_t>(count - 1) > coeffs.a_seq.size() ||
      static_cast<std::size_t>(count - 2 > 0 ? count - 2 : 0) > coeffs.b_seq.size()) {
    throw UsageError("family_from_recurrence: not enough coefficients");
  }
  std::vector<XPoly<T>> out{XPoly<T>::constant(T(1))};
  const XPoly<T> x = XPoly<T>::x();
  for (int n = 0; n + 1 < count; ++n) {
    const auto idx = static_cast<std::size_t>(n);
    XPoly<T> next = x * out[idx] - out[idx] * coeffs.a(idx);
    if (n >= 1) next -= out[idx - 1] * coeffs.b(idx);
    out.push_back(std::move(next));
  }
  return out;
}

template <class T>
DualHahnCoeffs<T> cdqhahn_coefficients(const T& a, const T& b, const T& c, const T& q, int n) {
  if (is_zero(a) || is_zero(b) || is_zero(c)) throw SingularError("continuous dual q-Hahn: zero parameter");
  const T qn = ipow(q, n);
  DualHahnCoeffs<T> out;
  out.a_n = T((a * b * qn + a * c * qn + b * c * qn + qn * q - q - T(1)) / (T(2) * a * c * qn * qn * b));
  // Monic normalization of the limit series fixes the 4 a^2 c^2 b^2 q^{4n}
  // denominator.
  out.b_n = T((qn - T(1)) * (b * c * qn - q) * (a * c * qn - q) * (a * b * qn - q) /
              (T(4) * a * a * c * c * ipow(qn, 4) * b * b));
  return out;
}

template <class T>
XPoly<T> cdqhahn_poly(const T& a, const T& b, const T& c, const QContext<T>& ctx, int n) {
  if (n < 0) throw UsageError("cdqhahn_poly: negative degree");
  const XPoly<T> x = XPoly<T>::x();
  XPoly<T> prev;
  XPoly<T> cur = XPoly<T>::constant(T(1));
  for (int m = 0; m < n; ++m) {
    const auto co = cdqhahn_coefficients(a, b, c, ctx.q(), m);
    XPoly<T> next = x * cur - cur * co.a_n - prev * co.b_n;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

const char* limit_kind_name(LimitKind kind) {
  switch (kind) {
    case LimitKind::ContinuousDualQHahn:
      return "continuous-dual-q-Hahn";
    case LimitKind::AlSalamChihara:
      return "Al-Salam-Chihara";
    case LimitKind::ContinuousBigQHermite:
      return "continuous-big-q-Hermite";
    case LimitKind::ContinuousQHermite:
      return "continuous-q-Hermite";
  }
  return "?";
}

template <class T>
XPoly<T> limit_scaled(LimitKind kind, const LimitParams<T>& lp, const QContext<T>& ctx, int n,
                      const T& large) {
  const T& q = ctx.q();
  const auto poly = [&](const T& a, const T& b, const T& c, const T& d) {
    return aw_series_poly(AWParams<T>{a, b, c, d, ctx}, n);
  };
  XPoly<T> out;
  switch (kind) {
    case LimitKind::ContinuousDualQHahn:
      out = poly(lp.a, lp.b, lp.c, large) / q_pochhammer(T(lp.a * large), q, n);
      break;
    case LimitKind::AlSalamChihara: {
      const T den = q_pochhammer(T(lp.a * large), q, n);
      out = poly(lp.a, lp.b, large, large) * T(ipow(lp.a, n) / (den * den));
      break;
    }
    case LimitKind::ContinuousBigQHermite: {
      const T den = q_pochhammer(T(lp.a * large), q, n);
      out = poly(lp.a, large, large, large) * T(ipow(lp.a, n) / (den * den * den));
      break;
    }
    case LimitKind::ContinuousQHermite: {
      const T den = q_pochhammer(T(large * large), q, n);
      out = poly(large, large, large, large) * T(ipow(large, 2 * n) / (den * den * den));
      break;
    }
  }
  if constexpr (!is_exact_v<T>) {
    for (const T& v : out.coeffs()) {
      if (!ScalarTraits<T>::is_finite(v)) {
        throw NumericError("limit evaluation overflowed; rerun with a higher --precision");
      }
    }
  }
  return out;
}

template <class T>
LimitEstimate<T> limit_family_eval(LimitKind kind, const LimitParams<T>& params, const QContext<T>& ctx,
                                   int n, const T& d_large) {
  LimitEstimate<T> out{limit_scaled(kind, params, ctx, n, d_large), T(0)};
  const XPoly<T> further = limit_scaled(kind, params, ctx, n, T(d_large * T(10)));
  out.deviation = coefficient_distance(out.estimate, further);
  return out;
}

template <class T>
XPoly<T> cdqhahn_limit_target(const T& a, const T& b, const T& c, const QContext<T>& ctx, int n) {
  const T scale = T(ipow(T(T(2) * b * c), n) * ipow(ctx.q(), static_cast<long>(n) * (n - 1)));
  return cdqhahn_poly(a, b, c, ctx, n) * scale;
}

#define AW_INSTANTIATE(T)                                                                             \
  template XPoly<T> aw_series_poly(const AWParams<T>&, int);                                          \
  template XPoly<T> aw_monic(const AWParams<T>&, int);                                                \
  template std::vector<XPoly<T>> aw_monic_family(const AWParams<T>&, int);                            \
  template RecurrenceCoeffs<T> extract_recurrence(const AWParams<T>&, int);                           \
  template std::vector<XPoly<T>> family_from_recurrence(const RecurrenceCoeffs<T>&, int);             \
  template DualHahnCoeffs<T> cdqhahn_coefficients(const T&, const T&, const T&, const T&, int);       \
  template XPoly<T> cdqhahn_poly(const T&, const T&, const T&, const QContext<T>&, int);              \
  template XPoly<T> limit_scaled(LimitKind, const LimitParams<T>&, const QContext<T>&, int, const T&); \
  template LimitEstimate<T> limit_family_eval(LimitKind, const LimitParams<T>&, const QContext<T>&,   \
                                              int, const T&);                                         \
  template XPoly<T> cdqhahn_limit_target(const T&, const T&, const T&, const QContext<T>&, int);

AW_INSTANTIATE(Rational)
AW_INSTANTIATE(double)
AW_INSTANTIATE(BigFloat)

#undef AW_INSTANTIATE

}  // namespace aw

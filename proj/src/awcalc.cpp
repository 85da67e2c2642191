#include "aw/awcalc.hpp"

#include "aw/sympoly.hpp"

namespace aw {

template <class T>
OperatorResult<T> apply_Dq(const QContext<T>& ctx, const XPoly<T>& p) {
  OperatorResult<T> result;
  result.input_degree = p.degree();
  if (p.degree() < 1) return result;

  const T& s = ctx.sqrt_q();
  const Laurent<T> lifted = x_to_laurent(p);
  const Laurent<T> numerator = lifted.scale_argument(s) - lifted.scale_argument(T(T(1) / s));
  Laurent<T> quotient = numerator.divide_by_z_minus_inverse();
  quotient *= T(T(2) / T(s - T(T(1) / s)));
  result.output = laurent_to_x(quotient);
  if (!result.output.is_zero()) result.leading_ratio = T(result.output.leading() / p.leading());
  return result;
}

template <class T>
XPoly<T> apply_Sq(const QContext<T>& ctx, const XPoly<T>& p) {
  if (p.degree() < 1) return p;
  const T& s = ctx.sqrt_q();
  const Laurent<T> lifted = x_to_laurent(p);
  Laurent<T> sum = lifted.scale_argument(s) + lifted.scale_argument(T(T(1) / s));
  sum *= T(T(1) / T(2));
  return laurent_to_x(sum);
}

template <class T>
Laurent<T> apply_Tnu(const QContext<T>& ctx, const XPoly<T>& p, int nu) {
  if (nu != 1 && nu != -1) throw UsageError("apply_Tnu: nu must be +1 or -1");
  const T& s = ctx.sqrt_q();
  return x_to_laurent(p).scale_argument(nu == 1 ? s : T(T(1) / s));
}

const char* identity_name(IdentityKind kind) {
  switch (kind) {
    case IdentityKind::ProductD:
      return "product-D";
    case IdentityKind::ProductS:
      return "product-S";
    case IdentityKind::ComposeDS:
      return "compose-DS";
    case IdentityKind::ComposeSS:
      return "compose-SS";
  }
  return "?";
}

template <class T>
XPoly<T> verify_identity(const QContext<T>& ctx, IdentityKind kind, const XPoly<T>& f,
                         const std::optional<XPoly<T>>& g) {
  const auto [u1, u2] = u_coefficient_polys(ctx);
  const T alpha = ctx.alpha();
  switch (kind) {
    case IdentityKind::ProductD: {
      if (!g) throw UsageError("product-D needs two polynomials");
      return dq(ctx, f * *g) - (sq(ctx, f) * dq(ctx, *g) + dq(ctx, f) * sq(ctx, *g));
    }
    case IdentityKind::ProductS: {
      if (!g) throw UsageError("product-S needs two polynomials");
      return sq(ctx, f * *g) - (sq(ctx, f) * sq(ctx, *g) + u2 * dq(ctx, f) * dq(ctx, *g));
    }
    case IdentityKind::ComposeDS: {
      const XPoly<T> df = dq(ctx, f);
      return dq(ctx, sq(ctx, f)) - (sq(ctx, df) * alpha + u1 * dq(ctx, df));
    }
    case IdentityKind::ComposeSS: {
      const XPoly<T> df = dq(ctx, f);
      return sq(ctx, sq(ctx, f)) - (u1 * sq(ctx, df) + u2 * dq(ctx, df) * alpha + f);
    }
  }
  throw UsageError("unknown identity kind");
}

#define AW_INSTANTIATE(T)                                                                  \
  template OperatorResult<T> apply_Dq(const QContext<T>&, const XPoly<T>&);                \
  template XPoly<T> apply_Sq(const QContext<T>&, const XPoly<T>&);                         \
  template Laurent<T> apply_Tnu(const QContext<T>&, const XPoly<T>&, int);                 \
  template XPoly<T> verify_identity(const QContext<T>&, IdentityKind, const XPoly<T>&,     \
                                    const std::optional<XPoly<T>>&);

AW_INSTANTIATE(Rational)
AW_INSTANTIATE(double)
AW_INSTANTIATE(BigFloat)

#undef AW_INSTANTIATE

}  // namespace aw

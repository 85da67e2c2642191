#pragma once

// Askey-Wilson divided-difference calculus on polynomials in x = cos(theta).
//
// All operators act on the Laurent lift p(z) = p((z + 1/z)/2) through the
// substitutions z -> q^{+-1/2} z:
//
//   D_q p = [p(q^{1/2} z) - p(q^{-1/2} z)] / [(z - 1/z)(q^{1/2} - q^{-1/2}) / 2]
//   S_q p = [p(q^{1/2} z) + p(q^{-1/2} z)] / 2
//
// The division by (z - 1/z) is exact for polynomial input.

#include <optional>

#include "aw/laurent.hpp"
#include "aw/numerics.hpp"
#include "aw/xpoly.hpp"

namespace aw {

template <class T>
struct OperatorResult {
  XPoly<T> output;
  int input_degree = -1;
  /// lead(output) / lead(input); empty when the output vanishes.
  std::optional<T> leading_ratio;
};

template <class T>
OperatorResult<T> apply_Dq(const QContext<T>& ctx, const XPoly<T>& p);

template <class T>
XPoly<T> apply_Sq(const QContext<T>& ctx, const XPoly<T>& p);

/// Lift of p evaluated at q^{nu/2} z, nu = +1 or -1. Not symmetric in general.
template <class T>
Laurent<T> apply_Tnu(const QContext<T>& ctx, const XPoly<T>& p, int nu);

/// D_q p as a plain polynomial.
template <class T>
XPoly<T> dq(const QContext<T>& ctx, const XPoly<T>& p) {
  return apply_Dq(ctx, p).output;
}

/// D_q applied twice.
template <class T>
XPoly<T> dq2(const QContext<T>& ctx, const XPoly<T>& p) {
  return dq(ctx, dq(ctx, p));
}

template <class T>
XPoly<T> sq(const QContext<T>& ctx, const XPoly<T>& p) {
  return apply_Sq(ctx, p);
}

enum class IdentityKind {
  ProductD,   ///< D(fg) = S(f) D(g) + D(f) S(g)
  ProductS,   ///< S(fg) = S(f) S(g) + U2 D(f) D(g)
  ComposeDS,  ///< D S f = alpha S D f + U1 D^2 f
  ComposeSS,  ///< S^2 f = U1 S D f + alpha U2 D^2 f + f
};

const char* identity_name(IdentityKind kind);

/// LHS - RHS of the chosen rule. The two product rules need g; the
/// composition rules ignore it.
template <class T>
XPoly<T> verify_identity(const QContext<T>& ctx, IdentityKind kind, const XPoly<T>& f,
                         const std::optional<XPoly<T>>& g = std::nullopt);

}  // namespace aw

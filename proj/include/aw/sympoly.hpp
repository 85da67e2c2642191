#pragma once

// Change of basis between polynomials in x = cos(theta) and their symmetric
// Laurent lifts in z = e^{i theta}, x = (z + 1/z)/2.

#include "aw/laurent.hpp"
#include "aw/numerics.hpp"
#include "aw/xpoly.hpp"

namespace aw {

/// p((z + 1/z)/2) expanded; support lies in [-deg p, deg p].
template <class T>
Laurent<T> x_to_laurent(const XPoly<T>& p);

/// Inverse of x_to_laurent. Exact backends reject asymmetric input with
/// InvariantError; float backends read the nonnegative exponents only.
template <class T>
XPoly<T> laurent_to_x(const Laurent<T>& lifted);

/// F_k(x) = prod_{j<k} (x - zeta_j), zeta_j = (q^{-1/4-j/2} + q^{1/4+j/2}) / 2.
template <class T>
XPoly<T> f_basis(const QContext<T>& ctx, int k);

template <class T>
T evaluate(const XPoly<T>& p, const T& x0) {
  return p.evaluate(x0);
}

}  // namespace aw

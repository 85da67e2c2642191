#include "aw/sympoly.hpp"

#include <vector>

namespace aw {

template <class T>
Laurent<T> x_to_laurent(const XPoly<T>& p) {
  // Horner in the Laurent domain with x -> (z + 1/z)/2.
  const Laurent<T> lifted_x(-1, std::vector<T>{T(T(1) / T(2)), T(0), T(T(1) / T(2))});
  Laurent<T> acc;
  const auto& c = p.coeffs();
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    acc = acc * lifted_x;
    acc += Laurent<T>::monomial(0, *it);
  }
  return acc;
}

template <class T>
XPoly<T> laurent_to_x(const Laurent<T>& lifted) {
  if (lifted.is_zero()) return {};
  if constexpr (is_exact_v<T>) {
    if (!lifted.is_symmetric()) throw InvariantError("laurent_to_x: input is not symmetric under z <-> 1/z");
  }
  const int top = lifted.high();
  if (top < 0) throw InvariantError("laurent_to_x: no nonnegative exponents");

  // r[k] = coefficient of z^k, k >= 0. The lift of x^d is
  // 2^{-d} sum_j C(d, j) z^{d - 2j}; peel the top exponent off repeatedly.
  std::vector<T> r(static_cast<std::size_t>(top) + 1);
  for (int k = 0; k <= top; ++k) r[static_cast<std::size_t>(k)] = lifted.coeff(k);

  std::vector<T> out(static_cast<std::size_t>(top) + 1, T(0));
  for (int d = top; d >= 0; --d) {
    const T rd = r[static_cast<std::size_t>(d)];
    if (is_zero(rd)) continue;
    const T a = T(rd * ipow(T(2), d));
    out[static_cast<std::size_t>(d)] = a;
    // binomial(d, j) / 2^d times a, for exponents d - 2j >= 0
    T binom(1);
    const T scale = T(a / ipow(T(2), d));
    for (int j = 0; d - 2 * j >= 0; ++j) {
      T& slot = r[static_cast<std::size_t>(d - 2 * j)];
      slot = T(slot - scale * binom);
      binom = T(binom * T(d - j) / T(j + 1));
    }
  }
  return XPoly<T>(std::move(out));
}

template <class T>
XPoly<T> f_basis(const QContext<T>& ctx, int k) {
  if (k < 0) throw UsageError("f_basis: negative index");
  // zeta_j = (u^{-1-2j} + u^{1+2j}) / 2
  const T& u = ctx.u();
  XPoly<T> out = XPoly<T>::constant(T(1));
  for (int j = 0; j < k; ++j) {
    const T zeta = T((ipow(u, -1 - 2 * j) + ipow(u, 1 + 2 * j)) / T(2));
    out = out * XPoly<T>::linear(zeta);
  }
  return out;
}

#define AW_INSTANTIATE(T)                                 \
  template Laurent<T> x_to_laurent(const XPoly<T>&);      \
  template XPoly<T> laurent_to_x(const Laurent<T>&);      \
  template XPoly<T> f_basis(const QContext<T>&, int);

AW_INSTANTIATE(Rational)
AW_INSTANTIATE(double)
AW_INSTANTIATE(BigFloat)

#undef AW_INSTANTIATE

}  // namespace aw

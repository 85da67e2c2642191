#include "aw/numerics.hpp"

namespace aw {

namespace {

template <class T>
std::optional<T> fourth_root(const T& q) {
  auto s = ScalarTraits<T>::exact_sqrt(q);
  if (!s) return std::nullopt;
  return ScalarTraits<T>::exact_sqrt(*s);
}

}  // namespace

template <class T>
QContext<T> QContext<T>::from_u(const T& u) {
  if (!(T(0) < u)) throw UsageError("QContext: u = q^{1/4} must be positive");
  if (u == T(1)) throw UsageError("QContext: q = 1 is excluded");
  T s = T(u * u);
  return QContext(T(s * s), s, u);
}

template <class T>
QContext<T> QContext<T>::from_q(const T& q) {
  if (!(T(0) < q)) throw UsageError("QContext: q must be positive");
  if (q == T(1)) throw UsageError("QContext: q = 1 is excluded");
  return QContext(q, ScalarTraits<T>::exact_sqrt(q), fourth_root(q));
}

template <class T>
const T& QContext<T>::sqrt_q() const {
  if (!sqrt_q_) throw UsageError("q^{1/2} is irrational; build the context from a rational u = q^{1/4}");
  return *sqrt_q_;
}

template <class T>
const T& QContext<T>::u() const {
  if (!u_) throw UsageError("q^{1/4} is irrational; build the context from a rational u");
  return *u_;
}

template <class T>
T QContext<T>::alpha_n(long n) const {
  const T& s = sqrt_q();
  return T((ipow(s, n) + ipow(s, -n)) / T(2));
}

template <class T>
T QContext<T>::gamma_n(long n) const {
  const T& s = sqrt_q();
  return T((ipow(s, n) - ipow(s, -n)) / T(s - T(T(1) / s)));
}

template <class T>
UCoefficients<T> u_coefficient_polys(const QContext<T>& ctx) {
  const T a = ctx.alpha();
  const T k = T(a * a - T(1));
  return {XPoly<T>({T(0), k}), XPoly<T>({T(-k), T(0), k})};
}

#define AW_INSTANTIATE(T)                  \
  template class QContext<T>;              \
  template UCoefficients<T> u_coefficient_polys(const QContext<T>&);

AW_INSTANTIATE(Rational)
AW_INSTANTIATE(double)
AW_INSTANTIATE(BigFloat)

#undef AW_INSTANTIATE

}  // namespace aw

#include "aw/structure.hpp"

#include <string>
#include <utility>

#include "aw/awcalc.hpp"

namespace aw {

namespace {

/// x - (e + 1/e)/2
template <class T>
XPoly<T> joukowski_factor(const T& e) {
  return XPoly<T>::linear(T((e + T(T(1) / e)) / T(2)));
}

template <class T>
T k_value(int n, const T& lead, const T& o1, const T& o2, const T& o3, const T& q) {
  if (is_zero(lead)) throw SingularError("contiguous k: leading parameter is zero");
  const T qn = ipow(q, n);
  const T prod = T(lead * o1 * o2 * o3);
  T num = T((T(1) - lead * o1 * qn) * (T(1) - lead * o2 * qn) * (T(1) - lead * o3 * qn));
  T den = T(T(2) * lead * (T(1) - prod * qn * qn));
  if (n != 0) {
    num = T(num * (T(1) - prod * ipow(q, n - 1)));
    den = T(den * (T(1) - prod * ipow(q, 2 * n - 1)));
  }
  if (is_zero(den)) throw SingularError("contiguous k_" + std::to_string(n) + ": singular denominator");
  return T(-num / den);
}

template <class T>
std::vector<XPoly<T>> family_upto(const AWParams<T>& params, int n) {
  return aw_monic_family(params, n + 1);
}

}  // namespace

template <class T>
DDEData<T> dde_data(const AWParams<T>& params) {
  const T& a = params.a;
  const T& b = params.b;
  const T& c = params.c;
  const T& d = params.d;
  const T& q = params.q();
  const T& s = params.ctx.sqrt_q();
  const T abcd = params.abcd();
  const T e3 = T(a * b * c + a * b * d + a * c * d + b * c * d);
  const T e1 = T(a + b + c + d);
  const T e2 = T(a * b + a * c + a * d + b * c + b * d + c * d);

  DDEData<T> out{XPoly<T>({T(e2 - abcd - T(1)), T(-(e3 + e1)), T(T(2) * (abcd + T(1)))}),
                 XPoly<T>({T(T(2) * s * (e1 - e3) / (q - T(1))), T(T(4) * s * (abcd - T(1)) / (q - T(1)))}),
                 s, q, abcd};
  return out;
}

template <class T>
PiPoly<T> pi_poly(const AWParams<T>& params) {
  const auto dd = dde_data(params);
  const auto u = u_coefficient_polys(params.ctx);
  PiPoly<T> out;
  out.pi = dd.phi * dd.phi - u.u2 * dd.psi * dd.psi;
  out.factored = XPoly<T>::constant(T(T(16) * params.abcd()));
  for (const T* e : {&params.a, &params.b, &params.c, &params.d}) out.factored = out.factored * joukowski_factor(*e);
  out.factored_check = out.pi == out.factored;
  return out;
}

template <class T>
T contiguous_k(const AWParams<T>& params, int n, Slot slot) {
  const T& q = params.q();
  switch (slot) {
    case Slot::A:
      return k_value(n, params.a, params.b, params.c, params.d, q);
    case Slot::B:
      return k_value(n, params.b, params.a, params.c, params.d, q);
    case Slot::C:
      return k_value(n, params.c, params.b, params.a, params.d, q);
    case Slot::D:
      return k_value(n, params.d, params.b, params.c, params.a, q);
  }
  throw UsageError("contiguous_k: bad slot");
}

template <class T>
XPoly<T> verify_contiguous(const AWParams<T>& params, int n, Slot slot) {
  const T& q = params.q();
  AWParams<T> shifted = params;
  T e = params.a;
  switch (slot) {
    case Slot::A:
      e = params.a;
      shifted.a = T(e * q);
      break;
    case Slot::B:
      e = params.b;
      shifted.b = T(e * q);
      break;
    case Slot::C:
      e = params.c;
      shifted.c = T(e * q);
      break;
    case Slot::D:
      e = params.d;
      shifted.d = T(e * q);
      break;
  }
  const XPoly<T> lhs = joukowski_factor(e) * aw_monic(shifted, n);
  return lhs - aw_monic(params, n + 1) - aw_monic(params, n) * contiguous_k(params, n, slot);
}

template <class T>
StructureCoeffs<T> structure_coefficients(const AWParams<T>& params, int n) {
  if (n < 2) throw UsageError("structure_coefficients: n must be at least 2");
  const T& q = params.q();
  const T& a = params.a;
  const T& b = params.b;
  const T& c = params.c;
  const T& d = params.d;
  const QContext<T>& ctx = params.ctx;

  // Families reached by multiplying P_{n-2}(aq, bq, cq, dq) by the four
  // Joukowski factors one at a time.
  const AWParams<T> p_bcd = params.with(a, T(b * q), T(c * q), T(d * q));
  const AWParams<T> p_cd = params.with(a, b, T(c * q), T(d * q));
  const AWParams<T> p_d = params.with(a, b, c, T(d * q));

  const T k1 = contiguous_k(p_bcd, n - 2, Slot::A);
  const T k2 = contiguous_k(p_cd, n - 1, Slot::B);
  const T k2m = contiguous_k(p_cd, n - 2, Slot::B);
  const T k3 = contiguous_k(p_d, n, Slot::C);
  const T k3m = contiguous_k(p_d, n - 2, Slot::C);
  const T k3m1 = contiguous_k(p_d, n - 1, Slot::C);
  const T k4 = contiguous_k(params, n + 1, Slot::D);
  const T k4m = contiguous_k(params, n - 2, Slot::D);
  const T k4m1 = contiguous_k(params, n - 1, Slot::D);
  const T k4n = contiguous_k(params, n, Slot::D);

  const T top = T(T(16) * params.abcd() * ctx.gamma_n(n) * ctx.gamma_n(n - 1));
  StructureCoeffs<T> out;
  out.band[4] = top;
  out.band[3] = T(top * (k1 + k2 + k3 + k4));
  out.band[2] = T(top * (k1 * k2m + k3m1 * (k1 + k2) + k4n * (k1 + k2 + k3)));
  out.band[1] = T(top * (k1 * k2m * k3m + k4m1 * k1 * k2m + k4m1 * k3m1 * (k1 + k2)));
  out.band[0] = T(top * k1 * k2m * k3m * k4m);
  return out;
}

template <class T>
XPoly<T> verify_structure_relation(const AWParams<T>& params, int n) {
  const auto coeffs = structure_coefficients(params, n);
  const auto family = family_upto(params, n + 2);
  const XPoly<T> pi = pi_poly(params).pi;
  XPoly<T> residual = pi * dq2(params.ctx, family[static_cast<std::size_t>(n)]);
  for (int j = -2; j <= 2; ++j) residual -= family[static_cast<std::size_t>(n + j)] * coeffs[j];
  return residual;
}

template <class T>
XPoly<T> verify_dde(const AWParams<T>& params, int n) {
  const auto dd = dde_data(params);
  const QContext<T>& ctx = params.ctx;
  const XPoly<T> p = aw_monic(params, n);
  const XPoly<T> dp = dq(ctx, p);
  return dd.phi * dq(ctx, dp) + dd.psi * sq(ctx, dp) + p * dd.lambda(n);
}

template <class T>
std::vector<T> band_profile(const QContext<T>& ctx, std::span<const XPoly<T>> family, const XPoly<T>& pi, int n) {
  if (n < 0 || family.size() < static_cast<std::size_t>(n) + 3) {
    throw UsageError("band_profile: family must contain P_0 .. P_{n+2}");
  }
  for (std::size_t k = 0; k < family.size(); ++k) {
    if (family[k].degree() != static_cast<int>(k)) throw UsageError("band_profile: deg P_k != k");
  }
  XPoly<T> rest = pi * dq2(ctx, family[static_cast<std::size_t>(n)]);
  if (rest.degree() > n + 2) throw UsageError("band_profile: pi has degree above 4");
  std::vector<T> out(static_cast<std::size_t>(n) + 3, T(0));
  for (int k = n + 2; k >= 0; --k) {
    const auto idx = static_cast<std::size_t>(k);
    const T ck = T(rest[idx] / family[idx].leading());
    out[idx] = ck;
    if (!is_zero(ck)) rest -= family[idx] * ck;
  }
  return out;
}

template <class T>
D2Expansion<T> expand_in_d2_basis(const AWParams<T>& params, int n) {
  if (n < 4) throw UsageError("expand_in_d2_basis: n must be at least 4");
  const auto family = family_upto(params, n + 2);
  D2Expansion<T> out;
  out.coeffs.assign(static_cast<std::size_t>(n) + 1, T(0));
  XPoly<T> rest = family[static_cast<std::size_t>(n)];
  for (int k = n + 2; k >= 2; --k) {
    const XPoly<T> basis = dq2(params.ctx, family[static_cast<std::size_t>(k)]);
    const T bk = T(rest[static_cast<std::size_t>(k - 2)] / basis.leading());
    out.coeffs[static_cast<std::size_t>(k - 2)] = bk;
    if (!is_zero(bk)) rest -= basis * bk;
  }
  if constexpr (is_exact_v<T>) {
    if (!rest.is_zero()) throw InvariantError("expand_in_d2_basis: elimination left a remainder");
    for (int k = 2; k < n - 2; ++k) {
      if (!is_zero(out.at(k))) {
        throw InvariantError("expand_in_d2_basis: b_{" + std::to_string(n) + "," + std::to_string(k) +
                             "} is nonzero outside the band");
      }
    }
  }
  for (int j = -2; j <= 2; ++j) out.band[static_cast<std::size_t>(j + 2)] = out.at(n + j);
  return out;
}

template <class T>
XPoly<T> koornwinder_L(const AWParams<T>& params, const XPoly<T>& p) {
  const auto dd = dde_data(params);
  const QContext<T>& ctx = params.ctx;
  const T& q = params.q();
  const T xi = T((T(1) - q * q) / (T(2) * q));
  const XPoly<T> sp = sq(ctx, p);
  XPoly<T> out = dd.phi * dq(ctx, sp) * T(2) + dd.psi * sq(ctx, sp) * T(2) - dd.psi * p;
  return out * xi;
}

template <class T>
XPoly<T> verify_koornwinder(const AWParams<T>& params, int n) {
  const auto dd = dde_data(params);
  const QContext<T>& ctx = params.ctx;
  const T& q = params.q();
  const T& s = ctx.sqrt_q();
  const XPoly<T> p = aw_monic(params, n);
  const XPoly<T> pi = pi_poly(params).pi;

  const T qm1 = T(q - T(1));
  const T cn = T(T(4) * s * (ipow(q, n) - T(1)) * (ipow(q, n - 1) * params.abcd() - T(1)) /
                 (qm1 * qm1 * ipow(q, n - 1)));
  const XPoly<T> bracket =
      dd.psi * dd.psi + (dd.phi / s + XPoly<T>::x() * dd.psi * T(qm1 * qm1 / (T(2) * q))) * cn;
  const XPoly<T> rhs = pi * dq2(ctx, p) * T((T(1) - q * q) / (T(2) * q)) + bracket * p * T(qm1 / s);
  return dd.psi * koornwinder_L(params, p) - rhs;
}

template <class T>
XPoly<T> verify_koornwinder_reduced(const AWParams<T>& params, int n) {
  const auto dd = dde_data(params);
  const QContext<T>& ctx = params.ctx;
  const T& q = params.q();
  const T xi = T((T(1) - q * q) / (T(2) * q));
  const T alpha = ctx.alpha();
  const auto u = u_coefficient_polys(ctx);
  const XPoly<T> p = aw_monic(params, n);
  const XPoly<T> pi = pi_poly(params).pi;

  const XPoly<T> p_term = dd.psi * dd.psi - (dd.phi * alpha + u.u1 * dd.psi) * T(T(2) * dd.lambda(n));
  const XPoly<T> rhs = (pi * dq2(ctx, p) * T(T(-2) * alpha) + p_term * p) * xi;
  return dd.psi * koornwinder_L(params, p) - rhs;
}

template <class T>
TwoTermForm<T> reduce_structure_relation(const AWParams<T>& params, int n) {
  if (n < 2) throw UsageError("reduce_structure_relation: n must be at least 2");
  const T& q = params.q();
  const auto rec = extract_recurrence(params, n + 1);
  const auto family = family_upto(params, n + 2);
  const AWParams<T> shifted = params.scaled(q);

  XPoly<T> lhs = pi_poly(params).factored / T(T(16) * params.abcd());
  lhs = lhs * aw_monic(shifted, n - 2);

  // Expand lhs in P_0 .. P_{n+2} directly.
  std::vector<T> coeff(static_cast<std::size_t>(n) + 3, T(0));
  XPoly<T> rest = lhs;
  for (int k = n + 2; k >= 0; --k) {
    const auto idx = static_cast<std::size_t>(k);
    coeff[idx] = rest[idx];
    if (!is_zero(coeff[idx])) rest -= family[idx] * coeff[idx];
  }
  if constexpr (is_exact_v<T>) {
    for (int k = 0; k < n - 2; ++k) {
      if (!is_zero(coeff[static_cast<std::size_t>(k)])) {
        throw InvariantError("reduce_structure_relation: expansion leaves the five-term band");
      }
    }
  }

  // Each P_{n+j} as (l, G) with P_{n+j} = l P_{n+1} + G P_n.
  using Pair = std::pair<XPoly<T>, XPoly<T>>;
  const auto nn = static_cast<std::size_t>(n);
  const XPoly<T> one = XPoly<T>::constant(T(1));
  const Pair p_n1{one, {}};
  const Pair p_n{{}, one};
  const Pair p_n2{XPoly<T>::linear(rec.a(nn + 1)), XPoly<T>::constant(T(-rec.b(nn + 1)))};
  const T bn = rec.b(nn);
  const Pair p_nm1{XPoly<T>::constant(T(T(-1) / bn)), XPoly<T>::linear(rec.a(nn)) / bn};
  const T bnm1 = rec.b(nn - 1);
  const XPoly<T> xl = XPoly<T>::linear(rec.a(nn - 1));
  const Pair p_nm2{xl * p_nm1.first / bnm1, (xl * p_nm1.second - one) / bnm1};

  TwoTermForm<T> out;
  const std::array<const Pair*, 5> terms{&p_nm2, &p_nm1, &p_n, &p_n1, &p_n2};
  for (int j = -2; j <= 2; ++j) {
    const T cj = coeff[static_cast<std::size_t>(n + j)];
    out.linear += terms[static_cast<std::size_t>(j + 2)]->first * cj;
    out.quadratic += terms[static_cast<std::size_t>(j + 2)]->second * cj;
  }
  return out;
}

#define AW_INSTANTIATE(T)                                                                          \
  template DDEData<T> dde_data(const AWParams<T>&);                                                \
  template PiPoly<T> pi_poly(const AWParams<T>&);                                                  \
  template T contiguous_k(const AWParams<T>&, int, Slot);                                          \
  template XPoly<T> verify_contiguous(const AWParams<T>&, int, Slot);                              \
  template StructureCoeffs<T> structure_coefficients(const AWParams<T>&, int);                     \
  template XPoly<T> verify_structure_relation(const AWParams<T>&, int);                            \
  template XPoly<T> verify_dde(const AWParams<T>&, int);                                           \
  template std::vector<T> band_profile(const QContext<T>&, std::span<const XPoly<T>>, const XPoly<T>&, int); \
  template D2Expansion<T> expand_in_d2_basis(const AWParams<T>&, int);                             \
  template XPoly<T> koornwinder_L(const AWParams<T>&, const XPoly<T>&);                            \
  template XPoly<T> verify_koornwinder(const AWParams<T>&, int);                                   \
  template XPoly<T> verify_koornwinder_reduced(const AWParams<T>&, int);                           \
  template TwoTermForm<T> reduce_structure_relation(const AWParams<T>&, int);

AW_INSTANTIATE(Rational)
AW_INSTANTIATE(double)
AW_INSTANTIATE(BigFloat)

#undef AW_INSTANTIATE

}  // namespace aw

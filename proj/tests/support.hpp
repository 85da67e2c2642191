#pragma once

// Shared generators and independent oracles for the test suites.

#include <complex>
#include <random>
#include <vector>

#include "aw/families.hpp"
#include "aw/numerics.hpp"
#include "aw/scalar.hpp"
#include "aw/xpoly.hpp"

namespace awtest {

using aw::Rational;
using cplx = std::complex<double>;

/// Uniform rational p/den with p in [lo*den, hi*den].
inline Rational random_rational(std::mt19937_64& rng, long lo, long hi, long den) {
  std::uniform_int_distribution<long> dist(lo * den, hi * den);
  Rational r(dist(rng), den);
  r.canonicalize();
  return r;
}

/// Rational strictly inside (0, 1) with denominator den.
inline Rational random_unit(std::mt19937_64& rng, long den) {
  std::uniform_int_distribution<long> dist(1, den - 1);
  Rational r(dist(rng), den);
  r.canonicalize();
  return r;
}

inline aw::XPoly<Rational> random_poly(std::mt19937_64& rng, int degree) {
  std::vector<Rational> c;
  for (int k = 0; k <= degree; ++k) c.push_back(random_rational(rng, -3, 3, 7));
  if (c.back() == 0) c.back() = 1;
  return aw::XPoly<Rational>(std::move(c));
}

/// Admissible parameters; q = u^4 with u rational so every operator is exact.
inline aw::AWParams<Rational> random_admissible_u(std::mt19937_64& rng) {
  const Rational u = random_unit(rng, 11);
  return {random_unit(rng, 13), random_unit(rng, 17), random_unit(rng, 19), random_unit(rng, 23),
          aw::QContext<Rational>::from_u(u)};
}

/// Admissible parameters with q itself drawn uniformly (q^{1/4} need not be
/// rational; only series and recurrence work is possible).
inline aw::AWParams<Rational> random_admissible_q(std::mt19937_64& rng) {
  return {random_unit(rng, 29), random_unit(rng, 31), random_unit(rng, 37), random_unit(rng, 41),
          aw::QContext<Rational>::from_q(random_unit(rng, 43))};
}

template <class T>
aw::AWParams<T> convert(const aw::AWParams<Rational>& p) {
  const auto f = [](const Rational& v) { return aw::from_rational<T>(v); };
  return {f(p.a), f(p.b), f(p.c), f(p.d), aw::QContext<T>::from_u(f(p.ctx.u()))};
}

inline cplx eval_complex(const aw::XPoly<Rational>& p, cplx x) {
  cplx acc = 0;
  const auto& c = p.coeffs();
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + it->get_d();
  return acc;
}

inline cplx joukowski(cplx z) { return (z + 1.0 / z) / 2.0; }

/// D_q f at x = cos(theta) from the defining difference quotient, evaluated
/// with complex arithmetic on the circle z = e^{i theta}.
inline cplx dq_oracle(const aw::XPoly<Rational>& f, double sqrt_q, double theta) {
  const cplx z = std::polar(1.0, theta);
  const cplx zp = sqrt_q * z;
  const cplx zm = z / sqrt_q;
  return (eval_complex(f, joukowski(zp)) - eval_complex(f, joukowski(zm))) / (joukowski(zp) - joukowski(zm));
}

inline cplx sq_oracle(const aw::XPoly<Rational>& f, double sqrt_q, double theta) {
  const cplx z = std::polar(1.0, theta);
  return (eval_complex(f, joukowski(sqrt_q * z)) + eval_complex(f, joukowski(z / sqrt_q))) / 2.0;
}

inline cplx cpoch(cplx a, double q, int k) {
  cplx r = 1;
  for (int j = 0; j < k; ++j) r *= 1.0 - a * std::pow(q, j);
  return r;
}

/// p_n(cos theta) straight from the balanced 4phi3 sum:
///   (ab, ac, ad; q)_n / a^n * sum_k (q^-n, abcd q^{n-1}, a e^{it}, a e^{-it}; q)_k q^k
///                                    / (ab, ac, ad, q; q)_k
inline cplx aw_4phi3_oracle(double a, double b, double c, double d, double q, int n, double theta) {
  const cplx z = std::polar(1.0, theta);
  const double abcd = a * b * c * d;
  cplx sum = 0;
  for (int k = 0; k <= n; ++k) {
    cplx num = cpoch(std::pow(q, -n), q, k) * cpoch(abcd * std::pow(q, n - 1), q, k) * cpoch(a * z, q, k) *
               cpoch(a / z, q, k);
    cplx den = cpoch(a * b, q, k) * cpoch(a * c, q, k) * cpoch(a * d, q, k) * cpoch(q, q, k);
    sum += num / den * std::pow(q, k);
  }
  return cpoch(a * b, q, n) * cpoch(a * c, q, n) * cpoch(a * d, q, n) / std::pow(a, n) * sum;
}

/// Continuous q-Hermite polynomials in base p: H_{n+1} = 2x H_n - (1 - p^n) H_{n-1}.
inline aw::XPoly<Rational> q_hermite(const Rational& p, int n) {
  aw::XPoly<Rational> prev;
  aw::XPoly<Rational> cur = aw::XPoly<Rational>::constant(1);
  const auto two_x = aw::XPoly<Rational>({Rational(0), Rational(2)});
  for (int m = 0; m < n; ++m) {
    aw::XPoly<Rational> next = two_x * cur - prev * Rational(1 - aw::ipow(p, m));
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

}  // namespace awtest

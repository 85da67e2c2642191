#pragma once

// Characterizing data of monic Askey-Wilson polynomials and exact verifiers
// for the relations they satisfy:
//
//   divided-difference equation   phi D_q^2 P_n + psi S_q D_q P_n + lambda_n P_n = 0
//   structure relation            pi D_q^2 P_n = sum_{j=-2}^{2} a_{n,n+j} P_{n+j}
//   inverse expansion             P_n = sum_{j=-2}^{2} b_{n,n+j} D_q^2 P_{n+j}
//   contiguous relations          (x - (e + 1/e)/2) P_n(e -> eq) = P_{n+1} + k_n P_n
//
// Every verifier returns a residual polynomial. In the exact backend a true
// identity returns the zero polynomial.

#include <array>
#include <span>
#include <vector>

#include "aw/families.hpp"
#include "aw/numerics.hpp"
#include "aw/xpoly.hpp"

namespace aw {

template <class T>
struct DDEData {
  XPoly<T> phi;  ///< degree <= 2
  XPoly<T> psi;  ///< degree 1
  T sqrt_q;
  T q;
  T abcd;

  /// lambda_n = -4 q^{1/2} (q^n - 1)(q^n abcd - q) / ((q - 1)^2 q^n)
  T lambda(long n) const {
    const T qn = ipow(q, n);
    return T(T(-4) * sqrt_q * (qn - T(1)) * (qn * abcd - q) / ((q - T(1)) * (q - T(1)) * qn));
  }
};

template <class T>
DDEData<T> dde_data(const AWParams<T>& params);

template <class T>
struct PiPoly {
  XPoly<T> pi;          ///< phi^2 - U_2 psi^2
  XPoly<T> factored;    ///< 16abcd prod_e (x - (e + 1/e)/2)
  bool factored_check;  ///< exact equality of the two (exact backend only)
};

template <class T>
PiPoly<T> pi_poly(const AWParams<T>& params);

/// Which parameter plays the a-role in a contiguous relation. The other three
/// follow the fixed orders (a,b,c,d), (b,a,c,d), (c,b,a,d), (d,b,c,a).
enum class Slot { A, B, C, D };

/// k_n for the slot permutation of params. The (1 - abcd q^{n-1}) and
/// (1 - abcd q^{2n-1}) factors cancel at n = 0.
template <class T>
T contiguous_k(const AWParams<T>& params, int n, Slot slot);

/// (x - (e + 1/e)/2) P_n(e -> eq) - P_{n+1} - k_n P_n for the slot's parameter e.
template <class T>
XPoly<T> verify_contiguous(const AWParams<T>& params, int n, Slot slot);

/// a_{n,n-2}, a_{n,n-1}, a_{n,n}, a_{n,n+1}, a_{n,n+2} (indexed by j + 2).
template <class T>
struct StructureCoeffs {
  std::array<T, 5> band;
  const T& operator[](int j) const { return band[static_cast<std::size_t>(j + 2)]; }
};

template <class T>
StructureCoeffs<T> structure_coefficients(const AWParams<T>& params, int n);

/// pi D_q^2 P_n - sum_j a_{n,n+j} P_{n+j}
template <class T>
XPoly<T> verify_structure_relation(const AWParams<T>& params, int n);

/// phi D_q^2 P_n + psi S_q D_q P_n + lambda_n P_n
template <class T>
XPoly<T> verify_dde(const AWParams<T>& params, int n);

/// Coefficients c_{n,0..n+2} of pi D_q^2 P_n in the basis {P_k} by
/// descending-degree elimination. family must hold P_0 .. P_{n+2} with
/// deg P_k = k.
template <class T>
std::vector<T> band_profile(const QContext<T>& ctx, std::span<const XPoly<T>> family, const XPoly<T>& pi, int n);

template <class T>
struct D2Expansion {
  std::vector<T> coeffs;  ///< b_{n,k} for k = 2 .. n+2 (coeffs[k - 2])
  std::array<T, 5> band;  ///< b_{n,n-2} .. b_{n,n+2}

  const T& at(int k) const { return coeffs.at(static_cast<std::size_t>(k - 2)); }
};

/// Expansion of P_n in {D_q^2 P_k}_{k >= 2}. Exact backend: throws
/// InvariantError if any b_{n,k} with k < n-2 is nonzero.
template <class T>
D2Expansion<T> expand_in_d2_basis(const AWParams<T>& params, int n);

/// L p = xi (2 phi D_q S_q p + 2 psi S_q^2 p - psi p), xi = (1 - q^2)/(2q).
template <class T>
XPoly<T> koornwinder_L(const AWParams<T>& params, const XPoly<T>& p);

/// Residual of
///   psi L P_n = (1-q^2)/(2q) pi D_q^2 P_n
///             + (q-1)/q^{1/2} [psi^2 + c_n (phi/q^{1/2} + (q-1)^2/(2q) x psi)] P_n,
///   c_n = 4 q^{1/2} (q^n - 1)(q^{n-1} abcd - 1) / ((q-1)^2 q^{n-1}).
template <class T>
XPoly<T> verify_koornwinder(const AWParams<T>& params, int n);

/// Residual of the reduction obtained from the composition rules and the
/// divided-difference equation:
///   psi L P_n = xi [-2 alpha pi D_q^2 P_n + (psi^2 - 2 lambda_n (alpha phi + U_1 psi)) P_n].
template <class T>
XPoly<T> verify_koornwinder_reduced(const AWParams<T>& params, int n);

/// The structure relation rewritten with the recurrence as
///   (pi / 16abcd) P_{n-2}(aq, bq, cq, dq) = linear P_{n+1} + quadratic P_n.
template <class T>
struct TwoTermForm {
  XPoly<T> linear;     ///< multiple of psi
  XPoly<T> quadratic;  ///< G_{2,n}
};

/// Reduces the five-term relation to two terms using extracted recurrence
/// coefficients. Independent of the closed-form G_{2,n} coefficients.
template <class T>
TwoTermForm<T> reduce_structure_relation(const AWParams<T>& params, int n);

}  // namespace aw

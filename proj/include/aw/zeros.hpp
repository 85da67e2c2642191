#pragma once

// Zeros of monic orthogonal families and the closed-form bounds on the
// extreme zeros of Askey-Wilson polynomials.

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "aw/families.hpp"
#include "aw/scalar.hpp"

namespace aw {

enum class ZeroMethod { SturmBisection, TridiagonalEigen };

const char* zero_method_name(ZeroMethod method);

template <class T>
struct ZeroSet {
  std::vector<T> values;  ///< ascending
  int n = 0;
  ZeroMethod method = ZeroMethod::SturmBisection;

  /// Every zero lies strictly inside (-1, 1).
  bool inside_unit_interval() const {
    for (const T& v : values) {
      if (!(T(-1) < v && v < T(1))) return false;
    }
    return true;
  }

  bool strictly_increasing() const {
    for (std::size_t i = 1; i < values.size(); ++i) {
      if (!(values[i - 1] < values[i])) return false;
    }
    return true;
  }
};

/// Converts exactly computed recurrence coefficients into a float backend.
template <class T>
RecurrenceCoeffs<T> recurrence_as(const RecurrenceCoeffs<Rational>& exact) {
  RecurrenceCoeffs<T> out;
  out.provenance = exact.provenance;
  for (const auto& v : exact.a_seq) out.a_seq.push_back(from_rational<T>(v));
  for (const auto& v : exact.b_seq) out.b_seq.push_back(from_rational<T>(v));
  return out;
}

/// Number of sign changes in (P_0(x), ..., P_n(x)) evaluated with the
/// recurrence. A zero entry takes the sign opposite its predecessor. For a
/// monic family with b_k > 0 this equals the number of zeros of P_n above x.
template <class T>
int sign_changes(const RecurrenceCoeffs<T>& coeffs, int n, const T& x);

/// All n zeros of P_n by bisection on the sign-change count, each bracketed to
/// width <= tol. Throws UsageError on b_k <= 0 and NumericError when a bracket
/// cannot be established.
template <class T>
ZeroSet<T> zeros_sturm(const RecurrenceCoeffs<T>& coeffs, int n, const T& tol);

/// Eigenvalues of the Jacobi matrix with diagonal a_k and off-diagonal sqrt(b_k).
ZeroSet<double> zeros_tridiagonal(const RecurrenceCoeffs<double>& coeffs, int n);

/// Each gap between consecutive zeros of `higher` holds exactly one zero of
/// `lower`, and deg higher = deg lower + 1.
template <class T>
bool strictly_interlaces(const ZeroSet<T>& lower, const ZeroSet<T>& higher);

template <class T>
struct BoundPair {
  T upper_on_smallest;  ///< the smallest zero lies below this
  T lower_on_largest;   ///< the largest zero lies above this
  T I_n;
  T A;  ///< bc + bd + cd
  T B;  ///< b + c + d
  T C;  ///< bcd
};

/// Closed-form inner bounds on x_{1,n} and x_{n,n}. Throws DomainError when
/// I_n < 0 and SingularError on a vanishing denominator.
template <class T>
BoundPair<T> extreme_zero_bounds(const AWParams<T>& params, int n);

/// G_{2,n}(x) = (c2 x^2 + c1 x + c0) / scale, the quadratic multiplying P_n
/// once the structure relation is reduced to two terms, with
///   scale = 4abcd (1 - q^n)(1 - q^{n-1})(abcd q^{2n} - 1) / (abcd q^{n-1} - 1).
/// The scale vanishes at n = 1 and is undefined when abcd q^{n-1} = 1; the
/// roots only need c0, c1, c2.
template <class T>
struct G2Coeffs {
  T c0;
  T c1;
  T c2;
  std::optional<T> scale;

  std::array<T, 3> normalized() const {
    if (!scale || is_zero(*scale)) throw SingularError("G_{2,n}: normalization is singular");
    return {T(c0 / *scale), T(c1 / *scale), T(c2 / *scale)};
  }
};

template <class T>
G2Coeffs<T> g2_coefficients(const AWParams<T>& params, int n);

/// Roots (r_minus, r_plus) of G_{2,n}. Throws DomainError on a negative
/// discriminant.
template <class T>
std::pair<T, T> g2_roots(const AWParams<T>& params, int n);

struct Table1Row {
  int n = 0;
  /// smallest zero, upper bound on it, lower bound on the largest zero, largest zero
  std::array<double, 4> values{};
  std::array<std::string, 4> text{};
};

/// The (6/7, 5/7, 4/7, 3/7 | 1/9) table for n = 7, 9, 12, computed at the
/// given precision and printed with `digits` significant digits.
std::vector<Table1Row> table1(unsigned precision_bits, int digits = 9);

}  // namespace aw

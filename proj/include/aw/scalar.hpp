#pragma once

// Scalar backends.
//
// Two kinds of field elements are supported:
//   * Rational  - exact arithmetic over Q (GMP). Every quantity the calculus
//                 needs is rational once the base is written q = u^4 with u
//                 rational, so this is the verification backend.
//   * double / BigFloat - floating point; BigFloat carries a runtime
//                 precision (MPFR) selected with PrecisionScope.
//
// Float comparisons never use a hidden epsilon; callers pass tolerances.

#include <cmath>
#include <concepts>
#include <cstdio>
#include <optional>
#include <string>

#include <gmpxx.h>
#include <mpfr.h>

#include <boost/multiprecision/mpfr.hpp>

namespace aw {

using Rational = mpq_class;
using BigFloat = boost::multiprecision::number<boost::multiprecision::mpfr_float_backend<0>,
                                               boost::multiprecision::et_off>;

template <class T>
concept Field = requires(T a, T b) {
  { T(a + b) };
  { T(a - b) };
  { T(a * b) };
  { T(a / b) };
  { T(-a) };
  { a == b } -> std::convertible_to<bool>;
  { a < b } -> std::convertible_to<bool>;
};

template <class T>
struct ScalarTraits;

template <>
struct ScalarTraits<Rational> {
  static constexpr bool exact = true;
  static constexpr const char* name = "exact";

  static Rational from_int(long v) { return Rational(v); }
  static double to_double(const Rational& v) { return v.get_d(); }
  static Rational abs(const Rational& v) { return ::abs(v); }

  /// Square root when it is itself rational.
  static std::optional<Rational> exact_sqrt(const Rational& v) {
    if (sgn(v) < 0) return std::nullopt;
    if (!mpz_perfect_square_p(v.get_num_mpz_t()) || !mpz_perfect_square_p(v.get_den_mpz_t())) {
      return std::nullopt;
    }
    mpz_class num, den;
    mpz_sqrt(num.get_mpz_t(), v.get_num_mpz_t());
    mpz_sqrt(den.get_mpz_t(), v.get_den_mpz_t());
    Rational r(num, den);
    r.canonicalize();
    return r;
  }

  static std::string str(const Rational& v, int /*digits*/) { return v.get_str(); }
};

namespace detail {

inline std::string with_decimal_point(std::string s) {
  if (s.find_first_of(".eEn") == std::string::npos) s += ".0";
  return s;
}

}  // namespace detail

template <>
struct ScalarTraits<double> {
  static constexpr bool exact = false;
  static constexpr const char* name = "float";

  static double from_int(long v) { return static_cast<double>(v); }
  static double to_double(double v) { return v; }
  static double abs(double v) { return std::fabs(v); }
  static std::optional<double> exact_sqrt(double v) {
    if (v < 0) return std::nullopt;
    return std::sqrt(v);
  }
  static bool is_finite(double v) { return std::isfinite(v); }

  static std::string str(double v, int digits) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", digits, v);
    return detail::with_decimal_point(buf);
  }
};

template <>
struct ScalarTraits<BigFloat> {
  static constexpr bool exact = false;
  static constexpr const char* name = "float";

  static BigFloat from_int(long v) { return BigFloat(v); }
  static double to_double(const BigFloat& v) { return v.convert_to<double>(); }
  static BigFloat abs(const BigFloat& v) { return boost::multiprecision::abs(v); }
  static std::optional<BigFloat> exact_sqrt(const BigFloat& v) {
    if (v < 0) return std::nullopt;
    return BigFloat(boost::multiprecision::sqrt(v));
  }
  static bool is_finite(const BigFloat& v) { return boost::multiprecision::isfinite(v); }

  static std::string str(const BigFloat& v, int digits) {
    return detail::with_decimal_point(v.str(digits, std::ios_base::fmtflags(0)));
  }
};

template <class T>
inline constexpr bool is_exact_v = ScalarTraits<T>::exact;

/// Converts an exact rational into the target backend (round to nearest).
template <class T>
T from_rational(const Rational& v);

template <>
inline Rational from_rational<Rational>(const Rational& v) {
  return v;
}

template <>
inline double from_rational<double>(const Rational& v) {
  return v.get_d();
}

template <>
inline BigFloat from_rational<BigFloat>(const Rational& v) {
  BigFloat r;
  mpfr_set_q(r.backend().data(), v.get_mpq_t(), MPFR_RNDN);
  return r;
}

/// base^e for any integer e (negative powers invert).
template <class T>
T ipow(const T& base, long e) {
  T result(1);
  T b = e < 0 ? T(T(1) / base) : base;
  unsigned long k = e < 0 ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
  while (k != 0) {
    if (k & 1UL) result = T(result * b);
    k >>= 1;
    if (k != 0) b = T(b * b);
  }
  return result;
}

template <class T>
bool is_zero(const T& v) {
  return v == T(0);
}

/// Sets the working precision of BigFloat for the lifetime of the scope.
class PrecisionScope {
 public:
  explicit PrecisionScope(unsigned bits)
      : saved_(BigFloat::default_precision()) {
    BigFloat::default_precision(digits10_for_bits(bits));
  }
  ~PrecisionScope() { BigFloat::default_precision(saved_); }
  PrecisionScope(const PrecisionScope&) = delete;
  PrecisionScope& operator=(const PrecisionScope&) = delete;

  static unsigned digits10_for_bits(unsigned bits) {
    return static_cast<unsigned>(std::ceil(bits * 0.30102999566398120)) + 1;
  }

 private:
  unsigned saved_;
};

}  // namespace aw

#include "aw/zeros.hpp"

#include <algorithm>
#include <sstream>

#include <Eigen/Eigenvalues>

namespace aw {

const char* zero_method_name(ZeroMethod method) {
  switch (method) {
    case ZeroMethod::SturmBisection:
      return "sturm-bisection";
    case ZeroMethod::TridiagonalEigen:
      return "tridiagonal-eigen";
  }
  return "?";
}

namespace {

template <class T>
void check_coefficients(const RecurrenceCoeffs<T>& coeffs, int n) {
  if (n < 1) throw UsageError("zeros: degree must be at least 1");
  if (coeffs.a_seq.size() < static_cast<std::size_t>(n) || coeffs.b_seq.size() + 1 < static_cast<std::size_t>(n)) {
    throw UsageError("zeros: not enough recurrence coefficients for degree " + std::to_string(n));
  }
  for (int k = 1; k < n; ++k) {
    if (!(T(0) < coeffs.b(static_cast<std::size_t>(k)))) {
      throw UsageError("zeros: b_" + std::to_string(k) + " is not positive");
    }
  }
}

template <class T>
T sqrt_of(const T& v) {
  return *ScalarTraits<T>::exact_sqrt(v);
}

}  // namespace

template <class T>
int sign_changes(const RecurrenceCoeffs<T>& coeffs, int n, const T& x) {
  int changes = 0;
  T prev(0);
  T cur(1);
  bool prev_positive = true;
  for (int k = 0; k < n; ++k) {
    const auto idx = static_cast<std::size_t>(k);
    T next = T((x - coeffs.a(idx)) * cur);
    if (k > 0) next = T(next - coeffs.b(idx) * prev);
    // Rescale to keep the sequence finite; signs are unaffected.
    const T mag = ScalarTraits<T>::abs(next);
    if (T(1e100) < mag) {
      next = T(next / mag);
      cur = T(cur / mag);
    }
    const bool positive = is_zero(next) ? !prev_positive : T(0) < next;
    if (positive != prev_positive) ++changes;
    prev_positive = positive;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return changes;
}

template <class T>
ZeroSet<T> zeros_sturm(const RecurrenceCoeffs<T>& coeffs, int n, const T& tol) {
  check_coefficients(coeffs, n);
  if (!(T(0) < tol)) throw UsageError("zeros_sturm: tolerance must be positive");

  // Gershgorin disc of the Jacobi matrix encloses every zero.
  T radius(0);
  for (int k = 0; k < n; ++k) {
    T r = ScalarTraits<T>::abs(coeffs.a(static_cast<std::size_t>(k)));
    if (k > 0) r = T(r + sqrt_of(coeffs.b(static_cast<std::size_t>(k))));
    if (k + 1 < n) r = T(r + sqrt_of(coeffs.b(static_cast<std::size_t>(k + 1))));
    radius = std::max(radius, r);
  }
  const T outer_lo = T(-radius - T(1));
  const T outer_hi = T(radius + T(1));

  const auto below = [&](const T& x) { return n - sign_changes(coeffs, n, x); };
  if (below(outer_lo) != 0 || below(outer_hi) != n) {
    std::ostringstream msg;
    msg << "zeros_sturm: cannot bracket the zeros of P_" << n << " in [" << ScalarTraits<T>::str(outer_lo, 6) << ", "
        << ScalarTraits<T>::str(outer_hi, 6) << "]";
    throw NumericError(msg.str());
  }

  ZeroSet<T> out;
  out.n = n;
  out.method = ZeroMethod::SturmBisection;
  T lo = outer_lo;
  for (int k = 1; k <= n; ++k) {
    // below(lo) < k <= below(hi)
    T hi = outer_hi;
    int guard = 0;
    while (tol < T(hi - lo)) {
      const T mid = T((lo + hi) / T(2));
      if (mid == lo || mid == hi) break;
      if (below(mid) >= k) {
        hi = mid;
      } else {
        lo = mid;
      }
      if (++guard > 20000) {
        throw NumericError("zeros_sturm: bisection did not converge for zero " + std::to_string(k) + " of P_" +
                           std::to_string(n));
      }
    }
    out.values.push_back(T((lo + hi) / T(2)));
    // The next zero lies above this one; keep lo as the lower bracket.
  }
  return out;
}

ZeroSet<double> zeros_tridiagonal(const RecurrenceCoeffs<double>& coeffs, int n) {
  check_coefficients(coeffs, n);
  Eigen::VectorXd diag(n);
  Eigen::VectorXd sub(std::max(n - 1, 0));
  for (int k = 0; k < n; ++k) diag[k] = coeffs.a(static_cast<std::size_t>(k));
  for (int k = 1; k < n; ++k) sub[k - 1] = std::sqrt(coeffs.b(static_cast<std::size_t>(k)));
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
  solver.computeFromTridiagonal(diag, sub, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) throw NumericError("zeros_tridiagonal: eigenvalue iteration failed");
  ZeroSet<double> out;
  out.n = n;
  out.method = ZeroMethod::TridiagonalEigen;
  out.values.assign(solver.eigenvalues().data(), solver.eigenvalues().data() + n);
  std::sort(out.values.begin(), out.values.end());
  return out;
}

template <class T>
bool strictly_interlaces(const ZeroSet<T>& lower, const ZeroSet<T>& higher) {
  if (higher.values.size() != lower.values.size() + 1) return false;
  for (std::size_t i = 0; i < lower.values.size(); ++i) {
    if (!(higher.values[i] < lower.values[i] && lower.values[i] < higher.values[i + 1])) return false;
  }
  return true;
}

template <class T>
BoundPair<T> extreme_zero_bounds(const AWParams<T>& params, int n) {
  if (n < 2) throw UsageError("extreme_zero_bounds: n must be at least 2");
  const T& a = params.a;
  const T& b = params.b;
  const T& c = params.c;
  const T& d = params.d;
  const T& q = params.q();
  const T A = T(b * c + b * d + c * d);
  const T B = T(b + c + d);
  const T C = T(b * c * d);
  const int m = n - 1;
  const T Q = ipow(q, m);
  const T Q2 = T(Q * Q);
  const T Q3 = T(Q2 * Q);
  const T aC = T(a * C);

  const T quad = T(((C * C + b * b * c * c + b * b * d * d + c * c * d * d + C * B - A) * a * a + A * (C - B) * a +
                    C * C - C * B) *
                   Q2);
  const T lin = T(((T(1) - A) * a * a - (A - T(1)) * B * a - C * B + b * b + A + c * c + d * d + T(1)) * Q);
  const T cst = T((-Q3 * aC - T(1)) * (aC - a * B - A + T(1)));
  const T lead = T(Q * (a * A + C) - a - B);
  const T In = T(T(-16) * (aC * Q2 - T(1)) * (aC * Q - T(1)) * (cst + quad + lin) +
                 T(4) * (Q + T(1)) * (Q + T(1)) * lead * lead * (aC * Q - T(1)) * (aC * Q - T(1)));

  const T den = T(T(8) * (aC * Q2 - T(1)) * (aC * Q - T(1)));
  if (is_zero(den)) throw SingularError("extreme_zero_bounds: denominator vanishes");
  if (In < T(0)) {
    throw DomainError("extreme_zero_bounds: I_" + std::to_string(n) + " < 0, the bounds are complex");
  }
  const T num = T(T(2) * (Q + T(1)) * lead * (aC * Q - T(1)));
  const T root = sqrt_of(In);
  return {T((num - root) / den), T((num + root) / den), In, A, B, C};
}

template <class T>
G2Coeffs<T> g2_coefficients(const AWParams<T>& params, int n) {
  const T& a = params.a;
  const T& b = params.b;
  const T& c = params.c;
  const T& d = params.d;
  const T& q = params.q();
  const T abcd = params.abcd();
  const T Q = ipow(q, n);
  const T Q2 = T(Q * Q);
  const T e1 = T(a + b + c + d);
  const T e3 = T(a * b * c + a * b * d + a * c * d + b * c * d);
  const T bcdsum = T(b + c + d);
  const T bcd2 = T(b * c + b * d + c * d);

  G2Coeffs<T> out;
  out.c2 = T(T(4) * (abcd * Q2 - T(1)) * (abcd * Q - T(1)));
  out.c1 = T(-(T(2) * Q + T(2)) * (Q * e3 - e1) * (abcd * Q - T(1)));
  out.c0 = T(-(Q2 * Q * abcd + T(1)) * (abcd - a * b - a * c - a * d - bcd2 + T(1)) +
             ((b * b * c * c * d * d + b * b * c * c + b * b * c * d + b * b * d * d + b * c * c * d + b * c * d * d +
               c * c * d * d - bcd2) *
                  a * a +
              bcd2 * (d * b * c - bcdsum) * a + b * d * c * (d * b * c - bcdsum)) *
                 Q2 +
             ((T(1) - bcd2) * a * a - (bcd2 - T(1)) * bcdsum * a - b * b * c * d - b * c * c * d - b * c * d * d +
              b * b + b * c + b * d + c * c + c * d + d * d + T(1)) *
                 Q);
  const T den = T(abcd * Q / q - T(1));
  if (!is_zero(den)) out.scale = T(T(4) * abcd * (T(1) - Q) * (T(1) - Q / q) * (abcd * Q2 - T(1)) / den);
  return out;
}

template <class T>
std::pair<T, T> g2_roots(const AWParams<T>& params, int n) {
  const auto g = g2_coefficients(params, n);
  if (is_zero(g.c2)) throw SingularError("g2_roots: G_{2,n} is not quadratic");
  const T disc = T(g.c1 * g.c1 - T(4) * g.c2 * g.c0);
  if (disc < T(0)) throw DomainError("g2_roots: negative discriminant, the roots are complex");
  const T root = sqrt_of(disc);
  T r1 = T((-g.c1 - root) / (T(2) * g.c2));
  T r2 = T((-g.c1 + root) / (T(2) * g.c2));
  if (r2 < r1) std::swap(r1, r2);
  return {r1, r2};
}

std::vector<Table1Row> table1(unsigned precision_bits, int digits) {
  if (precision_bits < 53) throw UsageError("table1: precision must be at least 53 bits");
  PrecisionScope scope(precision_bits);
  const Rational a(6, 7), b(5, 7), c(4, 7), d(3, 7), q(1, 9);
  const auto exact = extract_recurrence(AWParams<Rational>{a, b, c, d, QContext<Rational>::from_q(q)}, 12);
  const auto coeffs = recurrence_as<BigFloat>(exact);
  const AWParams<BigFloat> params{from_rational<BigFloat>(a), from_rational<BigFloat>(b), from_rational<BigFloat>(c),
                                  from_rational<BigFloat>(d), QContext<BigFloat>::from_q(from_rational<BigFloat>(q))};
  const BigFloat tol = ipow(BigFloat(2), -static_cast<long>(precision_bits) + 8);

  std::vector<Table1Row> rows;
  for (int n : {7, 9, 12}) {
    const auto zs = zeros_sturm(coeffs, n, tol);
    const auto bounds = extreme_zero_bounds(params, n);
    const std::array<BigFloat, 4> vals{zs.values.front(), bounds.upper_on_smallest, bounds.lower_on_largest,
                                       zs.values.back()};
    Table1Row row;
    row.n = n;
    for (std::size_t i = 0; i < 4; ++i) {
      row.values[i] = ScalarTraits<BigFloat>::to_double(vals[i]);
      row.text[i] = ScalarTraits<BigFloat>::str(vals[i], digits);
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

#define AW_INSTANTIATE_FLOAT(T)                                                       \
  template int sign_changes(const RecurrenceCoeffs<T>&, int, const T&);               \
  template ZeroSet<T> zeros_sturm(const RecurrenceCoeffs<T>&, int, const T&);          \
  template bool strictly_interlaces(const ZeroSet<T>&, const ZeroSet<T>&);             \
  template BoundPair<T> extreme_zero_bounds(const AWParams<T>&, int);                  \
  template std::pair<T, T> g2_roots(const AWParams<T>&, int);

AW_INSTANTIATE_FLOAT(double)
AW_INSTANTIATE_FLOAT(BigFloat)

template G2Coeffs<Rational> g2_coefficients(const AWParams<Rational>&, int);
template G2Coeffs<double> g2_coefficients(const AWParams<double>&, int);
template G2Coeffs<BigFloat> g2_coefficients(const AWParams<BigFloat>&, int);

#undef AW_INSTANTIATE_FLOAT

}  // namespace aw

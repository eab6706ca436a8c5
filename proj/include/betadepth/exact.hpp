#pragma once

// Sign evaluation of small polynomial predicates over double inputs.
//
// A predicate is written once as a function template over a number type T.
// It is first evaluated with `Approx`, a double carrying a rigorous bound on
// its absolute error. When the bound cannot separate the value from zero the
// same template is re-evaluated over GMP rationals, which is exact for any
// finite double input.

#include <cmath>
#include <limits>

#include <gmpxx.h>

namespace betadepth {

using Rational = mpq_class;

/// Double with an absolute error bound: the true value lies in [v - e, v + e].
struct Approx {
  double v = 0.0;
  double e = 0.0;

  Approx() = default;
  Approx(double value) : v(value) {}  // NOLINT: exact literal
  Approx(double value, double err) : v(value), e(err) {}
};

namespace detail {
inline constexpr double kEps = std::numeric_limits<double>::epsilon();
inline constexpr double kTiny = std::numeric_limits<double>::min();
}  // namespace detail

inline Approx operator+(const Approx& a, const Approx& b) {
  const double s = a.v + b.v;
  return {s, a.e + b.e + detail::kEps * std::fabs(s)};
}

inline Approx operator-(const Approx& a, const Approx& b) {
  const double s = a.v - b.v;
  return {s, a.e + b.e + detail::kEps * std::fabs(s)};
}

inline Approx operator-(const Approx& a) { return {-a.v, a.e}; }

inline Approx operator*(const Approx& a, const Approx& b) {
  const double p = a.v * b.v;
  return {p, std::fabs(a.v) * b.e + std::fabs(b.v) * a.e + a.e * b.e +
                 detail::kEps * std::fabs(p) + detail::kTiny};
}

inline Approx operator/(const Approx& a, const Approx& b) {
  const double denom = std::fabs(b.v) - b.e;
  if (!(denom > 0.0)) {
    return {a.v / b.v, std::numeric_limits<double>::infinity()};
  }
  const double q = a.v / b.v;
  return {q, (a.e + std::fabs(q) * b.e) / denom + detail::kEps * std::fabs(q) +
                 detail::kTiny};
}

/// Sign of the approximation if it is certain, otherwise 2.
inline int certain_sign(const Approx& a) {
  // The bound itself was accumulated with rounding; inflate it slightly.
  const double bound = a.e * (1.0 + 16.0 * detail::kEps);
  if (a.v > bound) return 1;
  if (a.v < -bound) return -1;
  return 2;
}

inline int sign_of(const Rational& r) { return sgn(r); }

/// Lifts a double into either number type.
template <class T>
T lift(double x) {
  return T(x);
}

/// Lifts an unevaluated sum hi + lo (both doubles) exactly.
template <class T>
T lift_sum(double hi, double lo);

template <>
inline Approx lift_sum<Approx>(double hi, double lo) {
  return {hi, std::fabs(lo)};
}

template <>
inline Rational lift_sum<Rational>(double hi, double lo) {
  Rational r(hi);
  if (lo != 0.0) r += Rational(lo);
  return r;
}

/// Exact sign of expr<T>() where `expr` is a generic callable taking a tag
/// value of type T* (always null) and returning a T.
template <class Expr>
int robust_sign(Expr&& expr) {
  const Approx approx = expr(static_cast<Approx*>(nullptr));
  const int s = certain_sign(approx);
  if (s != 2) return s;
  const Rational exact = expr(static_cast<Rational*>(nullptr));
  return sign_of(exact);
}

}  // namespace betadepth

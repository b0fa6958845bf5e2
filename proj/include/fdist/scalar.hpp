#pragma once

#include <cmath>
#include <concepts>

#include "fdist/rational.hpp"

namespace fdist {

// Process-wide comparison tolerance. Exact scalars only consult it when
// validating that masses sum to one.
inline double& tolerance_storage() {
  static double value = 1e-9;
  return value;
}
inline double tolerance() { return tolerance_storage(); }
inline void set_tolerance(double value) { tolerance_storage() = value; }

template <class T>
struct scalar_traits;

template <>
struct scalar_traits<Rational> {
  static constexpr bool exact = true;
  static bool eq(const Rational& a, const Rational& b) { return a == b; }
  static bool le(const Rational& a, const Rational& b) { return a <= b; }
  static double to_double(const Rational& v) { return v.to_double(); }
  static Rational from_double(double v) { return Rational::from_double(v); }
};

template <>
struct scalar_traits<double> {
  static constexpr bool exact = false;
  static bool eq(double a, double b) { return std::abs(a - b) <= tolerance(); }
  static bool le(double a, double b) { return a <= b + tolerance(); }
  static double to_double(double v) { return v; }
  static double from_double(double v) { return v; }
};

template <class T>
concept Scalar = requires(T a, T b) {
  { a + b } -> std::convertible_to<T>;
  { a - b } -> std::convertible_to<T>;
  { a * b } -> std::convertible_to<T>;
  { a / b } -> std::convertible_to<T>;
  { a < b } -> std::convertible_to<bool>;
  { scalar_traits<T>::eq(a, b) } -> std::convertible_to<bool>;
  { scalar_traits<T>::le(a, b) } -> std::convertible_to<bool>;
};

template <Scalar T>
bool approx_eq(const T& a, const T& b) { return scalar_traits<T>::eq(a, b); }

template <Scalar T>
bool approx_le(const T& a, const T& b) { return scalar_traits<T>::le(a, b); }

template <Scalar T>
bool approx_lt(const T& a, const T& b) { return !scalar_traits<T>::le(b, a); }

template <Scalar T>
bool approx_zero(const T& a) { return scalar_traits<T>::eq(a, T(0)); }

// |sum - 1| within the configured tolerance, for every scalar type.
template <Scalar T>
bool sums_to_one(const T& sum) {
  return std::abs(scalar_traits<T>::to_double(sum) - 1.0) <= tolerance();
}

template <Scalar T>
double to_double(const T& v) { return scalar_traits<T>::to_double(v); }

}  // namespace fdist

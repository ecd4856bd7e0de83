#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/eigen.hpp>
#include <Eigen/Core>

#include <string>

namespace affmon {

// Expression templates are disabled: Eigen's own expression machinery does
// not compose with boost's lazily evaluated number expressions.
using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;

template <class Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <class Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
template <class Scalar>
using RowVector = Eigen::Matrix<Scalar, 1, Eigen::Dynamic>;

using IntMatrix = Matrix<Integer>;
using IntVector = Vector<Integer>;
using RatMatrix = Matrix<Rational>;
using RatVector = Vector<Rational>;

inline Integer gcd(const Integer& a, const Integer& b) {
  return boost::multiprecision::gcd(a, b);
}

inline Integer lcm(const Integer& a, const Integer& b) {
  if (a == 0 || b == 0) return 0;
  return boost::multiprecision::lcm(a, b);
}

/// Floor division for signed integers (GMP division truncates).
inline Integer floor_div(const Integer& a, const Integer& b) {
  Integer q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) q -= 1;
  return q;
}

/// Representative of a modulo m in [0, |m|).
inline Integer mod_floor(const Integer& a, const Integer& m) {
  Integer r = a % m;
  if (r < 0) r += abs(m);
  return r;
}

inline IntVector int_vector(std::initializer_list<long> values) {
  IntVector v(static_cast<Eigen::Index>(values.size()));
  Eigen::Index i = 0;
  for (long x : values) v(i++) = x;
  return v;
}

inline IntMatrix int_matrix(std::initializer_list<std::initializer_list<long>> rows) {
  const auto r = static_cast<Eigen::Index>(rows.size());
  const auto c = r == 0 ? 0 : static_cast<Eigen::Index>(rows.begin()->size());
  IntMatrix m(r, c);
  Eigen::Index i = 0;
  for (const auto& row : rows) {
    Eigen::Index j = 0;
    for (long x : row) m(i, j++) = x;
    ++i;
  }
  return m;
}

/// Divides v by the gcd of its entries. The zero vector is returned unchanged.
template <class Derived>
IntVector primitive(const Eigen::MatrixBase<Derived>& v) {
  Integer g = 0;
  for (Eigen::Index i = 0; i < v.size(); ++i) g = gcd(g, v(i));
  IntVector out = v;
  if (g > 1)
    for (Eigen::Index i = 0; i < out.size(); ++i) out(i) /= g;
  return out;
}

/// Scales a rational vector by the lcm of its denominators and makes the
/// result primitive. Sign is preserved.
IntVector clear_denominators(const RatVector& v);

std::string to_string(const IntVector& v);

}  // namespace affmon

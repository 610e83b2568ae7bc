#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/eigen.hpp>
#include <Eigen/Dense>

namespace tvb {

namespace mp = boost::multiprecision;

// Expression templates are off so that Eigen sees plain value types.
using Integer = mp::number<mp::gmp_int, mp::et_off>;
using Rational = mp::number<mp::gmp_rational, mp::et_off>;

template <class Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
template <class Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

using QVector = Vector<Rational>;
using QMatrix = Matrix<Rational>;
using IntVector = Eigen::Matrix<std::int64_t, Eigen::Dynamic, 1>;
using IntMatrix = Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic>;

/// Parses "p/q", "p" or a decimal-free integer string. Throws std::invalid_argument.
Rational parse_rational(std::string_view text);

/// Canonical text: "p/q" in lowest terms, or "p" when the denominator is 1.
std::string to_string(const Rational& q);

inline bool is_integer(const Rational& q) {
  return mp::denominator(q) == 1;
}

/// Throws std::domain_error if q is not an integer that fits in 64 bits.
std::int64_t to_int64(const Rational& q);

inline QVector to_rational(const IntVector& v) {
  return v.cast<Rational>();
}

}  // namespace tvb

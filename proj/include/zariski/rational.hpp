#pragma once

#include <string>
#include <string_view>

#include <Eigen/Core>
#include <boost/multiprecision/eigen.hpp>
#include <boost/multiprecision/gmp.hpp>

namespace zariski {

/// Arbitrary-precision exact rational. Expression templates are disabled so
/// that the type composes with Eigen's own expression machinery.
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;

template <typename Scalar>
using MatrixX = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

template <typename Scalar>
using VectorX = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using RationalMatrix = MatrixX<Rational>;
using RationalVector = VectorX<Rational>;

/// Canonical text form: "p" when the denominator is one, otherwise "p/q"
/// with q > 0 and gcd(p, q) = 1.
std::string to_string(const Rational& value);

/// Accepts "p", "+p", "-p", "p/q" with q > 0. The result is reduced.
/// Throws zariski::Error (ErrorKind::Parse) on malformed input.
Rational parse_rational(std::string_view text);

bool is_integral(const Rational& value);

int sign(const Rational& value);

}  // namespace zariski

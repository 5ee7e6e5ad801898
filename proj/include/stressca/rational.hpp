#ifndef STRESSCA_RATIONAL_HPP
#define STRESSCA_RATIONAL_HPP

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/eigen.hpp>
#include <Eigen/Dense>

#include <string>
#include <string_view>
#include <vector>

namespace stressca {

// Expression templates are off so the types behave as plain values inside
// Eigen expressions and `auto` deductions.
using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;

template <typename Scalar>
using MatrixX = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using VectorX = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using MatrixQ = MatrixX<Rational>;
using VectorQ = VectorX<Rational>;

/// Parses "p", "-p" or "p/q". Throws std::invalid_argument on anything else,
/// including decimal points and zero denominators.
Rational parse_rational(std::string_view text);

/// Always emits "p/q" with q > 0, e.g. "-3/1".
std::string format_rational(const Rational& value);

inline Integer numerator_of(const Rational& q) { return boost::multiprecision::numerator(q); }
inline Integer denominator_of(const Rational& q) { return boost::multiprecision::denominator(q); }

}  // namespace stressca

#endif  // STRESSCA_RATIONAL_HPP

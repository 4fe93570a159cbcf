#pragma once

// Scalar types shared by every module: exact integers and rationals for
// q-expansions, and the float types the numerical paths are templated on.

#include <cmath>
#include <complex>
#include <limits>
#include <stdexcept>
#include <string>
#include <string_view>
#include <type_traits>

#include <boost/math/constants/constants.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>

namespace fricke {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;
using Float50 = boost::multiprecision::cpp_bin_float_50;

template <typename Real>
using Complex = std::complex<Real>;

/// Canonical "num/den" text for an exact rational (den > 0, lowest terms).
inline std::string to_string(const Rational& r) {
    return boost::multiprecision::numerator(r).str() + "/" + boost::multiprecision::denominator(r).str();
}

inline Rational parse_rational(std::string_view text) {
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) {
        return Rational(Integer(std::string(text)));
    }
    const Integer num(std::string(text.substr(0, slash)));
    const Integer den(std::string(text.substr(slash + 1)));
    if (den == 0) {
        throw std::invalid_argument("parse_rational: zero denominator");
    }
    return Rational(num, den);
}

template <typename Real>
Real to_real(const Rational& r) {
    return static_cast<Real>(r);
}

template <typename Real>
Real to_real(const Integer& n) {
    return static_cast<Real>(n);
}

template <typename Real>
Real pi() {
    return boost::math::constants::pi<Real>();
}

template <typename Real>
Real machine_epsilon() {
    return std::numeric_limits<Real>::epsilon();
}

template <typename Real>
constexpr int decimal_digits() {
    return std::numeric_limits<Real>::digits10;
}

template <typename Real>
double to_double(const Real& x) {
    if constexpr (std::is_floating_point_v<Real>) {
        return static_cast<double>(x);
    } else {
        return x.template convert_to<double>();
    }
}

/// w^(-k) for k >= 0 by binary powering of 1/w.
template <typename Real>
Complex<Real> inverse_power(const Complex<Real>& w, int k) {
    Complex<Real> base = Real(1) / w;
    Complex<Real> acc(Real(1), Real(0));
    while (k > 0) {
        if (k & 1) {
            acc *= base;
        }
        base *= base;
        k >>= 1;
    }
    return acc;
}

/// e^{i t}
template <typename Real>
Complex<Real> unit_phase(const Real& t) {
    using std::cos;
    using std::sin;
    return {cos(t), sin(t)};
}

/// q = e^{2 pi i z}
template <typename Real>
Complex<Real> nome(const Complex<Real>& z) {
    using std::exp;
    const Real two_pi = 2 * pi<Real>();
    const Real modulus = exp(-two_pi * z.imag());
    return modulus * unit_phase<Real>(two_pi * z.real());
}

template <typename Real>
Real modulus(const Complex<Real>& z) {
    using std::sqrt;
    return sqrt(z.real() * z.real() + z.imag() * z.imag());
}

template <typename Real>
Real argument(const Complex<Real>& z) {
    using std::atan2;
    return atan2(z.imag(), z.real());
}

/// Runs `fn(Real{})` with the float type matching a requested decimal precision.
template <typename Fn>
decltype(auto) with_precision(int digits, Fn&& fn) {
    if (digits < 15) {
        throw std::invalid_argument("precision must be at least 15 decimal digits");
    }
    if (digits <= std::numeric_limits<double>::digits10) {
        return fn(double{});
    }
    if (digits <= std::numeric_limits<long double>::digits10) {
        return fn(static_cast<long double>(0));
    }
    if (digits <= 50) {
        return fn(Float50{});
    }
    throw std::invalid_argument("precision above 50 decimal digits is not supported");
}

}  // namespace fricke

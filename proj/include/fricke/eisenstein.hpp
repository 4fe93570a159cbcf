#pragma once

// Classical Eisenstein series E_k for SL2(Z):
//   E_k(z) = (1/2) sum_{gcd(c,d)=1} (cz + d)^{-k}
//          = 1 - (2k / B_k) sum_{n>=1} sigma_{k-1}(n) q^n.
// Both routes are implemented independently; the lattice sum is the oracle
// for everything built on the q-expansion.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "fricke/errors.hpp"
#include "fricke/numeric.hpp"
#include "fricke/qseries.hpp"

namespace fricke {

/// Even weight k >= 4.
class Weight {
public:
    explicit Weight(int k) : k_(k) {
        if (k < 4 || k % 2 != 0) {
            throw std::invalid_argument("weight must be an even integer >= 4, got " + std::to_string(k));
        }
    }
    int value() const noexcept { return k_; }
    friend bool operator==(Weight, Weight) = default;

private:
    int k_;
};

/// z = re + i im with im > 0.
template <typename Real = double>
class HalfPlanePoint {
public:
    HalfPlanePoint(Real re, Real im) : z_(re, im) {
        if (!(im > 0)) {
            throw std::invalid_argument("point is not in the upper half-plane");
        }
    }
    explicit HalfPlanePoint(const Complex<Real>& z) : HalfPlanePoint(z.real(), z.imag()) {}

    Real re() const { return z_.real(); }
    Real im() const { return z_.imag(); }
    const Complex<Real>& value() const noexcept { return z_; }

private:
    Complex<Real> z_;
};

/// Truncation policy for the coprime lattice sum.
struct LatticeSumConfig {
    long max_norm = 40000;  // pairs with c^2 + d^2 <= max_norm
    int precision = 30;     // working decimal digits

    void validate() const {
        if (max_norm < 2) {
            throw NumericalError(NumericalError::Kind::no_convergence,
                                 "lattice truncation max_norm < 2 keeps only the unit pairs; refusing to treat that as E_k");
        }
        if (precision < 15) {
            throw std::invalid_argument("precision must be at least 15 decimal digits");
        }
    }
};

// ---------------------------------------------------------------------------
// Integer and rational helpers

inline Integer divisor_sum(std::int64_t n, int m) {
    if (n < 1) {
        throw std::invalid_argument("divisor_sum needs n >= 1");
    }
    if (m < 0) {
        throw std::invalid_argument("divisor_sum needs m >= 0");
    }
    Integer total = 0;
    for (std::int64_t d = 1; d * d <= n; ++d) {
        if (n % d != 0) {
            continue;
        }
        total += boost::multiprecision::pow(Integer(d), static_cast<unsigned>(m));
        const std::int64_t e = n / d;
        if (e != d) {
            total += boost::multiprecision::pow(Integer(e), static_cast<unsigned>(m));
        }
    }
    return total;
}

inline Integer binomial(int n, int r) {
    if (r < 0 || r > n) {
        return 0;
    }
    r = std::min(r, n - r);
    Integer acc = 1;
    for (int i = 1; i <= r; ++i) {
        acc = acc * (n - r + i) / i;
    }
    return acc;
}

/// B_k with B_2 = 1/6, B_4 = -1/30, from sum_{j=0}^{m} C(m+1, j) B_j = 0.
inline Rational bernoulli(int k) {
    if (k < 2 || k % 2 != 0) {
        throw std::invalid_argument("bernoulli: k must be even and >= 2");
    }
    std::vector<Rational> b(static_cast<std::size_t>(k) + 1);
    b[0] = 1;
    b[1] = Rational(-1, 2);
    for (int m = 2; m <= k; ++m) {
        if (m % 2 == 1) {
            continue;  // odd index > 1 vanishes
        }
        Rational acc = 0;
        for (int j = 0; j < m; ++j) {
            if (b[j] != 0) {
                acc += Rational(binomial(m + 1, j)) * b[j];
            }
        }
        b[m] = -acc / (m + 1);
    }
    return b[k];
}

/// Natural log of |r| for an exact rational of any size; -inf for 0.
inline double log_abs(const Rational& r) {
    auto log_int = [](Integer x) {
        if (x < 0) {
            x = -x;
        }
        const unsigned bits = boost::multiprecision::msb(x) + 1;
        if (bits <= 60) {
            return std::log(x.convert_to<double>());
        }
        const unsigned shift = bits - 60;
        const double head = static_cast<double>((x >> shift).convert_to<std::uint64_t>());
        return std::log(head) + shift * std::log(2.0);
    };
    if (r == 0) {
        return -std::numeric_limits<double>::infinity();
    }
    return log_int(boost::multiprecision::numerator(r)) - log_int(boost::multiprecision::denominator(r));
}

// ---------------------------------------------------------------------------
// q-expansion path

inline QSeries eisenstein_qseries(Weight k, int truncation) {
    if (truncation < 0) {
        throw std::invalid_argument("truncation must be >= 0");
    }
    const int kk = k.value();
    const Rational scale = Rational(-2 * kk) / bernoulli(kk);
    std::vector<Rational> c(static_cast<std::size_t>(truncation) + 1);
    c[0] = 1;
    for (int n = 1; n <= truncation; ++n) {
        c[n] = scale * Rational(divisor_sum(n, kk - 1));
    }
    return QSeries(kk, 1, std::move(c));
}

/// A float evaluation with separate truncation and rounding estimates.
template <typename Real>
struct SeriesValue {
    Complex<Real> value;
    Real tail;
    Real rounding;

    Real error() const { return tail + rounding; }
};

/// A q-series with coefficients converted once to Real, for repeated evaluation.
///
/// The tail estimate assumes |a_n| <= A n^{max(w-1,0)} beyond the truncation,
/// where A is twice the largest |a_n| / n^{w-1} seen in the known range. That
/// holds for Eisenstein series (|a_n| / n^{k-1} is within a factor zeta(k-1) of
/// its first value) and is generous for cusp forms.
template <typename Real>
class PreparedSeries {
public:
    explicit PreparedSeries(const QSeries& s)
        : truncation_(s.truncation()), growth_(std::max(s.weight() - 1, 0)) {
        coeffs_.reserve(s.coefficients().size());
        log_abs_.reserve(s.coefficients().size());
        for (const Rational& a : s.coefficients()) {
            coeffs_.push_back(to_real<Real>(a));
            log_abs_.push_back(log_abs(a));
        }
        log_scale_ = -std::numeric_limits<double>::infinity();
        for (int n = 1; n <= truncation_; ++n) {
            log_scale_ = std::max(log_scale_, log_abs_[n] - growth_ * std::log(double(n)));
        }
        log_scale_ += std::log(2.0);
    }

    int truncation() const noexcept { return truncation_; }

    SeriesValue<Real> operator()(const Complex<Real>& z) const {
        const Complex<Real> q = nome<Real>(z);
        Complex<Real> acc(0, 0);
        for (int n = truncation_; n >= 0; --n) {
            acc = acc * q + coeffs_[n];
        }
        const double log_r = -2 * std::acos(-1.0) * to_double(z.imag());
        double magnitude = 0;
        for (int n = 0; n <= truncation_; ++n) {
            magnitude += std::exp(log_abs_[n] + n * log_r);
        }
        const double rounding = 4.0 * (truncation_ + 1) * to_double(machine_epsilon<Real>()) * magnitude;
        return {acc, Real(tail_estimate(log_r)), Real(rounding)};
    }

    double tail_estimate(double log_r) const {
        if (truncation_ < 1 || !std::isfinite(log_scale_)) {
            return 0.0;
        }
        const double n1 = truncation_ + 1;
        const double ratio = std::exp(growth_ * std::log((n1 + 1) / n1) + log_r);
        if (ratio >= 1) {
            return std::numeric_limits<double>::infinity();
        }
        return std::exp(log_scale_ + growth_ * std::log(n1) + n1 * log_r) / (1 - ratio);
    }

private:
    int truncation_;
    int growth_;
    std::vector<Real> coeffs_;
    std::vector<double> log_abs_;
    double log_scale_;
};

/// sum a_n q^n at z, with the truncation tail and rounding estimates exposed.
template <typename Real>
SeriesValue<Real> estimate_qseries(const QSeries& s, const HalfPlanePoint<Real>& z) {
    return PreparedSeries<Real>(s)(z.value());
}

/// As estimate_qseries, but refuses when the estimated error exceeds tolerance.
template <typename Real>
SeriesValue<Real> evaluate_qseries(const QSeries& s, const HalfPlanePoint<Real>& z, double tolerance = 1e-10) {
    auto v = estimate_qseries(s, z);
    if (!(to_double(v.error()) <= tolerance)) {
        throw NumericalError(NumericalError::Kind::tail_bound_exceeded,
                             "q-series truncated at N=" + std::to_string(s.truncation()) +
                                 " cannot meet tolerance at Im(z)=" + std::to_string(to_double(z.im())) +
                                 " (estimate " + std::to_string(to_double(v.error())) + ")");
    }
    return v;
}

// ---------------------------------------------------------------------------
// Lattice-sum path

/// (1/2) sum over coprime (c, d) with c^2 + d^2 <= max_norm of (cz + d)^{-k},
/// enumerated c = -C..C, d ascending. No guard on max_norm: max_norm = 1
/// gives the four unit pairs.
template <typename Real>
Complex<Real> coprime_pair_sum(int k, const Complex<Real>& z, long max_norm) {
    if (max_norm < 1) {
        throw std::invalid_argument("max_norm must be >= 1");
    }
    const long bound = static_cast<long>(std::floor(std::sqrt(static_cast<double>(max_norm))));
    Complex<Real> total(0, 0);
    for (long c = -bound; c <= bound; ++c) {
        const long rem = max_norm - c * c;
        const long dmax = static_cast<long>(std::floor(std::sqrt(static_cast<double>(rem))));
        for (long d = -dmax; d <= dmax; ++d) {
            if (std::gcd(c, d) != 1) {
                continue;
            }
            const Complex<Real> w = Real(c) * z + Real(d);
            total += inverse_power(w, k);
        }
    }
    return total / Real(2);
}

/// The literal definition, truncated by cfg.max_norm.
template <typename Real>
Complex<Real> eisenstein_lattice_sum(Weight k, const HalfPlanePoint<Real>& z, const LatticeSumConfig& cfg) {
    cfg.validate();
    return coprime_pair_sum<Real>(k.value(), z.value(), cfg.max_norm);
}

/// E_k(z) by the lattice sum, enumerating by the quadratic form
/// |cz + d|^2 <= R with R picked so the estimated tail
///   (pi / y) R^{1 - k/2} / (k/2 - 1)
/// drops below `target`. The term count is capped near pi * max_norm.
namespace detail {

inline double lattice_radius(int k, double y, double target, long max_norm) {
    const double half = k / 2.0 - 1.0;
    double radius = std::pow((std::acos(-1.0) / y) / (half * target), 1.0 / half);
    radius = std::max(radius, 2.0);
    return std::min(radius, std::max(2.0, static_cast<double>(max_norm) * y));
}

inline double lattice_tail(int k, double y, double radius) {
    const double half = k / 2.0 - 1.0;
    return (std::acos(-1.0) / y) * std::pow(radius, -half) / half;
}

}  // namespace detail

/// The truncation estimate lattice_eisenstein_adaptive will report at Im z = y.
inline double lattice_tail_estimate(int k, double y, double target, long max_norm) {
    return detail::lattice_tail(k, y, detail::lattice_radius(k, y, target, max_norm));
}

template <typename Real>
SeriesValue<Real> lattice_eisenstein_adaptive(int k, const Complex<Real>& z, double target, long max_norm) {
    const double x = to_double(z.real());
    const double y = to_double(z.imag());
    auto tail_at = [&](double r) { return detail::lattice_tail(k, y, r); };
    const double radius = detail::lattice_radius(k, y, target, max_norm);

    Complex<Real> total(1, 0);  // (0, +-1)
    double magnitude = 1.0;
    const long cmax = static_cast<long>(std::floor(std::sqrt(radius) / y));
    for (long c = 1; c <= cmax; ++c) {
        const double slack = radius - (c * y) * (c * y);
        if (slack < 0) {
            break;
        }
        const double s = std::sqrt(slack);
        const long dlo = static_cast<long>(std::ceil(-c * x - s));
        const long dhi = static_cast<long>(std::floor(-c * x + s));
        for (long d = dlo; d <= dhi; ++d) {
            if (std::gcd(c, d) != 1) {
                continue;
            }
            const Complex<Real> term = inverse_power(Real(c) * z + Real(d), k);
            total += term;
            magnitude += to_double(modulus(term));
        }
    }
    const double rounding = 8.0 * (std::log2(double(k)) + 1) * to_double(machine_epsilon<Real>()) * magnitude;
    return {total, Real(tail_at(radius)), Real(rounding)};
}

}  // namespace fricke

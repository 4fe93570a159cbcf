#pragma once

// Truncated q-expansions with exact rational coefficients.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "fricke/errors.hpp"
#include "fricke/numeric.hpp"

namespace fricke {

/// sum_{n=0}^{N} a_n q^n, a_n exact, for a form of given weight and level.
/// Coefficients beyond the truncation N are unknown, not zero.
class QSeries {
public:
    QSeries(int weight, int level, std::vector<Rational> coeffs)
        : weight_(weight), level_(level), coeffs_(std::move(coeffs)) {
        if (coeffs_.empty()) {
            throw std::invalid_argument("QSeries needs at least the constant coefficient");
        }
        if (level_ < 1 || level_ > 3) {
            throw std::invalid_argument("QSeries level must be 1, 2 or 3");
        }
        if (weight_ % 2 != 0) {
            throw std::invalid_argument("QSeries weight must be even");
        }
    }

    static QSeries one(int level, int truncation) {
        std::vector<Rational> c(static_cast<std::size_t>(truncation) + 1);
        c[0] = 1;
        return QSeries(0, level, std::move(c));
    }

    int weight() const noexcept { return weight_; }
    int level() const noexcept { return level_; }
    int truncation() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }

    const Rational& operator[](int n) const {
        if (n < 0 || n > truncation()) {
            throw std::out_of_range("QSeries coefficient beyond truncation");
        }
        return coeffs_[static_cast<std::size_t>(n)];
    }

    std::span<const Rational> coefficients() const noexcept { return coeffs_; }

    /// v_inf: smallest n with a_n != 0; empty if zero through the truncation.
    std::optional<int> leading() const {
        for (std::size_t n = 0; n < coeffs_.size(); ++n) {
            if (coeffs_[n] != 0) {
                return static_cast<int>(n);
            }
        }
        return std::nullopt;
    }

    bool is_zero() const { return !leading().has_value(); }

    QSeries truncated(int n) const {
        if (n > truncation()) {
            throw std::invalid_argument("cannot extend a truncated series");
        }
        return QSeries(weight_, level_, {coeffs_.begin(), coeffs_.begin() + n + 1});
    }

    QSeries with_weight(int weight) const { return QSeries(weight, level_, coeffs_); }

    friend bool operator==(const QSeries& a, const QSeries& b) {
        return a.weight_ == b.weight_ && a.level_ == b.level_ && a.coeffs_ == b.coeffs_;
    }

    QSeries operator-() const {
        std::vector<Rational> c(coeffs_.size());
        std::transform(coeffs_.begin(), coeffs_.end(), c.begin(), [](const Rational& x) { return Rational(-x); });
        return QSeries(weight_, level_, std::move(c));
    }

    friend QSeries operator+(const QSeries& a, const QSeries& b) { return combine(a, b, +1); }
    friend QSeries operator-(const QSeries& a, const QSeries& b) { return combine(a, b, -1); }

    friend QSeries operator*(const Rational& s, const QSeries& a) {
        std::vector<Rational> c(a.coeffs_.size());
        std::transform(a.coeffs_.begin(), a.coeffs_.end(), c.begin(), [&](const Rational& x) { return Rational(s * x); });
        return QSeries(a.weight_, a.level_, std::move(c));
    }

    friend QSeries operator*(const QSeries& a, const QSeries& b) {
        require_same_level(a, b);
        const int n = std::min(a.truncation(), b.truncation());
        std::vector<Rational> c(static_cast<std::size_t>(n) + 1);
        for (int i = 0; i <= n; ++i) {
            if (a.coeffs_[i] == 0) {
                continue;
            }
            for (int j = 0; i + j <= n; ++j) {
                if (b.coeffs_[j] != 0) {
                    c[i + j] += a.coeffs_[i] * b.coeffs_[j];
                }
            }
        }
        return QSeries(a.weight_ + b.weight_, a.level_, std::move(c));
    }

    /// Exact quotient c with a = b * c through min(N_a, N_b); c is known to
    /// min(N_a, N_b) - v_inf(b).
    friend QSeries operator/(const QSeries& a, const QSeries& b) {
        require_same_level(a, b);
        const auto vb = b.leading();
        if (!vb) {
            throw DivisionImpossible("division by a series that vanishes through its truncation");
        }
        const int n = std::min(a.truncation(), b.truncation());
        for (int i = 0; i < *vb && i <= n; ++i) {
            if (a.coeffs_[i] != 0) {
                throw DivisionImpossible("v_inf(numerator) < v_inf(denominator): quotient has a pole at the cusp");
            }
        }
        const int out = n - *vb;
        if (out < 0) {
            throw DivisionImpossible("truncation too short for the denominator's leading exponent");
        }
        const Rational& lead = b.coeffs_[*vb];
        std::vector<Rational> c(static_cast<std::size_t>(out) + 1);
        for (int m = 0; m <= out; ++m) {
            Rational acc = a.coeffs_[m + *vb];
            for (int j = 1; j <= m; ++j) {
                if (b.coeffs_[*vb + j] != 0 && c[m - j] != 0) {
                    acc -= b.coeffs_[*vb + j] * c[m - j];
                }
            }
            c[m] = acc / lead;
        }
        return QSeries(a.weight_ - b.weight_, a.level_, std::move(c));
    }

private:
    static void require_same_level(const QSeries& a, const QSeries& b) {
        if (a.level_ != b.level_) {
            throw std::invalid_argument("level mismatch: " + std::to_string(a.level_) + " vs " + std::to_string(b.level_));
        }
    }

    static QSeries combine(const QSeries& a, const QSeries& b, int sign) {
        require_same_level(a, b);
        if (a.weight_ != b.weight_) {
            throw std::invalid_argument("cannot add forms of different weights");
        }
        const int n = std::min(a.truncation(), b.truncation());
        std::vector<Rational> c(static_cast<std::size_t>(n) + 1);
        for (int i = 0; i <= n; ++i) {
            c[i] = sign > 0 ? Rational(a.coeffs_[i] + b.coeffs_[i]) : Rational(a.coeffs_[i] - b.coeffs_[i]);
        }
        return QSeries(a.weight_, a.level_, std::move(c));
    }

    int weight_;
    int level_;
    std::vector<Rational> coeffs_;
};

inline QSeries qseries_mul(const QSeries& a, const QSeries& b) { return a * b; }
inline QSeries qseries_div(const QSeries& a, const QSeries& b) { return a / b; }

inline QSeries power(const QSeries& a, int e) {
    if (e < 0) {
        throw std::invalid_argument("negative series power");
    }
    QSeries acc = QSeries::one(a.level(), a.truncation());
    for (int i = 0; i < e; ++i) {
        acc = acc * a;
    }
    return acc;
}

}  // namespace fricke

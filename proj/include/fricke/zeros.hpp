#pragma once

// Zeros of E*_{k,p} on the arc: sign alternation at the points where
// cos(k theta / 2) = +-1, bisection inside each alternation, winding numbers
// for orders at the elliptic points, and the exact valence audit.

#include <algorithm>
#include <cmath>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "fricke/eisenstein.hpp"
#include "fricke/errors.hpp"
#include "fricke/forms.hpp"
#include "fricke/numeric.hpp"

namespace fricke {

/// theta = 2 m pi / k inside the closed arc, ascending.
template <typename Real = double>
std::vector<Real> sample_points(Weight k, Level p) {
    const long kk = k.value();
    const long e = elliptic_order(p);
    std::vector<Real> out;
    for (long m = 0; 2 * m * e <= kk * (e - 1); ++m) {
        if (4 * m >= kk) {
            out.push_back(Real(2 * m) * pi<Real>() / Real(kk));
        }
    }
    return out;
}

/// (s_k, t_k): the forced orders at i/sqrt(p) and rho_p,
/// 2 s = k (mod 4) with s in {0, 1} and -2 t = k (mod 2e) with t in [0, e-1].
inline std::pair<int, int> expected_elliptic_orders(Weight k, Level p) {
    const int kk = k.value();
    const int e = elliptic_order(p);
    const int s = (kk % 4) / 2;
    for (int t = 0; t < e; ++t) {
        if (((-2 * t - kk) % (2 * e) + 2 * e) % (2 * e) == 0) {
            return {s, t};
        }
    }
    throw std::logic_error("no solution of -2t = k mod 2e");
}

/// The order tables as printed: rows indexed by k mod 12 (p = 1, 3) or k mod 8 (p = 2).
inline std::pair<int, int> remark_table_orders(Weight k, Level p) {
    const int kk = k.value();
    switch (p.value()) {
        case 1: {
            static const std::pair<int, int> rows[6] = {{0, 0}, {1, 2}, {0, 1}, {1, 0}, {0, 2}, {1, 1}};
            return rows[(kk % 12) / 2];
        }
        case 2: {
            static const std::pair<int, int> rows[4] = {{0, 0}, {1, 3}, {0, 2}, {1, 1}};
            return rows[(kk % 8) / 2];
        }
        default: {
            static const std::pair<int, int> rows[6] = {{0, 0}, {1, 5}, {0, 4}, {1, 3}, {0, 2}, {1, 1}};
            return rows[(kk % 12) / 2];
        }
    }
}

// ---------------------------------------------------------------------------
// Winding numbers

/// (1 / 2pi) * total change of arg f around |z - center| = radius, `samples`
/// points. Every sample must clear 10x its error, and no step may turn by more
/// than 1 radian; otherwise unstable-winding.
template <typename Real, typename Fn>
int winding_number(Fn&& fn, const Complex<Real>& center, const Real& radius, int samples = 256) {
    const Real step = 2 * pi<Real>() / Real(samples);
    Complex<Real> first, prev;
    Real total = 0;
    for (int j = 0; j <= samples; ++j) {
        Complex<Real> value;
        if (j == samples) {
            value = first;
        } else {
            const auto v = fn(center + radius * unit_phase<Real>(step * Real(j)));
            if (!(modulus(v.value) > 10 * v.error)) {
                throw NumericalError(NumericalError::Kind::unstable_winding,
                                     "contour sample too close to a zero (|f| = " + std::to_string(to_double(modulus(v.value))) +
                                         ", error " + std::to_string(to_double(v.error)) + ")");
            }
            value = v.value;
        }
        if (j == 0) {
            first = prev = value;
            continue;
        }
        const Real turn = argument(value / prev);
        using std::abs;
        if (abs(turn) > Real(1)) {
            throw NumericalError(NumericalError::Kind::unstable_winding, "argument jumps between contour samples");
        }
        total += turn;
        prev = value;
    }
    using std::round;
    return static_cast<int>(to_double(round(total / (2 * pi<Real>()))));
}

/// Winding number at radius r that agrees with radius r/2; shrinks r up to
/// `max_shrinks` times before giving up.
template <typename Real, typename Fn>
int stable_order(Fn&& fn, const Complex<Real>& center, Real radius, int max_shrinks = 4) {
    std::string last;
    for (int attempt = 0; attempt <= max_shrinks; ++attempt, radius /= 2) {
        try {
            const int outer = winding_number<Real>(fn, center, radius);
            const int inner = winding_number<Real>(fn, center, radius / 2);
            if (outer == inner) {
                if (outer < 0) {
                    throw CheckFailure("negative winding number for a holomorphic function");
                }
                return outer;
            }
            last = "count " + std::to_string(outer) + " at r = " + std::to_string(to_double(radius)) + " vs " +
                   std::to_string(inner) + " at r/2";
        } catch (const NumericalError& e) {
            if (e.kind() != NumericalError::Kind::unstable_winding) {
                throw;
            }
            last = e.what();
        }
    }
    throw NumericalError(NumericalError::Kind::unstable_winding,
                         "winding number not stable under radius halving: " + last);
}

template <typename Real>
Real default_order_radius(Level p) {
    using std::sqrt;
    return Real(0.03) / sqrt(Real(p.value()));
}

/// Order of E*_{k,p} (E_k for p = 1) at z0 by the argument principle.
template <typename Real = double>
int order_at_point(const FrickeEvaluator<Real>& ev, const HalfPlanePoint<Real>& z0,
                   std::optional<Real> radius = std::nullopt) {
    const Real r = radius ? *radius : default_order_radius<Real>(ev.level());
    if (!(r < z0.im())) {
        throw std::invalid_argument("contour leaves the upper half-plane");
    }
    return stable_order<Real>([&](const Complex<Real>& z) { return ev.value(z); }, z0.value(), r);
}

template <typename Real = double>
int order_at_point(Weight k, Level p, const HalfPlanePoint<Real>& z0, std::optional<Real> radius = std::nullopt,
                   const LatticeSumConfig& cfg = {}) {
    return order_at_point(FrickeEvaluator<Real>(k, p, cfg), z0, radius);
}

// ---------------------------------------------------------------------------
// Arc zeros

template <typename Real = double>
struct ZeroRecord {
    Real theta;
    HalfPlanePoint<Real> point;
    Real theta_lo;
    Real theta_hi;
    Real f_lo;
    Real f_hi;
    int multiplicity = 1;
};

struct LocateOptions {
    double tol = 1e-10;
    bool measure_multiplicity = false;
};

namespace detail {

template <typename Real>
int accepted_sign(const ArcValue<Real>& v, const Real& theta) {
    using std::abs;
    if (!(abs(v.value) > 10 * v.error)) {
        throw NumericalError(NumericalError::Kind::indeterminate_sign,
                             "sign of F* at theta = " + std::to_string(to_double(theta)) + " not resolved: |F*| = " +
                                 std::to_string(to_double(abs(v.value))) + ", error " + std::to_string(to_double(v.error)));
    }
    return v.value > 0 ? 1 : -1;
}

}  // namespace detail

/// All interior arc zeros, one per sign alternation between consecutive sample
/// points, bisected to width <= tol. The count must equal m_count(k, p).
template <typename Real = double>
std::vector<ZeroRecord<Real>> locate_zeros(const FrickeEvaluator<Real>& ev, const LocateOptions& opt = {}) {
    if (opt.tol < 1e-12) {
        throw std::invalid_argument("bisection tolerance below 1e-12");
    }
    const Weight k(ev.weight());
    const Level p = ev.level();
    const auto [s, t] = expected_elliptic_orders(k, p);
    const Real theta_max = arc_theta_max<Real>(p);

    std::vector<std::pair<Real, ArcValue<Real>>> samples;
    for (const Real& theta : sample_points<Real>(k, p)) {
        // endpoints where the form must vanish carry no sign
        const bool at_i = theta == pi<Real>() / 2;
        using std::abs;
        const bool at_rho = abs(theta - theta_max) < Real(1e-12);
        if ((at_i && s > 0) || (at_rho && t > 0)) {
            continue;
        }
        samples.emplace_back(theta, ev.restricted(theta));
    }

    std::vector<ZeroRecord<Real>> zeros;
    for (std::size_t j = 0; j + 1 < samples.size(); ++j) {
        auto [lo, f_lo] = samples[j];
        auto [hi, f_hi] = samples[j + 1];
        const int sign_lo = detail::accepted_sign(f_lo, lo);
        const int sign_hi = detail::accepted_sign(f_hi, hi);
        if (sign_lo == sign_hi) {
            continue;
        }
        Real a = lo, b = hi, fa = f_lo.value, fb = f_hi.value;
        while (b - a > Real(opt.tol)) {
            const Real mid = (a + b) / 2;
            const Real fm = ev.restricted(mid).value;
            if ((fm > 0) == (fa > 0)) {
                a = mid;
                fa = fm;
            } else {
                b = mid;
                fb = fm;
            }
        }
        const Real theta = (a + b) / 2;
        zeros.push_back({theta, HalfPlanePoint<Real>(arc_point<Real>(p, theta)), a, b, fa, fb, 1});
    }

    const int expected = m_count(k, p);
    if (static_cast<int>(zeros.size()) != expected) {
        throw CheckFailure("zero count mismatch for k = " + std::to_string(k.value()) + ", p = " +
                           std::to_string(p.value()) + ": " + std::to_string(zeros.size()) +
                           " sign alternations, predicted " + std::to_string(expected));
    }

    if (opt.measure_multiplicity) {
        const Real theta_min = pi<Real>() / 2;
        using std::sqrt;
        const Real scale = Real(1) / sqrt(Real(p.value()));
        for (std::size_t j = 0; j < zeros.size(); ++j) {
            Real gap = std::min(zeros[j].theta - theta_min, theta_max - zeros[j].theta);
            if (j > 0) {
                gap = std::min(gap, zeros[j].theta - zeros[j - 1].theta);
            }
            if (j + 1 < zeros.size()) {
                gap = std::min(gap, zeros[j + 1].theta - zeros[j].theta);
            }
            const Real radius = Real(0.25) * gap * scale;
            zeros[j].multiplicity =
                stable_order<Real>([&](const Complex<Real>& z) { return ev.value(z); }, zeros[j].point.value(), radius);
        }
    }
    return zeros;
}

template <typename Real = double>
std::vector<ZeroRecord<Real>> locate_zeros(Weight k, Level p, double tol = 1e-10, const LatticeSumConfig& cfg = {}) {
    return locate_zeros(FrickeEvaluator<Real>(k, p, cfg), LocateOptions{tol, false});
}

// ---------------------------------------------------------------------------
// Valence audit

struct NamedCheck {
    std::string name;
    bool pass;
    std::string detail;
};

template <typename Real = double>
struct ValenceReport {
    int k;
    int p;
    int v_infinity;
    int v_i;
    int v_rho;
    std::vector<ZeroRecord<Real>> interior_zeros;
    Rational lhs;
    Rational rhs;
    std::vector<NamedCheck> checks;

    Rational residual() const { return lhs - rhs; }
    bool exact() const { return lhs == rhs; }
    bool pass() const {
        return exact() && std::all_of(checks.begin(), checks.end(), [](const NamedCheck& c) { return c.pass; });
    }
};

/// v_inf + v_i/2 + v_rho/e + sum of interior multiplicities against k/12, k/8, k/6.
template <typename Real = double>
ValenceReport<Real> valence_audit(Weight k, Level p, double tol = 1e-10, const LatticeSumConfig& cfg = {},
                                  int truncation = 50) {
    const FrickeEvaluator<Real> ev(k, p, cfg, truncation);
    const int e = elliptic_order(p);
    ValenceReport<Real> r;
    r.k = k.value();
    r.p = p.value();
    const auto lead = fricke_qseries(k, p, truncation).leading();
    if (!lead) {
        throw CheckFailure("q-expansion vanishes through its truncation");
    }
    r.v_infinity = *lead;
    r.v_i = order_at_point(ev, HalfPlanePoint<Real>(elliptic_point_i<Real>(p)));
    r.v_rho = order_at_point(ev, HalfPlanePoint<Real>(elliptic_point_rho<Real>(p)));
    r.interior_zeros = locate_zeros(ev, LocateOptions{tol, true});

    int interior = 0;
    for (const auto& z : r.interior_zeros) {
        interior += z.multiplicity;
    }
    r.lhs = Rational(r.v_infinity) + Rational(r.v_i, 2) + Rational(r.v_rho, e) + Rational(interior);
    r.rhs = Rational(k.value(), valence_denominator(p));

    const auto [s, t] = expected_elliptic_orders(k, p);
    const int m = m_count(k, p);
    r.checks.push_back({"zero-count", static_cast<int>(r.interior_zeros.size()) == m,
                        std::to_string(r.interior_zeros.size()) + " located, m = " + std::to_string(m)});
    r.checks.push_back({"simple-zeros",
                        std::all_of(r.interior_zeros.begin(), r.interior_zeros.end(),
                                    [](const ZeroRecord<Real>& z) { return z.multiplicity == 1; }),
                        "winding number 1 around every interior zero"});
    r.checks.push_back({"elliptic-orders", r.v_i == s && r.v_rho == t,
                        "measured (" + std::to_string(r.v_i) + ", " + std::to_string(r.v_rho) + "), congruences (" +
                            std::to_string(s) + ", " + std::to_string(t) + ")"});
    // what is left after the interior zeros and the order at i must be less than one full zero
    const Rational left = r.rhs - Rational(m) - Rational(s, 2);
    r.checks.push_back({"conclusion", left < 1 && left >= 0,
                        "k/" + std::to_string(valence_denominator(p)) + " - m - s/2 = " + to_string(left)});
    if (k.value() % 4 == 2) {
        const auto v = ev.value(elliptic_point_i<Real>(p));
        const double size = to_double(modulus(v.value));
        r.checks.push_back({"forced-vanishing-at-i", size <= std::max(1e-8, 10 * to_double(v.error)),
                            "|E*(i/sqrt p)| = " + std::to_string(size)});
    }
    return r;
}

}  // namespace fricke

#pragma once

// Eisenstein series for the Fricke groups Gamma_0^*(p), p = 2, 3:
//   E*_{k,p}(z) = (p^{k/2} E_k(pz) + E_k(z)) / (p^{k/2} + 1),
// their real restrictions to the lower arc |z| = 1/sqrt(p), the predicted
// arc zero counts, and fundamental-domain reduction. Level p = 1 is carried
// along as the SL2(Z) tier (E_k itself, arc |z| = 1).

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "fricke/eisenstein.hpp"
#include "fricke/errors.hpp"
#include "fricke/numeric.hpp"
#include "fricke/qseries.hpp"

namespace fricke {

class Level {
public:
    explicit Level(int p) : p_(p) {
        if (p < 1 || p > 3) {
            throw std::invalid_argument("level must be 1, 2 or 3, got " + std::to_string(p));
        }
    }
    int value() const noexcept { return p_; }
    friend bool operator==(Level, Level) = default;

private:
    int p_;
};

/// Order e of the stabilizer of rho_p: 3 (p = 1), 4 (p = 2), 6 (p = 3).
inline int elliptic_order(Level p) {
    switch (p.value()) {
        case 1: return 3;
        case 2: return 4;
        default: return 6;
    }
}

/// Denominator of the valence right-hand side: k/12, k/8, k/6.
inline int valence_denominator(Level p) {
    switch (p.value()) {
        case 1: return 12;
        case 2: return 8;
        default: return 6;
    }
}

/// The lower boundary arc of the fundamental domain, theta in [pi/2, pi - pi/e].
struct ArcSpec {
    Level level;
    double radius;
    double theta_min;
    double theta_max;
    bool closed;

    bool contains(double theta, double tol = 1e-12) const {
        if (closed) {
            return theta >= theta_min - tol && theta <= theta_max + tol;
        }
        return theta > theta_min + tol && theta < theta_max - tol;
    }
};

inline ArcSpec arc_spec(Level p, bool closed = true) {
    const double pi_d = std::acos(-1.0);
    const int e = elliptic_order(p);
    return {p, 1.0 / std::sqrt(double(p.value())), pi_d / 2, pi_d - pi_d / e, closed};
}

template <typename Real>
Real arc_theta_max(Level p) {
    return pi<Real>() - pi<Real>() / elliptic_order(p);
}

/// e^{i theta} / sqrt(p)
template <typename Real>
Complex<Real> arc_point(Level p, const Real& theta) {
    using std::sqrt;
    return unit_phase<Real>(theta) / sqrt(Real(p.value()));
}

/// i / sqrt(p)
template <typename Real>
Complex<Real> elliptic_point_i(Level p) {
    return arc_point<Real>(p, pi<Real>() / 2);
}

/// rho_p = e^{i (pi - pi/e)} / sqrt(p)
template <typename Real>
Complex<Real> elliptic_point_rho(Level p) {
    return arc_point<Real>(p, arc_theta_max<Real>(p));
}

// ---------------------------------------------------------------------------
// Exact q-expansion

/// a_n = [a_n(E_k) + p^{k/2} a_{n/p}(E_k)] / (p^{k/2} + 1). Level 1 returns E_k.
inline QSeries fricke_qseries(Weight k, Level p, int truncation) {
    const QSeries base = eisenstein_qseries(k, truncation);
    if (p.value() == 1) {
        return base;
    }
    const int pp = p.value();
    const Rational lift(boost::multiprecision::pow(Integer(pp), static_cast<unsigned>(k.value() / 2)));
    const Rational norm = lift + 1;
    std::vector<Rational> c(static_cast<std::size_t>(truncation) + 1);
    for (int n = 0; n <= truncation; ++n) {
        Rational a = base[n];
        if (n % pp == 0) {
            a += lift * base[n / pp];
        }
        c[n] = a / norm;
    }
    return QSeries(k.value(), pp, std::move(c));
}

/// (p^{k/2} e_pz + e_z) / (p^{k/2} + 1)
template <typename Real>
Complex<Real> combine_fricke(int k, Level p, const Complex<Real>& e_pz, const Complex<Real>& e_z) {
    using std::pow;
    const Real lift = pow(Real(p.value()), Real(k) / 2);
    return (lift * e_pz + e_z) / (lift + Real(1));
}

// ---------------------------------------------------------------------------
// Numerical evaluation

enum class EvalPath { pair_sum, qseries, lattice };

inline const char* to_string(EvalPath path) {
    switch (path) {
        case EvalPath::pair_sum: return "pair-sum";
        case EvalPath::qseries: return "q-series";
        case EvalPath::lattice: return "lattice";
    }
    return "unknown";
}

template <typename Real>
struct FormValue {
    Complex<Real> value;
    Real error;
    EvalPath path;
};

/// F*_{k,p}(theta) (F_k for p = 1): a real number with its error estimate.
template <typename Real>
struct ArcValue {
    Real value;
    Real error;
    EvalPath path;
    Real imag_residual;  // |Im| of the complex route before taking the real part
};

/// Admissible pair (c, d) on the arc sum: c odd for p = 2, 3 !| c for p = 3.
inline bool admissible_pair(Level p, long c, long d) {
    if (std::gcd(c, d) != 1) {
        return false;
    }
    switch (p.value()) {
        case 2: return c % 2 != 0;
        case 3: return c % 3 != 0;
        default: return true;
    }
}

struct CoprimePair {
    long c;
    long d;
    long norm() const { return c * c + d * d; }
};

/// Admissible pairs with c^2 + d^2 <= max_norm, ordered by norm then (c, d).
/// With `representatives`, only one of (c, d), (-c, -d) is kept (c > 0, or
/// c = 0 and d = 1).
inline std::vector<CoprimePair> admissible_pairs(Level p, long max_norm, bool representatives) {
    std::vector<CoprimePair> out;
    const long bound = static_cast<long>(std::floor(std::sqrt(double(max_norm))));
    for (long c = -bound; c <= bound; ++c) {
        const long dmax = static_cast<long>(std::floor(std::sqrt(double(max_norm - c * c))));
        for (long d = -dmax; d <= dmax; ++d) {
            if (!admissible_pair(p, c, d)) {
                continue;
            }
            if (representatives && !(c > 0 || (c == 0 && d == 1))) {
                continue;
            }
            out.push_back({c, d});
        }
    }
    std::sort(out.begin(), out.end(), [](const CoprimePair& a, const CoprimePair& b) {
        if (a.norm() != b.norm()) {
            return a.norm() < b.norm();
        }
        return a.c != b.c ? a.c < b.c : a.d < b.d;
    });
    return out;
}

/// Rigorous bound on the arc-sum terms with c^2 + d^2 > M:
///   sum_{N > M} C sqrt(N) (N / alpha)^{-k/2} <= C alpha^{k/2} M^{(3-k)/2} / ((k-3)/2),
/// with (C, alpha) = (6, 2), (3, 3), (11/3, 6) for p = 1, 2, 3. Valid on the arc
/// interval theta in [pi/2, pi - pi/e] and for M at or above `arc_tail_floor`.
inline double arc_tail_bound(int k, Level p, double m) {
    double count = 6, alpha = 2;
    if (p.value() == 2) {
        count = 3;
        alpha = 3;
    } else if (p.value() == 3) {
        count = 11.0 / 3.0;
        alpha = 6;
    }
    const double e = (k - 3) / 2.0;
    return std::exp(std::log(count) + (k / 2.0) * std::log(alpha) - e * std::log(m)) / e;
}

/// Smallest M for which arc_tail_bound is valid (norm floor and count bound hold beyond it).
inline long arc_tail_floor(Level p) {
    switch (p.value()) {
        case 2: return 9;
        case 3: return 24;
        default: return 1;
    }
}

/// Evaluates E*_{k,p} and F*_{k,p} for one (k, p). Holds the precomputed pair
/// list and q-series coefficients; immutable after construction.
template <typename Real = double>
class FrickeEvaluator {
public:
    /// Weights above this never use the q-expansion: its terms overshoot the
    /// value by many orders of magnitude near the arc.
    static constexpr int series_weight_limit = 64;

    FrickeEvaluator(Weight k, Level p, LatticeSumConfig cfg = {}, int truncation = 50)
        : k_(k.value()),
          p_(p),
          cfg_(cfg),
          target_(std::max(100 * to_double(machine_epsilon<Real>()), std::pow(10.0, -cfg.precision))) {
        cfg_.validate();
        using std::sqrt;
        sqrt_p_ = sqrt(Real(p.value()));

        const double e = (k_ - 3) / 2.0;
        double wanted = std::exp((std::log(arc_tail_bound(k_, p, 1.0)) - std::log(target_)) / e);
        wanted = std::max(wanted, double(arc_tail_floor(p)));
        pair_norm_ = static_cast<long>(std::min(std::ceil(wanted), double(std::max(cfg_.max_norm, arc_tail_floor(p)))));
        pair_tail_ = arc_tail_bound(k_, p, double(pair_norm_));
        pairs_ = admissible_pairs(p, pair_norm_, true);

        if (k_ <= series_weight_limit) {
            series_.emplace(fricke_qseries(k, p, truncation));
        }
        arc_path_ = EvalPath::pair_sum;
        if (series_ && pair_tail_ > target_) {
            const auto worst = (*series_)(arc_point<Real>(p_, arc_theta_max<Real>(p_)));
            if (to_double(worst.error()) < pair_tail_) {
                arc_path_ = EvalPath::qseries;
            }
        }
    }

    int weight() const noexcept { return k_; }
    Level level() const noexcept { return p_; }
    long pair_norm() const noexcept { return pair_norm_; }
    double pair_tail() const noexcept { return pair_tail_; }
    EvalPath arc_path() const noexcept { return arc_path_; }
    bool has_series() const noexcept { return series_.has_value(); }

    /// F*(theta) along the path fixed at construction.
    ArcValue<Real> restricted(const Real& theta) const {
        return arc_path_ == EvalPath::qseries ? restricted_via_series(theta) : restricted_pair_sum(theta);
    }

    /// sum over admissible pairs of Re (c e^{i theta/2} + sqrt(p) d e^{-i theta/2})^{-k},
    /// halved at level 1 where the pair set is closed under (c, d) -> (d, c).
    ArcValue<Real> restricted_pair_sum(const Real& theta) const {
        const Complex<Real> u = unit_phase<Real>(theta / 2);
        const Complex<Real> ubar = std::conj(u);
        Real total = 0;
        double magnitude = 0;
        for (const auto& pr : pairs_) {
            const Complex<Real> w = Real(pr.c) * u + sqrt_p_ * Real(pr.d) * ubar;
            const Complex<Real> t = inverse_power(w, k_);
            total += t.real();
            magnitude += to_double(modulus(t));
        }
        // each representative stands for (c, d) and (-c, -d)
        const Real scale = p_.value() == 1 ? Real(1) : Real(2);
        const double rounding =
            8.0 * (std::log2(double(k_)) + 1) * to_double(machine_epsilon<Real>()) * magnitude * to_double(scale);
        return {scale * total, Real(pair_tail_ + rounding), EvalPath::pair_sum, Real(0)};
    }

    /// Re e^{ik theta/2} E*(e^{i theta}/sqrt(p)) from the q-expansion.
    ArcValue<Real> restricted_via_series(const Real& theta) const {
        require_series();
        const auto v = (*series_)(arc_point<Real>(p_, theta));
        const Complex<Real> f = unit_phase<Real>(Real(k_) * theta / 2) * v.value;
        using std::abs;
        return {f.real(), v.error(), EvalPath::qseries, abs(f.imag())};
    }

    /// Re e^{ik theta/2} E*(e^{i theta}/sqrt(p)) from the adaptive lattice sums.
    ArcValue<Real> restricted_via_lattice(const Real& theta) const {
        const auto v = value_via_lattice(arc_point<Real>(p_, theta));
        const Complex<Real> f = unit_phase<Real>(Real(k_) * theta / 2) * v.value;
        using std::abs;
        return {f.real(), v.error, EvalPath::lattice, abs(f.imag())};
    }

    /// E*_{k,p}(z): the q-expansion unless the lattice sums promise a tenfold
    /// smaller error (judged by their predicted truncation, then by the result).
    FormValue<Real> value(const Complex<Real>& z) const {
        std::optional<FormValue<Real>> via_series;
        if (series_) {
            via_series = value_via_series(z);
            const double err = to_double(via_series->error);
            const double y = to_double(z.imag());
            double predicted = lattice_tail_estimate(k_, y, target_, cfg_.max_norm);
            if (p_.value() != 1) {
                predicted = std::max(predicted, lattice_tail_estimate(k_, p_.value() * y, target_, cfg_.max_norm));
            }
            if (err <= target_ || err <= 10 * predicted) {
                return *via_series;
            }
        }
        auto via_lattice = value_via_lattice(z);
        if (via_series && via_series->error < via_lattice.error) {
            return *via_series;
        }
        return via_lattice;
    }

    FormValue<Real> value(const Complex<Real>& z, EvalPath path) const {
        return path == EvalPath::qseries ? value_via_series(z) : value_via_lattice(z);
    }

    FormValue<Real> value_via_series(const Complex<Real>& z) const {
        require_series();
        const auto v = (*series_)(z);
        return {v.value, v.error(), EvalPath::qseries};
    }

    FormValue<Real> value_via_lattice(const Complex<Real>& z) const {
        const auto ez = lattice_eisenstein_adaptive<Real>(k_, z, target_, cfg_.max_norm);
        if (p_.value() == 1) {
            return {ez.value, ez.error(), EvalPath::lattice};
        }
        const auto epz = lattice_eisenstein_adaptive<Real>(k_, Real(p_.value()) * z, target_, cfg_.max_norm);
        using std::pow;
        const Real lift = pow(Real(p_.value()), Real(k_) / 2);
        const Real err = (lift * epz.error() + ez.error()) / (lift + 1);
        return {combine_fricke<Real>(k_, p_, epz.value, ez.value), err, EvalPath::lattice};
    }

private:
    void require_series() const {
        if (!series_) {
            throw NumericalError(NumericalError::Kind::tail_bound_exceeded,
                                 "q-expansion path disabled for weight " + std::to_string(k_));
        }
    }

    int k_;
    Level p_;
    LatticeSumConfig cfg_;
    double target_;
    Real sqrt_p_;
    long pair_norm_ = 0;
    double pair_tail_ = 0;
    std::vector<CoprimePair> pairs_;
    std::optional<PreparedSeries<Real>> series_;
    EvalPath arc_path_;
};

/// E*_{k,p}(z) with the path that produced it.
template <typename Real>
FormValue<Real> fricke_eisenstein(Weight k, Level p, const HalfPlanePoint<Real>& z, const LatticeSumConfig& cfg = {}) {
    return FrickeEvaluator<Real>(k, p, cfg).value(z.value());
}

/// F*_{k,p}(theta) for theta on the closed arc [pi/2, pi - pi/e].
template <typename Real>
ArcValue<Real> f_restricted(Weight k, Level p, const Real& theta, const LatticeSumConfig& cfg = {}) {
    const ArcSpec arc = arc_spec(p);
    if (!arc.contains(to_double(theta))) {
        throw std::invalid_argument("theta outside the arc [pi/2, pi - pi/e]");
    }
    return FrickeEvaluator<Real>(k, p, cfg).restricted(theta);
}

// ---------------------------------------------------------------------------
// Counts

/// floor(k/12 - t/4), floor(k/8 - t/4), floor(k/6 - t/4) for p = 1, 2, 3, with
/// t in {0, 2}, t = k mod 4.
inline int m_count(Weight k, Level p) {
    const int kk = k.value();
    const int t = kk % 4;
    auto floor_div = [](int a, int b) { return a >= 0 ? a / b : -((-a + b - 1) / b); };
    switch (p.value()) {
        case 1: return floor_div(kk - 3 * t, 12);
        case 2: return floor_div(kk - 2 * t, 8);
        default: return floor_div(2 * kk - 3 * t, 12);
    }
}

// ---------------------------------------------------------------------------
// Fundamental domain

/// {|z| >= r, -1/2 <= Re z <= 0} u {|z| > r, 0 <= Re z < 1/2}, r = 1/sqrt(p).
/// Boundary comparisons snap within `tol`.
template <typename Real>
bool in_fundamental_domain(const HalfPlanePoint<Real>& z, Level p, double tol = 1e-12) {
    const double x = to_double(z.re());
    const double y = to_double(z.im());
    const double r2 = x * x + y * y;
    const double edge = 1.0 / p.value();
    const bool left = r2 >= edge - tol && x >= -0.5 - tol && x <= tol;
    const bool right = r2 > edge + tol && x >= -tol && x < 0.5 - tol;
    return left || right;
}

enum class Generator { T, T_inv, W };

inline const char* to_string(Generator g) {
    switch (g) {
        case Generator::T: return "T";
        case Generator::T_inv: return "T^-1";
        case Generator::W: return "W";
    }
    return "?";
}

/// Generators applied by the reduction, in order. W is W_p (S at level 1).
struct GroupWord {
    std::vector<Generator> letters;
    bool empty() const { return letters.empty(); }
    friend bool operator==(const GroupWord&, const GroupWord&) = default;
};

template <typename Real>
Complex<Real> apply(Generator g, Level p, const Complex<Real>& z) {
    switch (g) {
        case Generator::T: return z + Real(1);
        case Generator::T_inv: return z - Real(1);
        case Generator::W: return Real(-1) / (Real(p.value()) * z);
    }
    return z;
}

inline Generator inverse(Generator g) {
    switch (g) {
        case Generator::T: return Generator::T_inv;
        case Generator::T_inv: return Generator::T;
        case Generator::W: return Generator::W;
    }
    return g;
}

/// Applies the letters in order (maps an input point to its reduction).
template <typename Real>
Complex<Real> apply_word(const GroupWord& w, Level p, Complex<Real> z) {
    for (Generator g : w.letters) {
        z = apply(g, p, z);
    }
    return z;
}

/// Undoes the word (maps a reduced point back to the original input).
template <typename Real>
Complex<Real> apply_inverse(const GroupWord& w, Level p, Complex<Real> z) {
    for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) {
        z = apply(inverse(*it), p, z);
    }
    return z;
}

/// Translate into [-1/2, 1/2), invert by W_p while |z|^2 < 1/p (or on the
/// circle with Re z > 0). Each inversion strictly raises Im z.
template <typename Real>
std::pair<HalfPlanePoint<Real>, GroupWord> reduce_to_fundamental_domain(const HalfPlanePoint<Real>& z, Level p,
                                                                         int step_budget = 10000,
                                                                         double tol = 1e-12) {
    using std::floor;
    Complex<Real> w = z.value();
    GroupWord word;
    const Real edge = Real(1) / Real(p.value());
    for (int step = 0; step < step_budget; ++step) {
        const Real shift = floor(w.real() + Real(0.5));
        if (shift != 0) {
            const long n = static_cast<long>(to_double(shift));
            const Generator g = n > 0 ? Generator::T_inv : Generator::T;
            for (long i = 0; i < std::abs(n); ++i) {
                word.letters.push_back(g);
            }
            w -= shift;
        }
        const Real r2 = w.real() * w.real() + w.imag() * w.imag();
        const bool inside = r2 < edge - Real(tol);
        const bool tie = !inside && r2 <= edge + Real(tol) && w.real() > Real(tol);
        if (!inside && !tie) {
            return {HalfPlanePoint<Real>(w), std::move(word)};
        }
        w = apply(Generator::W, p, w);
        word.letters.push_back(Generator::W);
    }
    throw NumericalError(NumericalError::Kind::no_convergence,
                         "fundamental-domain reduction exceeded " + std::to_string(step_budget) + " steps");
}

}  // namespace fricke

#pragma once

// Machine-checkable versions of the tail bounds behind the arc-zero argument:
// R_1 (level 1), R_2^* and R_3^* (levels 2, 3) in raw and restricted form, the
// per-term maxima of v_k(c, d, theta), lattice-count and norm-floor bounds,
// the auxiliary positivity functions, and the endpoint-sign lemmas.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

#include "fricke/eisenstein.hpp"
#include "fricke/errors.hpp"
#include "fricke/forms.hpp"
#include "fricke/numeric.hpp"

namespace fricke {

enum class Relation {
    less,        // pass iff lhs_max < rhs
    less_equal,  // pass iff lhs_max <= rhs up to relative 1e-12 (ceilings attained at an endpoint)
    equal,       // pass iff lhs_max == rhs (integer-valued measurements)
};

inline const char* to_string(Relation r) {
    switch (r) {
        case Relation::less: return "<";
        case Relation::less_equal: return "<=";
        case Relation::equal: return "==";
    }
    return "?";
}

struct BoundCertificate {
    std::string name;
    int k = 0;
    double lhs_max = 0;
    double rhs = 0;
    std::string grid;
    Relation relation = Relation::less;
    bool informational = false;  // reported, never fails a run
    bool pass = false;
    double margin = 0;  // rhs - lhs_max
    std::string detail;
};

inline constexpr double kRelativeSlack = 1e-12;

inline BoundCertificate certify(std::string name, int k, double lhs_max, double rhs, std::string grid,
                                Relation relation = Relation::less, std::string detail = {}) {
    BoundCertificate c;
    c.name = std::move(name);
    c.k = k;
    c.lhs_max = lhs_max;
    c.rhs = rhs;
    c.grid = std::move(grid);
    c.relation = relation;
    c.margin = rhs - lhs_max;
    switch (relation) {
        case Relation::less: c.pass = c.margin > 0; break;
        case Relation::less_equal: c.pass = lhs_max <= rhs + kRelativeSlack * std::abs(rhs); break;
        case Relation::equal: c.pass = lhs_max == rhs; break;
    }
    c.detail = std::move(detail);
    return c;
}

inline BoundCertificate informational(BoundCertificate c) {
    c.informational = true;
    return c;
}

inline void sort_certificates(std::vector<BoundCertificate>& certs) {
    std::stable_sort(certs.begin(), certs.end(), [](const BoundCertificate& a, const BoundCertificate& b) {
        return std::tie(a.name, a.k) < std::tie(b.name, b.k);
    });
}

inline bool all_pass(const std::vector<BoundCertificate>& certs) {
    return std::all_of(certs.begin(), certs.end(), [](const BoundCertificate& c) { return c.pass || c.informational; });
}

namespace detail {

inline void require_weight(int k, int minimum, const char* what) {
    if (k < minimum || k % 2 != 0) {
        throw std::invalid_argument(std::string(what) + " needs even k >= " + std::to_string(minimum) + ", got " +
                                    std::to_string(k));
    }
}

inline double half_power(double base, int k) { return std::pow(base, k / 2.0); }

inline std::string fmt(double x) {
    std::ostringstream os;
    os.precision(17);
    os << x;
    return os.str();
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Closed-form bounds

/// r1_bound(k) - 1, which stays resolvable in double long after r1 rounds to 1.
inline double r1_excess(int k) {
    detail::require_weight(k, 4, "r1_excess");
    return detail::half_power(0.5, k) + 4 * detail::half_power(0.4, k) +
           20 * std::sqrt(2.0) / (k - 3) * std::pow(4.5, (3.0 - k) / 2);
}

/// Level 1: 1 + (1/2)^{k/2} + 4 (2/5)^{k/2} + (20 sqrt 2 / (k-3)) (9/2)^{(3-k)/2}
inline double r1_bound(int k) { return 1 + r1_excess(k); }

/// Level 2, all theta in [pi/2, 3pi/4]; always exceeds 2.
inline double r2_star_bound_raw(int k) {
    detail::require_weight(k, 4, "r2_star_bound_raw");
    const double third = detail::half_power(1.0 / 3, k);
    return 2 + 2 * third + 2 * detail::half_power(0.2, k) + 2 * third * third + 162.0 / (k - 3) * third;
}

/// Level 2 on [pi/2, 3pi/4 - pi/(2k)]: 2 - (265/9)/k^2 + 35 (1/3)^{k/2}.
inline double r2_star_bound_restricted(int k) {
    detail::require_weight(k, 8, "r2_star_bound_restricted");
    return 2 - (265.0 / 9) / (double(k) * k) + 35 * detail::half_power(1.0 / 3, k);
}

/// Level 3, all theta in [pi/2, 5pi/6]: twice each tabulated term ceiling plus the N >= 25 tail.
inline double r3_star_bound_raw(int k) {
    detail::require_weight(k, 4, "r3_star_bound_raw");
    auto h = [k](double b) { return detail::half_power(1 / b, k); };
    const double half_k = std::pow(0.5, k);
    return 4 + 2 * half_k + 6 * h(7) + 4 * h(13) + 4 * h(19) + 2 * h(28) + 2 * h(31) + 2 * h(37) +
           2 * h(7) * h(7) + 352 * std::sqrt(6.0) / (k - 3) * half_k;
}

/// Level 3 on [pi/2, 5pi/6 - pi/(3k)]: 2 - (107 pi^2/24)/k^2 + 176 (1/2)^k.
inline double r3_star_bound_restricted(int k) {
    detail::require_weight(k, 8, "r3_star_bound_restricted");
    const double pi_d = std::acos(-1.0);
    return 2 - (107 * pi_d * pi_d / 24) / (double(k) * k) + 176 * std::pow(0.5, k);
}

/// The positivity functions
///   f(x)  = 3^{x/2}/35 - 9x^2/265,
///   f1(k) = 4 + 2 sqrt3 cos(5pi/6 - pi/(3k)) - (3/2)^{2/k} (1 + c/k^3),
///   f2(k) = 7 + 4 sqrt3 cos(5pi/6 - pi/(3k)) - 3^{2/k} (1 + c/k^3),
/// c = 256*7*13 pi^2 / (27*127), in 50-digit arithmetic.
inline Float50 aux_positivity_exact(std::string_view name, const Float50& k) {
    using boost::multiprecision::cos;
    using boost::multiprecision::pow;
    using boost::multiprecision::sqrt;
    if (k < 8) {
        throw std::invalid_argument("aux_positivity needs k >= 8");
    }
    const Float50 pi_50 = pi<Float50>();
    if (name == "f") {
        return pow(Float50(3), k / 2) / 35 - Float50(9) * k * k / 265;
    }
    const Float50 c = Float50(256 * 7 * 13) * pi_50 * pi_50 / Float50(27 * 127);
    const Float50 correction = 1 + c / (k * k * k);
    const Float50 angle = 5 * pi_50 / 6 - pi_50 / (3 * k);
    const Float50 root3 = sqrt(Float50(3));
    if (name == "f1") {
        return 4 + 2 * root3 * cos(angle) - pow(Float50(3) / 2, 2 / k) * correction;
    }
    if (name == "f2") {
        return 7 + 4 * root3 * cos(angle) - pow(Float50(3), 2 / k) * correction;
    }
    throw std::invalid_argument("unknown auxiliary function '" + std::string(name) + "' (expected f, f1, f2)");
}

inline double aux_positivity(std::string_view name, double k) {
    return to_double(aux_positivity_exact(name, Float50(k)));
}

// ---------------------------------------------------------------------------
// Per-term maxima

/// |c e^{i theta/2} + sqrt(p) d e^{-i theta/2}|^2 = c^2 + p d^2 + 2 sqrt(p) c d cos(theta)
inline double pair_norm_sq(Level p, long c, long d, double theta) {
    const double pp = p.value();
    return double(c) * c + pp * double(d) * d + 2 * std::sqrt(pp) * double(c) * d * std::cos(theta);
}

/// v_k(c, d, theta) = |c e^{i theta/2} + sqrt(p) d e^{-i theta/2}|^{-k}
inline double v_k(int k, Level p, long c, long d, double theta) {
    return std::pow(pair_norm_sq(p, c, d, theta), -k / 2.0);
}

/// A tabulated (c, d) with ceiling v_k <= floor^{-k/2}.
struct TermCeiling {
    long c;
    long d;
    long floor;
};

inline std::vector<TermCeiling> term_ceilings(Level p) {
    switch (p.value()) {
        case 2: return {{1, 1, 1}, {1, -1, 3}, {1, 2, 5}, {1, -2, 9}};
        case 3:
            return {{1, 1, 1},  {1, -1, 4},  {1, 2, 7},  {1, -2, 13}, {2, 1, 1},  {2, -1, 7},  {1, 3, 19},
                    {1, -3, 28}, {2, 3, 13}, {2, -3, 31}, {1, 4, 37}, {1, -4, 49}, {4, 1, 7}, {4, -1, 19}};
        default: throw std::invalid_argument("term ceilings are tabulated for levels 2 and 3 only");
    }
}

inline constexpr int kTermGridInterior = 10000;
inline constexpr long kExhaustiveNorm = 10000;

namespace detail {

inline std::string arc_label(Level p) { return p.value() == 2 ? "[pi/2, 3pi/4]" : "[pi/2, 5pi/6]"; }

inline std::string term_grid(Level p) {
    return "uniform theta_j = pi/2 + j h, j = 0.." + std::to_string(kTermGridInterior + 1) + ", on " + arc_label(p) +
           " (both endpoints included)";
}

inline double grid_theta(Level p, int j) {
    const ArcSpec arc = arc_spec(p);
    return arc.theta_min + (arc.theta_max - arc.theta_min) * j / double(kTermGridInterior + 1);
}

/// Minimum of |w|^2 over the term grid, with the argmin index (first minimum; ties go to the
/// later index, i.e. toward theta_max).
inline std::pair<double, int> grid_min_norm(Level p, long c, long d) {
    double best = std::numeric_limits<double>::infinity();
    int arg = 0;
    for (int j = 0; j <= kTermGridInterior + 1; ++j) {
        const double n = pair_norm_sq(p, c, d, grid_theta(p, j));
        if (n <= best) {
            best = n;
            arg = j;
        }
    }
    return {best, arg};
}

inline double ceiling_value(long floor, int k) { return std::exp(-k / 2.0 * std::log(double(floor))); }

}  // namespace detail

/// Per-term ceilings on a 10^4-point grid, the (1,1) maximizer, norm floors and
/// lattice-count bounds (exhaustive to N = 10^4).
inline std::vector<BoundCertificate> verify_term_bounds(int k, Level p) {
    detail::require_weight(k, 4, "verify_term_bounds");
    if (p.value() == 1) {
        throw std::invalid_argument("verify_term_bounds is defined for levels 2 and 3");
    }
    std::vector<BoundCertificate> out;
    const std::string grid = detail::term_grid(p);
    for (const auto& t : term_ceilings(p)) {
        const auto [min_norm, arg] = detail::grid_min_norm(p, t.c, t.d);
        const long n = t.c * t.c + t.d * t.d;
        const std::string name =
            "term:N=" + std::to_string(n) + ":(" + std::to_string(t.c) + "," + std::to_string(t.d) + ")";
        // decided on the k-free quantity |w|^2 >= floor, reported as v_k
        BoundCertificate cert = certify(name, k, std::pow(min_norm, -k / 2.0), detail::ceiling_value(t.floor, k), grid,
                                        Relation::less_equal,
                                        "min |w|^2 = " + detail::fmt(min_norm) + " at theta = " +
                                            detail::fmt(detail::grid_theta(p, arg)) + ", floor " +
                                            std::to_string(t.floor));
        cert.pass = min_norm >= double(t.floor) * (1 - kRelativeSlack);
        out.push_back(std::move(cert));
    }

    // v_k(1,1,theta) = 1 only at theta_max: interior grid maximum strictly below 1
    {
        double interior_min = std::numeric_limits<double>::infinity();
        for (int j = 0; j <= kTermGridInterior; ++j) {
            interior_min = std::min(interior_min, pair_norm_sq(p, 1, 1, detail::grid_theta(p, j)));
        }
        const double at_end = pair_norm_sq(p, 1, 1, arc_spec(p).theta_max);
        BoundCertificate cert = certify("term-argmax:(1,1)", k, std::pow(interior_min, -k / 2.0), 1.0,
                                        grid + ", endpoint theta_max excluded", Relation::less,
                                        "|w|^2 at theta_max = " + detail::fmt(at_end));
        cert.pass = interior_min > 1 && std::abs(at_end - 1) < 1e-12;
        out.push_back(std::move(cert));
    }

    // norm floor |c e^{i theta/2} +- sqrt(p) d e^{-i theta/2}|^2 >= N/3 (p=2) or N/6 (p=3).
    // |w|^2 is affine in cos(theta), so its minimum over the arc sits at an endpoint.
    {
        const long n0 = p.value() == 2 ? 10 : 25;
        const double divisor = p.value() == 2 ? 3.0 : 6.0;
        const ArcSpec arc = arc_spec(p);
        double worst = std::numeric_limits<double>::infinity();
        std::string witness;
        for (const auto& pr : admissible_pairs(p, kExhaustiveNorm, false)) {
            const long n = pr.norm();
            if (n < n0) {
                continue;
            }
            for (double theta : {arc.theta_min, arc.theta_max}) {
                const double ratio = pair_norm_sq(p, pr.c, pr.d, theta) / (n / divisor);
                if (ratio < worst) {
                    worst = ratio;
                    witness = "(" + std::to_string(pr.c) + "," + std::to_string(pr.d) + ") at theta = " + detail::fmt(theta);
                }
            }
        }
        out.push_back(certify("norm-floor", k, 1.0, worst,
                              "all admissible coprime pairs with " + std::to_string(n0) + " <= N <= " +
                                  std::to_string(kExhaustiveNorm) + ", both arc endpoints",
                              Relation::less_equal, "min |w|^2 / (N/" + detail::fmt(divisor) + ") at " + witness));
    }

    // #{admissible coprime (c, d) : c^2 + d^2 = N} <= 3 sqrt N (p=2, N>=5), (11/3) sqrt N (p=3, N>=16)
    {
        const long n0 = p.value() == 2 ? 5 : 16;
        const double constant = p.value() == 2 ? 3.0 : 11.0 / 3.0;
        std::vector<long> count(kExhaustiveNorm + 1, 0);
        for (const auto& pr : admissible_pairs(p, kExhaustiveNorm, false)) {
            ++count[pr.norm()];
        }
        double worst = 0;
        long arg = n0;
        for (long n = n0; n <= kExhaustiveNorm; ++n) {
            const double ratio = count[n] / std::sqrt(double(n));
            if (ratio > worst) {
                worst = ratio;
                arg = n;
            }
        }
        out.push_back(certify("count", k, worst, constant,
                              "exhaustive, " + std::to_string(n0) + " <= N <= " + std::to_string(kExhaustiveNorm),
                              Relation::less_equal,
                              "max count/sqrt(N) at N = " + std::to_string(arg) + " (count " +
                                  std::to_string(count[arg]) + ")"));
    }
    return out;
}

// ---------------------------------------------------------------------------
// Endpoint signs

struct SignWitness {
    int k;
    int p;
    double theta;
    double value;
    double error;
    int predicted_sign;
    double factorization_rhs;  // 2 (-1)^n p^{k/2}/(p^{k/2}+1) F_k(level-1 angle)
    double factorization_residual;
};

/// F*_{8n,2}(3pi/4) and F*_{12n,3}(5pi/6), whose signs are (-1)^n, together with
/// the factorization through the level-1 value F_k(pi/2) resp. F_k(2pi/3).
template <typename Real = double>
SignWitness endpoint_sign(Weight k, Level p, const LatticeSumConfig& cfg = {}) {
    const int kk = k.value();
    const int period = p.value() == 2 ? 8 : 12;
    if (p.value() == 1 || kk % period != 0) {
        throw std::invalid_argument("endpoint_sign needs k = 8n (p = 2) or k = 12n (p = 3)");
    }
    const int n = kk / period;
    const Real theta = arc_theta_max<Real>(p);
    const auto star = FrickeEvaluator<Real>(k, p, cfg).restricted(theta);

    const Real level1_angle = p.value() == 2 ? pi<Real>() / 2 : 2 * pi<Real>() / 3;
    const auto base = FrickeEvaluator<Real>(k, Level(1), cfg).restricted(level1_angle);
    using std::pow;
    const Real lift = pow(Real(p.value()), Real(kk) / 2);
    const int sign = n % 2 == 0 ? 1 : -1;
    const Real rhs = Real(2 * sign) * lift / (lift + 1) * base.value;

    SignWitness w{kk,
                  p.value(),
                  to_double(theta),
                  to_double(star.value),
                  to_double(star.error),
                  sign,
                  to_double(rhs),
                  std::abs(to_double(star.value - rhs))};
    if (!(std::abs(w.value) > w.error)) {
        throw NumericalError(NumericalError::Kind::indeterminate_sign,
                             "endpoint value " + detail::fmt(w.value) + " within its error bound " + detail::fmt(w.error));
    }
    return w;
}

// ---------------------------------------------------------------------------
// Suites

/// r1_bound(k) < 2 for every even k in [8, 400], checked directly and via
/// strict decrease of r1 - 1 from k = 8.
inline BoundCertificate r1_lt_2_for_k_ge_8() {
    double worst = 0;
    int arg = 8;
    bool monotone = true;
    for (int k = 8; k <= 400; k += 2) {
        const double r = r1_bound(k);
        if (r > worst) {
            worst = r;
            arg = k;
        }
        if (k > 8 && !(r1_excess(k) < r1_excess(k - 2))) {
            monotone = false;
        }
    }
    BoundCertificate c = certify("r1-lt-2", 8, worst, 2.0, "even k in [8, 400]", Relation::less,
                                 "max at k = " + std::to_string(arg) + (monotone ? ", r1 - 1 strictly decreasing" : ", NOT monotone"));
    c.pass = c.pass && monotone;
    return c;
}

namespace detail {

/// theta_max minus the last sample point 2 m pi / k strictly below theta_max, over pi.
/// Exact in integers: (e-1)/e - 2m/k.
inline std::pair<long, long> last_point_gap(int k, Level p) {
    const int e = elliptic_order(p);
    long m = (long(k) * (e - 1)) / (2L * e);
    if (2L * m * e == long(k) * (e - 1)) {
        --m;
    }
    // gap/pi = ((e-1) k - 2 m e) / (e k)
    return {long(k) * (e - 1) - 2 * m * e, long(e) * k};
}

/// Largest |R| over a 10^3 grid on [pi/2, theta_max - x], summing every admissible
/// pair with 2 <= N <= 10^4.
inline std::pair<double, double> empirical_tail(int k, Level p, double x) {
    const auto pairs = admissible_pairs(p, kExhaustiveNorm, true);
    const ArcSpec arc = arc_spec(p);
    const double lo = arc.theta_min;
    const double hi = arc.theta_max - x;
    const double sqrt_p = std::sqrt(double(p.value()));
    double worst = 0, arg = lo;
    constexpr int points = 1000;
    for (int j = 0; j < points; ++j) {
        const double theta = lo + (hi - lo) * j / double(points - 1);
        const Complex<double> u = unit_phase<double>(theta / 2);
        double r = 0;
        for (const auto& pr : pairs) {
            if (pr.norm() < 2) {
                continue;
            }
            r += inverse_power(double(pr.c) * u + sqrt_p * double(pr.d) * std::conj(u), k).real();
        }
        r = std::abs(2 * r);
        if (r > worst) {
            worst = r;
            arg = theta;
        }
    }
    return {worst, arg};
}

}  // namespace detail

/// Every certificate for one level and weight. Raw bounds at levels 2, 3 are
/// informational (they exceed 2 by design); the restricted suite starts at k = 8.
template <typename Real = double>
std::vector<BoundCertificate> certificates_for(int k, Level p, const LatticeSumConfig& cfg = {}) {
    detail::require_weight(k, 4, "certificate suite");
    std::vector<BoundCertificate> out;
    const double pi_d = std::acos(-1.0);
    if (p.value() == 1) {
        auto c = certify("r1bound", k, r1_bound(k), 2.0, "closed form", Relation::less);
        out.push_back(k >= 8 ? c : informational(c));
        return out;
    }

    const bool two = p.value() == 2;
    const std::string prefix = two ? "r2star" : "r3star";
    out.push_back(informational(certify(prefix + "-raw", k, two ? r2_star_bound_raw(k) : r3_star_bound_raw(k), 2.0,
                                        "closed form", Relation::less)));
    if (k < 8) {
        return out;
    }

    const double x = two ? pi_d / (2 * k) : pi_d / (3 * k);
    const double restricted = two ? r2_star_bound_restricted(k) : r3_star_bound_restricted(k);
    out.push_back(certify(prefix + "-restricted", k, restricted, 2.0, "closed form", Relation::less));

    // the restricted interval must reach every sample point but theta_max
    {
        const auto [num, den] = detail::last_point_gap(k, p);
        const long need_den = two ? 2L * k : 3L * k;  // x / pi = 1 / need_den
        BoundCertificate c = certify("last-integer-point", k, x, pi_d * double(num) / double(den),
                                     "exact: theta_max - max{2 m pi/k < theta_max}", Relation::less_equal,
                                     "gap = " + std::to_string(num) + "pi/" + std::to_string(den) + ", x = pi/" +
                                         std::to_string(need_den));
        c.pass = num * need_den >= den;
        out.push_back(std::move(c));
    }

    if (two) {
        out.push_back(certify("aux:f", k, 0.0, aux_positivity("f", k), "closed form, 50 digits", Relation::less));
        double worst = 0;
        for (int j = 0; j <= kTermGridInterior + 1; ++j) {
            const double theta = pi_d / 2 + (pi_d / 4 - x) * j / double(kTermGridInterior + 1);
            worst = std::max(worst, 2 * v_k(k, p, 1, 1, theta));
        }
        out.push_back(certify("lemma:2v(1,1)", k, worst, 2 - (265.0 / 9) / (double(k) * k),
                              "uniform 10002 points on [pi/2, 3pi/4 - pi/(2k)]", Relation::less_equal));
        const double third = detail::half_power(1.0 / 3, k);
        const double tail = 2 * third + 2 * detail::half_power(0.2, k) + 2 * third * third + 162.0 / (k - 3) * third;
        out.push_back(certify("tail-sum", k, tail, 35 * third, "closed form", Relation::less_equal));
    } else {
        out.push_back(certify("cos1", k, 0.0, aux_positivity("f1", k), "closed form, 50 digits", Relation::less));
        out.push_back(certify("cos2", k, 0.0, aux_positivity("f2", k), "closed form, 50 digits", Relation::less));
        double worst = 0;
        for (int j = 0; j <= kTermGridInterior + 1; ++j) {
            const double theta = pi_d / 2 + (pi_d / 3 - x) * j / double(kTermGridInterior + 1);
            worst = std::max(worst, 2 * v_k(k, p, 1, 1, theta) + 2 * v_k(k, p, 2, 1, theta));
        }
        out.push_back(certify("lemma:2v(1,1)+2v(2,1)", k, worst, 2 - (107 * pi_d * pi_d / 24) / (double(k) * k),
                              "uniform 10002 points on [pi/2, 5pi/6 - pi/(3k)]", Relation::less_equal));
        const double tail = r3_star_bound_raw(k) - 4;
        out.push_back(certify("tail-sum", k, tail, 176 * std::pow(0.5, k), "closed form", Relation::less_equal));
    }

    {
        const auto [worst, arg] = detail::empirical_tail(k, p, x);
        const double allowance = arc_tail_bound(k, p, double(kExhaustiveNorm));
        out.push_back(certify("tail-domination", k, worst, restricted + allowance,
                              "1000 points on [pi/2, theta_max - x], pairs 2 <= N <= 10^4", Relation::less,
                              "max |R| at theta = " + detail::fmt(arg) + ", allowance " + detail::fmt(allowance)));
    }

    for (auto& c : verify_term_bounds(k, p)) {
        out.push_back(std::move(c));
    }

    const int period = two ? 8 : 12;
    if (k % period == 0) {
        const auto w = endpoint_sign<Real>(Weight(k), p, cfg);
        out.push_back(certify("endpoint-sign", k, w.error, w.predicted_sign * w.value, "theta = theta_max",
                              Relation::less, "F* = " + detail::fmt(w.value) + ", predicted sign " +
                                                  std::to_string(w.predicted_sign)));
        out.push_back(certify("endpoint-factorization", k, w.factorization_residual, 1e-8, "theta = theta_max",
                              Relation::less, "rhs = " + detail::fmt(w.factorization_rhs)));
    }
    return out;
}

/// Certificates for even k in [k_from, k_to], sorted by name then k. Level 1
/// additionally carries the r1 < 2 (k >= 8) sweep.
template <typename Real = double>
std::vector<BoundCertificate> certificate_suite(Level p, int k_from, int k_to, const LatticeSumConfig& cfg = {}) {
    std::vector<BoundCertificate> out;
    for (int k = k_from; k <= k_to; k += 2) {
        for (auto& c : certificates_for<Real>(k, p, cfg)) {
            out.push_back(std::move(c));
        }
    }
    if (p.value() == 1 && k_to >= 8) {
        out.push_back(r1_lt_2_for_k_ge_8());
    }
    sort_certificates(out);
    return out;
}

}  // namespace fricke

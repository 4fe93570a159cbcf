#pragma once

// Spaces M_{k,2}, M_{k,3}: the cusp forms Delta_2, Delta_{3,*}, spanning sets
// built from E* and Delta products, dimensions, and the order table for level 3.

#include <algorithm>
#include <cmath>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "fricke/bounds.hpp"
#include "fricke/eisenstein.hpp"
#include "fricke/errors.hpp"
#include "fricke/forms.hpp"
#include "fricke/qseries.hpp"
#include "fricke/zeros.hpp"

namespace fricke {

enum class DeltaForm { delta2, d3_8, d3_10, d3_12_0, d3_12_1, d3_14 };

inline const char* to_string(DeltaForm d) {
    switch (d) {
        case DeltaForm::delta2: return "delta2";
        case DeltaForm::d3_8: return "d3_8";
        case DeltaForm::d3_10: return "d3_10";
        case DeltaForm::d3_12_0: return "d3_12_0";
        case DeltaForm::d3_12_1: return "d3_12_1";
        case DeltaForm::d3_14: return "d3_14";
    }
    return "?";
}

inline DeltaForm parse_delta(std::string_view name) {
    for (DeltaForm d : {DeltaForm::delta2, DeltaForm::d3_8, DeltaForm::d3_10, DeltaForm::d3_12_0, DeltaForm::d3_12_1,
                        DeltaForm::d3_14}) {
        if (name == to_string(d)) {
            return d;
        }
    }
    throw std::invalid_argument("unknown cusp form '" + std::string(name) + "'");
}

inline int delta_weight(DeltaForm d) {
    switch (d) {
        case DeltaForm::delta2:
        case DeltaForm::d3_8: return 8;
        case DeltaForm::d3_10: return 10;
        case DeltaForm::d3_12_0:
        case DeltaForm::d3_12_1: return 12;
        case DeltaForm::d3_14: return 14;
    }
    return 0;
}

inline Level delta_level(DeltaForm d) { return Level(d == DeltaForm::delta2 ? 2 : 3); }

/// Delta_2 = 17/1152 (E*4^2 - E*8) at level 2; at level 3
/// Delta_{3,8} = 41/1728 (E*4^2 - E*8), Delta_{3,10} = 61/432 (E*4 E*6 - E*10),
/// Delta^0_{3,12} = Delta_{3,8}^2 / E*4, Delta^1_{3,12} = Delta_{3,8} E*4,
/// Delta_{3,14} = Delta_{3,10} E*4.
inline QSeries build_delta(DeltaForm d, int truncation) {
    if (truncation < 2) {
        throw std::invalid_argument("build_delta needs truncation >= 2");
    }
    const Level p = delta_level(d);
    auto e = [&](int w) { return fricke_qseries(Weight(w), p, truncation); };
    QSeries out = QSeries::one(p.value(), truncation);
    switch (d) {
        case DeltaForm::delta2: out = Rational(17, 1152) * (e(4) * e(4) - e(8)); break;
        case DeltaForm::d3_8: out = Rational(41, 1728) * (e(4) * e(4) - e(8)); break;
        case DeltaForm::d3_10: out = Rational(61, 432) * (e(4) * e(6) - e(10)); break;
        case DeltaForm::d3_12_0: {
            const QSeries d8 = build_delta(DeltaForm::d3_8, truncation);
            const QSeries e4 = e(4);
            out = (d8 * d8) / e4;
            // well-definedness: the quotient times E*4 gives back Delta_{3,8}^2
            if (out * e4 != (d8 * d8).truncated(out.truncation())) {
                throw CheckFailure("Delta^0_{3,12}: E*4 does not divide Delta_{3,8}^2");
            }
            break;
        }
        case DeltaForm::d3_12_1: out = build_delta(DeltaForm::d3_8, truncation) * e(4); break;
        case DeltaForm::d3_14: out = build_delta(DeltaForm::d3_10, truncation) * e(4); break;
    }
    if (out[0] != 0) {
        throw CheckFailure(std::string(to_string(d)) + " has nonzero constant term");
    }
    return out;
}

/// dim M_{k,p}: floor(k/8) (+1 unless k = 2 mod 8) for p = 2; floor(k/6) (+1
/// unless k = 2, 6 mod 12) for p = 3; 0 for k < 0, k = 2 and odd k.
inline int dim_space(int k, Level p) {
    if (p.value() == 1) {
        throw std::invalid_argument("dim_space covers levels 2 and 3");
    }
    if (k < 0 || k % 2 != 0 || k == 2) {
        return 0;
    }
    if (p.value() == 2) {
        return k / 8 + (k % 8 == 2 ? 0 : 1);
    }
    return k / 6 + (k % 12 == 2 || k % 12 == 6 ? 0 : 1);
}

// ---------------------------------------------------------------------------
// Spanning sets

/// One factor of a product generator: E*_{w,p} or a Delta form.
struct Atom {
    bool is_delta = false;
    int weight = 0;
    DeltaForm delta = DeltaForm::delta2;

    std::string label(Level p) const {
        return is_delta ? std::string(to_string(delta)) : "E*" + std::to_string(weight) + "," + std::to_string(p.value());
    }
    friend bool operator<(const Atom& a, const Atom& b) {
        return std::tie(a.is_delta, a.weight, a.delta) < std::tie(b.is_delta, b.weight, b.delta);
    }
};

inline Atom eis_atom(int w) { return {false, w, DeltaForm::delta2}; }
inline Atom delta_atom(DeltaForm d) { return {true, delta_weight(d), d}; }

struct Monomial {
    std::vector<std::pair<Atom, int>> factors;  // (atom, power), power >= 1

    int weight() const {
        int w = 0;
        for (const auto& [a, e] : factors) {
            w += a.weight * e;
        }
        return w;
    }
    std::string label(Level p) const {
        if (factors.empty()) {
            return "1";
        }
        std::string s;
        for (const auto& [a, e] : factors) {
            if (!s.empty()) {
                s += "*";
            }
            s += a.label(p);
            if (e > 1) {
                s += "^" + std::to_string(e);
            }
        }
        return s;
    }
};

namespace detail {

inline void push(Monomial& m, const Atom& a, int power) {
    if (power > 0 && (a.is_delta || a.weight > 0)) {
        m.factors.emplace_back(a, power);
    }
}

}  // namespace detail

/// The displayed spanning set. With k = 8n + r, r in {0, 4, 6, 10}:
///   E*_r (E*_{8n}, E*_{8(n-1)} Delta_2, ..., Delta_2^n).
/// With k = 12n + r, r in {0, 4, 6, 8, 10, 14}:
///   E*_r (E*_{12n}, E*_{12(n-1)} M0_12, ..., M0_12^n) + M0_r M0_12^n,
/// M0_12 spanned by Delta^0_{3,12}, Delta^1_{3,12}.
inline std::vector<Monomial> spanning_set(int k, Level p) {
    std::vector<Monomial> out;
    if (dim_space(k, p) == 0) {
        return out;
    }
    if (p.value() == 2) {
        const int r = k % 8 == 2 ? 10 : k % 8;
        const int n = (k - r) / 8;
        for (int j = 0; j <= n; ++j) {
            Monomial m;
            detail::push(m, eis_atom(r), 1);
            detail::push(m, eis_atom(8 * (n - j)), 1);
            detail::push(m, delta_atom(DeltaForm::delta2), j);
            out.push_back(std::move(m));
        }
        return out;
    }
    const int r = k % 12 == 2 ? 14 : k % 12;
    const int n = (k - r) / 12;
    for (int j = 0; j <= n; ++j) {
        for (int a = 0; a <= j; ++a) {
            Monomial m;
            detail::push(m, eis_atom(r), 1);
            detail::push(m, eis_atom(12 * (n - j)), 1);
            detail::push(m, delta_atom(DeltaForm::d3_12_0), a);
            detail::push(m, delta_atom(DeltaForm::d3_12_1), j - a);
            out.push_back(std::move(m));
        }
    }
    std::optional<DeltaForm> cusp;
    if (r == 8) cusp = DeltaForm::d3_8;
    if (r == 10) cusp = DeltaForm::d3_10;
    if (r == 14) cusp = DeltaForm::d3_14;
    if (cusp) {
        for (int a = 0; a <= n; ++a) {
            Monomial m;
            detail::push(m, delta_atom(*cusp), 1);
            detail::push(m, delta_atom(DeltaForm::d3_12_0), a);
            detail::push(m, delta_atom(DeltaForm::d3_12_1), n - a);
            out.push_back(std::move(m));
        }
    }
    return out;
}

/// Exact q-expansions of atoms and their powers, built once per use.
class SeriesCache {
public:
    SeriesCache(Level p, int truncation) : p_(p), n_(truncation) {}

    const QSeries& atom(const Atom& a) { return power(a, 1); }

    const QSeries& power(const Atom& a, int e) {
        const auto key = std::make_pair(a, e);
        if (auto it = cache_.find(key); it != cache_.end()) {
            return it->second;
        }
        QSeries s = e == 1 ? (a.is_delta ? build_delta(a.delta, n_) : fricke_qseries(Weight(a.weight), p_, n_))
                           : power(a, e - 1) * power(a, 1);
        return cache_.emplace(key, std::move(s)).first->second;
    }

    QSeries monomial(const Monomial& m) {
        QSeries acc = QSeries::one(p_.value(), n_);
        for (const auto& [a, e] : m.factors) {
            acc = acc * power(a, e);
        }
        return acc;
    }

private:
    Level p_;
    int n_;
    std::map<std::pair<Atom, int>, QSeries> cache_;
};

struct SpaceDescriptor {
    int k = 0;
    int p = 0;
    int dimension = 0;
    std::vector<Monomial> generators;      // the displayed spanning set
    std::vector<std::size_t> basis_index;  // generators kept, one per leading exponent
    std::vector<QSeries> basis;
    std::vector<int> leading;
    std::string decomposition;
};

namespace detail {

/// Reduces s against echelon rows keyed by leading exponent; returns the remainder.
inline QSeries reduce(QSeries s, const std::map<int, QSeries>& rows) {
    for (const auto& [lead, row] : rows) {
        if (lead > s.truncation()) {
            break;
        }
        if (s[lead] != 0) {
            s = s - (s[lead] / row[lead]) * row;
        }
    }
    return s;
}

inline std::string decomposition_text(int k, Level p) {
    if (p.value() == 2) {
        const int r = k % 8 == 2 ? 10 : k % 8;
        const int n = (k - r) / 8;
        return "E*" + std::to_string(r) + ",2 * (E*" + std::to_string(8 * n) + ",2, ..., delta2^" + std::to_string(n) +
               ")";
    }
    const int r = k % 12 == 2 ? 14 : k % 12;
    const int n = (k - r) / 12;
    std::string s = "E*" + std::to_string(r) + ",3 * (E*" + std::to_string(12 * n) + ",3, ..., (M0_12,3)^" +
                    std::to_string(n) + ")";
    if (r == 8 || r == 10 || r == 14) {
        s += " + M0_" + std::to_string(r) + ",3 * (M0_12,3)^" + std::to_string(n);
    }
    return s;
}

}  // namespace detail

/// Builds the spanning set, keeps one generator per leading exponent, checks that
/// every other generator lies in their span (exact elimination to the truncation)
/// and that the count equals dim_space. At level 2 the spanning set must already
/// be in echelon form.
inline SpaceDescriptor build_basis(int k, Level p, int truncation = 50) {
    if (k < 0 || k % 2 != 0) {
        throw std::invalid_argument("build_basis needs an even weight >= 0");
    }
    SpaceDescriptor d;
    d.k = k;
    d.p = p.value();
    d.dimension = dim_space(k, p);
    d.generators = spanning_set(k, p);
    if (d.generators.empty()) {
        d.decomposition = "0";
        return d;
    }
    d.decomposition = detail::decomposition_text(k, p);

    SeriesCache cache(p, truncation);
    std::vector<QSeries> series;
    series.reserve(d.generators.size());
    for (const auto& m : d.generators) {
        series.push_back(cache.monomial(m));
        if (series.back().weight() != k) {
            throw std::logic_error("generator weight mismatch");
        }
    }

    std::map<int, QSeries> rows;
    std::set<int> seen;
    for (std::size_t g = 0; g < series.size(); ++g) {
        const auto lead = series[g].leading();
        if (!lead) {
            throw CheckFailure("generator " + d.generators[g].label(p) + " vanishes through the truncation");
        }
        if (!seen.insert(*lead).second) {
            if (p.value() == 2) {
                throw CheckFailure("echelon failure: two generators share leading exponent " + std::to_string(*lead));
            }
            continue;
        }
        rows.emplace(*lead, series[g]);
        d.basis_index.push_back(g);
    }
    for (std::size_t g = 0; g < series.size(); ++g) {
        if (!detail::reduce(series[g], rows).is_zero()) {
            throw CheckFailure("generator " + d.generators[g].label(p) + " is not in the span of the echelon basis");
        }
    }
    for (std::size_t g : d.basis_index) {
        d.basis.push_back(series[g]);
        d.leading.push_back(*series[g].leading());
    }
    if (static_cast<int>(d.basis.size()) != d.dimension) {
        throw CheckFailure("basis of M_{" + std::to_string(k) + "," + std::to_string(p.value()) + "} has " +
                           std::to_string(d.basis.size()) + " elements, dimension formula gives " +
                           std::to_string(d.dimension));
    }
    return d;
}

// ---------------------------------------------------------------------------
// Numerical evaluation of product forms

/// A complex value with an absolute error bound, propagated to first order.
struct Approx {
    Complex<double> v;
    double err;

    friend Approx operator*(const Approx& a, const Approx& b) {
        return {a.v * b.v, std::abs(a.v) * b.err + std::abs(b.v) * a.err + a.err * b.err};
    }
    friend Approx operator-(const Approx& a, const Approx& b) { return {a.v - b.v, a.err + b.err}; }
    friend Approx operator*(double c, const Approx& a) { return {c * a.v, std::abs(c) * a.err}; }
    friend Approx operator/(const Approx& a, const Approx& b) {
        const double size = std::abs(b.v);
        if (!(size > b.err)) {
            throw NumericalError(NumericalError::Kind::indeterminate_sign, "division by a value within its error");
        }
        const Complex<double> q = a.v / b.v;
        return {q, (a.err + std::abs(q) * b.err) / (size - b.err)};
    }
};

/// Evaluates E* atoms, Delta forms (from their E* formulas) and monomials at
/// points of the upper half-plane.
class ProductEvaluator {
public:
    explicit ProductEvaluator(Level p, LatticeSumConfig cfg = {}) : p_(p), cfg_(cfg) {}

    Approx eisenstein(int w, const Complex<double>& z) {
        auto it = evaluators_.find(w);
        if (it == evaluators_.end()) {
            it = evaluators_.emplace(w, FrickeEvaluator<double>(Weight(w), p_, cfg_)).first;
        }
        const auto v = it->second.value(z);
        return {v.value, v.error};
    }

    Approx delta(DeltaForm d, const Complex<double>& z) {
        switch (d) {
            case DeltaForm::delta2: {
                const Approx e4 = eisenstein(4, z);
                return (17.0 / 1152) * (e4 * e4 - eisenstein(8, z));
            }
            case DeltaForm::d3_8: {
                const Approx e4 = eisenstein(4, z);
                return (41.0 / 1728) * (e4 * e4 - eisenstein(8, z));
            }
            case DeltaForm::d3_10:
                return (61.0 / 432) * (eisenstein(4, z) * eisenstein(6, z) - eisenstein(10, z));
            case DeltaForm::d3_12_0: {
                const Approx d8 = delta(DeltaForm::d3_8, z);
                return (d8 * d8) / eisenstein(4, z);
            }
            case DeltaForm::d3_12_1: return delta(DeltaForm::d3_8, z) * eisenstein(4, z);
            case DeltaForm::d3_14: return delta(DeltaForm::d3_10, z) * eisenstein(4, z);
        }
        throw std::logic_error("unknown delta form");
    }

    Approx atom(const Atom& a, const Complex<double>& z) {
        return a.is_delta ? delta(a.delta, z) : eisenstein(a.weight, z);
    }

    FormValue<double> operator()(const Monomial& m, const Complex<double>& z) {
        Approx acc{{1, 0}, 0};
        for (const auto& [a, e] : m.factors) {
            const Approx v = atom(a, z);
            for (int i = 0; i < e; ++i) {
                acc = acc * v;
            }
        }
        return {acc.v, acc.err, EvalPath::lattice};
    }

    Level level() const { return p_; }

private:
    Level p_;
    LatticeSumConfig cfg_;
    std::map<int, FrickeEvaluator<double>> evaluators_;
};

/// Winding-number order of a monomial at z0, with enough contour samples for
/// high orders.
inline int monomial_order(ProductEvaluator& ev, const Monomial& m, const Complex<double>& z0,
                          std::optional<double> radius = std::nullopt) {
    const double r = radius ? *radius : default_order_radius<double>(ev.level());
    auto fn = [&](const Complex<double>& z) { return ev(m, z); };
    // expected orders stay below 40, so 1024 samples keep each step well under a radian
    std::string last;
    double rr = r;
    for (int attempt = 0; attempt <= 4; ++attempt, rr /= 2) {
        try {
            const int outer = winding_number<double>(fn, z0, rr, 1024);
            const int inner = winding_number<double>(fn, z0, rr / 2, 1024);
            if (outer == inner) {
                return outer;
            }
            last = "count " + std::to_string(outer) + " vs " + std::to_string(inner) + " at half radius";
        } catch (const NumericalError& e) {
            if (e.kind() != NumericalError::Kind::unstable_winding && e.kind() != NumericalError::Kind::indeterminate_sign) {
                throw;
            }
            last = e.what();
        }
    }
    throw NumericalError(NumericalError::Kind::unstable_winding, "order of " + m.label(ev.level()) + " unstable: " + last);
}

// ---------------------------------------------------------------------------
// Table checks

struct AppendixRow {
    int k;
    Monomial form;
    std::string name;
    int v_inf, v_i, v_rho, arc_zeros;
};

inline std::vector<AppendixRow> appendix_table() {
    auto e = [](int w) {
        Monomial m;
        m.factors.emplace_back(eis_atom(w), 1);
        return m;
    };
    auto d = [](DeltaForm f) {
        Monomial m;
        m.factors.emplace_back(delta_atom(f), 1);
        return m;
    };
    return {
        {4, e(4), "E*4,3", 0, 0, 4, 0},
        {6, e(6), "E*6,3", 0, 1, 3, 0},
        {8, e(8), "E*8,3", 0, 0, 2, 1},
        {8, d(DeltaForm::d3_8), "d3_8", 1, 0, 2, 0},
        {10, e(10), "E*10,3", 0, 1, 1, 1},
        {10, d(DeltaForm::d3_10), "d3_10", 1, 1, 1, 0},
        {12, e(12), "E*12,3", 0, 0, 0, 2},
        {12, d(DeltaForm::d3_12_0), "d3_12_0", 2, 0, 0, 0},
        {12, d(DeltaForm::d3_12_1), "d3_12_1", 1, 0, 6, 0},
        {14, e(14), "E*14,3", 0, 1, 5, 1},
        {14, d(DeltaForm::d3_14), "d3_14", 1, 1, 5, 0},
    };
}

/// Sign changes of Re(e^{ik theta/2} f(e^{i theta}/sqrt p)) on a uniform grid
/// over the open arc, `margin` radians clear of both endpoints.
inline int arc_sign_changes(ProductEvaluator& ev, const Monomial& m, int points = 2000, double margin = 0.03) {
    const Level p = ev.level();
    const ArcSpec arc = arc_spec(p);
    const int k = m.weight();
    const double lo = arc.theta_min + margin;
    const double hi = arc.theta_max - margin;
    int changes = 0;
    int last = 0;
    for (int j = 0; j < points; ++j) {
        const double theta = lo + (hi - lo) * j / double(points - 1);
        const auto v = ev(m, arc_point<double>(p, theta));
        const double re = (unit_phase<double>(k * theta / 2) * v.value).real();
        if (!(std::abs(re) > 10 * v.error)) {
            continue;  // a grid point on top of a zero carries no sign
        }
        const int sign = re > 0 ? 1 : -1;
        if (last != 0 && sign != last) {
            ++changes;
        }
        last = sign;
    }
    return changes;
}

/// The 11 rows of the level-3 order table: v_inf from the exact expansion,
/// orders at i/sqrt3 and rho_3 by winding numbers, arc zeros by sign changes.
inline std::vector<BoundCertificate> verify_appendix_table(int truncation = 50, const LatticeSumConfig& cfg = {}) {
    const Level p(3);
    ProductEvaluator ev(p, cfg);
    SeriesCache cache(p, truncation);
    std::vector<BoundCertificate> out;
    const Complex<double> at_i = elliptic_point_i<double>(p);
    const Complex<double> at_rho = elliptic_point_rho<double>(p);
    for (const auto& row : appendix_table()) {
        const QSeries s = cache.monomial(row.form);
        const auto lead = s.leading();
        const int v_inf = lead ? *lead : -1;
        const int v_i = monomial_order(ev, row.form, at_i);
        const int v_rho = monomial_order(ev, row.form, at_rho);
        const int zeros = arc_sign_changes(ev, row.form);
        const std::string base = "appendix:" + row.name + ":";
        out.push_back(certify(base + "v_inf", row.k, v_inf, row.v_inf, "leading exponent, N = " + std::to_string(truncation),
                              Relation::equal));
        out.push_back(certify(base + "v_i", row.k, v_i, row.v_i, "winding, 1024 samples, r = 0.03/sqrt3", Relation::equal));
        out.push_back(
            certify(base + "v_rho", row.k, v_rho, row.v_rho, "winding, 1024 samples, r = 0.03/sqrt3", Relation::equal));
        out.push_back(certify(base + "arc_zeros", row.k, zeros, row.arc_zeros,
                              "sign changes, 2000 points on [pi/2 + 0.03, 5pi/6 - 0.03]", Relation::equal));
    }
    return out;
}

/// Every basis element of M_{k,p} has v_{i/sqrt p} >= s_k and v_{rho_p} >= t_k;
/// E*_{k,p} meets both with equality. Margin is the smallest slack over the basis.
inline BoundCertificate min_order_bound_check(Weight k, Level p, int truncation = 50, const LatticeSumConfig& cfg = {}) {
    const auto [s, t] = expected_elliptic_orders(k, p);
    const SpaceDescriptor space = build_basis(k.value(), p, truncation);
    ProductEvaluator ev(p, cfg);
    const Complex<double> at_i = elliptic_point_i<double>(p);
    const Complex<double> at_rho = elliptic_point_rho<double>(p);

    int slack = std::numeric_limits<int>::max();
    std::string detail = "(s, t) = (" + std::to_string(s) + ", " + std::to_string(t) + ");";
    for (std::size_t idx : space.basis_index) {
        const Monomial& m = space.generators[idx];
        const int vi = monomial_order(ev, m, at_i);
        const int vr = monomial_order(ev, m, at_rho);
        slack = std::min({slack, vi - s, vr - t});
        detail += " " + m.label(p) + ":(" + std::to_string(vi) + "," + std::to_string(vr) + ")";
    }
    Monomial e;
    e.factors.emplace_back(eis_atom(k.value()), 1);
    const int ei = monomial_order(ev, e, at_i);
    const int er = monomial_order(ev, e, at_rho);
    detail += "; E*" + std::to_string(k.value()) + ":(" + std::to_string(ei) + "," + std::to_string(er) + ")";

    BoundCertificate c = certify("min-order", k.value(), 0.0, double(slack),
                                 "winding at i/sqrt p and rho_p over the echelon basis", Relation::less_equal, detail);
    c.pass = slack >= 0 && ei == s && er == t;
    return c;
}

}  // namespace fricke

#pragma once

// JSON views of the result types. Keys come out sorted (nlohmann's default
// object is a std::map); exact rationals are "num/den" strings.

#include <string>
#include <vector>

#include <json.hpp>

#include "fricke/bounds.hpp"
#include "fricke/numeric.hpp"
#include "fricke/qseries.hpp"
#include "fricke/spaces.hpp"
#include "fricke/zeros.hpp"

namespace fricke {

using Json = nlohmann::json;

inline Json to_json(const BoundCertificate& c) {
    return {{"name", c.name},
            {"k", c.k},
            {"lhs_max", c.lhs_max},
            {"rhs", c.rhs},
            {"grid", c.grid},
            {"relation", to_string(c.relation)},
            {"informational", c.informational},
            {"verdict", c.pass ? "pass" : "fail"},
            {"margin", c.margin},
            {"detail", c.detail}};
}

inline Json to_json(const std::vector<BoundCertificate>& certs) {
    Json out = Json::array();
    for (const auto& c : certs) {
        out.push_back(to_json(c));
    }
    return out;
}

template <typename Real>
Json to_json(const ZeroRecord<Real>& z) {
    return {{"theta", to_double(z.theta)},
            {"point", {{"re", to_double(z.point.re())}, {"im", to_double(z.point.im())}}},
            {"bracket", {to_double(z.theta_lo), to_double(z.theta_hi)}},
            {"f_lo", to_double(z.f_lo)},
            {"f_hi", to_double(z.f_hi)},
            {"multiplicity", z.multiplicity}};
}

template <typename Real>
Json to_json(const std::vector<ZeroRecord<Real>>& zeros) {
    Json out = Json::array();
    for (const auto& z : zeros) {
        out.push_back(to_json(z));
    }
    return out;
}

inline Json to_json(const NamedCheck& c) {
    return {{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}};
}

template <typename Real>
Json to_json(const ValenceReport<Real>& r) {
    Json checks = Json::array();
    for (const auto& c : r.checks) {
        checks.push_back(to_json(c));
    }
    return {{"k", r.k},
            {"p", r.p},
            {"v_infinity", r.v_infinity},
            {"v_i", r.v_i},
            {"v_rho", r.v_rho},
            {"interior_zeros", to_json(r.interior_zeros)},
            {"lhs", to_string(r.lhs)},
            {"rhs", to_string(r.rhs)},
            {"residual", to_string(r.residual())},
            {"exact", r.exact()},
            {"checks", checks}};
}

inline Json coefficients_json(const QSeries& s) {
    Json out = Json::array();
    for (const auto& a : s.coefficients()) {
        out.push_back(to_string(a));
    }
    return out;
}

inline Json to_json(const SpaceDescriptor& d) {
    const Level p(d.p);
    Json generators = Json::array();
    for (const auto& m : d.generators) {
        generators.push_back(m.label(p));
    }
    Json basis = Json::array();
    for (std::size_t i = 0; i < d.basis.size(); ++i) {
        basis.push_back({{"label", d.generators[d.basis_index[i]].label(p)},
                         {"leading_exponent", d.leading[i]},
                         {"coefficients", coefficients_json(d.basis[i])}});
    }
    return {{"k", d.k},
            {"p", d.p},
            {"dimension", d.dimension},
            {"decomposition", d.decomposition},
            {"generators", generators},
            {"basis", basis}};
}

}  // namespace fricke

#include <cmath>
#include <map>
#include <numeric>

#include <gtest/gtest.h>

#include "fricke/bounds.hpp"

using namespace fricke;

namespace {

const double kPi = std::acos(-1.0);

const BoundCertificate* find(const std::vector<BoundCertificate>& certs, const std::string& name) {
    for (const auto& c : certs) {
        if (c.name == name) return &c;
    }
    return nullptr;
}

}  // namespace

TEST(ClosedForms, PrintedConstants) {
    EXPECT_NEAR(r1_bound(12), 1.03562, 1e-4);
    EXPECT_NEAR(r1_bound(8), 1.29658, 1e-4);
    EXPECT_NEAR(aux_positivity("f", 8), 0.14070, 0.14070 * 1e-3);
    EXPECT_NEAR(aux_positivity("f1", 8), 0.00012876, 0.00012876 * 1e-3);
    EXPECT_NEAR(aux_positivity("f2", 8), 0.015057, 0.015057 * 1e-3);
}

TEST(ClosedForms, R1ByHand) {
    for (int k : {4, 8, 12, 30}) {
        const double want = 1 + std::pow(0.5, k / 2.0) + 4 * std::pow(0.4, k / 2.0) +
                            20 * std::sqrt(2.0) / (k - 3) * std::pow(4.5, (3.0 - k) / 2);
        EXPECT_DOUBLE_EQ(r1_bound(k), want);
    }
}

TEST(ClosedForms, R1Monotone) {
    // r1 itself rounds to 1.0 in double past k ~ 108; its excess keeps resolving
    for (int k = 8; k < 200; k += 2) {
        EXPECT_LT(r1_excess(k + 2), r1_excess(k)) << k;
        EXPECT_LE(r1_bound(k + 2), r1_bound(k)) << k;
    }
    EXPECT_LT(r1_bound(10), r1_bound(8));
}

TEST(ClosedForms, RawBoundsExceedTwo) {
    // the level-2 excess drops below double resolution of 2 near k = 66
    for (int k = 4; k <= 200; k += 2) {
        if (2 * std::pow(1.0 / 3, k / 2.0) > 1e-15) {
            EXPECT_GT(r2_star_bound_raw(k), 2.0) << k;
        }
        EXPECT_GE(r2_star_bound_raw(k), 2.0) << k;
        EXPECT_GT(r3_star_bound_raw(k), 2.0) << k;
    }
    EXPECT_NEAR(r2_star_bound_raw(400), 2.0, 1e-12);
}

TEST(ClosedForms, R2RawAtEight) {
    const double t = std::pow(1.0 / 3, 4);
    EXPECT_DOUBLE_EQ(r2_star_bound_raw(8), 2 + 2 * t + 2 * std::pow(0.2, 4) + 2 * t * t + 162.0 / 5 * t);
}

TEST(ClosedForms, RestrictedBelowTwo) {
    for (int k = 8; k <= 200; k += 2) {
        EXPECT_LT(r2_star_bound_restricted(k), 2.0) << k;
        EXPECT_LT(r3_star_bound_restricted(k), 2.0) << k;
    }
    const double margin8 = 2 - r3_star_bound_restricted(8);
    EXPECT_NEAR(margin8, 107 * kPi * kPi / 1536 - 0.6875, 1e-14);
    EXPECT_THROW(r2_star_bound_restricted(6), std::invalid_argument);
    EXPECT_THROW(r3_star_bound_restricted(4), std::invalid_argument);
}

TEST(ClosedForms, PositivityGapMatchesDefinition) {
    // f(8) = 3^4/35 - (9/265) 64
    EXPECT_NEAR(aux_positivity("f", 8), 81.0 / 35 - 9.0 * 64 / 265, 1e-14);
    for (double k = 8; k <= 200; k += 2) {
        EXPECT_GT(aux_positivity("f", k), 0);
        EXPECT_GT(aux_positivity("f1", k), 0);
        EXPECT_GT(aux_positivity("f2", k), 0);
    }
    EXPECT_THROW(aux_positivity("g", 8), std::invalid_argument);
    EXPECT_THROW(aux_positivity("f", 6), std::invalid_argument);
}

TEST(Certificates, VerdictFollowsMargin) {
    EXPECT_TRUE(certify("x", 8, 1.0, 2.0, "").pass);
    EXPECT_FALSE(certify("x", 8, 2.0, 2.0, "").pass);
    EXPECT_DOUBLE_EQ(certify("x", 8, 1.25, 2.0, "").margin, 0.75);
    EXPECT_TRUE(certify("x", 8, 2.0, 2.0, "", Relation::less_equal).pass);
    EXPECT_FALSE(certify("x", 8, 2.1, 2.0, "", Relation::less_equal).pass);
}

TEST(TermBounds, Level2Table) {
    const auto certs = verify_term_bounds(12, Level(2));
    ASSERT_TRUE(all_pass(certs));
    const auto* argmax = find(certs, "term-argmax:(1,1)");
    ASSERT_NE(argmax, nullptr);
    EXPECT_TRUE(argmax->pass);
    EXPECT_NE(find(certs, "term:N=2:(1,1)"), nullptr);
}

TEST(TermBounds, OneOneMaximizedAtEndpoint) {
    const double hi = 3 * kPi / 4;
    EXPECT_NEAR(v_k(8, Level(2), 1, 1, hi), 1.0, 1e-12);
    for (int j = 0; j < 1000; ++j) {
        const double theta = kPi / 2 + (hi - kPi / 2) * j / 1000.0;
        EXPECT_LT(v_k(8, Level(2), 1, 1, theta), 1.0);
    }
}

TEST(TermBounds, Level3OneTwoCeiling) {
    const double hi = 5 * kPi / 6;
    for (int k : {8, 20}) {
        double worst = 0;
        for (int j = 0; j <= 10001; ++j) {
            worst = std::max(worst, v_k(k, Level(3), 1, 2, kPi / 2 + (hi - kPi / 2) * j / 10001.0));
        }
        EXPECT_LE(worst, std::pow(1.0 / 7, k / 2.0) * (1 + 1e-12));
    }
    const auto certs = verify_term_bounds(8, Level(3));
    EXPECT_TRUE(all_pass(certs));
    const auto* c = find(certs, "term:N=5:(1,2)");
    ASSERT_NE(c, nullptr);
    EXPECT_NEAR(c->rhs, std::pow(1.0 / 7, 4), 1e-18);
}

TEST(TermBounds, CountAtTwentyFive) {
    // coprime (c, d), c odd, c^2 + d^2 = 25: (+-3, +-4), (+-5, 0)? 5,0 not coprime
    int count = 0;
    for (long c = -5; c <= 5; ++c) {
        for (long d = -5; d <= 5; ++d) {
            if (c * c + d * d == 25 && c % 2 != 0 && std::gcd(c, d) == 1) ++count;
        }
    }
    EXPECT_LE(count, 15);
    long lib = 0;
    for (const auto& pr : admissible_pairs(Level(2), 25, false)) {
        lib += pr.norm() == 25 ? 1 : 0;
    }
    EXPECT_EQ(lib, count);
}

TEST(TermBounds, RejectsLevelOne) { EXPECT_THROW(verify_term_bounds(8, Level(1)), std::invalid_argument); }

TEST(EndpointSign, Examples) {
    EXPECT_LT(endpoint_sign(Weight(8), Level(2)).value, 0);
    EXPECT_GT(endpoint_sign(Weight(16), Level(2)).value, 0);
    EXPECT_LT(endpoint_sign(Weight(12), Level(3)).value, 0);
    EXPECT_GT(endpoint_sign(Weight(24), Level(3)).value, 0);
    EXPECT_THROW(endpoint_sign(Weight(10), Level(2)), std::invalid_argument);
}

TEST(EndpointSign, AlternatesWithFactorization) {
    for (int p : {2, 3}) {
        const int period = p == 2 ? 8 : 12;
        for (int n = 1; n <= 12; ++n) {
            const auto w = endpoint_sign(Weight(period * n), Level(p));
            EXPECT_EQ(w.predicted_sign, n % 2 == 0 ? 1 : -1);
            EXPECT_EQ(w.value > 0 ? 1 : -1, w.predicted_sign) << p << " " << n;
            EXPECT_LT(w.factorization_residual, 1e-8);
            EXPECT_GT(std::abs(w.value), w.error);
        }
    }
}

TEST(Suite, R1LessThanTwo) {
    const auto c = r1_lt_2_for_k_ge_8();
    EXPECT_TRUE(c.pass) << c.detail;
    EXPECT_NEAR(c.margin, 2 - 1.29658, 1e-4);
    EXPECT_NEAR(2 - r1_bound(12), 2 - 1.03562, 1e-4);
    EXPECT_NEAR(2 - r1_bound(400), 1.0, 1e-12);
}

TEST(Suite, SmallWeightsInformational) {
    const auto certs = certificates_for(6, Level(3));
    ASSERT_EQ(certs.size(), 1u);
    EXPECT_TRUE(certs[0].informational);
    EXPECT_FALSE(certs[0].pass);
    EXPECT_EQ(certs[0].name, "r3star-raw");
}

TEST(Suite, SortedAndPassing) {
    for (int p : {2, 3}) {
        const auto certs = certificate_suite(Level(p), 8, 16);
        for (std::size_t i = 1; i < certs.size(); ++i) {
            EXPECT_LE(std::tie(certs[i - 1].name, certs[i - 1].k), std::tie(certs[i].name, certs[i].k));
        }
        for (const auto& c : certs) {
            EXPECT_TRUE(c.pass || c.informational) << c.name << " k=" << c.k << " " << c.detail;
        }
        EXPECT_NE(find(certs, "tail-domination"), nullptr);
    }
}

TEST(Suite, Reproducible) {
    const auto a = certificates_for(12, Level(2));
    const auto b = certificates_for(12, Level(2));
    ASSERT_EQ(a.size(), b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        EXPECT_EQ(a[i].lhs_max, b[i].lhs_max);
        EXPECT_EQ(a[i].margin, b[i].margin);
    }
}

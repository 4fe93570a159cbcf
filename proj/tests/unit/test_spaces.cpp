#include <set>

#include <gtest/gtest.h>

#include "fricke/spaces.hpp"

using namespace fricke;

namespace {

QSeries e(int k, int p, int n = 50) { return fricke_qseries(Weight(k), Level(p), n); }

std::vector<int> leading_exponents(const SpaceDescriptor& d) { return d.leading; }

}  // namespace

TEST(Series, ProductIdentities) {
    EXPECT_EQ(e(4, 2) * e(6, 2), e(10, 2));
    const auto d8 = build_delta(DeltaForm::d3_8, 50);
    const auto d10 = build_delta(DeltaForm::d3_10, 50);
    EXPECT_EQ(build_delta(DeltaForm::d3_12_1, 50), d8 * e(4, 3));
    EXPECT_EQ(build_delta(DeltaForm::d3_14, 50), d10 * e(4, 3));
    const auto d12_0 = build_delta(DeltaForm::d3_12_0, 50);
    EXPECT_EQ(d12_0 * e(4, 3), (d8 * d8).truncated(d12_0.truncation()));
}

TEST(Series, QuotientHasDoubleZero) {
    const auto d8 = build_delta(DeltaForm::d3_8, 50);
    const auto q = (d8 * d8) / e(4, 3);
    EXPECT_EQ(q.leading(), 2);
    EXPECT_EQ(q.weight(), 12);
}

TEST(Delta, CuspFormsAndLeadingCoefficients) {
    struct Want {
        DeltaForm d;
        int lead;
        Rational a_lead;
        Rational a_next;
    };
    // frozen from an independent expansion of the defining E* combinations
    const std::vector<Want> table = {
        {DeltaForm::delta2, 1, 1, -8},  {DeltaForm::d3_8, 1, 1, 6},     {DeltaForm::d3_10, 1, 1, -36},
        {DeltaForm::d3_12_0, 2, 1, {}}, {DeltaForm::d3_12_1, 1, 1, 30}, {DeltaForm::d3_14, 1, 1, -12},
    };
    for (const auto& w : table) {
        const auto s = build_delta(w.d, 50);
        EXPECT_EQ(s[0], 0) << to_string(w.d);
        EXPECT_EQ(s.leading(), w.lead) << to_string(w.d);
        EXPECT_EQ(s[w.lead], w.a_lead) << to_string(w.d);
        if (w.d != DeltaForm::d3_12_0) {
            EXPECT_EQ(s[2], w.a_next) << to_string(w.d);
        }
        EXPECT_EQ(s.weight(), delta_weight(w.d));
    }
}

TEST(Delta, Delta2FromDivisorSums) {
    // a_1 of E*_{4,2} = 240/5, of E*_{8,2} = 480/17, so 17/1152 (2 * 48 - 480/17) = 1
    const Rational a1 = Rational(17, 1152) * (2 * Rational(240, 5) - Rational(480, 17));
    EXPECT_EQ(a1, 1);
    EXPECT_EQ(build_delta(DeltaForm::delta2, 10)[1], a1);
}

TEST(Delta, NamesRoundTrip) {
    for (auto d : {DeltaForm::delta2, DeltaForm::d3_8, DeltaForm::d3_10, DeltaForm::d3_12_0, DeltaForm::d3_12_1,
                   DeltaForm::d3_14}) {
        EXPECT_EQ(parse_delta(to_string(d)), d);
    }
    EXPECT_THROW(parse_delta("d3_9"), std::invalid_argument);
    EXPECT_THROW(build_delta(DeltaForm::delta2, 1), std::invalid_argument);
}

TEST(Dimension, Examples) {
    EXPECT_EQ(dim_space(2, Level(2)), 0);
    EXPECT_EQ(dim_space(10, Level(2)), 1);  // 10 = 2 mod 8, spanned by E*10 alone
    EXPECT_EQ(dim_space(16, Level(2)), 3);
    EXPECT_EQ(dim_space(12, Level(3)), 3);
    EXPECT_EQ(dim_space(0, Level(3)), 1);
    EXPECT_EQ(dim_space(-4, Level(2)), 0);
}

TEST(Basis, Examples) {
    const auto b8 = build_basis(8, Level(2));
    EXPECT_EQ(b8.dimension, 2);
    EXPECT_EQ(leading_exponents(b8), (std::vector<int>{0, 1}));
    EXPECT_EQ(b8.basis[0], e(8, 2));
    EXPECT_EQ(b8.basis[1], build_delta(DeltaForm::delta2, 50));

    const auto b12 = build_basis(12, Level(3));
    EXPECT_EQ(leading_exponents(b12), (std::vector<int>{0, 1, 2}));

    const auto b4 = build_basis(4, Level(2));
    ASSERT_EQ(b4.basis.size(), 1u);
    EXPECT_EQ(b4.basis[0], e(4, 2));
}

TEST(Basis, DimensionConsistency) {
    for (int p : {2, 3}) {
        for (int k = 4; k <= 60; k += 2) {
            const auto d = build_basis(k, Level(p), 50);
            EXPECT_EQ(int(d.basis.size()), dim_space(k, Level(p))) << p << " " << k;
            EXPECT_EQ(d.dimension, dim_space(k, Level(p)));
            const std::set<int> distinct(d.leading.begin(), d.leading.end());
            EXPECT_EQ(distinct.size(), d.leading.size());
            for (const auto& s : d.basis) {
                EXPECT_EQ(s.weight(), k);
            }
        }
    }
}

TEST(Basis, EveryGeneratorLiesInSpan) {
    // the level-3 spanning set is redundant; each generator must reduce to zero
    const auto d = build_basis(36, Level(3), 50);
    EXPECT_GT(d.generators.size(), d.basis.size());
}

TEST(Appendix, TableRows) {
    const auto certs = verify_appendix_table(50);
    EXPECT_EQ(certs.size(), 44u);
    for (const auto& c : certs) {
        EXPECT_TRUE(c.pass) << c.name << ": measured " << c.lhs_max << ", table " << c.rhs;
    }
}

TEST(MinOrder, Examples) {
    const auto c10 = min_order_bound_check(Weight(10), Level(2));
    EXPECT_TRUE(c10.pass) << c10.detail;
    const auto c8 = min_order_bound_check(Weight(8), Level(3));
    EXPECT_TRUE(c8.pass) << c8.detail;
    const auto c16 = min_order_bound_check(Weight(16), Level(2));
    EXPECT_TRUE(c16.pass) << c16.detail;
}

#include "dwork/charcount.hpp"
#include "dwork/counting.hpp"

#include <gtest/gtest.h>

using namespace dwork;

namespace {

// nonzero-coordinate affine count for the Fermat cubic, the oracle for N*
BigInt cubic_star_oracle(uint32_t p, uint32_t psi) {
    ExtField F = make_ext_field(p, 1);
    uint64_t cnt = 0;
    for (uint32_t x = 1; x < p; ++x)
        for (uint32_t y = 1; y < p; ++y)
            for (uint32_t z = 1; z < p; ++z) {
                FieldElem v = F.add(F.add(F.pow(FieldElem{x}, 3), F.pow(FieldElem{y}, 3)),
                                    F.pow(FieldElem{z}, 3));
                FieldElem m = F.mul(F.mul(FieldElem{x}, FieldElem{y}), FieldElem{z});
                v = F.sub(v, F.mul(F.mul(F.from_int(3), FieldElem{psi}), m));
                if (F.is_zero(v)) ++cnt;
            }
    return BigInt(static_cast<unsigned long>(cnt));
}

}  // namespace

TEST(TruncatedHypergeometric, Examples) {
    EXPECT_EQ(truncated_hypergeometric(7, 0), 1u);  // only m = 0 survives
    // p = 7: floor(7/5) = 1, 120 = 1 mod 7 so the value is 1 + lam
    for (uint32_t lam = 0; lam < 7; ++lam)
        EXPECT_EQ(truncated_hypergeometric(7, lam), (1 + lam) % 7);
}

TEST(QuinticCount, MatchesBruteForceP7) {
    ExtField F7 = make_ext_field(7, 1);
    DworkFamily quintic{5};
    for (uint32_t psi : {2u, 3u, 4u}) {
        auto res = quintic_count(psi, 7, 5);
        BigInt brute = count_projective(defining_polynomial(quintic, FieldElem{psi}, F7), F7).count;
        ASSERT_TRUE(res.projective.has_value());
        EXPECT_EQ(*res.projective, brute) << "psi=" << psi;
        // the formula value is the affine cone count
        BigInt cone = count_affine_cone(defining_polynomial(quintic, FieldElem{psi}, F7), F7);
        EXPECT_EQ(*res.resolved, cone);
        EXPECT_TRUE(res.printed_forms_agree);
        // mod-p truncation targets the cone value
        uint32_t lam = quintic_lambda_bar(psi, 7);
        EXPECT_EQ(res.value.value() % 7, BigInt(truncated_hypergeometric(7, lam)));
    }
}

TEST(QuinticCount, MatchesBruteForceP13) {
    ExtField F = make_ext_field(13, 1);
    DworkFamily quintic{5};
    auto res = quintic_count(3, 13, 5);
    BigInt brute = count_projective(defining_polynomial(quintic, FieldElem{3}, F), F).count;
    ASSERT_TRUE(res.projective.has_value());
    EXPECT_EQ(*res.projective, brute);
    // torus piece agrees with the direct nonzero-coordinate count
    SingularMirror dummy{5};
    uint64_t cnt = 0;
    for (uint32_t a = 1; a < 13; ++a)
        for (uint32_t b = 1; b < 13; ++b)
            for (uint32_t c = 1; c < 13; ++c)
                for (uint32_t d = 1; d < 13; ++d)
                    for (uint32_t e = 1; e < 13; ++e) {
                        FieldElem v = F.zero();
                        for (uint32_t t : {a, b, c, d, e}) v = F.add(v, F.pow(FieldElem{t}, 5));
                        FieldElem m = F.one();
                        for (uint32_t t : {a, b, c, d, e}) m = F.mul(m, FieldElem{t});
                        v = F.sub(v, F.mul(F.mul(F.from_int(5), FieldElem{3}), m));
                        if (F.is_zero(v)) ++cnt;
                    }
    EXPECT_EQ(res.torus_value.value(), BigInt(static_cast<unsigned long>(cnt)) %
                                           pow_int(BigInt(13), 5));
}

TEST(QuinticCount, PrecisionCoherenceAndErrors) {
    auto n5 = quintic_count(2, 7, 5);
    auto n3 = quintic_count(2, 7, 3);
    EXPECT_EQ(n5.value.value() % pow_int(BigInt(7), 3), n3.value.value());
    EXPECT_FALSE(n3.projective.has_value());  // 7^3 cannot bound the count

    EXPECT_THROW(quintic_count(2, 11, 5), std::domain_error);  // 5 | 10
    EXPECT_THROW(quintic_count(0, 7, 5), std::domain_error);
    EXPECT_THROW(quintic_count(1, 7, 5), std::domain_error);   // psi^5 = 1
}

TEST(QuinticCount, DependsOnlyOnLambda) {
    // psi and psi' with the same lambda = (5 psi)^-5 give identical values;
    // over F_p lambda determines psi^5, so compare two psi with equal fifth powers
    // (p = 11 excluded; use p = 13 where fifth-powering is a bijection, so
    // instead assert the formula input is lambda by recomputing from lambda)
    auto a = quintic_count(2, 13, 4);
    uint32_t lam = quintic_lambda_bar(2, 13);
    // any psi' with (5 psi')^5 = 1/lam gives the same count; here fifth powers
    // are unique so this is a consistency restatement
    EXPECT_EQ(quintic_lambda_bar(2, 13), lam);
    EXPECT_EQ(a.value.value() % 13,
              BigInt(truncated_hypergeometric(13, lam)));
}

TEST(CubicCount, CalibratedAgainstBruteForce) {
    // one-time constant calibration at (p, psi) = (5, 2), then further pairs
    struct Case { uint32_t p, psi; };
    for (Case c : {Case{5, 2}, Case{5, 3}, Case{11, 2}, Case{11, 3}, Case{17, 2}, Case{17, 3},
                   Case{17, 5}}) {
        auto res = cubic_count(c.psi, c.p, 4);
        BigInt oracle = cubic_star_oracle(c.p, c.psi);
        ASSERT_TRUE(res.resolved.has_value()) << c.p;
        EXPECT_EQ(*res.resolved, oracle) << "p=" << c.p << " psi=" << c.psi;
    }
}

TEST(CubicCount, Preconditions) {
    EXPECT_THROW(cubic_count(2, 7, 3), std::domain_error);  // 3 | 6
    EXPECT_THROW(cubic_count(1, 5, 3), std::domain_error);  // psi^3 = 1
    EXPECT_THROW(cubic_count(0, 5, 3), std::domain_error);
}

TEST(SemiPeriod, ModPCongruence) {
    // the hard gate: the five-term sum is congruent to the cone count mod p
    ExtField F7 = make_ext_field(7, 1);
    DworkFamily quintic{5};
    for (uint32_t psi : {2u, 3u}) {
        auto sp = semiperiod_count(psi, 7, 5);
        BigInt cone = count_affine_cone(defining_polynomial(quintic, FieldElem{psi}, F7), F7);
        EXPECT_EQ(sp.value.value() % 7, cone % 7) << "psi=" << psi;
        // mod p the sum reduces to the truncated hypergeometric series
        uint32_t lam = quintic_lambda_bar(psi, 7);
        EXPECT_EQ(sp.value.value() % 7, BigInt(truncated_hypergeometric(7, lam)));
    }
}

TEST(SemiPeriod, ResidualReport) {
    // the mod-p^5 claim is an experiment: record that the residual against
    // brute force is divisible by a higher power of p than the guarantee
    ExtField F7 = make_ext_field(7, 1);
    DworkFamily quintic{5};
    auto sp = semiperiod_count(2, 7, 5);
    BigInt cone = count_affine_cone(defining_polynomial(quintic, FieldElem{2}, F7), F7);
    BigInt diff = (sp.value.value() - cone) % pow_int(BigInt(7), 5);
    if (diff < 0) diff += pow_int(BigInt(7), 5);
    long v = diff == 0 ? 5 : valuation(diff, BigInt(7));
    EXPECT_GE(v, 1);
    RecordProperty("semiperiod_residual_valuation_p7_psi2", static_cast<int>(v));
}

#include "dwork/padic.hpp"

#include <gtest/gtest.h>

using namespace dwork;

TEST(Teichmuller, PrimeFieldExamples) {
    ExtField F7 = make_ext_field(7, 1);
    // T(1) = 1 at any precision
    TeichValue t1 = teichmuller(F7.one(), F7, 4);
    EXPECT_EQ(t1.scalar(), BigInt(1));

    // p=7, N=2: T(2) = 30; 30 = 2 mod 7 and 30^6 = 1 mod 49
    TeichValue t2 = teichmuller(FieldElem{2}, F7, 2);
    EXPECT_EQ(t2.scalar(), BigInt(30));

    EXPECT_THROW(teichmuller(F7.zero(), F7, 2), std::invalid_argument);

    // T(x)^(p-1) = 1 mod p^N for all x
    BigInt M = pow_int(BigInt(7), 5);
    for (uint32_t x = 1; x < 7; ++x) {
        ModRing t(teichmuller(FieldElem{x}, F7, 5).scalar(), M);
        EXPECT_EQ(t.pow(6).value(), BigInt(1));
        EXPECT_EQ(t.value() % 7, BigInt(x));
    }
}

TEST(Teichmuller, Multiplicativity) {
    ExtField F = make_ext_field(11, 1);
    unsigned N = 4;
    BigInt M = pow_int(BigInt(11), N);
    for (uint32_t x = 1; x < 11; ++x)
        for (uint32_t y = 1; y < 11; ++y) {
            BigInt tx = teichmuller(FieldElem{x}, F, N).scalar();
            BigInt ty = teichmuller(FieldElem{y}, F, N).scalar();
            BigInt txy = teichmuller(F.mul(FieldElem{x}, FieldElem{y}), F, N).scalar();
            EXPECT_EQ(tx * ty % M, txy);
        }
}

TEST(Teichmuller, ExtensionField) {
    ExtField F9 = make_ext_field(3, 2);
    unsigned N = 3;
    BigInt M = pow_int(BigInt(3), N);
    for (auto x : enumerate(F9)) {
        if (F9.is_zero(x)) continue;
        TeichValue t = teichmuller(x, F9, N);
        // reduction mod p recovers the coefficients of x
        for (uint32_t i = 0; i < 2; ++i)
            EXPECT_EQ(t.lift[i] % 3, BigInt(F9.coeff(x, i)));
        // t^(q-1) = 1 in the unramified ring
        auto one = detail::unram_pow(t.lift, BigInt(8), F9.modulus(), M);
        EXPECT_EQ(one[0], BigInt(1));
        EXPECT_EQ(one[1], BigInt(0));
        // t^q = t (root-of-unity fixed point)
        EXPECT_EQ(detail::unram_pow(t.lift, BigInt(9), F9.modulus(), M), t.lift);
    }
}

TEST(CharacterSums, Orthogonality) {
    // sum over F_p^* of T^i(x): 0 unless (p-1) | i, in which case p-1
    uint32_t p = 7;
    unsigned N = 3;
    BigInt M = pow_int(BigInt(p), N);
    auto T = teich_table(p, N);
    for (long i = 0; i <= 12; ++i) {
        BigInt acc = 0;
        for (uint32_t x = 1; x < p; ++x) {
            BigInt t;
            mpz_powm_ui(t.get_mpz_t(), T[x].get_mpz_t(), i, M.get_mpz_t());
            acc = (acc + t) % M;
        }
        if (i % (p - 1) == 0)
            EXPECT_EQ(acc, BigInt(p - 1)) << "i=" << i;
        else
            EXPECT_EQ(acc, BigInt(0)) << "i=" << i;
    }
}

TEST(JacobiSum, Examples) {
    uint32_t p = 7;
    unsigned N = 3;
    // (0,0): all terms are 1, sum = p-2
    EXPECT_EQ(jacobi_sum(CharIndex{0}, CharIndex{0}, p, N).value(), BigInt(p - 2));
    // p=7, N=1: J(1,1) = 0 mod 7
    EXPECT_EQ(jacobi_sum(CharIndex{1}, CharIndex{1}, p, 1).value(), BigInt(0));
}

TEST(JacobiSum, MatchesComplexEmbedding) {
    // |J(a,b)| = sqrt(p) and G_a G_b / G_{a+b} = J(a,b) over C, a+b != 0
    for (uint32_t p : {5u, 7u, 11u}) {
        for (long a = 1; a + 2 < static_cast<long>(p); ++a) {
            long b = a + 1;
            if ((a + b) % (p - 1) == 0) continue;
            auto J = complex_jacobi_sum(CharIndex{a}, CharIndex{b}, p);
            EXPECT_NEAR(std::abs(J), std::sqrt(static_cast<double>(p)), 1e-9);
            auto Ga = complex_gauss_sum(CharIndex{a}, p).value;
            auto Gb = complex_gauss_sum(CharIndex{b}, p).value;
            auto Gab = complex_gauss_sum(CharIndex{a + b}, p).value;
            EXPECT_NEAR(std::abs(Ga * Gb / Gab - J), 0.0, 1e-9);
        }
    }
}

TEST(ComplexGauss, Identities) {
    // G_0 = -1 exactly (sum of all nontrivial p-th roots of unity)
    for (uint32_t p : {5u, 7u, 11u, 13u}) {
        auto G0 = complex_gauss_sum(CharIndex{0}, p).value;
        EXPECT_NEAR(G0.real(), -1.0, 1e-9);
        EXPECT_NEAR(G0.imag(), 0.0, 1e-9);
        for (long m = 1; m + 1 < static_cast<long>(p); ++m) {
            auto Gm = complex_gauss_sum(CharIndex{m}, p).value;
            auto Gmm = complex_gauss_sum(CharIndex{-m}, p).value;
            double sign = (m % 2 == 0) ? 1.0 : -1.0;
            EXPECT_NEAR(std::abs(Gm * Gmm - sign * static_cast<double>(p)), 0.0, 1e-9);
            EXPECT_NEAR(std::abs(Gm) * std::abs(Gm), static_cast<double>(p), 1e-9);
        }
    }
    // p = 3, m = 1: G_1 = zeta_3 - zeta_3^2 = i sqrt(3), G_1 G_{-1} = -3
    auto G1 = complex_gauss_sum(CharIndex{1}, 3).value;
    EXPECT_NEAR(G1.real(), 0.0, 1e-9);
    EXPECT_NEAR(G1.imag(), std::sqrt(3.0), 1e-9);
    auto Gm1 = complex_gauss_sum(CharIndex{-1}, 3).value;
    EXPECT_NEAR(std::abs(G1 * Gm1 + 3.0), 0.0, 1e-9);
}

TEST(GaussRatio, TrivialAndQuinticFactorization) {
    uint32_t p = 7;
    unsigned N = 3;
    // G_m / G_m = 1
    auto r = gauss_ratio({CharIndex{1}}, {CharIndex{1}}, p, N);
    EXPECT_EQ(r.exponent, 0);
    EXPECT_EQ(r.value().value(), BigInt(1));

    // G_1^5 / G_5 = J(1,1) J(1,2) J(1,3) J(1,4) for p = 7; all telescope
    // indices 2m, 3m, 4m, 5m stay nonzero mod 6.  The Jacobi product has
    // p-valuation 4 here, so the direct oracle runs at higher precision.
    auto q = gauss_ratio({CharIndex{1}, CharIndex{1}, CharIndex{1}, CharIndex{1}, CharIndex{1}},
                         {CharIndex{5}}, p, N);
    unsigned No = 10;
    ModRing expect =
        ModRing(1, pow_int(BigInt(p), No)) * jacobi_sum(CharIndex{1}, CharIndex{1}, p, No) *
        jacobi_sum(CharIndex{2}, CharIndex{1}, p, No) *
        jacobi_sum(CharIndex{3}, CharIndex{1}, p, No) *
        jacobi_sum(CharIndex{4}, CharIndex{1}, p, No);
    long e = valuation(expect.value(), BigInt(p));
    EXPECT_EQ(q.exponent, e);
    EXPECT_EQ(q.unit.value(), (expect.value() / pow_int(BigInt(p), e)) % pow_int(BigInt(p), N));
}

TEST(GaussRatio, DegenerateAndNegativeValuation) {
    uint32_t p = 7;
    // G_1 / G_2 is ramified: residual indices differ
    EXPECT_THROW(gauss_ratio({CharIndex{1}}, {CharIndex{2}}, p, 3), degenerate_ratio_error);

    // G_15 / G_3^5 has negative valuation at p = 7 (m = 3 crosses zero twice)
    auto r = gauss_ratio({CharIndex{15}},
                         {CharIndex{3}, CharIndex{3}, CharIndex{3}, CharIndex{3}, CharIndex{3}},
                         p, 3);
    EXPECT_EQ(r.exponent, -2);
    EXPECT_FALSE(r.integral());
    EXPECT_THROW(r.value(), std::domain_error);
    // G_3^2 = -7: unit is -1 after scaling out p^2... full product G_3^5 = 49 G_3
    EXPECT_EQ(r.unit.value(), ModRing(1, pow_int(BigInt(7), 3)).value());
}

TEST(GaussRatio, PrecisionCoherence) {
    // raising precision and truncating back reproduces the lower-precision value
    uint32_t p = 13;
    auto lo = gauss_ratio({CharIndex{2}, CharIndex{3}}, {CharIndex{5}}, p, 3);
    auto hi = gauss_ratio({CharIndex{2}, CharIndex{3}}, {CharIndex{5}}, p, 6);
    BigInt M3 = pow_int(BigInt(p), 3);
    EXPECT_EQ(hi.unit.value() % M3, lo.unit.value());
    EXPECT_EQ(hi.exponent, lo.exponent);
}

TEST(ScaledPadic, Arithmetic) {
    BigInt p(5), M = pow_int(p, 6);
    ScaledPadic a = ScaledPadic::from_modring(ModRing(50, M), p);  // 2 * 5^2
    EXPECT_EQ(a.exp(), 2);
    EXPECT_EQ(a.unit().value(), BigInt(2));
    ScaledPadic b = ScaledPadic::from_modring(ModRing(15, M), p);  // 3 * 5
    ScaledPadic q = a / b;
    EXPECT_EQ(q.exp(), 1);
    ModRing v = q.to_modring(4);
    // 50/15 = 10/3: 3^-1 mod 625 = 417, 10*417 = 4170 = 420 mod 625
    EXPECT_EQ(v.value(), BigInt(10) * ModRing(3, pow_int(p, 4)).inverse().value() %
                              pow_int(p, 4));
}

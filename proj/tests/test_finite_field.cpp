#include "dwork/finite_field.hpp"

#include <gtest/gtest.h>

#include <random>
#include <set>

using namespace dwork;

TEST(MakeExtField, PrimeFieldExamples) {
    ExtField F7 = make_ext_field(7, 1);
    EXPECT_EQ(F7.q(), 7u);
    EXPECT_EQ(F7.generator().idx, 3u);  // 2 has order 3, 3 is primitive
    // direct powering check of the order
    EXPECT_EQ(F7.multiplicative_order(F7.generator()), 6u);

    ExtField F2 = make_ext_field(2, 1);
    EXPECT_EQ(F2.generator().idx, 1u);  // F_2^* is trivial

    EXPECT_THROW(make_ext_field(6, 1), std::invalid_argument);
    EXPECT_THROW(make_ext_field(2, 30), std::domain_error);  // cap
}

TEST(MakeExtField, NineElements) {
    ExtField F9 = make_ext_field(3, 2);
    EXPECT_EQ(F9.q(), 9u);
    // first irreducible monic in index order is t^2 + 1
    EXPECT_EQ(F9.modulus(), (std::vector<uint32_t>{1, 0, 1}));
    EXPECT_EQ(F9.multiplicative_order(F9.generator()), 8u);
}

TEST(Enumerate, CardinalityAndOrder) {
    ExtField F2 = make_ext_field(2, 1);
    auto v2 = enumerate(F2);
    ASSERT_EQ(v2.size(), 2u);
    EXPECT_TRUE(F2.is_zero(v2[0]));
    EXPECT_EQ(v2[1].idx, 1u);

    ExtField F7 = make_ext_field(7, 1);
    std::set<uint32_t> seen;
    for (auto e : enumerate(F7)) seen.insert(e.idx);
    EXPECT_EQ(seen.size(), 7u);

    EXPECT_EQ(enumerate(make_ext_field(3, 2)).size(), 9u);
}

TEST(Trace, Examples) {
    ExtField F7 = make_ext_field(7, 1);
    for (auto x : enumerate(F7)) EXPECT_EQ(F7.trace(x), x);  // r = 1: empty orbit sum

    ExtField F9 = make_ext_field(3, 2);
    EXPECT_TRUE(F9.is_zero(F9.trace(F9.zero())));
    // oracle: Tr(x) = x + x^3 by direct polynomial arithmetic
    for (auto x : enumerate(F9)) {
        FieldElem direct = F9.add(x, F9.pow(x, 3));
        EXPECT_EQ(F9.trace(x), direct);
        EXPECT_LT(F9.trace(x).idx, F9.p());  // lands in the prime subfield
    }
}

TEST(Trace, Linearity) {
    ExtField F = make_ext_field(5, 2);
    std::mt19937 rng(3);
    std::uniform_int_distribution<uint32_t> dist(0, static_cast<uint32_t>(F.q() - 1));
    for (int i = 0; i < 100; ++i) {
        FieldElem a{dist(rng)}, b{dist(rng)};
        EXPECT_EQ(F.trace(F.add(a, b)), F.add(F.trace(a), F.trace(b)));
        uint32_t c = dist(rng) % F.p();
        EXPECT_EQ(F.trace(F.mul(F.from_int(c), a)), F.mul(F.from_int(c), F.trace(a)));
    }
}

TEST(Frobenius, PermutesAndFixesPrimeField) {
    ExtField F = make_ext_field(3, 3);
    std::set<uint32_t> image;
    for (auto x : enumerate(F)) image.insert(F.frobenius(x).idx);
    EXPECT_EQ(image.size(), F.q());
    unsigned fixed = 0;
    for (auto x : enumerate(F))
        if (F.frobenius(x) == x) ++fixed;
    EXPECT_EQ(fixed, F.p());  // exactly the prime subfield
}

TEST(Generator, PowersEnumerateNonzero) {
    ExtField F = make_ext_field(5, 2);
    std::set<uint32_t> seen;
    FieldElem g = F.generator(), cur = F.one();
    for (uint64_t k = 1; k <= F.q() - 1; ++k) {
        cur = F.mul(cur, g);
        seen.insert(cur.idx);
    }
    EXPECT_EQ(seen.size(), F.q() - 1);
}

TEST(Embedding, SubfieldIntoExtension) {
    ExtField F5 = make_ext_field(5, 1);
    ExtField F25 = make_ext_field(5, 2);
    auto emb = embedding_map(F5, F25);
    // ring homomorphism on a sample of pairs
    for (uint32_t a = 0; a < 5; ++a)
        for (uint32_t b = 0; b < 5; ++b) {
            EXPECT_EQ(emb[F5.add(FieldElem{a}, FieldElem{b}).idx],
                      F25.add(emb[a], emb[b]));
            EXPECT_EQ(emb[F5.mul(FieldElem{a}, FieldElem{b}).idx],
                      F25.mul(emb[a], emb[b]));
        }
    ExtField F625 = make_ext_field(5, 4);
    auto emb2 = embedding_map(F25, F625);
    FieldElem g = F25.generator();
    EXPECT_EQ(F625.multiplicative_order(emb2[g.idx]), F25.q() - 1);
}

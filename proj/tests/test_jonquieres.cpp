#include "cremona/jonquieres.hpp"
#include "cremona/sampling.hpp"

#include <gtest/gtest.h>

using namespace cremona;
namespace smp = cremona::sampling;

namespace {

UniPoly X() { return UniPoly::x(); }
UniPoly quartic() { return X().pow(4) - UniPoly{1}; }
UniPoly sextic() { return X().pow(6) + X() + UniPoly{1}; }

// Brute-force order in PGL: smallest k <= 12 with m^k scalar, else 0.
int brute_force_order(const Mat2RF& m) {
    Mat2RF p = m;
    for (int k = 1; k <= 12; ++k) {
        if (p.is_scalar()) return k;
        p = p * m;
    }
    return 0;
}

}  // namespace

TEST(JonqElement, ConstructionChecks) {
    EXPECT_THROW(JonqElement(RatFunc(1), RatFunc(0), X().pow(2) - UniPoly{1}), JonquieresError);
    EXPECT_THROW(JonqElement(RatFunc(1), RatFunc(0), X().pow(5) + X()), JonquieresError);
    EXPECT_THROW(JonqElement(RatFunc(1), RatFunc(0), (X() - UniPoly{1}).pow(2) * (X().pow(2) + UniPoly{1})),
                 JonquieresError);
    // a1^2 - h a2^2 = 0 is impossible for squarefree nonconstant h, except a1 = a2 = 0
    EXPECT_THROW(JonqElement(RatFunc(0), RatFunc(0), quartic()), JonquieresError);
    EXPECT_EQ(JonqElement::identity(sextic()).curve_genus(), 2);
}

TEST(PglOrder, Examples) {
    EXPECT_EQ(pgl_order(Mat2RF{RatFunc(0), RatFunc(-1), RatFunc(1), RatFunc(1)}), PglOrder::Three);
    EXPECT_EQ(pgl_order(Mat2RF{RatFunc(0), RatFunc(quartic()), RatFunc(1), RatFunc(0)}), PglOrder::Two);
    EXPECT_EQ(pgl_order(Mat2RF{RatFunc(3), RatFunc(0), RatFunc(0), RatFunc(3)}), PglOrder::One);
    EXPECT_EQ(pgl_order(Mat2RF{RatFunc(1), RatFunc(1), RatFunc(0), RatFunc(1)}), PglOrder::Infinite);
    EXPECT_EQ(pgl_order(Mat2RF{RatFunc(1), RatFunc(-1), RatFunc(1), RatFunc(1)}), PglOrder::Four);
    EXPECT_EQ(pgl_order(Mat2RF{RatFunc(2), RatFunc(-1), RatFunc(1), RatFunc(1)}), PglOrder::Six);
    EXPECT_THROW((void)pgl_order(Mat2RF{RatFunc(1), RatFunc(1), RatFunc(1), RatFunc(1)}), JonquieresError);
}

TEST(PglOrder, AgreesWithRepeatedPowers) {
    smp::Rng rng(51);
    // constant matrices with small entries hit every finite order
    for (int t = 0; t < 300; ++t) {
        Mat2RF m{RatFunc(smp::uniform(rng, -2, 2)), RatFunc(smp::uniform(rng, -2, 2)),
                 RatFunc(smp::uniform(rng, -2, 2)), RatFunc(smp::uniform(rng, -2, 2))};
        if (m.det().is_zero()) continue;
        EXPECT_EQ(static_cast<int>(pgl_order(m)), brute_force_order(m));
    }
}

TEST(LemInv, Examples) {
    auto u = JonqElement(RatFunc(X()), RatFunc(1), quartic());
    auto rep = leminv_check(u);
    EXPECT_EQ(rep.order, PglOrder::Infinite);
    EXPECT_TRUE(rep.lemma_holds);
    EXPECT_EQ(leminv_check(JonqElement(RatFunc(0), RatFunc(X()), quartic())).order, PglOrder::Two);
    EXPECT_EQ(leminv_check(JonqElement::identity(quartic())).order, PglOrder::One);
}

TEST(Torus, GroupLaws) {
    smp::Rng rng(52);
    for (const auto& h : {quartic(), sextic()}) {
        for (int t = 0; t < 40; ++t) {
            auto u = smp::jonq(rng, h), v = smp::jonq(rng, h), w = smp::jonq(rng, h);
            EXPECT_EQ(mul(mul(u, v), w), mul(u, mul(v, w)));
            EXPECT_EQ(mul(u, v), mul(v, u));
            EXPECT_EQ(mul(u, invert(u)), JonqElement::identity(h));
            EXPECT_EQ(mul(u, v).det(), u.det() * v.det());
            // the element product is the matrix product
            EXPECT_EQ(mul(u, v).matrix(), u.matrix() * v.matrix());
        }
    }
    EXPECT_THROW(mul(JonqElement::identity(quartic()), JonqElement::identity(sextic())), JonquieresError);
}

TEST(Torus, FixesHyperellipticIdentity) {
    smp::Rng rng(53);
    for (const auto& h : {quartic(), sextic()}) {
        for (int t = 0; t < 30; ++t) EXPECT_TRUE(fixes_hyperelliptic(smp::jonq(rng, h, 2, 2)));
    }
}

TEST(ToCremona, FixesTheHyperellipticCurvePointwise) {
    smp::Rng rng(54);
    for (int t = 0; t < 10; ++t) {
        auto u = smp::jonq(rng, quartic());
        auto F = to_cremona(u);
        EXPECT_TRUE(fixes_curve_pointwise(F, hyperelliptic_curve(quartic())));
    }
    EXPECT_TRUE(is_identity(to_cremona(JonqElement::identity(sextic()))));
}

TEST(ToCremona, IsAHomomorphism) {
    smp::Rng rng(55);
    for (int t = 0; t < 8; ++t) {
        auto u = JonqElement(RatFunc(smp::rational(rng)), RatFunc(smp::nonzero_rational(rng)), quartic());
        auto v = JonqElement(RatFunc(smp::nonzero_rational(rng)), RatFunc(smp::rational(rng)), quartic());
        EXPECT_EQ(to_cremona(mul(u, v)), compose(to_cremona(u), to_cremona(v)));
    }
    auto u = smp::generic_jonq(rng, quartic());
    EXPECT_TRUE(is_identity(compose(to_cremona(u), to_cremona(invert(u)))));
}

TEST(ToCremona, NonTorusMatrixDoesNotFixTheCurve) {
    Mat2RF m{RatFunc(1), RatFunc(1), RatFunc(0), RatFunc(1)};  // y -> y + 1
    EXPECT_FALSE(fixes_curve_pointwise(to_cremona(m), hyperelliptic_curve(quartic())));
}

TEST(HyperellipticCurve, Form) {
    auto c = hyperelliptic_curve(quartic());
    EXPECT_EQ(c.degree(), 4);
    EXPECT_EQ(c.coeff({0, 2, 2}), Rational(1));
    EXPECT_EQ(c.coeff({4, 0, 0}), Rational(-1));
    EXPECT_EQ(c.coeff({0, 0, 4}), Rational(1));
}

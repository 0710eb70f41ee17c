#include "cremona/cremona_map.hpp"
#include "cremona/sampling.hpp"

#include <gtest/gtest.h>

using namespace cremona;
namespace smp = cremona::sampling;

namespace {

TriHomPoly tx() { return TriHomPoly::x(); }
TriHomPoly ty() { return TriHomPoly::y(); }
TriHomPoly tz() { return TriHomPoly::z(); }

ProjPoint image_of(const CremonaMap& F, const ProjPoint& p) { return {F[0].eval(p), F[1].eval(p), F[2].eval(p)}; }

bool proportional(const ProjPoint& a, const ProjPoint& b) {
    return a[0] * b[1] == a[1] * b[0] && a[0] * b[2] == a[2] * b[0] && a[1] * b[2] == a[2] * b[1];
}

bool is_null(const ProjPoint& p) { return p[0].is_zero() && p[1].is_zero() && p[2].is_zero(); }

// Pointwise oracle: F o G agrees with applying G then F at random points
// where both sides are defined.
void expect_composition_pointwise(const CremonaMap& FG, const CremonaMap& F, const CremonaMap& G, smp::Rng& rng) {
    int used = 0;
    for (int t = 0; t < 40 && used < 10; ++t) {
        ProjPoint p{smp::rational(rng, 9), smp::rational(rng, 9), smp::rational(rng, 9)};
        if (is_null(p)) continue;
        ProjPoint gp = image_of(G, p);
        if (is_null(gp)) continue;
        ProjPoint fgp = image_of(F, gp), direct = image_of(FG, p);
        if (is_null(fgp) || is_null(direct)) continue;
        EXPECT_TRUE(proportional(fgp, direct));
        ++used;
    }
    EXPECT_GT(used, 0);
}

CremonaMap random_G(smp::Rng& rng) {
    return make_linear_G(smp::nonzero_rational(rng), smp::rational(rng), smp::rational(rng));
}

CremonaMap random_H(smp::Rng& rng) {
    return make_H_element(smp::ratfunc(rng, 1, 1), smp::nonzero_ratfunc(rng, 1, 1));
}

}  // namespace

TEST(CremonaMap, CanonicalForm) {
    auto F = CremonaMap::make({tx().scaled(2), ty().scaled(2), tz().scaled(2)});
    EXPECT_TRUE(is_identity(F));
    auto G = CremonaMap::make({tx() * tx(), tx() * ty(), tx() * tz()});
    EXPECT_TRUE(is_identity(G));
    EXPECT_FALSE(is_identity(CremonaMap::make({tx(), ty(), tx() + tz()})));
    EXPECT_THROW(CremonaMap::make({TriHomPoly(1), TriHomPoly(1), TriHomPoly(1)}), CremonaMapError);
    EXPECT_THROW(CremonaMap::make({tx(), ty() * ty(), tz()}), CremonaMapError);
}

TEST(LinearG, ConstructionAndParameters) {
    auto F = make_linear_G(2, 3, -1);
    EXPECT_EQ(F.degree(), 1);
    auto p = linear_G_parameters(F);
    ASSERT_TRUE(p.has_value());
    EXPECT_EQ((*p)[0], Rational(2));
    EXPECT_EQ((*p)[1], Rational(3));
    EXPECT_EQ((*p)[2], Rational(-1));
    EXPECT_TRUE(is_identity(make_linear_G(1, 0, 0)));
    EXPECT_THROW(make_linear_G(0, 1, 1), CremonaMapError);
    EXPECT_FALSE(linear_G_parameters(make_phi(1, 0)).has_value());
    EXPECT_FALSE(linear_G_parameters(CremonaMap::make({ty(), tx(), tz()})).has_value());
}

TEST(LinearG, ClosedUnderCompositionAndInverse) {
    smp::Rng rng(41);
    for (int t = 0; t < 50; ++t) {
        Rational a = smp::nonzero_rational(rng), b = smp::rational(rng), c = smp::rational(rng);
        Rational a2 = smp::nonzero_rational(rng), b2 = smp::rational(rng), c2 = smp::rational(rng);
        auto F = make_linear_G(a, b, c), G = make_linear_G(a2, b2, c2);
        auto FG = compose(F, G);
        auto p = linear_G_parameters(FG);
        ASSERT_TRUE(p.has_value());
        // (ax : y + bx : z + cx) after (a'x : y + b'x : z + c'x)
        EXPECT_EQ((*p)[0], a * a2);
        EXPECT_EQ((*p)[1], b2 + b * a2);
        EXPECT_EQ((*p)[2], c2 + c * a2);
        auto inv = make_linear_G(Rational(1) / a, -b / a, -c / a);
        EXPECT_TRUE(is_identity(compose(F, inv)));
        EXPECT_TRUE(is_identity(compose(inv, F)));
    }
}

TEST(HElement, UnitParameters) {
    auto H = make_H_element(RatFunc(1), RatFunc(1));
    auto expected = CremonaMap::make({tx() * tz(), ty() * (tx() + tz()), tz() * (tx() + tz())});
    EXPECT_EQ(H, expected);
    EXPECT_TRUE(is_identity(make_H_element(RatFunc(0), RatFunc(1))));
    EXPECT_THROW(make_H_element(RatFunc(1), RatFunc(0)), CremonaMapError);
}

TEST(HElement, AffineActionOracle) {
    // on z = 1 the map is (x, y) -> (x / (alpha(y) x + beta(y)), y)
    smp::Rng rng(42);
    for (int t = 0; t < 30; ++t) {
        RatFunc alpha = smp::ratfunc(rng, 1, 1), beta = smp::nonzero_ratfunc(rng, 1, 1);
        auto H = make_H_element(alpha, beta);
        for (int k = 0; k < 5; ++k) {
            Rational x0 = smp::rational(rng, 7), y0 = smp::rational(rng, 7);
            if (alpha.den().eval(y0).is_zero() || beta.den().eval(y0).is_zero()) continue;
            Rational a = alpha.num().eval(y0) / alpha.den().eval(y0), b = beta.num().eval(y0) / beta.den().eval(y0);
            Rational d = a * x0 + b;
            if (d.is_zero()) continue;
            ProjPoint img = image_of(H, {x0, y0, Rational(1)});
            if (is_null(img)) continue;
            EXPECT_TRUE(proportional(img, {x0 / d, y0, Rational(1)}));
        }
    }
}

TEST(Phi, IsAnInvolutionFixingTheLine) {
    smp::Rng rng(43);
    for (int t = 0; t < 10; ++t) {
        Rational mu = smp::rational(rng), nu = smp::rational(rng);
        if (mu.is_zero() && nu.is_zero()) continue;
        auto phi = make_phi(mu, nu);
        EXPECT_EQ(phi.degree(), 2);
        EXPECT_TRUE(is_identity(compose(phi, phi)));
        EXPECT_TRUE(fixes_curve_pointwise(phi, tx()));
        EXPECT_FALSE(fixes_curve_pointwise(phi, ty()));
    }
    EXPECT_THROW(make_phi(0, 0), CremonaMapError);
}

TEST(Compose, MatchesPointwiseApplication) {
    smp::Rng rng(44);
    for (int t = 0; t < 20; ++t) {
        auto F = t % 2 ? random_H(rng) : make_phi(smp::nonzero_rational(rng), smp::rational(rng));
        auto G = t % 3 ? random_G(rng) : random_H(rng);
        expect_composition_pointwise(compose(F, G), F, G, rng);
    }
}

TEST(Compose, Associative) {
    smp::Rng rng(45);
    for (int t = 0; t < 15; ++t) {
        auto A = random_G(rng);
        auto B = make_phi(smp::nonzero_rational(rng), smp::rational(rng));
        auto C = random_H(rng);
        EXPECT_EQ(compose(compose(A, B), C), compose(A, compose(B, C)));
        EXPECT_EQ(compose(CremonaMap::identity(), C), C);
        EXPECT_EQ(compose(C, CremonaMap::identity()), C);
    }
}

TEST(Compose, FixingTheLineIsClosed) {
    smp::Rng rng(46);
    for (int t = 0; t < 15; ++t) {
        auto A = random_G(rng), B = random_H(rng);
        auto C = make_phi(smp::rational(rng), smp::nonzero_rational(rng));
        EXPECT_TRUE(fixes_curve_pointwise(compose(A, B), tx()));
        EXPECT_TRUE(fixes_curve_pointwise(compose(B, C), tx()));
        EXPECT_TRUE(fixes_curve_pointwise(compose(C, compose(A, B)), tx()));
    }
}

TEST(Compose, GAndHDoNotCommute) {
    auto G = make_linear_G(2, 1, 0);
    auto H = make_H_element(RatFunc(1), RatFunc(1));
    EXPECT_NE(compose(G, H), compose(H, G));
}

TEST(FixesCurve, Examples) {
    auto F = CremonaMap::make({tx(), ty(), tx() + tz()});
    EXPECT_TRUE(fixes_curve_pointwise(F, tx()));
    EXPECT_FALSE(fixes_curve_pointwise(F, ty()));
    EXPECT_TRUE(fixes_curve_pointwise(CremonaMap::identity(), tx() * tx() + ty() * tz()));
    EXPECT_THROW((void)fixes_curve_pointwise(F, TriHomPoly(1)), std::invalid_argument);
}

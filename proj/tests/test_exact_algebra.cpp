#include "cremona/polygcd.hpp"
#include "cremona/ratfunc.hpp"
#include "cremona/sampling.hpp"

#include <gtest/gtest.h>

using namespace cremona;
namespace smp = cremona::sampling;

namespace {

UniPoly X() { return UniPoly::x(); }

TriHomPoly tx() { return TriHomPoly::x(); }
TriHomPoly ty() { return TriHomPoly::y(); }
TriHomPoly tz() { return TriHomPoly::z(); }

}  // namespace

TEST(Rational, ParseAndPrint) {
    EXPECT_EQ(Rational::parse("-6/4").str(), "-3/2");
    EXPECT_EQ(Rational::parse("7").str(), "7");
    EXPECT_EQ(Rational(0, 5).str(), "0");
    EXPECT_ANY_THROW(Rational::parse("1/0"));
    EXPECT_THROW(Rational::parse("abc"), std::invalid_argument);
    EXPECT_EQ(Rational(2, 3) * Rational(3, 4), Rational(1, 2));
    EXPECT_LT(Rational(-1, 2), Rational(1, 3));
}

TEST(UniPoly, GcdExamples) {
    UniPoly one{1};
    EXPECT_EQ(uni_gcd(X() * X() - one, X() - one), X() - one);
    UniPoly p{4, 0, 2};  // 2x^2 + 4
    EXPECT_EQ(uni_gcd(p, UniPoly()), p.monic());
    EXPECT_EQ(uni_gcd(UniPoly(), p), p.monic());
    EXPECT_EQ(uni_gcd(X() * X() + one, X() * X() - one), one);
    EXPECT_TRUE(uni_gcd(UniPoly(), UniPoly()).is_zero());
}

TEST(UniPoly, GcdOfProductsRecoversCommonFactor) {
    smp::Rng rng(11);
    for (int t = 0; t < 60; ++t) {
        UniPoly c = smp::nonzero_unipoly(rng, 3).monic();
        UniPoly a = smp::nonzero_unipoly(rng, 3), b = smp::nonzero_unipoly(rng, 3);
        UniPoly g = uni_gcd(a * c, b * c);
        // g is monic, divides both, and is a multiple of c
        EXPECT_TRUE(g.leading().is_one());
        EXPECT_TRUE(g.divides(a * c));
        EXPECT_TRUE(g.divides(b * c));
        EXPECT_TRUE(c.divides(g));
        EXPECT_EQ(g.exact_div(c), uni_gcd(a, b));
    }
}

TEST(UniPoly, DivmodIdentity) {
    smp::Rng rng(12);
    for (int t = 0; t < 100; ++t) {
        UniPoly a = smp::unipoly(rng, 7), d = smp::nonzero_unipoly(rng, 4);
        auto [q, r] = a.divmod(d);
        EXPECT_EQ(q * d + r, a);
        EXPECT_LT(r.degree(), d.degree() == 0 ? 0 : d.degree());
    }
    EXPECT_THROW((void)X().divmod(UniPoly()), std::domain_error);
}

TEST(UniPoly, Squarefree) {
    UniPoly one{1};
    EXPECT_TRUE(is_squarefree(X().pow(4) - one));
    EXPECT_FALSE(is_squarefree((X() - one).pow(2)));
    EXPECT_TRUE(is_squarefree(X().pow(6) + X() + one));
    EXPECT_THROW((void)is_squarefree(UniPoly()), std::invalid_argument);
    EXPECT_TRUE(is_squarefree(UniPoly{3}));
}

TEST(UniPoly, EvaluationIsARingHomomorphism) {
    smp::Rng rng(13);
    for (int t = 0; t < 200; ++t) {
        UniPoly a = smp::unipoly(rng, 5), b = smp::unipoly(rng, 5);
        Rational x0 = smp::rational(rng, 7);
        EXPECT_EQ((a * b).eval(x0), a.eval(x0) * b.eval(x0));
        EXPECT_EQ((a + b).eval(x0), a.eval(x0) + b.eval(x0));
        EXPECT_EQ((a - b).eval(x0), a.eval(x0) - b.eval(x0));
    }
}

TEST(RatFunc, RingAxioms) {
    smp::Rng rng(14);
    for (int t = 0; t < 200; ++t) {
        RatFunc a = smp::ratfunc(rng, 3, 2), b = smp::ratfunc(rng, 3, 2), c = smp::ratfunc(rng, 3, 2);
        EXPECT_EQ(a + b, b + a);
        EXPECT_EQ(a * b, b * a);
        EXPECT_EQ((a + b) + c, a + (b + c));
        EXPECT_EQ((a * b) * c, a * (b * c));
        EXPECT_EQ(a * (b + c), a * b + a * c);
        EXPECT_EQ(a + RatFunc(0), a);
        EXPECT_EQ(a * RatFunc(1), a);
        EXPECT_TRUE((a - a).is_zero());
        if (!a.is_zero()) {
            EXPECT_EQ(a / a, RatFunc(1));
        }
    }
}

TEST(RatFunc, NormalizationIsCanonicalAndIdempotent) {
    smp::Rng rng(15);
    for (int t = 0; t < 100; ++t) {
        RatFunc f = smp::ratfunc(rng, 4, 3);
        EXPECT_EQ(f.normalized(), f);
        EXPECT_EQ(f.normalized().normalized(), f.normalized());
        EXPECT_TRUE(f.den().leading().is_one());
        EXPECT_TRUE(uni_gcd(f.num(), f.den()).is_one() || f.num().is_zero());
        // same value written with a common factor
        UniPoly k = smp::nonzero_unipoly(rng, 2);
        EXPECT_EQ(RatFunc(f.num() * k, f.den() * k), f);
    }
    EXPECT_THROW(RatFunc(X(), UniPoly()), std::domain_error);
    EXPECT_EQ(RatFunc(UniPoly(), X()).den(), UniPoly{1});
}

TEST(TriHomPoly, RejectsInhomogeneousTerms) {
    EXPECT_THROW(TriHomPoly::from_terms({{{1, 0, 0}, 1}, {{0, 2, 0}, 1}}), std::invalid_argument);
    EXPECT_THROW(tx() + ty() * tz(), std::invalid_argument);
}

TEST(TriHomPoly, RingAxiomsAndHomogeneity) {
    smp::Rng rng(16);
    for (int t = 0; t < 200; ++t) {
        int d = smp::uniform(rng, 0, 3);
        TriHomPoly a = smp::tripoly(rng, d), b = smp::tripoly(rng, d);
        TriHomPoly c = smp::tripoly(rng, smp::uniform(rng, 0, 3));
        EXPECT_EQ(a + b, b + a);
        EXPECT_EQ(a * c, c * a);
        EXPECT_EQ((a + b) * c, a * c + b * c);
        EXPECT_EQ((a * c) * b, a * (c * b));
        TriHomPoly p = a * c;
        if (!p.is_zero()) {
            EXPECT_EQ(p.degree(), a.degree() + c.degree());
            for (const auto& [e, co] : p.terms()) EXPECT_EQ(e[0] + e[1] + e[2], p.degree());
        }
        // evaluation oracle for products
        ProjPoint pt{smp::rational(rng), smp::rational(rng), smp::rational(rng)};
        EXPECT_EQ(p.eval(pt), a.eval(pt) * c.eval(pt));
    }
}

TEST(TriHomPoly, LexLeadingTermFirst) {
    TriHomPoly f = ty() * ty() + tx() * tz() + tz() * tz();
    EXPECT_EQ(f.leading().first, (Exponent{1, 0, 1}));
}

TEST(TriHomPoly, SubstituteAgreesWithEvaluation) {
    smp::Rng rng(17);
    for (int t = 0; t < 50; ++t) {
        TriHomPoly f = smp::tripoly(rng, 3);
        std::array<TriHomPoly, 3> g{smp::tripoly(rng, 2), smp::tripoly(rng, 2), smp::tripoly(rng, 2)};
        TriHomPoly s = f.substitute(g);
        ProjPoint pt{smp::rational(rng), smp::rational(rng), smp::rational(rng)};
        ProjPoint gp{g[0].eval(pt), g[1].eval(pt), g[2].eval(pt)};
        EXPECT_EQ(s.eval(pt), f.eval(gp));
    }
}

TEST(TriGcd, ContentExamples) {
    EXPECT_EQ(tri_content_gcd(tx() * ty(), tx() * tz(), tx() * tx()), tx());
    EXPECT_EQ(tri_content_gcd(tx(), ty(), tz()), TriHomPoly::constant(1));
    EXPECT_THROW((void)tri_content_gcd(TriHomPoly(2), TriHomPoly(2), TriHomPoly(2)), std::invalid_argument);
}

TEST(TriGcd, QuadraticInvolutionSquaredHasCubicContent) {
    // phi_{1,0}: (-xy : y(x+y) : z(x+y)); phi o phi before cancellation
    TriHomPoly l = ty(), m = tx() + ty();
    std::array<TriHomPoly, 3> phi{-(tx() * l), ty() * m, tz() * m};
    std::array<TriHomPoly, 3> sq;
    for (std::size_t i = 0; i < 3; ++i) sq[i] = phi[i].substitute(phi);
    TriHomPoly g = tri_content_gcd(sq[0], sq[1], sq[2]);
    EXPECT_EQ(g.degree(), 3);
    // what remains is a scalar multiple of (x : y : z)
    Rational s = tri_exact_div(sq[0], g).coeff({1, 0, 0});
    for (int i = 0; i < 3; ++i) EXPECT_EQ(tri_exact_div(sq[static_cast<std::size_t>(i)], g), TriHomPoly::var(i).scaled(s));
}

TEST(TriGcd, RecoversPlantedFactor) {
    smp::Rng rng(18);
    for (int t = 0; t < 40; ++t) {
        TriHomPoly c = smp::tripoly(rng, smp::uniform(rng, 1, 2), 5, 80);
        TriHomPoly a = smp::tripoly(rng, 2, 5, 80), b = smp::tripoly(rng, 2, 5, 80);
        if (c.is_zero() || a.is_zero() || b.is_zero()) continue;
        TriHomPoly g = tri_gcd(a * c, b * c);
        EXPECT_TRUE(tri_divides(g, a * c));
        EXPECT_TRUE(tri_divides(g, b * c));
        EXPECT_TRUE(tri_divides(c, g));
        EXPECT_EQ(g.leading().second, Rational(1));
    }
}

TEST(TriDivides, Examples) {
    EXPECT_TRUE(tri_divides(tx(), tx() * ty() + tx() * tz()));
    EXPECT_FALSE(tri_divides(tx(), ty() * tz()));
    EXPECT_TRUE(tri_divides(tx() + ty(), tx() * tx() - ty() * ty()));
    EXPECT_FALSE(tri_divides(tx() + ty(), tx() * tx() + ty() * ty()));
    EXPECT_TRUE(tri_divides(TriHomPoly::constant(3), tx()));
    EXPECT_TRUE(tri_divides(tx(), TriHomPoly(2)));
}

TEST(TriDivides, DividesEveryMultipleUpToDegreeSix) {
    smp::Rng rng(19);
    for (int t = 0; t < 60; ++t) {
        int dc = smp::uniform(rng, 1, 3), dq = smp::uniform(rng, 0, 6 - dc);
        TriHomPoly c = smp::tripoly(rng, dc), q = smp::tripoly(rng, dq);
        if (c.is_zero()) continue;
        EXPECT_TRUE(tri_divides(c, c * q));
        if (!q.is_zero()) {
            EXPECT_EQ(tri_exact_div(c * q, c), q);
        }
    }
}

TEST(TriHomPoly, PerfectPower) {
    TriHomPoly l = tx() + ty().scaled(2) - tz();
    EXPECT_TRUE(is_perfect_power(l.pow(2)));
    EXPECT_TRUE(is_perfect_power(l.pow(3).scaled(5)));
    EXPECT_FALSE(is_perfect_power(l * (tx() - tz())));
    EXPECT_FALSE(is_perfect_power(tx()));
}

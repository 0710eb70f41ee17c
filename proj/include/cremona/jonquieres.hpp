#pragma once

// The torus T_h = {[[a1, h a2], [a2, a1]]} in GL(2, Q(x)) and its image in
// PGL(2, Q(x)), acting on the plane through de Jonquieres maps
// (x, y) |-> (x, (a1 y + h a2) / (a2 y + a1)) that fix y^2 = h(x).

#include "cremona/cremona_map.hpp"
#include "cremona/ratfunc.hpp"
#include "cremona/unipoly.hpp"

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace cremona {

class JonquieresError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// 2x2 matrix over Q(x), row major.
struct Mat2RF {
    RatFunc a11, a12, a21, a22;

    [[nodiscard]] RatFunc det() const { return a11 * a22 - a12 * a21; }
    [[nodiscard]] RatFunc trace() const { return a11 + a22; }
    [[nodiscard]] bool is_scalar() const { return a12.is_zero() && a21.is_zero() && a11 == a22; }

    friend Mat2RF operator*(const Mat2RF& p, const Mat2RF& q) {
        return {p.a11 * q.a11 + p.a12 * q.a21, p.a11 * q.a12 + p.a12 * q.a22,
                p.a21 * q.a11 + p.a22 * q.a21, p.a21 * q.a12 + p.a22 * q.a22};
    }
    friend bool operator==(const Mat2RF&, const Mat2RF&) = default;
};

class JonqElement {
public:
    /// Checks h squarefree of even degree >= 4 and a1^2 - h a2^2 != 0.
    JonqElement(RatFunc a1, RatFunc a2, UniPoly h) : a1_(std::move(a1)), a2_(std::move(a2)), h_(std::move(h)) {
        if (h_.degree() < 4 || h_.degree() % 2 != 0)
            throw JonquieresError("h must have degree 2g+2 with g >= 1, got degree " + std::to_string(h_.degree()));
        if (!is_squarefree(h_)) throw JonquieresError("h must be squarefree");
        if (det().is_zero()) throw JonquieresError("a1^2 - h a2^2 must be nonzero");
    }

    static JonqElement identity(const UniPoly& h) { return {RatFunc(1), RatFunc(0), h}; }

    [[nodiscard]] const RatFunc& a1() const { return a1_; }
    [[nodiscard]] const RatFunc& a2() const { return a2_; }
    [[nodiscard]] const UniPoly& h() const { return h_; }
    /// Genus of y^2 = h(x).
    [[nodiscard]] int curve_genus() const { return h_.degree() / 2 - 1; }

    [[nodiscard]] RatFunc det() const { return a1_ * a1_ - RatFunc(h_) * a2_ * a2_; }
    [[nodiscard]] Mat2RF matrix() const { return {a1_, RatFunc(h_) * a2_, a2_, a1_}; }

    friend bool operator==(const JonqElement&, const JonqElement&) = default;

private:
    RatFunc a1_, a2_;
    UniPoly h_;
};

inline JonqElement mul(const JonqElement& u, const JonqElement& v) {
    if (!(u.h() == v.h())) throw JonquieresError("mul: elements over different h");
    RatFunc h(u.h());
    return {u.a1() * v.a1() + h * u.a2() * v.a2(), u.a1() * v.a2() + u.a2() * v.a1(), u.h()};
}

inline JonqElement invert(const JonqElement& u) {
    RatFunc d = u.det();
    return {u.a1() / d, -u.a2() / d, u.h()};
}

/// True iff the two matrices agree up to a nonzero scalar of Q(x).
inline bool pgl_equal(const Mat2RF& p, const Mat2RF& q) {
    // p ~ q iff all 2x2 "cross" minors p_ij q_kl - p_kl q_ij vanish
    std::array<RatFunc, 4> a{p.a11, p.a12, p.a21, p.a22}, b{q.a11, q.a12, q.a21, q.a22};
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = i + 1; j < 4; ++j)
            if (!(a[i] * b[j] - a[j] * b[i]).is_zero()) return false;
    return true;
}

enum class PglOrder { One = 1, Two = 2, Three = 3, Four = 4, Six = 6, Infinite = 0 };

inline std::string to_string(PglOrder o) {
    return o == PglOrder::Infinite ? "infinite" : std::to_string(static_cast<int>(o));
}

struct PglOrderResult {
    PglOrder order = PglOrder::Infinite;
    RatFunc lambda;  // trace^2 / det
};

/// Order of the image of m in PGL(2, Q(x)). With lambda = tr^2/det, the
/// eigenvalue ratio z satisfies lambda = z + 2 + 1/z, so finite order > 1
/// forces lambda in {0, 1, 2, 3} (z a primitive 2nd, 3rd, 4th, 6th root of
/// unity); lambda = 4 is scalar or unipotent.
inline PglOrderResult pgl_order_detail(const Mat2RF& m) {
    RatFunc d = m.det();
    if (d.is_zero()) throw JonquieresError("pgl_order: singular matrix");
    PglOrderResult r;
    r.lambda = m.trace().pow(2) / d;
    if (!r.lambda.is_constant()) return r;
    Rational v = r.lambda.constant_value();
    if (v == Rational(4)) r.order = m.is_scalar() ? PglOrder::One : PglOrder::Infinite;
    else if (v == Rational(0)) r.order = PglOrder::Two;
    else if (v == Rational(1)) r.order = PglOrder::Three;
    else if (v == Rational(2)) r.order = PglOrder::Four;
    else if (v == Rational(3)) r.order = PglOrder::Six;
    return r;
}

inline PglOrder pgl_order(const Mat2RF& m) { return pgl_order_detail(m).order; }

struct LemInvReport {
    PglOrder order = PglOrder::Infinite;
    RatFunc lambda;
    bool lemma_holds = true;  // order in {1, 2, infinite}
    std::string verdict;
};

/// A finite-order element of T_h (h squarefree, nonconstant) is trivial or an involution.
inline LemInvReport leminv_check(const JonqElement& u) {
    auto r = pgl_order_detail(u.matrix());
    LemInvReport rep{r.order, r.lambda, true, {}};
    switch (r.order) {
        case PglOrder::One: rep.verdict = "identity in PGL"; break;
        case PglOrder::Two: rep.verdict = "involution"; break;
        case PglOrder::Infinite: rep.verdict = "infinite order"; break;
        default:
            rep.lemma_holds = false;
            rep.verdict = "finite order " + to_string(r.order) + " other than 1 or 2: contradicts squarefree h";
    }
    return rep;
}

/// Homogenized F_a for a general matrix: (x, y) |-> (x, (a11 y + a12)/(a21 y + a22)).
inline CremonaMap to_cremona(const Mat2RF& m) {
    if (m.det().is_zero()) throw JonquieresError("to_cremona: singular matrix");
    UniPoly D = uni_lcm(uni_lcm(m.a11.den(), m.a12.den()), uni_lcm(m.a21.den(), m.a22.den()));
    std::array<UniPoly, 4> p;
    std::array<const RatFunc*, 4> a{&m.a11, &m.a12, &m.a21, &m.a22};
    UniPoly g;
    for (std::size_t i = 0; i < 4; ++i) {
        p[i] = (*a[i] * RatFunc(D)).num();
        g = uni_gcd(g, p[i]);
    }
    int e = 0;
    for (auto& q : p) {
        q = q.exact_div(g);
        e = std::max(e, q.degree());
    }
    auto hom = [e](const UniPoly& q) { return q.is_zero() ? TriHomPoly(e) : detail::homogenize_in(q, 0, e); };
    auto X = TriHomPoly::x(), Y = TriHomPoly::y(), Z = TriHomPoly::z();
    TriHomPoly num = hom(p[0]) * Y + hom(p[1]) * Z;
    TriHomPoly den = hom(p[2]) * Y + hom(p[3]) * Z;
    return CremonaMap::make({X * den, Z * num, Z * den});
}

inline CremonaMap to_cremona(const JonqElement& u) { return to_cremona(u.matrix()); }

/// y^2 z^(2g) - h^(x, z), the curve y^2 = h(x) homogenized to degree 2g+2.
inline TriHomPoly hyperelliptic_curve(const UniPoly& h) {
    int e = h.degree();
    return TriHomPoly::monomial(1, 0, 2, e - 2) - detail::homogenize_in(h, 0, e);
}

/// Checks (a1 y + h a2)^2 - h (a2 y + a1)^2 = (a1^2 - h a2^2)(y^2 - h) in Q(x)[y].
inline bool fixes_hyperelliptic(const JonqElement& u) {
    using PolyY = std::array<RatFunc, 3>;  // coefficients of 1, y, y^2
    RatFunc h(u.h());
    const RatFunc &a1 = u.a1(), &a2 = u.a2();
    auto square = [](const RatFunc& c1, const RatFunc& c0) {  // (c1 y + c0)^2
        return PolyY{c0 * c0, RatFunc(2) * c1 * c0, c1 * c1};
    };
    PolyY s1 = square(a1, h * a2), s2 = square(a2, a1);
    PolyY lhs{s1[0] - h * s2[0], s1[1] - h * s2[1], s1[2] - h * s2[2]};
    RatFunc d = u.det();
    PolyY rhs{-(d * h), RatFunc(0), d};
    return lhs == rhs;
}

}  // namespace cremona

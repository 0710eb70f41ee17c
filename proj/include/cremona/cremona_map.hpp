#pragma once

// Plane birational maps as coprime triples of homogeneous polynomials.

#include "cremona/linsys.hpp"
#include "cremona/polygcd.hpp"
#include "cremona/ratfunc.hpp"
#include "cremona/tripoly.hpp"

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace cremona {

class CremonaMapError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// (x : y : z) |-> (f0 : f1 : f2). Stored in canonical form: the components
/// have no common factor and the first nonzero component has lex-leading
/// coefficient 1, so two maps are equal iff their triples are equal.
///
/// Birationality is not checked. The named constructors below only produce
/// birational maps; a triple given through make() is trusted.
class CremonaMap {
public:
    static CremonaMap make(std::array<TriHomPoly, 3> comps) {
        int d = -1;
        for (const auto& f : comps) {
            if (f.is_zero()) continue;
            if (d >= 0 && f.degree() != d) throw CremonaMapError("Cremona map components have unequal degrees");
            d = f.degree();
        }
        if (d < 0) throw CremonaMapError("Cremona map with all components zero");
        TriHomPoly g = tri_content_gcd(comps[0], comps[1], comps[2]);
        int nd = d - g.degree();
        CremonaMap m;
        for (std::size_t i = 0; i < 3; ++i)
            m.f_[i] = comps[i].is_zero() ? TriHomPoly(nd) : (g.degree() == 0 ? comps[i] : tri_exact_div(comps[i], g));
        Rational lead;
        for (const auto& f : m.f_)
            if (!f.is_zero()) {
                lead = f.leading().second;
                break;
            }
        if (!lead.is_one())
            for (auto& f : m.f_) f = f.scaled(Rational(1) / lead);
        if (m.degree() < 1) throw CremonaMapError("Cremona map of degree 0 is constant");
        return m;
    }

    static CremonaMap identity() { return make({TriHomPoly::x(), TriHomPoly::y(), TriHomPoly::z()}); }

    [[nodiscard]] int degree() const { return f_[0].degree(); }
    [[nodiscard]] const std::array<TriHomPoly, 3>& components() const { return f_; }
    [[nodiscard]] const TriHomPoly& operator[](std::size_t i) const { return f_[i]; }

    friend bool operator==(const CremonaMap& a, const CremonaMap& b) { return a.f_ == b.f_; }

private:
    CremonaMap() = default;
    std::array<TriHomPoly, 3> f_;
};

/// (x : y : z) |-> (a x : y + b x : z + c x), a != 0. Fixes the line x = 0.
inline CremonaMap make_linear_G(const Rational& a, const Rational& b, const Rational& c) {
    if (a.is_zero()) throw CremonaMapError("make_linear_G: a must be nonzero");
    auto x = TriHomPoly::x(), y = TriHomPoly::y(), z = TriHomPoly::z();
    return CremonaMap::make({x.scaled(a), y + x.scaled(b), z + x.scaled(c)});
}

/// Returns (a, b, c) if F is make_linear_G(a, b, c).
inline std::optional<std::array<Rational, 3>> linear_G_parameters(const CremonaMap& F) {
    if (F.degree() != 1) return std::nullopt;
    // Scale so that the y-coefficient of f1 is 1.
    Rational s = F[1].coeff({0, 1, 0});
    if (s.is_zero()) return std::nullopt;
    std::array<TriHomPoly, 3> f;
    for (std::size_t i = 0; i < 3; ++i) f[i] = F[i].scaled(Rational(1) / s);
    Rational a = f[0].coeff({1, 0, 0}), b = f[1].coeff({1, 0, 0}), c = f[2].coeff({1, 0, 0});
    if (a.is_zero()) return std::nullopt;
    auto x = TriHomPoly::x(), y = TriHomPoly::y(), z = TriHomPoly::z();
    if (!(f[0] == x.scaled(a) && f[1] == y + x.scaled(b) && f[2] == z + x.scaled(c))) return std::nullopt;
    return std::array<Rational, 3>{a, b, c};
}

namespace detail {

/// Homogenizes p(t) to degree e in the variable pair (t-variable, z).
inline TriHomPoly homogenize_in(const UniPoly& p, int var, int e) {
    std::vector<std::pair<Exponent, Rational>> terms;
    for (int i = 0; i <= p.degree(); ++i) {
        if (p.coeff(i).is_zero()) continue;
        Exponent ex{0, 0, e - i};
        ex[static_cast<std::size_t>(var)] = i;
        terms.push_back({ex, p.coeff(i)});
    }
    return TriHomPoly::from_terms(terms, e);
}

}  // namespace detail

/// Affine (x, y) |-> (x / (alpha(y) x + beta(y)), y) on z = 1, homogenized.
/// Fixes the line x = 0 and preserves the lines y = const.
inline CremonaMap make_H_element(const RatFunc& alpha, const RatFunc& beta) {
    if (beta.is_zero()) throw CremonaMapError("make_H_element: beta must be nonzero");
    UniPoly L = uni_lcm(alpha.den(), beta.den());
    UniPoly A = (alpha * RatFunc(L)).num();
    UniPoly B = (beta * RatFunc(L)).num();
    int e = std::max({L.degree(), A.degree(), B.degree()});
    auto X = TriHomPoly::x(), Y = TriHomPoly::y(), Z = TriHomPoly::z();
    TriHomPoly Lh = detail::homogenize_in(L, 1, e);
    TriHomPoly Ah = A.is_zero() ? TriHomPoly(e) : detail::homogenize_in(A, 1, e);
    TriHomPoly Bh = detail::homogenize_in(B, 1, e);
    TriHomPoly den = Ah * X + Bh * Z;  // degree e + 1
    return CremonaMap::make({X * Lh * Z, Y * den, Z * den});
}

/// (x:y:z) |-> (-x(mu y + nu z) : y(x + mu y + nu z) : z(x + mu y + nu z)),
/// a quadratic involution fixing the line x = 0.
inline CremonaMap make_phi(const Rational& mu, const Rational& nu) {
    if (mu.is_zero() && nu.is_zero()) throw CremonaMapError("make_phi: (mu, nu) must not both vanish");
    auto x = TriHomPoly::x(), y = TriHomPoly::y(), z = TriHomPoly::z();
    TriHomPoly l = y.scaled(mu) + z.scaled(nu);
    TriHomPoly m = x + l;
    return CremonaMap::make({-(x * l), y * m, z * m});
}

/// F o G: G's components substituted into F, common factor removed.
inline CremonaMap compose(const CremonaMap& F, const CremonaMap& G) {
    std::array<TriHomPoly, 3> r;
    for (std::size_t i = 0; i < 3; ++i) r[i] = F[i].substitute(G.components());
    if (r[0].is_zero() && r[1].is_zero() && r[2].is_zero())
        throw CremonaMapError("composition vanishes identically");
    return CremonaMap::make(std::move(r));
}

inline bool is_identity(const CremonaMap& F) { return F == CremonaMap::identity(); }

/// The three 2x2 minors f_i x_j - f_j x_i (i < j) of F against (x, y, z).
inline std::array<TriHomPoly, 3> fixation_minors(const CremonaMap& F) {
    auto x = TriHomPoly::x(), y = TriHomPoly::y(), z = TriHomPoly::z();
    return {F[0] * y - F[1] * x, F[0] * z - F[2] * x, F[1] * z - F[2] * y};
}

/// True iff c divides every minor, i.e. F(p) is proportional to p at every
/// point p of {c = 0} where F is defined.
inline bool fixes_curve_pointwise(const CremonaMap& F, const TriHomPoly& c) {
    if (c.is_zero()) throw std::invalid_argument("fixes_curve_pointwise: zero curve");
    for (const auto& m : fixation_minors(F))
        if (!tri_divides(c, m)) return false;
    return true;
}

/// Intersection of general members of L and M away from shared base points:
/// n_L n_M - sum mu_L(p) mu_M(q) over corresponding pairs (p, q).
inline long free_intersection(const LinSysData& L, const LinSysData& M,
                              const std::vector<std::pair<Label, Label>>& shared) {
    long r = static_cast<long>(L.degree) * M.degree;
    for (const auto& [p, q] : shared) r -= static_cast<long>(L.mult(p)) * M.mult(q);
    return r;
}

/// Same, pairing equal labels.
inline long free_intersection(const LinSysData& L, const LinSysData& M) {
    std::vector<std::pair<Label, Label>> shared;
    for (const auto& [l, m] : L.mults)
        if (M.mults.count(l)) shared.emplace_back(l, l);
    return free_intersection(L, M, shared);
}

}  // namespace cremona

#pragma once

// GCD and exact division for homogeneous trivariate polynomials.
//
// A homogeneous F factors uniquely as z^a * F~ with z not dividing F~, and
// F~ is the homogenization of F(x, y, 1). So gcd(F, G) is
// z^min(a, b) * homogenize(gcd(F(x,y,1), G(x,y,1))). The bivariate gcd is a
// primitive pseudo-remainder sequence in Q[x][y].

#include "cremona/tripoly.hpp"
#include "cremona/unipoly.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <vector>

namespace cremona {

namespace detail {

/// Element of Q[x][y]: coefficient i is the UniPoly (in x) of y^i.
using BiPoly = std::vector<UniPoly>;

inline void bi_trim(BiPoly& p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
}

inline int bi_ydeg(const BiPoly& p) { return static_cast<int>(p.size()) - 1; }

inline UniPoly bi_content(const BiPoly& p) {
    UniPoly g;
    for (const auto& c : p) {
        g = uni_gcd(g, c);
        if (g.degree() == 0) break;
    }
    return g;
}

inline BiPoly bi_div_uni(const BiPoly& p, const UniPoly& d) {
    BiPoly r;
    r.reserve(p.size());
    for (const auto& c : p) r.push_back(c.exact_div(d));
    return r;
}

inline BiPoly bi_primitive(const BiPoly& p) {
    if (p.empty()) return p;
    UniPoly c = bi_content(p);
    BiPoly r = bi_div_uni(p, c);
    // Fix the scalar so the leading coefficient in y is monic in x.
    Rational lc = r.back().leading();
    if (!lc.is_one()) {
        Rational inv = Rational(1) / lc;
        for (auto& q : r) q = inv * q;
    }
    return r;
}

/// Pseudo-remainder of f by g with respect to y.
inline BiPoly bi_prem(BiPoly f, const BiPoly& g) {
    int dg = bi_ydeg(g);
    const UniPoly& lg = g.back();
    while (bi_ydeg(f) >= dg) {
        int df = bi_ydeg(f);
        UniPoly lf = f.back();
        for (auto& c : f) c = c * lg;
        for (int j = 0; j <= dg; ++j)
            f[static_cast<std::size_t>(df - dg + j)] -= lf * g[static_cast<std::size_t>(j)];
        bi_trim(f);
        if (f.empty()) break;
    }
    return f;
}

inline BiPoly bi_gcd(BiPoly f, BiPoly g) {
    bi_trim(f);
    bi_trim(g);
    if (f.empty()) return g;
    if (g.empty()) return f;
    UniPoly cont = uni_gcd(bi_content(f), bi_content(g));
    f = bi_primitive(f);
    g = bi_primitive(g);
    if (bi_ydeg(f) < bi_ydeg(g)) std::swap(f, g);
    while (!g.empty()) {
        if (bi_ydeg(g) == 0) {
            f = BiPoly{UniPoly::constant(1)};
            break;
        }
        BiPoly r = bi_prem(f, g);
        f = std::move(g);
        g = r.empty() ? r : bi_primitive(r);
    }
    for (auto& c : f) c = c * cont;
    return f;
}

/// F(x, y, 1) after stripping z^a; returns a.
inline int dehomogenize(const TriHomPoly& f, BiPoly& out) {
    int zmin = f.degree();
    for (const auto& [e, c] : f.terms()) zmin = std::min(zmin, e[2]);
    out.clear();
    for (const auto& [e, c] : f.terms()) {
        auto j = static_cast<std::size_t>(e[1]);
        if (out.size() <= j) out.resize(j + 1);
        out[j] += UniPoly::monomial(c, e[0]);
    }
    bi_trim(out);
    return zmin;
}

inline TriHomPoly homogenize(const BiPoly& p, int zpow) {
    int td = 0;
    for (std::size_t j = 0; j < p.size(); ++j)
        if (!p[j].is_zero()) td = std::max(td, static_cast<int>(j) + p[j].degree());
    std::vector<std::pair<Exponent, Rational>> terms;
    for (std::size_t j = 0; j < p.size(); ++j)
        for (int i = 0; i <= p[j].degree(); ++i) {
            Rational c = p[j].coeff(i);
            if (!c.is_zero()) terms.push_back({{i, static_cast<int>(j), td - i - static_cast<int>(j) + zpow}, c});
        }
    return TriHomPoly::from_terms(terms, td + zpow);
}

}  // namespace detail

/// Greatest common divisor, lex-leading coefficient 1. gcd(0, 0) = 0.
inline TriHomPoly tri_gcd(const TriHomPoly& f, const TriHomPoly& g) {
    if (f.is_zero()) return g.normalized();
    if (g.is_zero()) return f.normalized();
    detail::BiPoly bf, bg;
    int af = detail::dehomogenize(f, bf);
    int ag = detail::dehomogenize(g, bg);
    return detail::homogenize(detail::bi_gcd(bf, bg), std::min(af, ag)).normalized();
}

/// GCD of three homogeneous polynomials, not all zero.
inline TriHomPoly tri_content_gcd(const TriHomPoly& f, const TriHomPoly& g, const TriHomPoly& k) {
    if (f.is_zero() && g.is_zero() && k.is_zero())
        throw std::invalid_argument("tri_content_gcd: all inputs are zero");
    TriHomPoly d = tri_gcd(f, g);
    if (d.degree() == 0 && !d.is_zero()) return d;
    return tri_gcd(d, k);
}

/// Exact quotient f / c when c divides f, by lex-order reduction against the
/// single divisor (which is exact for one divisor: LT(c) | LT(f) whenever c | f).
inline std::optional<TriHomPoly> tri_exact_quotient(const TriHomPoly& c, const TriHomPoly& f) {
    if (c.is_zero()) throw std::invalid_argument("tri_divides: zero divisor");
    if (f.is_zero()) return TriHomPoly(std::max(0, f.degree() - c.degree()));
    if (f.degree() < c.degree()) return std::nullopt;
    const auto& [lc_exp, lc_coef] = c.leading();
    Rational inv = Rational(1) / lc_coef;
    TriHomPoly r = f;
    TriHomPoly q(f.degree() - c.degree());
    while (!r.is_zero()) {
        const auto& [le, lcoef] = r.leading();
        Exponent m{le[0] - lc_exp[0], le[1] - lc_exp[1], le[2] - lc_exp[2]};
        if (m[0] < 0 || m[1] < 0 || m[2] < 0) return std::nullopt;
        Rational t = lcoef * inv;
        q += TriHomPoly::monomial(t, m[0], m[1], m[2]);
        r -= c.shifted(m).scaled(t);
    }
    return q;
}

inline bool tri_divides(const TriHomPoly& c, const TriHomPoly& f) { return tri_exact_quotient(c, f).has_value(); }

inline TriHomPoly tri_exact_div(const TriHomPoly& f, const TriHomPoly& c) {
    auto q = tri_exact_quotient(c, f);
    if (!q) throw std::domain_error("tri_exact_div: inexact division");
    return *q;
}

/// True iff f = s * g^k for a scalar s, a polynomial g and some k >= 2.
/// The k-th root is extracted term by term in lex order.
inline bool is_perfect_power(const TriHomPoly& f) {
    if (f.is_zero() || f.degree() == 0) return false;
    TriHomPoly fn = f.normalized();
    int d = fn.degree();
    for (int k = 2; k <= d; ++k) {
        if (d % k != 0) continue;
        const Exponent& lead = fn.leading().first;
        if (lead[0] % k || lead[1] % k || lead[2] % k) continue;
        TriHomPoly g = TriHomPoly::monomial(1, lead[0] / k, lead[1] / k, lead[2] / k);
        Exponent last = g.leading().first;
        bool ok = false;
        for (;;) {
            TriHomPoly r = fn - g.pow(static_cast<unsigned>(k));
            if (r.is_zero()) {
                ok = true;
                break;
            }
            // next term t: LT(r) = k * LT(g)^(k-1) * t
            const auto& [re, rc] = r.leading();
            Exponent base = g.leading().first;
            Exponent te{re[0] - (k - 1) * base[0], re[1] - (k - 1) * base[1], re[2] - (k - 1) * base[2]};
            if (te[0] < 0 || te[1] < 0 || te[2] < 0 || !(te < last)) break;
            g += TriHomPoly::monomial(rc / Rational(k), te[0], te[1], te[2]);
            last = te;
        }
        if (ok) return true;
    }
    return false;
}

}  // namespace cremona

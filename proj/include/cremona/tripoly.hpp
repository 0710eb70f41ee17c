#pragma once

// Homogeneous polynomials in Q[x, y, z], sparse, terms kept in lex order
// x > y > z with the leading term first.

#include "cremona/rational.hpp"

#include <array>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace cremona {

using Exponent = std::array<int, 3>;

struct LexGreater {
    bool operator()(const Exponent& a, const Exponent& b) const { return a > b; }
};

using ProjPoint = std::array<Rational, 3>;

class TriHomPoly {
public:
    using TermMap = std::map<Exponent, Rational, LexGreater>;

    /// Zero polynomial of the given degree.
    explicit TriHomPoly(int degree = 0) : degree_(degree) {
        if (degree < 0) throw std::invalid_argument("TriHomPoly: negative degree");
    }

    /// Builds from (exponent, coefficient) pairs; repeated exponents accumulate.
    static TriHomPoly from_terms(const std::vector<std::pair<Exponent, Rational>>& terms, int degree = -1) {
        if (terms.empty()) return TriHomPoly(degree < 0 ? 0 : degree);
        int d = degree;
        TriHomPoly p(0);
        for (const auto& [e, c] : terms) {
            if (e[0] < 0 || e[1] < 0 || e[2] < 0) throw std::invalid_argument("TriHomPoly: negative exponent");
            int td = e[0] + e[1] + e[2];
            if (d < 0) d = td;
            if (td != d) throw std::invalid_argument("TriHomPoly: inhomogeneous term list");
            p.add_term(e, c);
        }
        p.degree_ = d;
        return p;
    }

    static TriHomPoly monomial(const Rational& c, int i, int j, int k) {
        TriHomPoly p(i + j + k);
        p.add_term({i, j, k}, c);
        return p;
    }
    static TriHomPoly constant(const Rational& c) { return monomial(c, 0, 0, 0); }
    static TriHomPoly x() { return monomial(1, 1, 0, 0); }
    static TriHomPoly y() { return monomial(1, 0, 1, 0); }
    static TriHomPoly z() { return monomial(1, 0, 0, 1); }
    static TriHomPoly var(int i) { return i == 0 ? x() : (i == 1 ? y() : z()); }

    [[nodiscard]] int degree() const { return degree_; }
    [[nodiscard]] bool is_zero() const { return terms_.empty(); }
    [[nodiscard]] std::size_t size() const { return terms_.size(); }
    [[nodiscard]] const TermMap& terms() const { return terms_; }
    [[nodiscard]] const std::pair<const Exponent, Rational>& leading() const {
        if (terms_.empty()) throw std::domain_error("TriHomPoly: leading term of zero");
        return *terms_.begin();
    }
    [[nodiscard]] Rational coeff(const Exponent& e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? Rational{} : it->second;
    }

    TriHomPoly& operator+=(const TriHomPoly& o) {
        adopt_degree(o);
        for (const auto& [e, c] : o.terms_) add_term(e, c);
        return *this;
    }
    TriHomPoly& operator-=(const TriHomPoly& o) {
        adopt_degree(o);
        for (const auto& [e, c] : o.terms_) add_term(e, -c);
        return *this;
    }
    friend TriHomPoly operator+(TriHomPoly a, const TriHomPoly& b) { return a += b; }
    friend TriHomPoly operator-(TriHomPoly a, const TriHomPoly& b) { return a -= b; }
    friend TriHomPoly operator-(const TriHomPoly& a) { return a.scaled(Rational(-1)); }

    friend TriHomPoly operator*(const TriHomPoly& a, const TriHomPoly& b) {
        TriHomPoly r(a.degree_ + b.degree_);
        if (a.is_zero() || b.is_zero()) return r;
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_)
                r.add_term({ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2]}, ca * cb);
        return r;
    }
    TriHomPoly& operator*=(const TriHomPoly& o) { return *this = *this * o; }

    [[nodiscard]] TriHomPoly scaled(const Rational& s) const {
        TriHomPoly r(degree_);
        if (s.is_zero()) return r;
        for (const auto& [e, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), e, c * s);
        return r;
    }

    [[nodiscard]] TriHomPoly pow(unsigned e) const {
        TriHomPoly r = constant(1), b = *this;
        while (e) {
            if (e & 1U) r *= b;
            e >>= 1U;
            if (e) b *= b;
        }
        return r;
    }

    /// Multiplies by x^i y^j z^k.
    [[nodiscard]] TriHomPoly shifted(const Exponent& m) const {
        TriHomPoly r(degree_ + m[0] + m[1] + m[2]);
        for (const auto& [e, c] : terms_)
            r.terms_.emplace_hint(r.terms_.end(), Exponent{e[0] + m[0], e[1] + m[1], e[2] + m[2]}, c);
        return r;
    }

    [[nodiscard]] Rational eval(const ProjPoint& p) const {
        Rational acc;
        for (const auto& [e, c] : terms_)
            acc += c * p[0].pow(static_cast<unsigned>(e[0])) * p[1].pow(static_cast<unsigned>(e[1])) *
                   p[2].pow(static_cast<unsigned>(e[2]));
        return acc;
    }

    /// Partial derivative d^a/dx^a d^b/dy^b d^c/dz^c.
    [[nodiscard]] TriHomPoly partial(const Exponent& order) const {
        int nd = degree_ - order[0] - order[1] - order[2];
        TriHomPoly r(nd < 0 ? 0 : nd);
        if (nd < 0) return r;
        for (const auto& [e, c] : terms_) {
            Rational f = c;
            bool zero = false;
            for (int v = 0; v < 3 && !zero; ++v) {
                if (e[v] < order[v]) zero = true;
                for (int t = 0; t < order[v] && !zero; ++t) f *= Rational(e[v] - t);
            }
            if (zero) continue;
            r.add_term({e[0] - order[0], e[1] - order[1], e[2] - order[2]}, f);
        }
        return r;
    }

    /// f(g0, g1, g2). The substituted polynomials must share one degree.
    [[nodiscard]] TriHomPoly substitute(const std::array<TriHomPoly, 3>& g) const {
        int dg = g[0].degree();
        if (g[1].degree() != dg || g[2].degree() != dg)
            throw std::invalid_argument("TriHomPoly::substitute: components of unequal degree");
        std::array<std::vector<TriHomPoly>, 3> powers;
        for (int v = 0; v < 3; ++v) {
            powers[v].push_back(constant(1));
            for (int k = 1; k <= degree_; ++k) powers[v].push_back(powers[v].back() * g[v]);
        }
        TriHomPoly r(degree_ * dg);
        for (const auto& [e, c] : terms_)
            r += (powers[0][e[0]] * powers[1][e[1]] * powers[2][e[2]]).scaled(c);
        return r;
    }

    /// Multiplies so that the lex-leading coefficient is 1 (zero stays zero).
    [[nodiscard]] TriHomPoly normalized() const {
        if (is_zero()) return *this;
        return scaled(Rational(1) / leading().second);
    }

    friend bool operator==(const TriHomPoly& a, const TriHomPoly& b) {
        if (a.is_zero() && b.is_zero()) return true;
        return a.degree_ == b.degree_ && a.terms_ == b.terms_;
    }

    [[nodiscard]] std::string pretty() const {
        if (is_zero()) return "0";
        static const char* names[3] = {"x", "y", "z"};
        std::string out;
        for (const auto& [e, c] : terms_) {
            Rational mag = c.sign() < 0 ? -c : c;
            if (out.empty()) out += c.sign() < 0 ? "-" : "";
            else out += c.sign() < 0 ? " - " : " + ";
            bool mono = e[0] + e[1] + e[2] > 0;
            if (!mag.is_one() || !mono) out += mag.str();
            bool first = mag.is_one();
            for (int v = 0; v < 3; ++v) {
                if (e[v] == 0) continue;
                if (!first) out += "*";
                first = false;
                out += names[v];
                if (e[v] > 1) out += "^" + std::to_string(e[v]);
            }
        }
        return out;
    }

private:
    void add_term(const Exponent& e, const Rational& c) {
        if (c.is_zero()) return;
        auto [it, inserted] = terms_.try_emplace(e, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }
    void adopt_degree(const TriHomPoly& o) {
        if (o.is_zero()) return;
        if (is_zero()) {
            degree_ = o.degree_;
            return;
        }
        if (degree_ != o.degree_) throw std::invalid_argument("TriHomPoly: adding polynomials of different degrees");
    }

    int degree_ = 0;
    TermMap terms_;
};

}  // namespace cremona

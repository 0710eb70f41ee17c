#pragma once

// Dense univariate polynomials over Q.

#include "cremona/rational.hpp"

#include <algorithm>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace cremona {

class UniPoly {
public:
    UniPoly() = default;
    UniPoly(std::initializer_list<Rational> coeffs) : c_(coeffs) { trim(); }
    explicit UniPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

    static UniPoly constant(const Rational& r) { return UniPoly(std::vector<Rational>{r}); }
    static UniPoly monomial(const Rational& r, int e) {
        std::vector<Rational> c(static_cast<std::size_t>(e) + 1);
        c.back() = r;
        return UniPoly(std::move(c));
    }
    static UniPoly x() { return monomial(1, 1); }

    /// -1 for the zero polynomial.
    [[nodiscard]] int degree() const { return static_cast<int>(c_.size()) - 1; }
    [[nodiscard]] bool is_zero() const { return c_.empty(); }
    [[nodiscard]] bool is_constant() const { return c_.size() <= 1; }
    [[nodiscard]] bool is_one() const { return c_.size() == 1 && c_[0].is_one(); }
    [[nodiscard]] Rational coeff(int e) const {
        return (e < 0 || e > degree()) ? Rational{} : c_[static_cast<std::size_t>(e)];
    }
    [[nodiscard]] const Rational& leading() const {
        if (c_.empty()) throw std::domain_error("UniPoly: leading coefficient of zero");
        return c_.back();
    }
    [[nodiscard]] const std::vector<Rational>& coeffs() const { return c_; }

    [[nodiscard]] Rational eval(const Rational& t) const {
        Rational acc;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * t + *it;
        return acc;
    }

    [[nodiscard]] UniPoly derivative() const {
        if (c_.size() <= 1) return {};
        std::vector<Rational> d(c_.size() - 1);
        for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * Rational(static_cast<long>(i));
        return UniPoly(std::move(d));
    }

    [[nodiscard]] UniPoly monic() const {
        if (is_zero()) return {};
        return *this * UniPoly::constant(Rational(1) / leading());
    }

    UniPoly& operator+=(const UniPoly& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
        trim();
        return *this;
    }
    UniPoly& operator-=(const UniPoly& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
        trim();
        return *this;
    }
    friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
    friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
    friend UniPoly operator-(const UniPoly& a) { return UniPoly{} - a; }

    friend UniPoly operator*(const UniPoly& a, const UniPoly& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<Rational> r(a.c_.size() + b.c_.size() - 1);
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i].is_zero()) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
        }
        return UniPoly(std::move(r));
    }
    UniPoly& operator*=(const UniPoly& o) { return *this = *this * o; }

    friend UniPoly operator*(const Rational& s, const UniPoly& p) { return UniPoly::constant(s) * p; }

    [[nodiscard]] UniPoly pow(unsigned e) const {
        UniPoly r = UniPoly::constant(1), b = *this;
        while (e) {
            if (e & 1U) r *= b;
            e >>= 1U;
            if (e) b *= b;
        }
        return r;
    }

    /// Euclidean division: returns (quotient, remainder).
    [[nodiscard]] std::pair<UniPoly, UniPoly> divmod(const UniPoly& d) const {
        if (d.is_zero()) throw std::domain_error("UniPoly: division by zero polynomial");
        std::vector<Rational> rem = c_;
        int dd = d.degree();
        int qd = degree() - dd;
        if (qd < 0) return {UniPoly{}, *this};
        std::vector<Rational> q(static_cast<std::size_t>(qd) + 1);
        Rational inv = Rational(1) / d.leading();
        for (int k = qd; k >= 0; --k) {
            Rational t = rem[static_cast<std::size_t>(k + dd)] * inv;
            q[static_cast<std::size_t>(k)] = t;
            if (t.is_zero()) continue;
            for (int j = 0; j <= dd; ++j) rem[static_cast<std::size_t>(k + j)] -= t * d.c_[static_cast<std::size_t>(j)];
        }
        return {UniPoly(std::move(q)), UniPoly(std::move(rem))};
    }

    /// Division that must be exact.
    [[nodiscard]] UniPoly exact_div(const UniPoly& d) const {
        auto [q, r] = divmod(d);
        if (!r.is_zero()) throw std::domain_error("UniPoly: inexact division");
        return q;
    }

    [[nodiscard]] bool divides(const UniPoly& f) const { return f.divmod(*this).second.is_zero(); }

    friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.c_ == b.c_; }

    /// Dense human-readable form in the given variable name, e.g. "x^2 - 1".
    [[nodiscard]] std::string pretty(const std::string& var = "x") const {
        if (is_zero()) return "0";
        std::string out;
        for (int e = degree(); e >= 0; --e) {
            const Rational& a = c_[static_cast<std::size_t>(e)];
            if (a.is_zero()) continue;
            Rational mag = a.sign() < 0 ? -a : a;
            if (out.empty()) out += a.sign() < 0 ? "-" : "";
            else out += a.sign() < 0 ? " - " : " + ";
            bool unit = mag.is_one() && e > 0;
            if (!unit) out += mag.str();
            if (e > 0) {
                if (!unit) out += "*";
                out += var;
                if (e > 1) out += "^" + std::to_string(e);
            }
        }
        return out;
    }

private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }

    std::vector<Rational> c_;
};

/// Monic gcd; gcd(0, 0) = 0.
inline UniPoly uni_gcd(UniPoly p, UniPoly q) {
    while (!q.is_zero()) {
        UniPoly r = p.divmod(q).second;
        p = std::move(q);
        q = std::move(r);
    }
    return p.monic();
}

inline UniPoly uni_lcm(const UniPoly& p, const UniPoly& q) {
    if (p.is_zero() || q.is_zero()) return {};
    return (p * q).exact_div(uni_gcd(p, q)).monic();
}

/// True iff gcd(h, h') is constant. Rejects the zero polynomial.
inline bool is_squarefree(const UniPoly& h) {
    if (h.is_zero()) throw std::invalid_argument("is_squarefree: zero polynomial");
    return uni_gcd(h, h.derivative()).degree() == 0;
}

}  // namespace cremona

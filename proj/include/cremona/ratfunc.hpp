#pragma once

#include "cremona/unipoly.hpp"

#include <stdexcept>
#include <string>
#include <utility>

namespace cremona {

/// Element of Q(t): num/den with gcd(num, den) = 1 and den monic.
class RatFunc {
public:
    RatFunc() : den_(UniPoly::constant(1)) {}
    RatFunc(const Rational& r) : num_(UniPoly::constant(r)), den_(UniPoly::constant(1)) {}  // NOLINT
    RatFunc(int r) : RatFunc(Rational(r)) {}                                              // NOLINT
    RatFunc(UniPoly num) : num_(std::move(num)), den_(UniPoly::constant(1)) {}           // NOLINT
    RatFunc(UniPoly num, UniPoly den) : num_(std::move(num)), den_(std::move(den)) { normalize(); }

    [[nodiscard]] const UniPoly& num() const { return num_; }
    [[nodiscard]] const UniPoly& den() const { return den_; }
    [[nodiscard]] bool is_zero() const { return num_.is_zero(); }
    [[nodiscard]] bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
    [[nodiscard]] bool is_polynomial() const { return den_.is_constant(); }
    /// Value of a constant function; throws otherwise.
    [[nodiscard]] Rational constant_value() const {
        if (!is_constant()) throw std::domain_error("RatFunc: not a constant");
        return num_.coeff(0);
    }

    /// Re-reduces; a no-op on values built through the public interface.
    [[nodiscard]] RatFunc normalized() const { return RatFunc(num_, den_); }

    RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
    RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
    RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
    RatFunc& operator/=(const RatFunc& o) { return *this = *this / o; }

    friend RatFunc operator+(const RatFunc& a, const RatFunc& b) {
        if (a.den_ == b.den_) return {a.num_ + b.num_, a.den_};
        return {a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_};
    }
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b) {
        if (a.den_ == b.den_) return {a.num_ - b.num_, a.den_};
        return {a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_};
    }
    friend RatFunc operator-(const RatFunc& a) { return {-a.num_, a.den_}; }
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b) {
        return {a.num_ * b.num_, a.den_ * b.den_};
    }
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b) {
        if (b.is_zero()) throw std::domain_error("RatFunc: division by zero");
        return {a.num_ * b.den_, a.den_ * b.num_};
    }
    friend bool operator==(const RatFunc& a, const RatFunc& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

    [[nodiscard]] RatFunc pow(unsigned e) const { return {num_.pow(e), den_.pow(e)}; }

    [[nodiscard]] std::string pretty(const std::string& var = "x") const {
        if (den_.is_one()) return num_.pretty(var);
        return "(" + num_.pretty(var) + ")/(" + den_.pretty(var) + ")";
    }

private:
    void normalize() {
        if (den_.is_zero()) throw std::domain_error("RatFunc: zero denominator");
        if (num_.is_zero()) {
            den_ = UniPoly::constant(1);
            return;
        }
        UniPoly g = uni_gcd(num_, den_);
        if (!g.is_one()) {
            num_ = num_.exact_div(g);
            den_ = den_.exact_div(g);
        }
        Rational lc = den_.leading();
        if (!lc.is_one()) {
            Rational inv = Rational(1) / lc;
            num_ = inv * num_;
            den_ = inv * den_;
        }
    }

    UniPoly num_;
    UniPoly den_;
};

}  // namespace cremona

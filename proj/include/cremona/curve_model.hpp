#pragma once

// Plane curves given by degree and ordinary singular points.

#include "cremona/polygcd.hpp"
#include "cremona/tripoly.hpp"

#include <algorithm>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

namespace cremona {

using Label = std::string;

class CurveModelError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct PointSpec {
    Label label;
    std::optional<ProjPoint> coords;
};

struct SingularityData {
    PointSpec point;
    int multiplicity = 2;
    bool ordinary = true;
};

/// Raw curve data. Use make_curve_model() for a checked value and validate()
/// for a structured report on arbitrary data.
struct PlaneCurveModel {
    int degree = 1;
    std::vector<SingularityData> singularities;
    std::optional<TriHomPoly> defining_poly;
    /// Irreducibility is asserted by the caller, never verified.
    bool irreducible = true;
};

/// (d-1)(d-2)/2 - sum m(m-1)/2; may be negative for impossible data.
inline long genus(const PlaneCurveModel& c) {
    long d = c.degree;
    long g = (d - 1) * (d - 2) / 2;
    for (const auto& s : c.singularities) g -= static_cast<long>(s.multiplicity) * (s.multiplicity - 1) / 2;
    return g;
}

/// Order of vanishing of f at p: the least k with a nonzero order-k partial
/// derivative at p. 0 when p is not on the curve.
inline int multiplicity_at(const TriHomPoly& f, const ProjPoint& p) {
    if (f.is_zero()) throw std::invalid_argument("multiplicity_at: zero polynomial");
    if (p[0].is_zero() && p[1].is_zero() && p[2].is_zero())
        throw std::invalid_argument("multiplicity_at: (0:0:0) is not a projective point");
    for (int k = 0; k <= f.degree(); ++k) {
        for (int a = k; a >= 0; --a)
            for (int b = k - a; b >= 0; --b) {
                TriHomPoly d = f.partial({a, b, k - a - b});
                if (!d.eval(p).is_zero()) return k;
            }
    }
    return f.degree();  // unreachable for f != 0
}

struct ValidationReport {
    bool ok = true;
    long genus = 0;
    std::vector<std::string> failures;
    /// (label, declared, measured) for every singularity checked against the polynomial.
    std::vector<std::tuple<Label, int, int>> measured;

    void fail(std::string why) {
        ok = false;
        failures.push_back(std::move(why));
    }
};

inline ValidationReport validate(const PlaneCurveModel& c) {
    ValidationReport r;
    r.genus = genus(c);
    if (c.degree < 1) r.fail("degree must be >= 1, got " + std::to_string(c.degree));
    std::set<Label> seen;
    for (const auto& s : c.singularities) {
        const Label& l = s.point.label;
        if (!seen.insert(l).second) r.fail("duplicate label '" + l + "'");
        if (!s.ordinary) r.fail("singularity '" + l + "' is not ordinary; only ordinary singularities are supported");
        if (s.multiplicity < 2) r.fail("singularity '" + l + "' has multiplicity " + std::to_string(s.multiplicity) + " < 2");
        if (s.multiplicity > c.degree)
            r.fail("singularity '" + l + "': multiplicity " + std::to_string(s.multiplicity) + " exceeds degree " +
                   std::to_string(c.degree));
        if (s.point.coords) {
            const auto& p = *s.point.coords;
            if (p[0].is_zero() && p[1].is_zero() && p[2].is_zero())
                r.fail("singularity '" + l + "' has coordinates (0:0:0)");
        }
    }
    if (r.genus < 0) r.fail("genus " + std::to_string(r.genus) + " < 0: inconsistent singularity data");
    if (c.defining_poly) {
        const TriHomPoly& f = *c.defining_poly;
        if (f.is_zero()) r.fail("defining polynomial is zero");
        else {
            if (f.degree() != c.degree)
                r.fail("defining polynomial has degree " + std::to_string(f.degree()) + ", model says " +
                       std::to_string(c.degree));
            if (is_perfect_power(f)) r.fail("defining polynomial is a perfect power (non-reduced curve)");
            for (const auto& s : c.singularities) {
                if (!s.point.coords) continue;
                const auto& p = *s.point.coords;
                if (p[0].is_zero() && p[1].is_zero() && p[2].is_zero()) continue;
                int m = multiplicity_at(f, p);
                r.measured.emplace_back(s.point.label, s.multiplicity, m);
                if (m != s.multiplicity)
                    r.fail("singularity '" + s.point.label + "': declared multiplicity " +
                           std::to_string(s.multiplicity) + ", polynomial has " + std::to_string(m));
            }
        }
    }
    return r;
}

/// Checked constructor: throws CurveModelError listing every failure.
inline PlaneCurveModel make_curve_model(PlaneCurveModel c) {
    ValidationReport r = validate(c);
    if (!r.ok) {
        std::string msg = "invalid curve model:";
        for (const auto& f : r.failures) msg += " " + f + ";";
        throw CurveModelError(msg);
    }
    return c;
}

/// Degree d with abstract general-position points p1..pk of the given multiplicities.
inline PlaneCurveModel make_curve_model(int degree, const std::vector<int>& mults, const std::string& prefix = "p") {
    PlaneCurveModel c;
    c.degree = degree;
    for (std::size_t i = 0; i < mults.size(); ++i)
        c.singularities.push_back({{prefix + std::to_string(i + 1), std::nullopt}, mults[i], true});
    return make_curve_model(std::move(c));
}

}  // namespace cremona

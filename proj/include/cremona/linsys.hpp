#pragma once

// Numerical linear systems of plane curves on general-position points and the
// successive-adjoint machinery acting on them.
//
// A system (n; mu_1, ..., mu_k) is the set of degree-n curves with
// multiplicity >= mu_i at labelled points in general position. Everything
// here is integer arithmetic on that data.

#include "cremona/curve_model.hpp"

#include <algorithm>
#include <array>
#include <initializer_list>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace cremona {

class AdjointDoesNotExist : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

class InconsistentSystem : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

class QuadraticTransformError : public std::domain_error {
public:
    enum class Kind { NegativeDegree, NegativeMultiplicity, BadBase };
    QuadraticTransformError(Kind k, const std::string& what) : std::domain_error(what), kind(k) {}
    Kind kind;
};

struct LinSysData {
    int degree = 0;
    std::map<Label, int> mults;  // only positive entries are stored

    static LinSysData make(int n, const std::map<Label, int>& mu) {
        if (n < 0) throw InconsistentSystem("linear system of negative degree " + std::to_string(n));
        LinSysData L;
        L.degree = n;
        for (const auto& [l, m] : mu) {
            if (m < 0) throw InconsistentSystem("negative multiplicity at '" + l + "'");
            if (m > 0) L.mults.emplace(l, m);
        }
        return L;
    }

    /// (n; mu_1, ..., mu_k) on labels prefix1, prefix2, ...
    static LinSysData make(int n, const std::vector<int>& mu, const std::string& prefix = "p") {
        std::map<Label, int> m;
        for (std::size_t i = 0; i < mu.size(); ++i) m[prefix + std::to_string(i + 1)] = mu[i];
        return make(n, m);
    }
    static LinSysData make(int n, std::initializer_list<int> mu, const std::string& prefix = "p") {
        return make(n, std::vector<int>(mu), prefix);
    }

    static LinSysData from_curve(const PlaneCurveModel& c) {
        std::map<Label, int> m;
        for (const auto& s : c.singularities) m[s.point.label] = s.multiplicity;
        return make(c.degree, m);
    }

    [[nodiscard]] int mult(const Label& l) const {
        auto it = mults.find(l);
        return it == mults.end() ? 0 : it->second;
    }

    /// Multiplicities sorted in decreasing order.
    [[nodiscard]] std::vector<int> profile() const {
        std::vector<int> v;
        for (const auto& [l, m] : mults) v.push_back(m);
        std::sort(v.rbegin(), v.rend());
        return v;
    }

    /// Compact form such as "(9; 3^8)" or "(3; 2, 1^5)".
    [[nodiscard]] std::string pretty() const {
        std::string s = "(" + std::to_string(degree) + ";";
        auto p = profile();
        if (p.empty()) return s + " -)";
        for (std::size_t i = 0; i < p.size();) {
            std::size_t j = i;
            while (j < p.size() && p[j] == p[i]) ++j;
            s += (i == 0 ? " " : ", ") + std::to_string(p[i]);
            if (j - i > 1) s += "^" + std::to_string(j - i);
            i = j;
        }
        return s + ")";
    }

    friend bool operator==(const LinSysData&, const LinSysData&) = default;
};

inline long virtual_dim(const LinSysData& L) {
    long n = L.degree;
    long v = n * (n + 3) / 2;
    for (const auto& [l, m] : L.mults) v -= static_cast<long>(m) * (m + 1) / 2;
    return v;
}

inline long member_genus(const LinSysData& L) {
    long n = L.degree;
    long g = (n - 1) * (n - 2) / 2;
    for (const auto& [l, m] : L.mults) g -= static_cast<long>(m) * (m - 1) / 2;
    return g;
}

inline long self_intersection(const LinSysData& L) {
    long s = static_cast<long>(L.degree) * L.degree;
    for (const auto& [l, m] : L.mults) s -= static_cast<long>(m) * m;
    return s;
}

/// (n - 3; mu_i - 1) without the existence check.
inline LinSysData adjoint_numerical(const LinSysData& L) {
    std::map<Label, int> m;
    for (const auto& [l, mu] : L.mults) m[l] = std::max(0, mu - 1);
    return LinSysData::make(L.degree - 3, m);
}

/// Curves of degree d-3 with multiplicity m_i - 1 at the singular points.
/// Exists iff the curve has genus > 1.
inline LinSysData adjoint_raw(const PlaneCurveModel& c) {
    long g = genus(c);
    if (g <= 1) throw AdjointDoesNotExist("adjoint system needs genus > 1, curve has genus " + std::to_string(g));
    return adjoint_numerical(LinSysData::from_curve(c));
}

// ---------------------------------------------------------------------------
// Fixed components

/// A line through two base points or a conic through five.
struct FixedComponent {
    int degree = 1;
    std::vector<Label> through;  // sorted

    friend auto operator<=>(const FixedComponent&, const FixedComponent&) = default;
    [[nodiscard]] std::string pretty() const {
        std::string s = degree == 1 ? "line" : "conic";
        s += " through {";
        for (std::size_t i = 0; i < through.size(); ++i) s += (i ? "," : "") + through[i];
        return s + "}";
    }
};

struct RemovedComponent {
    FixedComponent component;
    int count = 0;
    friend bool operator==(const RemovedComponent&, const RemovedComponent&) = default;
};

/// Bezout-forced components of L, lines before conics, each family in
/// lexicographic label order. A line through p_i, p_j is forced when
/// mu_i + mu_j > n; a conic through five points when their sum exceeds 2n.
inline std::vector<FixedComponent> forced_components(const LinSysData& L) {
    std::vector<FixedComponent> out;
    std::vector<std::pair<Label, int>> pts(L.mults.begin(), L.mults.end());
    const int n = L.degree;
    for (std::size_t i = 0; i < pts.size(); ++i)
        for (std::size_t j = i + 1; j < pts.size(); ++j)
            if (pts[i].second + pts[j].second > n) out.push_back({1, {pts[i].first, pts[j].first}});
    if (pts.size() >= 5) {
        std::vector<std::size_t> idx{0, 1, 2, 3, 4};
        const std::size_t k = pts.size();
        for (;;) {
            int s = 0;
            for (auto t : idx) s += pts[t].second;
            if (s > 2 * n) {
                FixedComponent c{2, {}};
                for (auto t : idx) c.through.push_back(pts[t].first);
                out.push_back(std::move(c));
            }
            // next 5-combination in lexicographic order
            int pos = 4;
            while (pos >= 0 && idx[static_cast<std::size_t>(pos)] == k - 5 + static_cast<std::size_t>(pos)) --pos;
            if (pos < 0) break;
            ++idx[static_cast<std::size_t>(pos)];
            for (std::size_t t = static_cast<std::size_t>(pos) + 1; t < 5; ++t) idx[t] = idx[t - 1] + 1;
        }
    }
    return out;
}

inline LinSysData subtract_component(const LinSysData& L, const FixedComponent& c) {
    std::map<Label, int> m = L.mults;
    for (const auto& l : c.through) m[l] -= 1;
    int n = L.degree - c.degree;
    if (n < 0)
        throw InconsistentSystem("removing a " + c.pretty() + " from " + L.pretty() + " leaves negative degree");
    return LinSysData::make(n, m);
}

struct FixedPartResult {
    LinSysData reduced;
    std::vector<RemovedComponent> removed;  // sorted by component
};

/// Strips Bezout-forced lines and conics until none applies. `pick` selects
/// which applicable component to remove next (index into forced_components).
template <class Pick>
FixedPartResult remove_fixed_components_with(const LinSysData& L, Pick&& pick) {
    std::map<FixedComponent, int> removed;
    LinSysData cur = L;
    for (;;) {
        auto cands = forced_components(cur);
        if (cands.empty()) break;
        std::size_t i = pick(cands);
        cur = subtract_component(cur, cands.at(i));
        ++removed[cands[i]];
    }
    FixedPartResult r{cur, {}};
    for (auto& [c, k] : removed) r.removed.push_back({c, k});
    return r;
}

/// Deterministic order: first applicable line, else first applicable conic.
inline FixedPartResult remove_fixed_components(const LinSysData& L) {
    return remove_fixed_components_with(L, [](const std::vector<FixedComponent>&) { return std::size_t{0}; });
}

// ---------------------------------------------------------------------------
// Pencils

struct PencilReduction {
    int content = 1;  // t >= 2
    LinSysData primitive;
};

/// If L = t * P with P a rational pencil of self-intersection 0, returns (t, P).
inline std::optional<PencilReduction> pencil_decompose(const LinSysData& L) {
    int c = L.degree;
    for (const auto& [l, m] : L.mults) c = std::gcd(c, m);
    if (c < 2) return std::nullopt;
    std::map<Label, int> pm;
    for (const auto& [l, m] : L.mults) pm[l] = m / c;
    LinSysData P = LinSysData::make(L.degree / c, pm);
    if (member_genus(P) != 0 || self_intersection(P) != 0 || virtual_dim(P) != 1) return std::nullopt;
    return PencilReduction{c, P};
}

// ---------------------------------------------------------------------------
// Successive adjoints

struct ChainStep {
    LinSysData input;
    LinSysData raw_adjoint;
    std::vector<RemovedComponent> removed_fixed;
    LinSysData reduced;
    std::optional<PencilReduction> pencil_reduction;
    LinSysData output;
    std::string note;
};

inline ChainStep adjoint_step(const LinSysData& L) {
    long g = member_genus(L);
    if (g <= 1)
        throw AdjointDoesNotExist("adjoint of " + L.pretty() + " needs member genus > 1, got " + std::to_string(g));
    ChainStep s;
    s.input = L;
    s.raw_adjoint = adjoint_numerical(L);
    auto fixed = remove_fixed_components(s.raw_adjoint);
    s.reduced = fixed.reduced;
    s.removed_fixed = std::move(fixed.removed);
    s.pencil_reduction = pencil_decompose(s.reduced);
    s.output = s.pencil_reduction ? s.pencil_reduction->primitive : s.reduced;
    if (!s.pencil_reduction) {
        int c = s.reduced.degree;
        for (const auto& [l, m] : s.reduced.mults) c = std::gcd(c, m);
        if (c >= 2)
            s.note = "content " + std::to_string(c) + " but the primitive part is not a rational pencil; kept as irreducible";
    }
    return s;
}

enum class TerminalClass { RationalPencil, EllipticPencil, EllipticNet, RationalSystem, Exhausted };

inline const char* to_string(TerminalClass c) {
    switch (c) {
        case TerminalClass::RationalPencil: return "RationalPencil";
        case TerminalClass::EllipticPencil: return "EllipticPencil";
        case TerminalClass::EllipticNet: return "EllipticNet";
        case TerminalClass::RationalSystem: return "RationalSystem";
        case TerminalClass::Exhausted: return "Exhausted";
    }
    return "?";
}

struct ChainReport {
    std::vector<ChainStep> steps;
    LinSysData terminal;
    TerminalClass classification = TerminalClass::Exhausted;
    std::vector<std::string> warnings;
};

/// Classifies a system on which the chain stopped.
inline TerminalClass classify_terminal(const LinSysData& L, std::vector<std::string>* warnings = nullptr) {
    long dim = virtual_dim(L);
    long g = member_genus(L);
    auto warn = [&](const std::string& w) {
        if (warnings) warnings->push_back(w);
    };
    if (dim <= 0) {
        warn("system " + L.pretty() + " is empty for general points (virtual dimension " + std::to_string(dim) + ")");
        return TerminalClass::Exhausted;
    }
    if (g == 0) return dim == 1 ? TerminalClass::RationalPencil : TerminalClass::RationalSystem;
    if (g == 1) {
        if (dim == 1) return TerminalClass::EllipticPencil;
        if (dim == 2) return TerminalClass::EllipticNet;
        warn("genus-1 system " + L.pretty() + " of dimension " + std::to_string(dim) + " has no named class");
        return TerminalClass::Exhausted;
    }
    if (g < 0) {
        warn("system " + L.pretty() + " has negative member genus " + std::to_string(g));
        return TerminalClass::Exhausted;
    }
    warn("chain stopped on " + L.pretty() + " with member genus " + std::to_string(g));
    return TerminalClass::Exhausted;
}

/// Iterates adjoint_step from L until the member genus is <= 1 or the
/// system is empty. The degree drops by at least 3 per step.
inline ChainReport adjoint_chain(const LinSysData& start) {
    if (member_genus(start) <= 1)
        throw AdjointDoesNotExist("adjoint chain needs genus > 1, got " + std::to_string(member_genus(start)));
    ChainReport r;
    LinSysData cur = start;
    for (;;) {
        ChainStep s = adjoint_step(cur);
        if (!s.note.empty()) r.warnings.push_back("step " + std::to_string(r.steps.size() + 1) + ": " + s.note);
        cur = s.output;
        r.steps.push_back(std::move(s));
        if (virtual_dim(cur) <= 0 || member_genus(cur) <= 1) break;
    }
    r.terminal = cur;
    r.classification = classify_terminal(cur, &r.warnings);
    return r;
}

inline ChainReport adjoint_chain(const PlaneCurveModel& c) {
    long g = genus(c);
    if (g <= 1) throw AdjointDoesNotExist("adjoint chain needs genus > 1, curve has genus " + std::to_string(g));
    return adjoint_chain(LinSysData::from_curve(c));
}

// ---------------------------------------------------------------------------
// Quadratic transformations

/// Image of L under the standard quadratic map based at three general points.
/// The point onto which the line opposite base point i is contracted keeps label i.
inline LinSysData quadratic_transform(const LinSysData& L, const std::array<Label, 3>& base) {
    if (base[0] == base[1] || base[0] == base[2] || base[1] == base[2])
        throw QuadraticTransformError(QuadraticTransformError::Kind::BadBase, "base labels must be distinct");
    const int m0 = L.mult(base[0]), m1 = L.mult(base[1]), m2 = L.mult(base[2]);
    const int n = L.degree;
    int n2 = 2 * n - m0 - m1 - m2;
    if (n2 < 0)
        throw QuadraticTransformError(QuadraticTransformError::Kind::NegativeDegree,
                                      "quadratic transform of " + L.pretty() + " has negative degree");
    std::map<Label, int> m = L.mults;
    m[base[0]] = n - m1 - m2;
    m[base[1]] = n - m0 - m2;
    m[base[2]] = n - m0 - m1;
    for (const auto& l : base)
        if (m[l] < 0)
            throw QuadraticTransformError(QuadraticTransformError::Kind::NegativeMultiplicity,
                                          "quadratic transform of " + L.pretty() + " has negative multiplicity at '" +
                                              l + "'");
    return LinSysData::make(n2, m);
}

}  // namespace cremona

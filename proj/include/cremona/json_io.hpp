#pragma once

// JSON encodings. Rationals are exact strings "num/den" (plain integers are
// also accepted on input); polynomials are sparse term lists
//   univariate:  [[[e], "c"], ...]
//   trivariate:  [[[i, j, k], "c"], ...]

#include "cremona/cremona_map.hpp"
#include "cremona/curve_model.hpp"
#include "cremona/jonquieres.hpp"
#include "cremona/linsys.hpp"
#include "cremona/pencil_lemma.hpp"

#include "json.hpp"

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace cremona::io {

using Json = nlohmann::ordered_json;

/// Input does not match the expected schema; `path` locates the field.
class SchemaError : public std::runtime_error {
public:
    SchemaError(const std::string& path, const std::string& msg)
        : std::runtime_error(path + ": " + msg), path_(path) {}
    [[nodiscard]] const std::string& path() const { return path_; }

private:
    std::string path_;
};

namespace detail {

inline const Json& field(const Json& j, const std::string& key, const std::string& path) {
    if (!j.is_object()) throw SchemaError(path, "expected an object");
    auto it = j.find(key);
    if (it == j.end()) throw SchemaError(path + "." + key, "missing field");
    return *it;
}

inline int get_int(const Json& j, const std::string& path) {
    if (!j.is_number_integer()) throw SchemaError(path, "expected an integer");
    return j.get<int>();
}

}  // namespace detail

// ---- scalars and polynomials ---------------------------------------------

inline Json to_json(const Rational& r) { return r.str(); }

inline Rational rational_from_json(const Json& j, const std::string& path = "$") {
    if (j.is_number_integer()) return Rational(j.get<long>());
    if (!j.is_string()) throw SchemaError(path, "expected an exact rational string such as \"3/4\"");
    try {
        return Rational::parse(j.get<std::string>());
    } catch (const std::exception& e) {
        throw SchemaError(path, e.what());
    }
}

inline Json to_json(const UniPoly& p) {
    Json out = Json::array();
    for (int e = p.degree(); e >= 0; --e)
        if (!p.coeff(e).is_zero()) out.push_back(Json::array({Json::array({e}), p.coeff(e).str()}));
    return out;
}

inline UniPoly unipoly_from_json(const Json& j, const std::string& path = "$") {
    if (!j.is_array()) throw SchemaError(path, "expected a term list [[[e], \"c\"], ...]");
    std::vector<Rational> c;
    for (std::size_t t = 0; t < j.size(); ++t) {
        std::string tp = path + "[" + std::to_string(t) + "]";
        const Json& term = j[t];
        if (!term.is_array() || term.size() != 2 || !term[0].is_array() || term[0].size() != 1)
            throw SchemaError(tp, "expected [[e], \"c\"]");
        int e = detail::get_int(term[0][0], tp + "[0][0]");
        if (e < 0) throw SchemaError(tp + "[0][0]", "negative exponent");
        if (static_cast<std::size_t>(e) >= c.size()) c.resize(static_cast<std::size_t>(e) + 1);
        c[static_cast<std::size_t>(e)] += rational_from_json(term[1], tp + "[1]");
    }
    return UniPoly(std::move(c));
}

inline Json to_json(const TriHomPoly& f) {
    Json out = Json::array();
    for (const auto& [e, c] : f.terms()) out.push_back(Json::array({Json::array({e[0], e[1], e[2]}), c.str()}));
    return out;
}

inline TriHomPoly tripoly_from_json(const Json& j, const std::string& path = "$", int degree = -1) {
    if (!j.is_array()) throw SchemaError(path, "expected a term list [[[i,j,k], \"c\"], ...]");
    std::vector<std::pair<Exponent, Rational>> terms;
    for (std::size_t t = 0; t < j.size(); ++t) {
        std::string tp = path + "[" + std::to_string(t) + "]";
        const Json& term = j[t];
        if (!term.is_array() || term.size() != 2 || !term[0].is_array() || term[0].size() != 3)
            throw SchemaError(tp, "expected [[i,j,k], \"c\"]");
        Exponent e{};
        for (std::size_t v = 0; v < 3; ++v) {
            e[v] = detail::get_int(term[0][v], tp + "[0][" + std::to_string(v) + "]");
            if (e[v] < 0) throw SchemaError(tp, "negative exponent");
        }
        terms.emplace_back(e, rational_from_json(term[1], tp + "[1]"));
    }
    try {
        return TriHomPoly::from_terms(terms, degree);
    } catch (const std::invalid_argument& ex) {
        throw SchemaError(path, ex.what());
    }
}

inline Json to_json(const RatFunc& f) { return Json{{"num", to_json(f.num())}, {"den", to_json(f.den())}}; }

/// {"num": uni, "den": uni}; "den" may be omitted. A bare term list or an
/// exact rational is accepted as a polynomial or constant.
inline RatFunc ratfunc_from_json(const Json& j, const std::string& path = "$") {
    if (j.is_array()) return RatFunc(unipoly_from_json(j, path));
    if (j.is_string() || j.is_number_integer()) return RatFunc(rational_from_json(j, path));
    UniPoly num = unipoly_from_json(detail::field(j, "num", path), path + ".num");
    UniPoly den = UniPoly::constant(1);
    if (j.contains("den")) den = unipoly_from_json(j["den"], path + ".den");
    if (den.is_zero()) throw SchemaError(path + ".den", "zero denominator");
    return {num, den};
}

// ---- curves and systems ---------------------------------------------------

inline Json to_json(const PlaneCurveModel& c) {
    Json sing = Json::array();
    for (const auto& s : c.singularities) {
        Json e{{"label", s.point.label}, {"mult", s.multiplicity}};
        if (s.point.coords) {
            const auto& p = *s.point.coords;
            e["coords"] = Json::array({p[0].str(), p[1].str(), p[2].str()});
        } else {
            e["coords"] = nullptr;
        }
        sing.push_back(std::move(e));
    }
    Json out{{"degree", c.degree}, {"singularities", std::move(sing)}};
    out["poly"] = c.defining_poly ? to_json(*c.defining_poly) : Json(nullptr);
    out["irreducible"] = c.irreducible;
    return out;
}

/// Parses the curve schema without semantic checks (see validate()).
inline PlaneCurveModel curve_from_json(const Json& j, const std::string& path = "$") {
    PlaneCurveModel c;
    c.degree = detail::get_int(detail::field(j, "degree", path), path + ".degree");
    if (j.contains("singularities")) {
        const Json& arr = j["singularities"];
        if (!arr.is_array()) throw SchemaError(path + ".singularities", "expected an array");
        for (std::size_t i = 0; i < arr.size(); ++i) {
            std::string sp = path + ".singularities[" + std::to_string(i) + "]";
            const Json& s = arr[i];
            SingularityData sd;
            const Json& lab = detail::field(s, "label", sp);
            if (lab.is_string()) sd.point.label = lab.get<std::string>();
            else if (lab.is_number_integer()) sd.point.label = std::to_string(lab.get<long>());
            else throw SchemaError(sp + ".label", "expected a string");
            sd.multiplicity = detail::get_int(detail::field(s, "mult", sp), sp + ".mult");
            if (s.contains("ordinary")) {
                if (!s["ordinary"].is_boolean()) throw SchemaError(sp + ".ordinary", "expected a boolean");
                sd.ordinary = s["ordinary"].get<bool>();
            }
            if (s.contains("coords") && !s["coords"].is_null()) {
                const Json& cj = s["coords"];
                if (!cj.is_array() || cj.size() != 3) throw SchemaError(sp + ".coords", "expected [a, b, c]");
                ProjPoint p{rational_from_json(cj[0], sp + ".coords[0]"), rational_from_json(cj[1], sp + ".coords[1]"),
                            rational_from_json(cj[2], sp + ".coords[2]")};
                sd.point.coords = p;
            }
            c.singularities.push_back(std::move(sd));
        }
    }
    if (j.contains("poly") && !j["poly"].is_null()) c.defining_poly = tripoly_from_json(j["poly"], path + ".poly");
    if (j.contains("irreducible")) {
        if (!j["irreducible"].is_boolean()) throw SchemaError(path + ".irreducible", "expected a boolean");
        c.irreducible = j["irreducible"].get<bool>();
    }
    return c;
}

inline Json to_json(const ValidationReport& r) {
    Json measured = Json::array();
    for (const auto& [l, d, m] : r.measured) measured.push_back(Json{{"label", l}, {"declared", d}, {"measured", m}});
    return Json{{"ok", r.ok}, {"genus", r.genus}, {"failures", r.failures}, {"measured", measured}};
}

inline Json to_json(const LinSysData& L) {
    Json m = Json::object();
    for (const auto& [l, v] : L.mults) m[l] = v;
    return Json{{"degree", L.degree}, {"mults", m}, {"profile", L.pretty()}};
}

inline LinSysData linsys_from_json(const Json& j, const std::string& path = "$") {
    int n = detail::get_int(detail::field(j, "degree", path), path + ".degree");
    std::map<Label, int> m;
    if (j.contains("mults")) {
        const Json& mj = j["mults"];
        if (!mj.is_object()) throw SchemaError(path + ".mults", "expected an object {label: mult}");
        for (const auto& [k, v] : mj.items()) m[k] = detail::get_int(v, path + ".mults." + k);
    }
    try {
        return LinSysData::make(n, m);
    } catch (const std::exception& e) {
        throw SchemaError(path, e.what());
    }
}

inline Json to_json(const ChainStep& s) {
    Json removed = Json::array();
    for (const auto& rc : s.removed_fixed)
        removed.push_back(Json{{"component", rc.component.degree == 1 ? "line" : "conic"},
                               {"through", rc.component.through},
                               {"count", rc.count}});
    Json out{{"input", to_json(s.input)}, {"raw", to_json(s.raw_adjoint)}, {"removed", removed}};
    out["pencil"] = s.pencil_reduction
                        ? Json{{"content", s.pencil_reduction->content}, {"primitive", to_json(s.pencil_reduction->primitive)}}
                        : Json(nullptr);
    out["output"] = to_json(s.output);
    if (!s.note.empty()) out["note"] = s.note;
    return out;
}

inline Json to_json(const ChainReport& r) {
    Json steps = Json::array();
    for (const auto& s : r.steps) steps.push_back(to_json(s));
    return Json{{"steps", steps},
                {"terminal", to_json(r.terminal)},
                {"terminal_genus", member_genus(r.terminal)},
                {"terminal_dim", virtual_dim(r.terminal)},
                {"class", to_string(r.classification)},
                {"warnings", r.warnings}};
}

// ---- maps ---------------------------------------------------------------

inline Json to_json(const CremonaMap& F) {
    Json comps = Json::array();
    for (const auto& f : F.components()) comps.push_back(to_json(f));
    return Json{{"deg", F.degree()}, {"components", comps}};
}

inline CremonaMap map_from_json(const Json& j, const std::string& path = "$") {
    const Json& comps = detail::field(j, "components", path);
    if (!comps.is_array() || comps.size() != 3) throw SchemaError(path + ".components", "expected three term lists");
    int deg = -1;
    if (j.contains("deg")) deg = detail::get_int(j["deg"], path + ".deg");
    std::array<TriHomPoly, 3> f;
    for (std::size_t i = 0; i < 3; ++i)
        f[i] = tripoly_from_json(comps[i], path + ".components[" + std::to_string(i) + "]", deg);
    try {
        return CremonaMap::make(std::move(f));
    } catch (const std::invalid_argument& e) {
        throw SchemaError(path, e.what());
    }
}

// ---- de Jonquieres elements ---------------------------------------------

inline Json to_json(const JonqElement& u) {
    return Json{{"h", to_json(u.h())}, {"a1", to_json(u.a1())}, {"a2", to_json(u.a2())}};
}

inline JonqElement jonq_from_json(const Json& j, const std::string& path = "$") {
    UniPoly h = unipoly_from_json(detail::field(j, "h", path), path + ".h");
    RatFunc a1 = ratfunc_from_json(detail::field(j, "a1", path), path + ".a1");
    RatFunc a2 = ratfunc_from_json(detail::field(j, "a2", path), path + ".a2");
    try {
        return {a1, a2, h};
    } catch (const JonquieresError& e) {
        throw SchemaError(path, e.what());
    }
}

inline Json to_json(const Mat2RF& m) {
    return Json::array({Json::array({to_json(m.a11), to_json(m.a12)}), Json::array({to_json(m.a21), to_json(m.a22)})});
}

inline Mat2RF matrix_from_json(const Json& j, const std::string& path = "$") {
    if (!j.is_array() || j.size() != 2 || !j[0].is_array() || j[0].size() != 2 || !j[1].is_array() || j[1].size() != 2)
        throw SchemaError(path, "expected [[a11, a12], [a21, a22]]");
    return {ratfunc_from_json(j[0][0], path + "[0][0]"), ratfunc_from_json(j[0][1], path + "[0][1]"),
            ratfunc_from_json(j[1][0], path + "[1][0]"), ratfunc_from_json(j[1][1], path + "[1][1]")};
}

inline Json to_json(const LemInvReport& r) {
    return Json{{"order", to_string(r.order)},
                {"lambda", to_json(r.lambda)},
                {"lambda_text", r.lambda.pretty()},
                {"lemma_holds", r.lemma_holds},
                {"verdict", r.verdict}};
}

// ---- pencils ------------------------------------------------------------

inline Json to_json(const PencilType& p) { return Json{{"n", p.n}, {"mults", p.mults}, {"profile", p.pretty()}}; }

inline Json to_json(const PencilCheck& c) {
    return Json{{"valid", c.valid},
                {"genus_residual", c.genus_residual},
                {"dimension_residual", c.dimension_residual},
                {"three_n_minus_sum", c.linear_value}};
}

}  // namespace cremona::io

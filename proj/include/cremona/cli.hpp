#pragma once

// Command dispatch for the cremona-kit tool. Kept in the library so the
// subcommands can be driven in-process by tests; tools/cremona_kit.cpp only
// maps argv onto a CommandRequest.
//
// Exit codes: 0 success, 1 malformed input, 2 validation failure (the report
// on stdout says why).

#include "cremona/corpus.hpp"
#include "cremona/json_io.hpp"

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace cremona::cli {

using io::Json;

enum class Format { Json, Text };

inline const std::vector<std::string>& subcommands() {
    static const std::vector<std::string> names{"genus",      "validate",   "adjoint-chain",  "classify",
                                                "map-compose", "map-fixcheck", "jonq-order",   "jonq-mul",
                                                "jonq-fix-check", "pencil-check", "pencil-enum", "examples"};
    return names;
}

struct CommandRequest {
    std::string subcommand;
    std::optional<std::string> input_path;
    std::optional<std::string> inline_json;
    Format format = Format::Json;
    int verbosity = 0;
    // pencil-check
    int n = 0;
    std::vector<int> mults;
    // pencil-enum
    int max = 0;
    int bound = kDefaultPencilEnumBound;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitMalformed = 1;
inline constexpr int kExitValidation = 2;

/// CREMONA_KIT_MAX_DEGREE, default 24.
inline int max_degree() {
    if (const char* v = std::getenv("CREMONA_KIT_MAX_DEGREE")) {
        try {
            int d = std::stoi(v);
            if (d > 0) return d;
        } catch (const std::exception&) {
        }
    }
    return 24;
}

/// Raised by handlers for exit code 2 with an explanatory report.
struct ValidationFailure {
    Json report;
};

struct MalformedInput : std::runtime_error {
    using std::runtime_error::runtime_error;
};

namespace detail {

inline Json load_input(const CommandRequest& req) {
    if (req.input_path.has_value() == req.inline_json.has_value())
        throw MalformedInput("exactly one of --input and --json is required");
    std::string text;
    if (req.input_path) {
        std::ifstream in(*req.input_path);
        if (!in) throw MalformedInput("cannot read input file '" + *req.input_path + "'");
        std::stringstream ss;
        ss << in.rdbuf();
        text = ss.str();
    } else {
        text = *req.inline_json;
    }
    try {
        return Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw MalformedInput("malformed JSON at byte " + std::to_string(e.byte) + ": " + e.what());
    }
}

inline void check_degree(int d, const std::string& what) {
    int cap = max_degree();
    if (d > cap)
        throw ValidationFailure{Json{{"error", "DegreeCap"},
                                     {"message", what + " has degree " + std::to_string(d) +
                                                     " above CREMONA_KIT_MAX_DEGREE=" + std::to_string(cap)}}};
}

inline PlaneCurveModel checked_curve(const Json& j) {
    PlaneCurveModel c = io::curve_from_json(j);
    if (c.defining_poly) check_degree(c.defining_poly->degree(), "defining polynomial");
    ValidationReport r = validate(c);
    if (!r.ok) throw ValidationFailure{Json{{"error", "InvalidCurve"}, {"validation", io::to_json(r)}}};
    return c;
}

inline ChainReport chain_or_fail(const PlaneCurveModel& c) {
    try {
        return adjoint_chain(c);
    } catch (const AdjointDoesNotExist& e) {
        throw ValidationFailure{Json{{"error", "AdjointDoesNotExist"}, {"message", e.what()}, {"genus", genus(c)}}};
    } catch (const InconsistentSystem& e) {
        throw ValidationFailure{Json{{"error", "InconsistentSystem"}, {"message", e.what()}}};
    }
}

inline void check_map(const CremonaMap& F, const std::string& what) { check_degree(F.degree(), what); }

inline JonqElement checked_jonq(const Json& j, const std::string& path = "$") {
    JonqElement u = io::jonq_from_json(j, path);
    check_degree(u.h().degree(), "h");
    return u;
}

// ---- text rendering -------------------------------------------------------

inline std::string text_chain(const ChainReport& r) {
    std::ostringstream os;
    for (std::size_t i = 0; i < r.steps.size(); ++i) {
        const auto& s = r.steps[i];
        os << "step " << i + 1 << ": " << s.input.pretty() << "  raw " << s.raw_adjoint.pretty();
        for (const auto& rc : s.removed_fixed) os << "  minus " << rc.count << " x " << rc.component.pretty();
        if (s.pencil_reduction)
            os << "  = " << s.pencil_reduction->content << " x " << s.pencil_reduction->primitive.pretty();
        os << "  -> " << s.output.pretty() << "\n";
    }
    os << "terminal " << r.terminal.pretty() << "  genus " << member_genus(r.terminal) << "  dim "
       << virtual_dim(r.terminal) << "  class " << to_string(r.classification) << "\n";
    for (const auto& w : r.warnings) os << "warning: " << w << "\n";
    return os.str();
}

inline std::string text_generic(const Json& j) {
    std::ostringstream os;
    if (j.is_object()) {
        for (const auto& [k, v] : j.items()) os << std::left << std::setw(22) << k << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
    } else {
        os << j.dump() << "\n";
    }
    return os.str();
}

inline std::string text_corpus(const CorpusResult& r) {
    std::ostringstream os;
    for (const auto& e : r.entries)
        os << (e.passed ? "PASS  " : "FAIL  ") << std::left << std::setw(34) << e.name << e.detail << "\n";
    os << (r.all_passed() ? "all examples reproduced" : "some examples FAILED") << "\n";
    return os.str();
}

struct Outcome {
    Json report;
    std::string text;  // empty: render report generically
    int code = kExitOk;
};

// ---- handlers -------------------------------------------------------------

inline Outcome cmd_genus(const CommandRequest& req) {
    auto c = checked_curve(load_input(req));
    return {Json{{"genus", genus(c)}}, {}, kExitOk};
}

inline Outcome cmd_validate(const CommandRequest& req) {
    Json j = load_input(req);
    PlaneCurveModel c = io::curve_from_json(j);
    if (c.defining_poly) check_degree(c.defining_poly->degree(), "defining polynomial");
    ValidationReport r = validate(c);
    std::string text = std::string(r.ok ? "pass" : "fail") + "  genus " + std::to_string(r.genus) + "\n";
    for (const auto& f : r.failures) text += "  " + f + "\n";
    return {io::to_json(r), text, r.ok ? kExitOk : kExitValidation};
}

inline Outcome cmd_adjoint_chain(const CommandRequest& req) {
    auto r = chain_or_fail(checked_curve(load_input(req)));
    return {io::to_json(r), text_chain(r), kExitOk};
}

inline Outcome cmd_classify(const CommandRequest& req) {
    auto c = checked_curve(load_input(req));
    auto r = chain_or_fail(c);
    Json out{{"genus", genus(c)},
             {"class", to_string(r.classification)},
             {"terminal", io::to_json(r.terminal)},
             {"steps", r.steps.size()}};
    std::string text = std::string(to_string(r.classification)) + "  terminal " + r.terminal.pretty() + "  after " +
                       std::to_string(r.steps.size()) + " step(s)\n";
    return {out, text, kExitOk};
}

inline Outcome cmd_map_compose(const CommandRequest& req) {
    Json j = load_input(req);
    const Json& maps = io::detail::field(j, "maps", "$");
    if (!maps.is_array() || maps.empty()) throw io::SchemaError("$.maps", "expected a non-empty array of maps");
    std::vector<CremonaMap> fs;
    long total = 1;
    for (std::size_t i = 0; i < maps.size(); ++i) {
        fs.push_back(io::map_from_json(maps[i], "$.maps[" + std::to_string(i) + "]"));
        check_map(fs.back(), "map " + std::to_string(i));
        total *= fs.back().degree();
        if (total > max_degree()) check_degree(static_cast<int>(std::min<long>(total, 1L << 30)), "composition bound");
    }
    CremonaMap r = fs.back();
    for (std::size_t i = fs.size() - 1; i-- > 0;) {
        try {
            r = compose(fs[i], r);
        } catch (const CremonaMapError& e) {
            throw ValidationFailure{Json{{"error", "DegenerateComposition"}, {"message", e.what()}}};
        }
    }
    Json out{{"result", io::to_json(r)}, {"is_identity", is_identity(r)}};
    std::string text = "degree " + std::to_string(r.degree()) + (is_identity(r) ? "  (identity)" : "") + "\n";
    for (const auto& f : r.components()) text += "  " + f.pretty() + "\n";
    return {out, text, kExitOk};
}

inline Outcome cmd_map_fixcheck(const CommandRequest& req) {
    Json j = load_input(req);
    CremonaMap F = io::map_from_json(io::detail::field(j, "map", "$"), "$.map");
    check_map(F, "map");
    TriHomPoly c = io::tripoly_from_json(io::detail::field(j, "curve", "$"), "$.curve");
    if (c.is_zero()) throw io::SchemaError("$.curve", "zero curve");
    check_degree(c.degree(), "curve");
    Json minors = Json::array();
    bool all = true;
    for (const auto& m : fixation_minors(F)) {
        bool d = tri_divides(c, m);
        all = all && d;
        minors.push_back(d);
    }
    Json out{{"fixes_pointwise", all}, {"minors_divisible", minors}};
    return {out, std::string(all ? "fixes the curve pointwise" : "does NOT fix the curve pointwise") + "\n",
            all ? kExitOk : kExitValidation};
}

inline Outcome cmd_jonq_order(const CommandRequest& req) {
    Json j = load_input(req);
    if (j.is_object() && j.contains("matrix")) {
        Mat2RF m = io::matrix_from_json(j["matrix"], "$.matrix");
        PglOrderResult r;
        try {
            r = pgl_order_detail(m);
        } catch (const JonquieresError& e) {
            throw ValidationFailure{Json{{"error", "SingularMatrix"}, {"message", e.what()}}};
        }
        Json out{{"order", to_string(r.order)}, {"lambda", io::to_json(r.lambda)}, {"lambda_text", r.lambda.pretty()}};
        return {out, "order " + to_string(r.order) + "  lambda " + r.lambda.pretty() + "\n", kExitOk};
    }
    JonqElement u = checked_jonq(j);
    auto rep = leminv_check(u);
    return {io::to_json(rep), "order " + to_string(rep.order) + "  lambda " + rep.lambda.pretty() + "  " + rep.verdict + "\n",
            rep.lemma_holds ? kExitOk : kExitValidation};
}

inline Outcome cmd_jonq_mul(const CommandRequest& req) {
    Json j = load_input(req);
    JonqElement u = checked_jonq(io::detail::field(j, "u", "$"), "$.u");
    JonqElement v = checked_jonq(io::detail::field(j, "v", "$"), "$.v");
    if (!(u.h() == v.h())) throw ValidationFailure{Json{{"error", "MismatchedH"}, {"message", "u and v use different h"}}};
    JonqElement w = mul(u, v);
    Json out{{"product", io::to_json(w)}, {"det", io::to_json(w.det())}};
    return {out, "a1 = " + w.a1().pretty() + "\na2 = " + w.a2().pretty() + "\n", kExitOk};
}

inline Outcome cmd_jonq_fix_check(const CommandRequest& req) {
    JonqElement u = checked_jonq(load_input(req));
    bool identity = fixes_hyperelliptic(u);
    CremonaMap F = to_cremona(u);
    Json out{{"identity_holds", identity}, {"map_degree", F.degree()}};
    bool pointwise = true;
    if (F.degree() <= max_degree()) {
        pointwise = fixes_curve_pointwise(F, hyperelliptic_curve(u.h()));
        out["fixes_pointwise"] = pointwise;
    } else {
        out["fixes_pointwise"] = nullptr;
        out["note"] = "pointwise check skipped: map degree above CREMONA_KIT_MAX_DEGREE";
    }
    bool ok = identity && pointwise;
    std::string text = std::string("identity ") + (identity ? "holds" : "FAILS") + ", pointwise " +
                       (out["fixes_pointwise"].is_null() ? "skipped" : (pointwise ? "fixed" : "NOT fixed")) + "\n";
    return {out, text, ok ? kExitOk : kExitValidation};
}

inline Outcome cmd_pencil_check(const CommandRequest& req) {
    PencilCheck c;
    try {
        c = check_rational_pencil(req.n, req.mults);
    } catch (const PencilLemmaError& e) {
        throw MalformedInput(e.what());
    }
    Json out = io::to_json(c);
    out["n"] = req.n;
    out["mults"] = req.mults;
    std::string text = std::string(c.valid ? "valid" : "invalid") + "  genus residual " +
                       std::to_string(c.genus_residual) + "  dimension residual " + std::to_string(c.dimension_residual) +
                       "  3n - sum m = " + std::to_string(c.linear_value) + "\n";
    return {out, text, c.valid ? kExitOk : kExitValidation};
}

inline Outcome cmd_pencil_enum(const CommandRequest& req) {
    std::vector<PencilType> types;
    try {
        types = enumerate_pencil_types(req.max, req.bound);
    } catch (const PencilLemmaError& e) {
        throw ValidationFailure{Json{{"error", "BoundExceeded"}, {"message", e.what()}}};
    }
    Json arr = Json::array();
    std::string text;
    for (const auto& p : types) {
        arr.push_back(io::to_json(p));
        text += p.pretty() + "\n";
    }
    return {Json{{"max", req.max}, {"count", types.size()}, {"types", arr}}, text, kExitOk};
}

inline Outcome cmd_examples(const CommandRequest&) {
    CorpusResult r = examples_corpus();
    Json arr = Json::array();
    for (const auto& e : r.entries)
        arr.push_back(Json{{"name", e.name}, {"source", e.source}, {"passed", e.passed}, {"detail", e.detail}});
    return {Json{{"all_passed", r.all_passed()}, {"entries", arr}}, text_corpus(r),
            r.all_passed() ? kExitOk : kExitValidation};
}

}  // namespace detail

/// Runs one subcommand, writing the report to `out` and diagnostics to `err`.
inline int run(const CommandRequest& req, std::ostream& out, std::ostream& err) {
    using namespace detail;
    auto emit = [&](const Json& report, const std::string& text) {
        if (req.format == Format::Text) out << (text.empty() ? text_generic(report) : text);
        else out << report.dump(2) << "\n";
    };
    try {
        Outcome o;
        const std::string& s = req.subcommand;
        if (s == "genus") o = cmd_genus(req);
        else if (s == "validate") o = cmd_validate(req);
        else if (s == "adjoint-chain") o = cmd_adjoint_chain(req);
        else if (s == "classify") o = cmd_classify(req);
        else if (s == "map-compose") o = cmd_map_compose(req);
        else if (s == "map-fixcheck") o = cmd_map_fixcheck(req);
        else if (s == "jonq-order") o = cmd_jonq_order(req);
        else if (s == "jonq-mul") o = cmd_jonq_mul(req);
        else if (s == "jonq-fix-check") o = cmd_jonq_fix_check(req);
        else if (s == "pencil-check") o = cmd_pencil_check(req);
        else if (s == "pencil-enum") o = cmd_pencil_enum(req);
        else if (s == "examples") o = cmd_examples(req);
        else throw MalformedInput("unknown subcommand '" + s + "'");
        emit(o.report, o.text);
        return o.code;
    } catch (const ValidationFailure& v) {
        emit(v.report, {});
        return kExitValidation;
    } catch (const io::SchemaError& e) {
        err << "error: schema violation at " << e.what() << "\n";
        return kExitMalformed;
    } catch (const MalformedInput& e) {
        err << "error: " << e.what() << "\n";
        return kExitMalformed;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitMalformed;
    }
}

}  // namespace cremona::cli

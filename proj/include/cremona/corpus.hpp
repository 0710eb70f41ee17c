#pragma once

// Built-in corpus of worked examples: adjoint chains of the classical fixed
// curves, the hyperelliptic torus, the quadratic involutions fixing a line and
// the rational-pencil arithmetic. Each entry is a named, self-checking run.

#include "cremona/cremona_map.hpp"
#include "cremona/jonquieres.hpp"
#include "cremona/linsys.hpp"
#include "cremona/pencil_lemma.hpp"
#include "cremona/sampling.hpp"

#include <functional>
#include <string>
#include <vector>

namespace cremona {

struct CorpusEntry {
    std::string name;
    std::string source;  // what classical example the entry reproduces
    bool passed = false;
    std::string detail;
};

struct CorpusResult {
    std::vector<CorpusEntry> entries;
    [[nodiscard]] bool all_passed() const {
        for (const auto& e : entries)
            if (!e.passed) return false;
        return true;
    }
};

namespace corpus_detail {

inline std::string chain_text(const ChainReport& r) {
    std::string s = r.steps.empty() ? "" : r.steps.front().input.pretty();
    for (const auto& st : r.steps) s += " -> " + st.output.pretty();
    return s + " [" + to_string(r.classification) + "]";
}

inline CorpusEntry run(std::string name, std::string source, const std::function<bool(std::string&)>& body) {
    CorpusEntry e{std::move(name), std::move(source), false, {}};
    try {
        e.passed = body(e.detail);
    } catch (const std::exception& ex) {
        e.passed = false;
        e.detail += std::string(e.detail.empty() ? "" : "; ") + "exception: " + ex.what();
    }
    return e;
}

}  // namespace corpus_detail

inline CorpusResult examples_corpus() {
    using corpus_detail::chain_text;
    using corpus_detail::run;
    CorpusResult out;

    for (int g = 2; g <= 6; ++g) {
        out.entries.push_back(run(
            "hyperelliptic-g" + std::to_string(g),
            "hyperelliptic curve of degree g+2 with one ordinary g-fold point; first adjoint is the pencil of lines "
            "through that point (de Jonquieres case)",
            [g](std::string& d) {
                auto c = make_curve_model(g + 2, {g});
                auto r = adjoint_chain(c);
                d = "genus " + std::to_string(genus(c)) + ": " + chain_text(r);
                const auto& s = r.steps.at(0);
                bool content_ok = g == 2 ? !s.pencil_reduction
                                         : (s.pencil_reduction && s.pencil_reduction->content == g - 1);
                return genus(c) == g && r.steps.size() == 1 && s.raw_adjoint == LinSysData::make(g - 1, {g - 1}) &&
                       content_ok && r.terminal == LinSysData::make(1, {1}) &&
                       r.classification == TerminalClass::RationalPencil;
            }));
    }

    out.entries.push_back(run("two-triple-point-sextic",
                              "sextic with two ordinary triple points p, q: the adjoint cubics double at p and q "
                              "contain the line pq; what remains are the conics through p and q",
                              [](std::string& d) {
                                  auto r = adjoint_chain(make_curve_model(6, {3, 3}));
                                  d = chain_text(r);
                                  const auto& s = r.steps.at(0);
                                  return s.raw_adjoint == LinSysData::make(3, {2, 2}) && s.removed_fixed.size() == 1 &&
                                         s.removed_fixed[0].component.degree == 1 && s.removed_fixed[0].count == 1 &&
                                         r.terminal == LinSysData::make(2, {1, 1});
                              }));

    out.entries.push_back(run("geiser-sextic",
                              "Geiser involution: fixed sextic with 7 nodes (genus 3); its adjoint is the net of "
                              "cubics through the 7 points",
                              [](std::string& d) {
                                  auto c = make_curve_model(6, std::vector<int>(7, 2));
                                  auto r = adjoint_chain(c);
                                  d = "genus " + std::to_string(genus(c)) + ": " + chain_text(r);
                                  return genus(c) == 3 && r.steps.size() == 1 &&
                                         r.terminal == LinSysData::make(3, std::vector<int>(7, 1)) &&
                                         member_genus(r.terminal) == 1 && virtual_dim(r.terminal) == 2 &&
                                         r.classification == TerminalClass::EllipticNet;
                              }));

    out.entries.push_back(run("bertini-nonic",
                              "Bertini involution: fixed nonic with 8 triple points (genus 4); the second adjoint is "
                              "the pencil of cubics through the 8 points",
                              [](std::string& d) {
                                  auto c = make_curve_model(9, std::vector<int>(8, 3));
                                  auto r = adjoint_chain(c);
                                  d = "genus " + std::to_string(genus(c)) + ": " + chain_text(r);
                                  return genus(c) == 4 && r.steps.size() == 2 &&
                                         r.steps[0].output == LinSysData::make(6, std::vector<int>(8, 2)) &&
                                         member_genus(r.steps[0].output) == 2 &&
                                         r.terminal == LinSysData::make(3, std::vector<int>(8, 1)) &&
                                         r.classification == TerminalClass::EllipticPencil;
                              }));

    out.entries.push_back(run("geiser-free-intersection",
                              "a cubic of the Geiser net meets the fixed sextic in 4 points off the base points",
                              [](std::string& d) {
                                  auto net = LinSysData::make(3, std::vector<int>(7, 1));
                                  auto sextic = LinSysData::make(6, std::vector<int>(7, 2));
                                  long v = free_intersection(net, sextic);
                                  d = "free intersection " + std::to_string(v);
                                  return v == 4;
                              }));

    out.entries.push_back(run("hyperelliptic-torus",
                              "torus T_h for h = x^6 + x + 1: every element fixes y^2 = h(x) and has order 1, 2 or "
                              "infinity in PGL(2, Q(x))",
                              [](std::string& d) {
                                  UniPoly h = UniPoly::monomial(1, 6) + UniPoly{1, 1};
                                  sampling::Rng rng(20260417);
                                  int fixed = 0, certified = 0, lemma = 0;
                                  for (int i = 0; i < 20; ++i) {
                                      auto u = sampling::jonq(rng, h, 1, 1);
                                      if (fixes_hyperelliptic(u)) ++certified;
                                      if (leminv_check(u).lemma_holds) ++lemma;
                                      // pointwise check on the smaller elements keeps the corpus fast
                                      if (i < 5 && fixes_curve_pointwise(to_cremona(u), hyperelliptic_curve(h))) ++fixed;
                                  }
                                  auto inv = JonqElement(RatFunc(0), RatFunc(1), h);
                                  bool involution = pgl_order(inv.matrix()) == PglOrder::Two &&
                                                    fixes_curve_pointwise(to_cremona(inv), hyperelliptic_curve(h));
                                  d = "identity certified " + std::to_string(certified) + "/20, order lemma " +
                                      std::to_string(lemma) + "/20, pointwise " + std::to_string(fixed) + "/5";
                                  return certified == 20 && lemma == 20 && fixed == 5 && involution;
                              }));

    out.entries.push_back(run("quadratic-involutions",
                              "phi_{mu,nu} = (-x(mu y + nu z) : y(x + mu y + nu z) : z(x + mu y + nu z)) is an "
                              "involution fixing the line x = 0",
                              [](std::string& d) {
                                  const std::vector<std::pair<int, int>> params{{1, 0}, {0, 1}, {1, 1}, {2, -3}, {-1, 5}};
                                  int ok = 0;
                                  for (auto [m, n] : params) {
                                      auto phi = make_phi(m, n);
                                      if (phi.degree() == 2 && is_identity(compose(phi, phi)) &&
                                          fixes_curve_pointwise(phi, TriHomPoly::x()))
                                          ++ok;
                                  }
                                  d = std::to_string(ok) + "/" + std::to_string(params.size()) + " parameter pairs";
                                  return ok == static_cast<int>(params.size());
                              }));

    out.entries.push_back(run("line-fixing-group-nonabelian",
                              "the linear group G and the group H both fix x = 0 pointwise and do not commute",
                              [](std::string& d) {
                                  auto G = make_linear_G(2, 1, 0);
                                  auto H = make_H_element(RatFunc(1), RatFunc(1));
                                  bool fix = fixes_curve_pointwise(G, TriHomPoly::x()) &&
                                             fixes_curve_pointwise(H, TriHomPoly::x()) &&
                                             fixes_curve_pointwise(compose(G, H), TriHomPoly::x());
                                  bool noncommuting = !(compose(G, H) == compose(H, G));
                                  d = std::string("fixation ") + (fix ? "ok" : "FAILED") + ", GH " +
                                      (noncommuting ? "!=" : "==") + " HG";
                                  return fix && noncommuting;
                              }));

    out.entries.push_back(run("rational-pencil-vs-nodal-sextic",
                              "a pencil of rational curves meets a sextic with only ordinary nodes in at least 4 "
                              "points off the base points",
                              [](std::string& d) {
                                  auto types = enumerate_pencil_types(6);
                                  long min_bound = 1000;
                                  for (const auto& p : types) {
                                      // every base point placed at a node
                                      if (p.mults.size() <= 10)
                                          min_bound = std::min(min_bound, sextic_free_intersection_bound(p, p.mults));
                                  }
                                  long lines = sextic_free_intersection_bound({1, {1}}, {1});
                                  d = std::to_string(types.size()) + " pencil types up to degree 6, minimum " +
                                      std::to_string(min_bound) + ", lines through a node give " + std::to_string(lines);
                                  return !types.empty() && min_bound >= 4 && lines == 4;
                              }));

    return out;
}

}  // namespace cremona

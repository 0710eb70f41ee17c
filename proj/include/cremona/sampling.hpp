#pragma once

// Seeded random generators for exact-algebra values, used by the example
// corpus and by the property tests.

#include "cremona/jonquieres.hpp"
#include "cremona/ratfunc.hpp"
#include "cremona/tripoly.hpp"
#include "cremona/unipoly.hpp"

#include <random>
#include <vector>

namespace cremona::sampling {

using Rng = std::mt19937_64;

inline int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

/// p/q with |p| <= bound, 1 <= q <= bound.
inline Rational rational(Rng& rng, int bound = 5) {
    return Rational(uniform(rng, -bound, bound), uniform(rng, 1, bound));
}

inline Rational nonzero_rational(Rng& rng, int bound = 5) {
    Rational r;
    while (r.is_zero()) r = rational(rng, bound);
    return r;
}

inline UniPoly unipoly(Rng& rng, int max_degree, int bound = 5) {
    std::vector<Rational> c(static_cast<std::size_t>(uniform(rng, 0, max_degree)) + 1);
    for (auto& a : c) a = rational(rng, bound);
    return UniPoly(std::move(c));
}

inline UniPoly nonzero_unipoly(Rng& rng, int max_degree, int bound = 5) {
    UniPoly p;
    while (p.is_zero()) p = unipoly(rng, max_degree, bound);
    return p;
}

inline RatFunc ratfunc(Rng& rng, int max_num_degree, int max_den_degree, int bound = 5) {
    return {unipoly(rng, max_num_degree, bound), nonzero_unipoly(rng, max_den_degree, bound)};
}

inline RatFunc nonzero_ratfunc(Rng& rng, int max_num_degree, int max_den_degree, int bound = 5) {
    RatFunc f;
    while (f.is_zero()) f = ratfunc(rng, max_num_degree, max_den_degree, bound);
    return f;
}

inline TriHomPoly tripoly(Rng& rng, int degree, int bound = 5, int density_percent = 60) {
    std::vector<std::pair<Exponent, Rational>> terms;
    for (int i = degree; i >= 0; --i)
        for (int j = degree - i; j >= 0; --j)
            if (uniform(rng, 1, 100) <= density_percent) terms.push_back({{i, j, degree - i - j}, rational(rng, bound)});
    return TriHomPoly::from_terms(terms, degree);
}

/// A T_h element with both a1 and a2 nonzero.
inline JonqElement generic_jonq(Rng& rng, const UniPoly& h, int max_num_degree = 1, int max_den_degree = 1) {
    return {nonzero_ratfunc(rng, max_num_degree, max_den_degree), nonzero_ratfunc(rng, max_num_degree, max_den_degree), h};
}

/// A T_h element drawn from three shapes: a1 = 0, a2 = 0, or both nonzero.
inline JonqElement jonq(Rng& rng, const UniPoly& h, int max_num_degree = 1, int max_den_degree = 1) {
    switch (uniform(rng, 0, 3)) {
        case 0: return {RatFunc(0), nonzero_ratfunc(rng, max_num_degree, max_den_degree), h};
        case 1: return {nonzero_ratfunc(rng, max_num_degree, max_den_degree), RatFunc(0), h};
        default: return generic_jonq(rng, h, max_num_degree, max_den_degree);
    }
}

}  // namespace cremona::sampling

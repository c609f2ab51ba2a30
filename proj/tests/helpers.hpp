#pragma once

#include <random>

#include "hinv/poly.hpp"

namespace testutil {

using hinv::Monomial;
using hinv::Poly;
using hinv::Rational;
using hinv::VarSpace;

inline Rational random_rational(std::mt19937& rng, int lo = -5, int hi = 5) {
    std::uniform_int_distribution<int> num(lo, hi);
    std::uniform_int_distribution<int> den(1, 4);
    return Rational(num(rng), den(rng));
}

inline Rational random_nonzero_rational(std::mt19937& rng, int lo = -5, int hi = 5) {
    Rational r = 0;
    while (r == 0) r = random_rational(rng, lo, hi);
    return r;
}

// Random polynomial in the coordinates only (no parameters).
inline Poly random_poly(std::mt19937& rng, const VarSpace& vs, int max_terms = 4,
                        int max_degree = 3) {
    std::uniform_int_distribution<int> nterms(1, max_terms);
    std::uniform_int_distribution<int> deg(0, max_degree);
    std::uniform_int_distribution<int> var(0, vs.n() - 1);
    Poly p(vs);
    int t = nterms(rng);
    for (int i = 0; i < t; ++i) {
        Monomial m{std::vector<int>(vs.n(), 0), {}};
        int d = deg(rng);
        for (int k = 0; k < d; ++k) m.coord[var(rng)] += 1;
        Rational c = random_rational(rng);
        if (c != 0) p.add_term(std::move(m), c);
    }
    return p;
}

}  // namespace testutil

#pragma once

#include <cstdint>
#include <map>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace hinv {

// One power product: non-negative exponents for the coordinates x_i and
// integer (possibly negative) exponents for the parameters. Zero exponents
// are never stored in the parameter map.
struct Monomial {
    std::vector<int> coord;    // length n, entries >= 0
    std::map<int, int> param;  // parameter index -> nonzero exponent

    int coord_degree() const { return std::accumulate(coord.begin(), coord.end(), 0); }

    int param_degree() const {
        int d = 0;
        for (const auto& [_, e] : param) d += e;
        return d;
    }

    bool is_constant() const {
        return param.empty() && coord_degree() == 0;
    }

    // Residue sum_i i*alpha_i mod n.
    int tau_residue() const {
        long long s = 0;
        int n = static_cast<int>(coord.size());
        for (int i = 0; i < n; ++i) s += static_cast<long long>(i) * coord[i];
        return static_cast<int>(s % n);
    }

    bool operator==(const Monomial&) const = default;
};

inline Monomial mono_mul(const Monomial& a, const Monomial& b) {
    Monomial r = a;
    for (std::size_t i = 0; i < r.coord.size(); ++i) r.coord[i] += b.coord[i];
    for (const auto& [p, e] : b.param) {
        int v = (r.param.count(p) ? r.param[p] : 0) + e;
        if (v == 0)
            r.param.erase(p);
        else
            r.param[p] = v;
    }
    return r;
}

// a / b; coordinate exponents must stay non-negative, parameter exponents
// may go negative (Laurent). Returns false when the coordinate part does
// not divide.
inline bool mono_try_divide(const Monomial& a, const Monomial& b, Monomial& out) {
    out = a;
    for (std::size_t i = 0; i < out.coord.size(); ++i) {
        out.coord[i] -= b.coord[i];
        if (out.coord[i] < 0) return false;
    }
    for (const auto& [p, e] : b.param) {
        int v = (out.param.count(p) ? out.param[p] : 0) - e;
        if (v == 0)
            out.param.erase(p);
        else
            out.param[p] = v;
    }
    return true;
}

// Canonical term order, descending: graded lex on coordinates (x0 most
// significant), then graded lex on parameters in declaration order. Used
// both for printing and as the division order.
struct MonomialOrder {
    // returns true when a precedes b (a is "larger")
    bool operator()(const Monomial& a, const Monomial& b) const {
        int da = a.coord_degree(), db = b.coord_degree();
        if (da != db) return da > db;
        if (a.coord != b.coord) return a.coord > b.coord;
        int pa = a.param_degree(), pb = b.param_degree();
        if (pa != pb) return pa > pb;
        // sparse lex over parameter indices, ascending index significance
        auto ia = a.param.begin(), ib = b.param.begin();
        while (ia != a.param.end() || ib != b.param.end()) {
            int idxa = ia == a.param.end() ? INT32_MAX : ia->first;
            int idxb = ib == b.param.end() ? INT32_MAX : ib->first;
            if (idxa != idxb) {
                // variable present only on one side: compare its exponent to 0
                if (idxa < idxb) return ia->second > 0;
                return 0 > ib->second;
            }
            if (ia->second != ib->second) return ia->second > ib->second;
            ++ia;
            ++ib;
        }
        return false;
    }
};

}  // namespace hinv

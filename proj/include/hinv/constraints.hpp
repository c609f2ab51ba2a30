#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "hinv/heisenberg.hpp"
#include "hinv/poly.hpp"

namespace hinv {

// A finite set of polynomial equations in the parameters alone (no
// coordinates). The underlying space carries two dummy coordinates that
// never occur in the polynomials.
struct ConstraintSystem {
    VarSpace vs;
    std::vector<Poly> polys;

    explicit ConstraintSystem(std::vector<std::string> params)
        : vs(2, std::move(params)) {}

    const std::vector<std::string>& params() const { return vs.params(); }
};

namespace detail {

// Scale to primitive integer coefficients with positive leading coefficient.
inline Poly normalize_constraint(const Poly& p) {
    if (p.is_zero()) return p;
    Integer den = 1, num_gcd = 0;
    for (const auto& [_, c] : p.terms()) den = boost::multiprecision::lcm(den, denominator(c));
    for (const auto& [_, c] : p.terms())
        num_gcd = boost::multiprecision::gcd(num_gcd, Integer(numerator(c) * (den / denominator(c))));
    Rational scale(den, num_gcd);
    if (p.leading_coeff() < 0) scale = -scale;
    return p * scale;
}

}  // namespace detail

// The parameter constraints equivalent to the Jacobi identity for a tensor
// whose entries are linear in the parameters: each coefficient of a
// coordinate monomial in each jacobiator J_ijk must vanish. Constraints are
// normalized (primitive integer, positive leading coefficient), deduplicated
// and sorted.
inline ConstraintSystem jacobi_constraints(const GenericTensor& G) {
    const VarSpace& src = G.bivector.space();
    const int n = src.n();
    ConstraintSystem S(G.params);

    auto keep = [&](const Poly& p, std::vector<Poly>& out) {
        Poly q = detail::normalize_constraint(p);
        if (q.is_zero()) return;
        for (const auto& have : out)
            if (Poly::compare(have, q) == 0) return;
        out.push_back(std::move(q));
    };

    std::vector<Poly> found;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int k = j + 1; k < n; ++k) {
                Poly J = jacobiator(G.bivector, i, j, k);
                // group terms by their coordinate exponent vector
                std::map<std::vector<int>, Poly> groups;
                for (const auto& [mono, c] : J.terms()) {
                    auto it = groups.find(mono.coord);
                    if (it == groups.end())
                        it = groups.emplace(mono.coord, Poly(S.vs)).first;
                    Monomial pm{std::vector<int>(2, 0), mono.param};
                    it->second.add_term(std::move(pm), c);
                }
                for (auto& [_, p] : groups) keep(p, found);
            }

    std::sort(found.begin(), found.end(),
              [](const Poly& a, const Poly& b) { return Poly::compare(a, b) < 0; });
    S.polys = std::move(found);
    return S;
}

namespace detail {

// Rank of the coefficient matrix of `polys` over the monomial basis `basis`,
// by exact rational Gaussian elimination. `start` rows are assumed already
// present in `rows` (allows incremental rank computation).
inline int rational_rank(std::vector<std::vector<Rational>> rows) {
    if (rows.empty()) return 0;
    const std::size_t cols = rows[0].size();
    int rank = 0;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
        std::size_t piv = r;
        while (piv < rows.size() && rows[piv][c] == 0) ++piv;
        if (piv == rows.size()) continue;
        std::swap(rows[piv], rows[r]);
        Rational inv = Rational(1) / rows[r][c];
        for (std::size_t k = c; k < cols; ++k) rows[r][k] *= inv;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == r || rows[i][c] == 0) continue;
            Rational f = rows[i][c];
            for (std::size_t k = c; k < cols; ++k) rows[i][k] -= f * rows[r][k];
        }
        ++r;
        ++rank;
    }
    return rank;
}

inline std::vector<std::vector<Rational>> coefficient_rows(
    const std::vector<Poly>& polys, const std::map<Monomial, int, MonomialOrder>& basis) {
    std::vector<std::vector<Rational>> rows;
    for (const auto& p : polys) {
        std::vector<Rational> row(basis.size(), 0);
        for (const auto& [m, c] : p.terms()) row[basis.at(m)] = c;
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace detail

// Two constraint systems over the same parameters cut out the same linear
// span of polynomials iff rank(A) = rank(B) = rank(A u B).
inline bool span_equivalent(const ConstraintSystem& A, const ConstraintSystem& B) {
    if (!(A.vs == B.vs)) throw std::invalid_argument("span_equivalent: parameter sets differ");
    std::map<Monomial, int, MonomialOrder> basis;
    for (const auto& p : A.polys)
        for (const auto& [m, _] : p.terms()) basis.emplace(m, 0);
    for (const auto& p : B.polys)
        for (const auto& [m, _] : p.terms()) basis.emplace(m, 0);
    if (basis.empty()) return A.polys.empty() == B.polys.empty();
    int idx = 0;
    for (auto& [_, i] : basis) i = idx++;

    auto rows_a = detail::coefficient_rows(A.polys, basis);
    auto rows_b = detail::coefficient_rows(B.polys, basis);
    std::vector<std::vector<Rational>> rows_ab = rows_a;
    rows_ab.insert(rows_ab.end(), rows_b.begin(), rows_b.end());
    int ra = detail::rational_rank(std::move(rows_a));
    int rb = detail::rational_rank(std::move(rows_b));
    int rab = detail::rational_rank(std::move(rows_ab));
    return ra == rab && rb == rab;
}

// Checks whether a parameter assignment satisfies every constraint. Values
// may themselves be polynomials over `out` (e.g. a symbolic family in an
// extra parameter); the report's witness carries the first violated residue.
inline VerificationReport satisfies(const ConstraintSystem& S,
                                    const std::map<std::string, Poly>& assign,
                                    const VarSpace& out) {
    for (std::size_t i = 0; i < S.polys.size(); ++i) {
        Poly v = S.polys[i].substitute(assign, out);
        if (!v.is_zero())
            return VerificationReport::fail("constraints", {static_cast<int>(i)}, std::move(v));
    }
    return VerificationReport::ok("constraints");
}

inline VerificationReport satisfies(const ConstraintSystem& S,
                                    const std::map<std::string, Rational>& assign) {
    VarSpace out(S.vs.n(), {});
    std::map<std::string, Poly> lifted;
    for (const auto& [name, v] : assign) lifted.emplace(name, Poly::constant(out, v));
    return satisfies(S, lifted, out);
}

}  // namespace hinv

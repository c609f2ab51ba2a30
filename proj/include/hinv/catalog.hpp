#pragma once

#include <array>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "hinv/bivector.hpp"
#include "hinv/constraints.hpp"
#include "hinv/heisenberg.hpp"
#include "hinv/parse.hpp"
#include "hinv/poly.hpp"

namespace hinv {

namespace detail {

// Rebuilds a coordinate-free polynomial over another space, matching
// parameters by name.
inline Poly lift_params(const Poly& p, const VarSpace& out) {
    Poly r(out);
    for (const auto& [m, c] : p.terms()) {
        if (m.coord_degree() != 0)
            throw std::invalid_argument("lift_params: polynomial contains coordinates");
        Monomial lifted{std::vector<int>(out.n(), 0), {}};
        for (const auto& [idx, e] : m.param) {
            int oidx = out.param_index(p.space().params()[idx]);
            if (oidx < 0)
                throw std::invalid_argument("lift_params: parameter " +
                                            p.space().params()[idx] + " absent from target");
            lifted.param[oidx] = e;
        }
        r.add_term(std::move(lifted), c);
    }
    return r;
}

}  // namespace detail

// Sum of the full sigma-orbit of p.
inline Poly sigma_orbit_sum(const Poly& p) {
    Poly r(p.space());
    for (int s = 0; s < p.space().n(); ++s) r += p.sigma(s);
    return r;
}

// --- dimension 3 ---------------------------------------------------------

// Band polynomial P_1^0 = a1 x0x1 + a2 x2^2; Poisson for every (a1, a2).
inline Bivector q3(const Poly& a1, const Poly& a2) {
    const VarSpace& vs = a1.space();
    require_same_space(vs, a2.space());
    if (vs.n() != 3) throw std::invalid_argument("q3 requires n = 3");
    Poly p1 = a1 * Poly::coordinate(vs, 0) * Poly::coordinate(vs, 1) +
              a2 * Poly::coordinate(vs, 2, 2);
    return bivector_from_slots(vs, {p1});
}

inline Bivector q3() {
    VarSpace vs(3, {"A1", "A2"});
    return q3(Poly::parameter(vs, "A1"), Poly::parameter(vs, "A2"));
}

inline Bivector q3(const Rational& a1, const Rational& a2) {
    VarSpace vs(3, {});
    return q3(Poly::constant(vs, a1), Poly::constant(vs, a2));
}

// --- dimension 4 ---------------------------------------------------------

// {x_i, x_{i+1}} = k^2 x_i x_{i+1} - x_{i+2} x_{i+3},
// {x_i, x_{i+2}} = k (x_{i+3}^2 - x_{i+1}^2), indices mod 4.
inline Bivector q4(const Poly& k) {
    const VarSpace& vs = k.space();
    if (vs.n() != 4) throw std::invalid_argument("q4 requires n = 4");
    auto x = [&](int i, int e = 1) { return Poly::coordinate(vs, i, e); };
    Poly p1 = k * k * x(0) * x(1) - x(2) * x(3);
    Poly p2 = k * (x(3, 2) - x(1, 2));
    return bivector_from_slots(vs, {p1, p2});
}

inline Bivector q4() { return q4(Poly::parameter(VarSpace(4, {"k"}), "k")); }

inline Bivector q4(const Rational& k) { return q4(Poly::constant(VarSpace(4, {}), k)); }

// The defining Casimirs q1 = (x0^2+x2^2)/2 + k x1x3, q2 = (x1^2+x3^2)/2 + k x0x2.
inline std::pair<Poly, Poly> q4_casimirs(const Poly& k) {
    const VarSpace& vs = k.space();
    if (vs.n() != 4) throw std::invalid_argument("q4_casimirs requires n = 4");
    auto x = [&](int i, int e = 1) { return Poly::coordinate(vs, i, e); };
    Rational half(1, 2);
    Poly c1 = (x(0, 2) + x(2, 2)) * half + k * x(1) * x(3);
    Poly c2 = (x(1, 2) + x(3, 2)) * half + k * x(0) * x(2);
    return {std::move(c1), std::move(c2)};
}

// --- dimension 5 ---------------------------------------------------------

// One of the three reference solution families of the n=5 system: coefficient
// sextuple (A1,A2,A3,B1,B2,B3) as Laurent polynomials in lam.
struct CoefficientFamily {
    std::string name;
    std::array<Poly, 3> A;
    std::array<Poly, 3> B;
};

inline CoefficientFamily coefficient_family(const std::string& name) {
    VarSpace vs(2, {"lam"});
    auto L = [&](int e) { return Poly::parameter(vs, "lam", e); };
    auto C = [&](long n, long d) { return Poly::constant(vs, Rational(n, d)); };
    if (name == "q51")
        return {name,
                {C(-3, 5) * L(2) + C(1, 5) * L(-3), C(-2, 1) * L(-1), L(-2)},
                {C(-1, 5) * L(2) + C(-3, 5) * L(-3), C(2, 1), L(1)}};
    if (name == "q52")
        return {name,
                {C(2, 5) * L(2) + C(1, 5) * L(-3), L(1), C(-1, 1) * L(-1)},
                {C(-1, 5) * L(2) + C(2, 5) * L(-3), C(-1, 1) * L(-2), C(1, 1)}};
    if (name == "linear5")
        return {name,
                {C(-1, 2) * L(1) + C(1, 1), L(1), C(-1, 2) * L(1) + C(-1, 1)},
                {C(1, 2) * L(1) + C(1, 1), C(-2, 1), C(-1, 2) * L(1) + C(1, 1)}};
    throw std::invalid_argument("unknown coefficient family: " + name);
}

// Tensor with band polynomials P_1^0 = A1 x0x1 + A2 x2x4 + A3 x3^2 and
// P_2^0 = B1 x0x2 + B2 x3x4 + B3 x1^2 over the given 5-coordinate space.
inline Bivector q5_slots(const VarSpace& vs, const std::array<Poly, 3>& A,
                         const std::array<Poly, 3>& B) {
    if (vs.n() != 5) throw std::invalid_argument("q5 requires n = 5");
    auto x = [&](int i, int e = 1) { return Poly::coordinate(vs, i, e); };
    Poly p1 = A[0] * x(0) * x(1) + A[1] * x(2) * x(4) + A[2] * x(3, 2);
    Poly p2 = B[0] * x(0) * x(2) + B[1] * x(3) * x(4) + B[2] * x(1, 2);
    return bivector_from_slots(vs, {p1, p2});
}

inline Bivector q5(const CoefficientFamily& fam) {
    VarSpace vs(5, {"lam"});
    std::array<Poly, 3> A = {detail::lift_params(fam.A[0], vs),
                             detail::lift_params(fam.A[1], vs),
                             detail::lift_params(fam.A[2], vs)};
    std::array<Poly, 3> B = {detail::lift_params(fam.B[0], vs),
                             detail::lift_params(fam.B[1], vs),
                             detail::lift_params(fam.B[2], vs)};
    return q5_slots(vs, A, B);
}

inline Bivector q5(const CoefficientFamily& fam, const Rational& lambda) {
    if (lambda == 0) throw std::domain_error("q5: lambda must be nonzero");
    Bivector sym = q5(fam);
    VarSpace out(5, {});
    std::map<std::string, Poly> assign{{"lam", Poly::constant(out, lambda)}};
    Bivector B(out);
    for (const auto& [ij, p] : sym.upper_entries())
        B.set_entry(ij.first, ij.second, p.substitute(assign, out));
    return B;
}

// The degree-5 Casimir of the n=5 structures, assembled from the reference
// coefficients c5..c0; the coordinate orbits are full sigma-orbits of
// tau-degree-0 monomials.
inline Poly k5_casimir(const VarSpace& vs, const std::array<Poly, 3>& A,
                       const std::array<Poly, 3>& B) {
    if (vs.n() != 5) throw std::invalid_argument("k5_casimir requires n = 5");
    auto mono = [&](std::vector<int> exps) {
        Poly p(vs);
        p.add_term(Monomial{std::move(exps), {}}, 1);
        return p;
    };
    Rational half(1, 2), fifth(1, 5);
    Poly c5 = -(A[2] * B[2]) * fifth;
    Poly c4 = A[0] * A[2];
    Poly c3 = -(B[0] * B[2]);
    Poly c2 = (A[0] * A[1] - B[1] * B[2]) * half;
    Poly c1 = (A[1] * A[2] - B[0] * B[1]) * half;
    Poly c0 = A[0] * A[0] - B[0] * B[0] - A[0] * B[0] - A[1] * B[1];
    return c5 * sigma_orbit_sum(mono({5, 0, 0, 0, 0})) +
           c4 * sigma_orbit_sum(mono({1, 3, 1, 0, 0})) +
           c3 * sigma_orbit_sum(mono({0, 3, 0, 1, 1})) +
           c2 * sigma_orbit_sum(mono({1, 2, 0, 0, 2})) +
           c1 * sigma_orbit_sum(mono({0, 1, 0, 2, 2})) + c0 * mono({1, 1, 1, 1, 1});
}

// The proportionality constant of the wedge-square identity, kept as an
// unevaluated fraction -2(B2 A1 + B3^2) / (A2 A3 - B1 B2).
struct FractionPair {
    Poly num;
    Poly den;
};

inline FractionPair qr5_constant(const std::array<Poly, 3>& A, const std::array<Poly, 3>& B) {
    Poly num = (B[1] * A[0] + B[2] * B[2]) * Rational(-2);
    Poly den = A[1] * A[2] - B[0] * B[1];
    return {std::move(num), std::move(den)};
}

// --- reference constraint-system fixtures -----------------------------------

inline ConstraintSystem make_fixture(std::vector<std::string> params,
                                     const std::vector<std::string>& texts) {
    ConstraintSystem S(std::move(params));
    for (const auto& t : texts)
        S.polys.push_back(detail::normalize_constraint(parse_poly(t, S.vs)));
    return S;
}

inline ConstraintSystem jac5_system() {
    return make_fixture({"A1", "A2", "A3", "B1", "B2", "B3"},
                        {
                            "B2^2 + 3*A1*A3 + B1*A3 + A2*B3",
                            "2*A3^2 - 2*A2*B1 - A1*A2 + B2*B3",
                            "-A2^2 - 3*B1*B3 + A1*B3 + B2*A3",
                            "-2*B3^2 - 2*B2*A1 + B1*B2 - A2*A3",
                        });
}

inline ConstraintSystem jac6_system() {
    return make_fixture({"A1", "A2", "A3", "B1", "B2", "B3", "B4", "C"},
                        {
                            "B2^2 + C*A2 - A3^2",
                            "C*B2 - 2*B3*B4 - A2*B3",
                            "A2*A1 - B4*A3 + B1*A2 - B2*B3",
                            "C*B4 - B1*A3 - A1*A3",
                            "C*B3 + B2*B1 + A1*B2",
                            "-2*B3^2 + 2*C*A1 - C*B1 - B4*A2",
                            "-B2*B4 - A3*B3",
                            "-A2^2 - 2*C*B1 - 2*B4*A2 - C*A3 + C*A1",
                            "-C^2 - 2*B1*A2 + 2*B4*A3 - 2*B2*B3 - A2*A3 + A2*A1",
                            "B1*A2 - B4*A3 - B4*A1",
                            "B2*B4 - 2*B3*B1 + A1*B3 - A2*B2",
                        });
}

inline ConstraintSystem jac4_system() {
    return make_fixture({"A1", "A2", "B"}, {"A1*A2 - B^2"});
}

// --- dimension 6 ----------------------------------------------------------

// Direct sum of two 3-dimensional structures: only the distance-2 band is
// nonzero, P_2^0 = b1 x0x2 + b4 x4^2. Even and odd coordinates decouple.
inline Bivector q6_direct_sum(const Poly& b1, const Poly& b4) {
    const VarSpace& vs = b1.space();
    require_same_space(vs, b4.space());
    if (vs.n() != 6) throw std::invalid_argument("q6_direct_sum requires n = 6");
    Poly p2 = b1 * Poly::coordinate(vs, 0) * Poly::coordinate(vs, 2) +
              b4 * Poly::coordinate(vs, 4, 2);
    return bivector_from_slots(vs, {Poly::zero(vs), p2, Poly::zero(vs)});
}

inline Bivector q6_direct_sum() {
    VarSpace vs(6, {"B1", "B4"});
    return q6_direct_sum(Poly::parameter(vs, "B1"), Poly::parameter(vs, "B4"));
}

inline Bivector q6_direct_sum(const Rational& b1, const Rational& b4) {
    VarSpace vs(6, {});
    return q6_direct_sum(Poly::constant(vs, b1), Poly::constant(vs, b4));
}

// --- cubic n=3 example ----------------------------------------------------

// Jacobian structure on 3 coordinates from the Casimir x0^2 x1^2 x2^2 / 2;
// entries have degree 5 = 2 + 3.
inline Bivector h3_cubic_jps() {
    VarSpace vs(3, {});
    Poly c = Poly::coordinate(vs, 0, 2) * Poly::coordinate(vs, 1, 2) *
             Poly::coordinate(vs, 2, 2) * Rational(1, 2);
    return jps_from_casimirs(vs, {c}, Poly::constant(vs, 1));
}

// --- name-based lookup -----------------------------------------------------

inline std::vector<std::string> catalog_names() {
    return {"q3", "q4", "q51", "q52", "linear5", "q6sum", "h3cubic"};
}

// Builds a catalog entry by name. Parameters present in `values` are
// substituted; missing ones stay symbolic.
inline Bivector catalog_lookup(const std::string& name,
                               const std::map<std::string, Rational>& values) {
    auto value_or = [&](const std::string& p, bool* found = nullptr) {
        auto it = values.find(p);
        if (found) *found = it != values.end();
        return it == values.end() ? Rational(0) : it->second;
    };
    auto specialize = [&](Bivector B, const std::vector<std::string>& params) {
        std::map<std::string, Rational> assign;
        for (const auto& p : params) {
            auto it = values.find(p);
            if (it != values.end()) assign.emplace(p, it->second);
        }
        if (assign.empty()) return B;
        std::vector<std::string> remaining;
        for (const auto& p : params)
            if (!assign.count(p)) remaining.push_back(p);
        VarSpace out(B.n(), remaining);
        std::map<std::string, Poly> lifted;
        for (const auto& [k, v] : assign) lifted.emplace(k, Poly::constant(out, v));
        Bivector R(out);
        for (const auto& [ij, p] : B.upper_entries())
            R.set_entry(ij.first, ij.second, p.substitute(lifted, out));
        return R;
    };

    if (name == "q3") return specialize(q3(), {"A1", "A2"});
    if (name == "q4") return specialize(q4(), {"k"});
    if (name == "q51" || name == "q52" || name == "linear5") {
        bool have = false;
        Rational lam = value_or("lam", &have);
        if (have) return q5(coefficient_family(name), lam);
        return q5(coefficient_family(name));
    }
    if (name == "q6sum") return specialize(q6_direct_sum(), {"B1", "B4"});
    if (name == "h3cubic") return h3_cubic_jps();
    throw std::invalid_argument("unknown catalog entry: " + name);
}

}  // namespace hinv

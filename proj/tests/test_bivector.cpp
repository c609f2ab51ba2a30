#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "hinv/bivector.hpp"
#include "hinv/catalog.hpp"
#include "hinv/heisenberg.hpp"
#include "hinv/parse.hpp"
#include "helpers.hpp"

using namespace hinv;
using testutil::random_poly;
using testutil::random_rational;

namespace {

// Independent determinant oracle: cofactor expansion along the first row.
Poly det_cofactor(const std::vector<std::vector<Poly>>& m, const VarSpace& vs) {
    const std::size_t n = m.size();
    if (n == 0) return Poly::constant(vs, 1);
    if (n == 1) return m[0][0];
    Poly det(vs);
    for (std::size_t j = 0; j < n; ++j) {
        if (m[0][j].is_zero()) continue;
        std::vector<std::vector<Poly>> minor;
        for (std::size_t i = 1; i < n; ++i) {
            std::vector<Poly> row;
            for (std::size_t k = 0; k < n; ++k)
                if (k != j) row.push_back(m[i][k]);
            minor.push_back(std::move(row));
        }
        Poly term = m[0][j] * det_cofactor(minor, vs);
        det += (j % 2 == 0) ? term : -term;
    }
    return det;
}

}  // namespace

TEST_CASE("entry storage and antisymmetric extension") {
    VarSpace vs(3, {});
    Bivector B(vs);
    B.set_entry(1, 0, parse_poly("x2", vs));  // flipped on input
    CHECK(B.entry(0, 1) == parse_poly("-x2", vs));
    CHECK(B.entry(1, 0) == parse_poly("x2", vs));
    CHECK(B.entry(2, 2).is_zero());
    CHECK_THROWS_AS(B.set_entry(0, 0, parse_poly("x1", vs)), std::invalid_argument);
    B.set_entry(0, 1, Poly::zero(vs));
    CHECK(B.upper_entries().empty());
    CHECK_THROWS_AS(B.entry(0, 3), std::out_of_range);
}

TEST_CASE("bracket on the dimension-4 structure") {
    Bivector B = q4();
    const VarSpace& vs = B.space();
    auto x = [&](int i) { return Poly::coordinate(vs, i); };
    CHECK(bracket(B, x(0), x(1)) == parse_poly("k^2*x0*x1 - x2*x3", vs));
    CHECK(bracket(B, x(0), x(2)) == parse_poly("k*x3^2 - k*x1^2", vs));
    CHECK(bracket(B, x(1), x(0)) == -bracket(B, x(0), x(1)));

    std::mt19937 rng(42);
    for (int i = 0; i < 10; ++i) {
        Poly f = random_poly(rng, vs), g = random_poly(rng, vs), h = random_poly(rng, vs);
        CHECK(bracket(B, f, f).is_zero());
        // Leibniz rule
        CHECK(bracket(B, f, g * h) == bracket(B, f, g) * h + g * bracket(B, f, h));
        // bilinearity
        CHECK(bracket(B, f + g, h) == bracket(B, f, h) + bracket(B, g, h));
    }
}

TEST_CASE("jacobiator") {
    Bivector B = q4();
    CHECK(jacobiator(B, 0, 1, 2).is_zero());
    CHECK(jacobiator(B, 1, 2, 3).is_zero());
    CHECK_THROWS_AS(jacobiator(B, 0, 0, 1), std::invalid_argument);

    // total antisymmetry on a non-Poisson bivector
    VarSpace vs(3, {});
    Bivector C(vs);
    C.set_entry(0, 1, parse_poly("x2^2", vs));
    C.set_entry(1, 2, parse_poly("x0*x1", vs));
    Poly J = jacobiator(C, 0, 1, 2);
    CHECK(!J.is_zero());
    CHECK(jacobiator(C, 1, 0, 2) == -J);
    CHECK(jacobiator(C, 1, 2, 0) == J);
    CHECK(!is_poisson(C).pass);
    CHECK(is_poisson(C).witness->indices == std::vector<int>{0, 1, 2});

    Bivector Z(vs);
    CHECK(is_poisson(Z).pass);
    CHECK(jacobiator(Z, 0, 1, 2).is_zero());
}

TEST_CASE("modular field and unimodularity") {
    // n=2, P01 = x0^2: component 1 is -4 x0
    VarSpace vs2(2, {});
    Bivector B(vs2);
    B.set_entry(0, 1, parse_poly("x0^2", vs2));
    VectorField v = modular_field(B);
    CHECK(v.components[0].is_zero());
    CHECK(v.components[1] == parse_poly("-4*x0", vs2));
    auto rep = is_unimodular_div(B);
    CHECK(!rep.pass);
    CHECK(rep.witness->indices == std::vector<int>{1});

    CHECK(is_unimodular_div(q3()).pass);
    CHECK(modular_field(q3()).is_zero());
    CHECK(is_unimodular_div(Bivector(vs2)).pass);

    // constant-coefficient bivector
    Bivector K(vs2);
    K.set_entry(0, 1, Poly::constant(vs2, 5));
    CHECK(is_unimodular_div(K).pass);

    // partial check agrees on an H-invariant tensor
    CHECK(is_unimodular_div(q4(), false).pass);
}

TEST_CASE("H-invariant quadratic bivectors have zero modular field (no Jacobi assumed)") {
    std::mt19937 rng(2024);
    for (int n = 3; n <= 8; ++n) {
        GenericTensor G = generic_invariant_quadratic(n);
        for (int trial = 0; trial < 10; ++trial) {
            std::vector<Rational> vals;
            for (std::size_t i = 0; i < G.params.size(); ++i)
                vals.push_back(random_rational(rng));
            CHECK(modular_field(G.instantiate(vals)).is_zero());
        }
    }
}

TEST_CASE("Casimir test") {
    Bivector B = q4();
    auto [c1, c2] = q4_casimirs(Poly::parameter(B.space(), "k"));
    CHECK(is_casimir(B, c1).pass);
    CHECK(is_casimir(B, c2).pass);
    CHECK(is_casimir(B, Poly::constant(B.space(), 3)).pass);
    CHECK(!is_casimir(B, Poly::coordinate(B.space(), 0)).pass);
}

TEST_CASE("Bareiss determinant agrees with cofactor expansion") {
    std::mt19937 rng(31337);
    for (int n = 2; n <= 4; ++n) {
        VarSpace vs(3, {});
        for (int trial = 0; trial < 8; ++trial) {
            std::vector<std::vector<Poly>> m(n, std::vector<Poly>(n, Poly::zero(vs)));
            for (auto& row : m)
                for (auto& p : row) p = random_poly(rng, vs, 2, 2);
            CHECK(detail::det_bareiss(m, vs) == det_cofactor(m, vs));
        }
    }
    // with Laurent parameter entries
    VarSpace vsl(3, {"lam"});
    std::vector<std::vector<Poly>> m = {
        {parse_poly("lam^-1*x0", vsl), parse_poly("x1", vsl)},
        {parse_poly("lam*x2", vsl), parse_poly("lam^-2", vsl)}};
    CHECK(detail::det_bareiss(m, vsl) == det_cofactor(m, vsl));
}

TEST_CASE("Jacobian structures: auto-Jacobi and Casimir property") {
    std::mt19937 rng(777);
    for (int n : {3, 4, 5}) {
        VarSpace vs(n, {});
        for (int trial = 0; trial < 3; ++trial) {
            std::vector<Poly> qs;
            for (int i = 0; i < n - 2; ++i) qs.push_back(random_poly(rng, vs, 3, 3));
            Bivector B = jps_from_casimirs(vs, qs, Poly::constant(vs, 1));
            CHECK(is_poisson(B).pass);
            for (const auto& q : qs) CHECK(is_casimir(B, q).pass);
        }
        CHECK_THROWS_AS(jps_from_casimirs(vs, {}, Poly::constant(vs, 1)),
                        std::invalid_argument);
    }

    // constant gradients give a constant-entry Poisson bivector
    VarSpace vs3(3, {});
    Bivector L = jps_from_casimirs(vs3, {parse_poly("x0 + x1 + x2", vs3)},
                                   Poly::constant(vs3, 1));
    CHECK(is_poisson(L).pass);
    for (const auto& [ij, p] : L.upper_entries()) CHECK(p.x_degree().max == 0);
}

TEST_CASE("q4 equals the Jacobian structure of its Casimirs") {
    Bivector B = q4();
    auto [c1, c2] = q4_casimirs(Poly::parameter(B.space(), "k"));
    Bivector J = jps_from_casimirs(B.space(), {c1, c2}, Poly::constant(B.space(), -1));
    CHECK(J == B);
}

TEST_CASE("wedge square components") {
    VarSpace vs(5, {});
    Bivector Z(vs);
    for (int m = 0; m < 5; ++m) CHECK(wedge_square_cyclic5(Z, m).is_zero());
    CHECK_THROWS_AS(wedge_square_cyclic5(q4(), 0), std::invalid_argument);
    CHECK_THROWS_AS(wedge_square_cyclic5(Z, 5), std::out_of_range);
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "hinv/catalog.hpp"
#include "hinv/constraints.hpp"
#include "hinv/parse.hpp"
#include "helpers.hpp"

using namespace hinv;
using testutil::random_rational;

TEST_CASE("constraint extraction per dimension") {
    CHECK(jacobi_constraints(generic_invariant_quadratic(3)).polys.empty());

    auto S4 = jacobi_constraints(generic_invariant_quadratic(4));
    REQUIRE(S4.polys.size() == 1);
    CHECK(S4.polys[0] == parse_poly("A1*A2 - B^2", S4.vs));

    auto S5 = jacobi_constraints(generic_invariant_quadratic(5));
    CHECK(S5.polys.size() == 4);
    CHECK(span_equivalent(S5, jac5_system()));

    auto S6 = jacobi_constraints(generic_invariant_quadratic(6));
    CHECK(span_equivalent(S6, jac6_system()));
}

TEST_CASE("normalization invariants") {
    auto S5 = jacobi_constraints(generic_invariant_quadratic(5));
    for (const auto& p : S5.polys) {
        CHECK(!p.is_zero());
        CHECK(p.leading_coeff() > 0);
        // primitive integer coefficients
        Integer g = 0;
        for (const auto& [_, c] : p.terms()) {
            CHECK(denominator(c) == 1);
            g = boost::multiprecision::gcd(g, numerator(c));
        }
        CHECK(g == 1);
        // idempotence
        CHECK(detail::normalize_constraint(p) == p);
    }
    // sorted canonically and deduplicated
    for (std::size_t i = 0; i + 1 < S5.polys.size(); ++i)
        CHECK(Poly::compare(S5.polys[i], S5.polys[i + 1]) < 0);

    VarSpace vs(2, {"a", "b"});
    Poly p = parse_poly("-4/6*a^2 + 2/3*b", vs);
    CHECK(detail::normalize_constraint(p) == parse_poly("a^2 - b", vs));
}

TEST_CASE("span equivalence") {
    ConstraintSystem A({"A1", "A2", "B"});
    A.polys.push_back(parse_poly("A1*A2 - B^2", A.vs));
    CHECK(span_equivalent(A, A));

    ConstraintSystem B({"A1", "A2", "B"});
    B.polys.push_back(parse_poly("2*B^2 - 2*A1*A2", B.vs));
    CHECK(span_equivalent(A, B));

    ConstraintSystem C({"A1", "A2", "B"});
    C.polys.push_back(parse_poly("A1*A2", C.vs));
    C.polys.push_back(parse_poly("B^2", C.vs));
    CHECK(!span_equivalent(A, C));

    ConstraintSystem D({"A1", "A2"});
    CHECK_THROWS_AS(span_equivalent(A, D), std::invalid_argument);

    ConstraintSystem E1({"A1", "A2", "B"}), E2({"A1", "A2", "B"});
    CHECK(span_equivalent(E1, E2));  // both empty
    CHECK(!span_equivalent(E1, A));
}

TEST_CASE("span equivalence is an equivalence relation on random systems") {
    std::mt19937 rng(808);
    VarSpace dummy(2, {"a", "b", "c"});
    auto random_system = [&]() {
        ConstraintSystem S({"a", "b", "c"});
        std::uniform_int_distribution<int> count(1, 3);
        int k = count(rng);
        for (int i = 0; i < k; ++i) {
            Poly p(S.vs);
            for (const auto& name : {"a", "b", "c"}) {
                Rational c = random_rational(rng);
                if (c != 0) p += Poly::parameter(S.vs, name, 2) * c;
            }
            if (!p.is_zero()) S.polys.push_back(detail::normalize_constraint(p));
        }
        return S;
    };
    for (int t = 0; t < 15; ++t) {
        auto X = random_system(), Y = random_system(), Z = random_system();
        CHECK(span_equivalent(X, X));
        CHECK(span_equivalent(X, Y) == span_equivalent(Y, X));
        if (span_equivalent(X, Y) && span_equivalent(Y, Z)) CHECK(span_equivalent(X, Z));
    }
}

TEST_CASE("assignment verification") {
    auto jac5 = jac5_system();

    // the reference solution families satisfy the system with lambda symbolic
    for (const char* name : {"q51", "q52", "linear5"}) {
        auto fam = coefficient_family(name);
        VarSpace out(2, {"lam"});
        std::map<std::string, Poly> assign{{"A1", fam.A[0]}, {"A2", fam.A[1]},
                                           {"A3", fam.A[2]}, {"B1", fam.B[0]},
                                           {"B2", fam.B[1]}, {"B3", fam.B[2]}};
        CHECK(satisfies(jac5, assign, out).pass);
    }

    // all-ones fails: first equation evaluates to 6
    std::map<std::string, Rational> ones;
    for (const auto& p : jac5.params()) ones[p] = 1;
    auto rep = satisfies(jac5, ones);
    CHECK(!rep.pass);
    CHECK(rep.witness->value == Poly::constant(rep.witness->value.space(), 6));

    // the all-zero assignment trivially satisfies
    std::map<std::string, Rational> zeros;
    for (const auto& p : jac5.params()) zeros[p] = 0;
    CHECK(satisfies(jac5, zeros).pass);
}

TEST_CASE("extraction soundness on random assignments") {
    std::mt19937 rng(1234);
    for (int n : {4, 5}) {
        GenericTensor G = generic_invariant_quadratic(n);
        ConstraintSystem S = jacobi_constraints(G);
        for (int t = 0; t < 20; ++t) {
            std::vector<Rational> vals;
            std::map<std::string, Rational> assign;
            for (const auto& p : G.params) {
                Rational v = random_rational(rng, -3, 3);
                vals.push_back(v);
                assign[p] = v;
            }
            CHECK(satisfies(S, assign).pass == is_poisson(G.instantiate(vals)).pass);
        }
    }
}

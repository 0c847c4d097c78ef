#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "qmdr/polynomial.hpp"
#include "qmdr/serialize.hpp"

using namespace qmdr;

namespace {

constexpr VarId Q = 0, P = 1, K = 2, L = 3;  // q, p, k, lambda

Polynomial var(VarId v) { return Polynomial::variable(v); }

Polynomial random_poly(std::mt19937_64& rng) {
    std::uniform_int_distribution<long long> coeff(-1000000000LL, 1000000000LL);
    std::uniform_int_distribution<unsigned> exp(0, 3);
    std::uniform_int_distribution<unsigned> nterms(1, 6);
    Polynomial p;
    for (unsigned t = nterms(rng); t > 0; --t) {
        Monomial m;
        for (VarId v : {Q, P, K}) {
            unsigned e = exp(rng);
            if (e) m.exps[v] = e;
        }
        p += Polynomial::term(m, CRat(Rat(coeff(rng)), Rat(coeff(rng))));
    }
    return p;
}

}  // namespace

TEST_CASE("derivative examples") {
    // d/dq (q^2 p) = 2 q p
    Polynomial q2p = var(Q) * var(Q) * var(P);
    CHECK(q2p.derive(Q) == (var(Q) * var(P)).scaled(crat(2)));
    // d/dp q = 0
    CHECK(var(Q).derive(P).is_zero());
    // d/dk (k^4 - 3k^2) = 4k^3 - 6k, against the term-by-term oracle
    Polynomial f = var(K).pow(4) - var(K).pow(2).scaled(crat(3));
    Polynomial expected = var(K).pow(3).scaled(crat(4)) - var(K).scaled(crat(6));
    CHECK(f.derive(K) == expected);
    // derivative of a constant is the zero polynomial
    CHECK(Polynomial(crat(7)).derive(K).is_zero());
}

TEST_CASE("ring axioms on randomized instances") {
    std::mt19937_64 rng(42);
    for (int trial = 0; trial < 50; ++trial) {
        Polynomial a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a + b == b + a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * b == b * a);
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a - a).is_zero());
        CHECK(a * Polynomial::one() == a);
    }
}

TEST_CASE("Leibniz rule") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        Polynomial f = random_poly(rng), g = random_poly(rng);
        for (VarId v : {Q, P, K})
            CHECK((f * g).derive(v) == f.derive(v) * g + f * g.derive(v));
    }
}

TEST_CASE("expand_analytic of sine") {
    // arg = l k has total degree 2, so keeping arg^3 needs degree 6
    Polynomial arg = Polynomial::term(Monomial::var(L) * Monomial::var(K), crat(1));
    Polynomial got = expand_analytic(sin_taylor(3), arg, 6);
    Polynomial expected =
        arg - Polynomial::term(Monomial::var(L, 3) * Monomial::var(K, 3), crat(1, 6));
    CHECK(got == expected);
}

TEST_CASE("expand_analytic of exp at zero argument") {
    CHECK(expand_analytic(exp_taylor(4), Polynomial::zero(), 4) == Polynomial::one());
}

TEST_CASE("sin^2 series against the squared-sine oracle") {
    Polynomial arg = Polynomial::term(Monomial::var(L) * Monomial::var(K), crat(1));
    // oracle: square the sine expansion and truncate
    Polynomial sine = expand_analytic(sin_taylor(6), arg, 12);
    Polynomial oracle = (sine * sine).truncate_total_degree(12);
    Polynomial got = expand_analytic(sin_sq_taylor(6), arg, 12);
    CHECK(got == oracle);
    // and the closed coefficients: x^2 - x^4/3 + 2x^6/45 for x = l k
    Polynomial expected = arg.pow(2) - arg.pow(4).scaled(crat(1, 3)) +
                          arg.pow(6).scaled(crat(2, 45));
    CHECK(got == expected);
}

TEST_CASE("exp(a+b) = exp(a) exp(b) up to truncation") {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<int> coeff(-4, 4);
    for (int trial = 0; trial < 20; ++trial) {
        Polynomial a = var(Q).scaled(crat(coeff(rng))) + var(P).scaled(crat(coeff(rng)));
        Polynomial b = var(K).scaled(crat(coeff(rng)));
        unsigned order = 5;
        Polynomial lhs = expand_analytic(exp_taylor(order), a + b, order);
        Polynomial rhs = (expand_analytic(exp_taylor(order), a, order) *
                          expand_analytic(exp_taylor(order), b, order))
                             .truncate_total_degree(order);
        CHECK(lhs == rhs);
    }
}

TEST_CASE("expand_analytic rejects a nonzero constant term") {
    CHECK_THROWS_AS(expand_analytic(exp_taylor(2), Polynomial::one(), 2),
                    std::invalid_argument);
}

TEST_CASE("monomial canonical form drops zero exponents") {
    Monomial m = Monomial::var(Q, 0);
    CHECK(m.exps.empty());
    CHECK(Monomial::var(Q, 2).total_degree() == 2);
}

TEST_CASE("canonical JSON form") {
    Polynomial p = var(Q).pow(2).scaled(crat(1, 2)) - var(P).scaled(crat(3));
    std::vector<std::string> names{"q", "p"};
    Json j = polynomial_to_json(p, &names);
    CHECK(j.dump() ==
          R"([{"monomial":[["q",2]],"re":"1/2"},{"monomial":[["p",1]],"re":"-3"}])");
}

TEST_CASE("substitute and coefficient_in") {
    Polynomial p = var(K).pow(4).scaled(crat(-1, 3)) * Polynomial::term(Monomial::var(L, 2), crat(1)) +
                   var(K).pow(2);
    CHECK(p.coefficient_in(K, 2) == Polynomial::one());
    CHECK(p.substitute(L, crat(0)) == var(K).pow(2));
    CHECK(p.substitute(L, crat(1)).coefficient_in(K, 4) == Polynomial(crat(-1, 3)));
}

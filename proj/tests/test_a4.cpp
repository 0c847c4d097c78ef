#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qmdr/a4.hpp"
#include "qmdr/verify.hpp"

using namespace qmdr;

namespace {

Polynomial k_pow(unsigned n) { return Polynomial::variable(kVarK).pow(n); }

}  // namespace

TEST_CASE("a4_from_symbol: polymer and Moyal values at unit scale") {
    Polynomial polymer = k_pow(2) - k_pow(4).scaled(crat(1, 3));
    A4Result lqg = a4_from_symbol({polymer, Rat(0)});
    CHECK(lqg.a4 == Polynomial(crat(-1, 3)));
    CHECK(lqg.sigma == -1);
    CHECK(lqg.ell_star_sq == Polynomial::one());

    Polynomial moyal = k_pow(2) + k_pow(4).scaled(crat(1, 3));
    A4Result st = a4_from_symbol({moyal, Rat(0)});
    CHECK(st.a4 == Polynomial(crat(1, 3)));
    CHECK(st.sigma == +1);
    CHECK(st.ell_star_sq == Polynomial::one());
}

TEST_CASE("a4_from_symbol: symbolic scales and the free symbol") {
    A4Result lqg = a4_from_symbol(
        {realization_dispersion({RealizationKind::polymer, {}}, 4), Rat(0)});
    CHECK(lqg.a4 == Polynomial::term(Monomial::var(kVarLambda, 2), crat(-1, 3)));

    // the free operator has no quartic correction
    A4Result free_op = a4_from_symbol({k_pow(2), Rat(1)});
    CHECK(free_op.a4.is_zero());
    CHECK(free_op.ell_star_sq.is_zero());
    CHECK(free_op.sigma == +1);

    // a constant term is treated as mass and stripped before the extraction
    CHECK(a4_from_symbol({k_pow(2) + Polynomial::one(), Rat(0)}).a4.is_zero());

    // odd powers of k have no place in a squared-operator symbol
    CHECK_THROWS_AS(a4_from_symbol({k_pow(2) + k_pow(3), Rat(0)}),
                    std::invalid_argument);
}

TEST_CASE("a4 linearity in a quartic perturbation") {
    for (int c = -4; c <= 4; ++c) {
        Polynomial sym = k_pow(2) + k_pow(4).scaled(crat(c, 7));
        A4Result res = a4_from_symbol({sym, Rat(0)});
        CHECK(res.a4 == Polynomial(crat(c, 7)));
        CHECK(res.sigma == (c < 0 ? -1 : +1));
    }
}

TEST_CASE("gilkey_a4_flat") {
    CHECK(gilkey_a4_flat(PiRat(0), PiRat(1)).is_zero());

    // V = 32 pi^2 makes the prefactor exactly one: a4 = E^2
    PiRat v = PiRat(32) * PiRat::pi() * PiRat::pi();
    CHECK(gilkey_a4_flat(PiRat(1), v) == PiRat(1));
    CHECK(gilkey_a4_flat(PiRat(3), v) == PiRat(9));

    // symbolic mass endomorphism: V * m^4 / (32 pi^2) with m^2 = 5
    PiRat got = gilkey_a4_flat(PiRat(5), PiRat(2));
    CHECK(got == PiRat(Rat(50, 32)) / (PiRat::pi() * PiRat::pi()));

    // linear in the volume, quadratic in the endomorphism
    CHECK(gilkey_a4_flat(PiRat(2), PiRat(6)) ==
          gilkey_a4_flat(PiRat(2), PiRat(3)) * PiRat(2));
    CHECK(gilkey_a4_flat(PiRat(4), PiRat(1)) ==
          gilkey_a4_flat(PiRat(2), PiRat(1)) * PiRat(4));
}

TEST_CASE("scale_matching") {
    ScaleMatchReport eq = scale_matching(Rat(1, 3), Rat(-1, 3));
    CHECK(eq.match);
    CHECK(eq.opposite_signs);
    CHECK(eq.common_ell_star_sq == 1);
    CHECK(eq.ratio == 1);

    ScaleMatchReport off = scale_matching(Rat(1, 3), Rat(-1, 6));
    CHECK_FALSE(off.match);
    CHECK(off.ratio == 2);

    ScaleMatchReport zero = scale_matching(Rat(0), Rat(0));
    CHECK(zero.match);
    CHECK(zero.common_ell_star_sq == 0);

    // symmetric under swapping the two sides up to the ratio inversion
    ScaleMatchReport ab = scale_matching(Rat(2, 3), Rat(-1, 3));
    ScaleMatchReport ba = scale_matching(Rat(-1, 3), Rat(2, 3));
    CHECK(ab.match == ba.match);
    CHECK(ab.ratio * ba.ratio == 1);
}

TEST_CASE("scale matching ties the two realizations together") {
    // both realizations at matched scales lambda^2 = |theta| = s
    for (Rat s : {Rat(1), Rat(1, 4), Rat(9, 2)}) {
        Rat a4_lqg = -s / 3;
        Rat a4_st = s / 3;
        ScaleMatchReport rep = scale_matching(a4_st, a4_lqg);
        CHECK(rep.match);
        CHECK(rep.opposite_signs);
        CHECK(rep.common_ell_star_sq == s);
    }
    CHECK(check_a4_values().pass);
}

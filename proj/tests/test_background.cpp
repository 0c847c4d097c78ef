#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "qmdr/background.hpp"
#include "qmdr/verify.hpp"

using namespace qmdr;

namespace {

Matrix<Rat> eps2(Rat scale = Rat(1)) {
    Matrix<Rat> m(2, 2);
    m(0, 1) = scale;
    m(1, 0) = -scale;
    return m;
}

// complex 4-vector helpers for building test bivectors from J eigenvectors
using CVec = std::vector<CRat>;

PiMatrix real_wedge(const CVec& a, const CVec& b, bool conjugate_b) {
    size_t d = a.size();
    PiMatrix out(d, d);
    for (size_t i = 0; i < d; ++i)
        for (size_t j = 0; j < d; ++j) {
            CRat bj = conjugate_b ? b[j].conj() : b[j];
            CRat bi = conjugate_b ? b[i].conj() : b[i];
            CRat entry = a[i] * bj - a[j] * bi;  // a wedge b
            out(i, j) = PiRat(entry.re * 2);     // 2 Re(...) makes it real
        }
    return out;
}

Matrix<Rat> j_4d() {
    // block-diagonal standard J: J e1 = e2, J e3 = e4
    Matrix<Rat> j(4, 4);
    j(0, 1) = -1;
    j(1, 0) = 1;
    j(2, 3) = -1;
    j(3, 2) = 1;
    return j;
}

}  // namespace

TEST_CASE("seiberg_witten_map: d = 2 closed form") {
    BackgroundFields bg;
    bg.dim = 2;
    bg.g_closed = Matrix<Rat>::identity(2);
    bg.B = eps2(Rat(1, 2));
    bg.alpha_prime = Rat(1);
    OpenStringData open = seiberg_witten_map(bg);

    PiRat beta = PiRat(2) * PiRat::pi();  // 2 pi alpha'
    PiRat b = beta * PiRat(Rat(1, 2));    // the dimensionless b = 2 pi a' B12
    PiRat denom = PiRat(1) + b * b;

    // M = 1/(1+b^2) [[1, -b], [b, 1]] split into symmetric and antisymmetric parts
    CHECK(open.G_open(0, 0) == denom);
    CHECK(open.G_open(1, 1) == denom);
    CHECK(open.G_open(0, 1).is_zero());
    CHECK(open.Theta(0, 1) == -(beta * b / denom));
    CHECK(open.Theta(1, 0) == beta * b / denom);
}

TEST_CASE("seiberg_witten_map: commutative limit B = 0") {
    BackgroundFields bg;
    bg.dim = 2;
    bg.g_closed = Matrix<Rat>::identity(2).scaled(Rat(3));
    bg.B = Matrix<Rat>(2, 2);
    bg.alpha_prime = Rat(1, 2);
    OpenStringData open = seiberg_witten_map(bg);
    CHECK(open.G_open == bg.g_closed.map([](const Rat& r) { return PiRat(r); }));
    CHECK(open.Theta.is_zero());
    CHECK(open.theta_norm_sq.is_zero());
    CHECK(open.theta_norm.exact.has_value());
    CHECK(open.theta_norm.exact->first == 0);
}

TEST_CASE("seiberg_witten_map: reconstruction identity on random backgrounds") {
    CHECK(check_sw_reconstruction(25, 2024).pass);
}

TEST_CASE("product form agrees with the split form up to the recorded sign") {
    CheckReport rep = check_sw_product_form(10, 7);
    CHECK(rep.pass);
    REQUIRE(rep.note.has_value());
}

TEST_CASE("theta_norm is invariant under signed permutations of the basis") {
    std::mt19937_64 rng(12);
    BackgroundFields bg = random_background(4, rng);
    OpenStringData open = seiberg_witten_map(bg);
    // signed permutation S: swap axes 0<->2, negate axis 1
    Matrix<Rat> s(4, 4);
    s(0, 2) = 1;
    s(2, 0) = 1;
    s(1, 1) = -1;
    s(3, 3) = 1;
    BackgroundFields rotated;
    rotated.dim = 4;
    rotated.g_closed = s.transpose() * bg.g_closed * s;
    rotated.B = s.transpose() * bg.B * s;
    rotated.alpha_prime = bg.alpha_prime;
    OpenStringData open2 = seiberg_witten_map(rotated);
    CHECK(open.theta_norm_sq == open2.theta_norm_sq);
}

TEST_CASE("theta_type_check") {
    Matrix<Rat> j = j_4d();
    // (1,0) eigenvectors of J: v = e1 - i e2, w = e3 - i e4
    CVec v{crat(1), CRat(Rat(0), Rat(-1)), crat(0), crat(0)};
    CVec w{crat(0), crat(0), crat(1), CRat(Rat(0), Rat(-1))};

    SUBCASE("holomorphic bivector passes") {
        PiMatrix theta = real_wedge(v, w, false);  // 2 Re(v ^ w): type (2,0)+(0,2)
        REQUIRE_FALSE(theta.is_zero());
        CHECK(theta_type_check(j, theta).pass());
    }
    SUBCASE("mixed-type bivector fails") {
        PiMatrix theta = real_wedge(v, w, true);  // 2 Re(v ^ conj(w)): type (1,1)
        REQUIRE_FALSE(theta.is_zero());
        TypeCheckReport rep = theta_type_check(j, theta);
        CHECK_FALSE(rep.pass());
        CHECK_FALSE(rep.mixed_plus_minus_zero);
    }
    SUBCASE("zero bivector passes vacuously") {
        CHECK(theta_type_check(j, PiMatrix(4, 4)).pass());
    }
    SUBCASE("dimension mismatch") {
        CHECK_THROWS_AS(theta_type_check(j, PiMatrix(2, 2)), std::invalid_argument);
    }
}

TEST_CASE("phase invariance of the complexified norm") {
    PiMatrix theta(2, 2);
    theta(0, 1) = PiRat(Rat(3)) * PiRat::pi();
    theta(1, 0) = -theta(0, 1);
    CHECK(phase_invariance_check(theta, {{Rat(1), Rat(0)}}).pass);          // phi = 0
    CHECK(phase_invariance_check(theta, {{Rat(0), Rat(1)}}).pass);          // phi = pi/2
    CHECK(phase_invariance_check(theta, {{Rat(3, 5), Rat(4, 5)}}).pass);    // pythagorean
    CHECK_THROWS_AS(phase_invariance_check(theta, {{Rat(1, 2), Rat(1, 2)}}),
                    std::invalid_argument);
}

TEST_CASE("flux_theta") {
    CHECK(flux_theta({0, Rat(1), Rat(1)}, Rat(1)).is_zero());
    CHECK(flux_theta({1, Rat(1), Rat(1)}, Rat(1)) == PiRat(2) * PiRat::pi());
    CHECK(flux_theta({-3, Rat(1), Rat(1)}, Rat(1, 2)) == PiRat(3) * PiRat::pi());
    // linearity in the charge
    PiRat unit = flux_theta({1, Rat(1), Rat(1)}, Rat(5, 3));
    CHECK(flux_theta({4, Rat(1), Rat(1)}, Rat(5, 3)) == unit * PiRat(4));
}

TEST_CASE("immirzi_from_flux") {
    ScalarResult g1 = immirzi_from_flux({1, Rat(1), Rat(1)});
    CHECK(g1.exact);
    CHECK(g1.value.lo == 1);

    ScalarResult g2 = immirzi_from_flux({4, Rat(1), Rat(2)});  // sqrt(4)/2 = 1
    CHECK(g2.exact);
    CHECK(g2.value.lo == 1);

    ScalarResult g3 = immirzi_from_flux({2, Rat(1), Rat(1)});
    CHECK_FALSE(g3.exact);
    CHECK(g3.value.lo >= Rat(141421356, 100000000));
    CHECK(g3.value.hi <= Rat(141421357, 100000000));

    // strictly increasing in |n|
    Enclosure prev{Rat(0), Rat(0)};
    for (long n = 1; n <= 6; ++n) {
        ScalarResult g = immirzi_from_flux({n, Rat(1), Rat(1)});
        CHECK(g.value.lo > prev.hi - Rat(1, 1000000));
        CHECK(g.value.hi > prev.lo);
        prev = g.value;
    }
}

TEST_CASE("bracket_scale_check") {
    CHECK(bracket_scale_check(Rat(1), Rat(1)).coefficient == 1);
    CHECK(bracket_scale_check(Rat(2), Rat(1)).coefficient == 2);
    CHECK(bracket_scale_check(Rat(1, 2), Rat(3)).coefficient == Rat(9, 2));
    CHECK(bracket_scale_check(Rat(1, 2), Rat(3)).matches_gamma_ellP_sq);
}

TEST_CASE("realization_dispersion: polymer") {
    Polynomial disp = realization_dispersion({RealizationKind::polymer, {}}, 6);
    Polynomial k = Polynomial::variable(kVarK);
    Polynomial lam2 = Polynomial::term(Monomial::var(kVarLambda, 2), crat(1));
    Polynomial lam4 = Polynomial::term(Monomial::var(kVarLambda, 4), crat(1));
    CHECK(disp == k.pow(2) - lam2.scaled(crat(1, 3)) * k.pow(4) +
                      lam4.scaled(crat(2, 45)) * k.pow(6));
    // lambda -> 0 limit restores k^2
    CHECK(disp.substitute(kVarLambda, crat(0)) == k.pow(2));
    CHECK_THROWS_AS(realization_dispersion({RealizationKind::polymer, {}}, 3),
                    std::invalid_argument);
}

TEST_CASE("realization_dispersion: moyal") {
    Polynomial disp = realization_dispersion({RealizationKind::moyal, {}}, 4);
    Polynomial k = Polynomial::variable(kVarK);
    Polynomial theta = Polynomial::variable(kVarTheta);
    CHECK(disp == k.pow(2) + theta.scaled(crat(1, 3)) * k.pow(4));
}

TEST_CASE("extract_mdr") {
    MdrExtract poly = extract_mdr(realization_dispersion({RealizationKind::polymer, {}}, 6));
    CHECK(poly.sigma == -1);
    CHECK(poly.ell_star_sq == Polynomial::term(Monomial::var(kVarLambda, 2), crat(1)));
    CHECK(poly.quartic_coefficient ==
          Polynomial::term(Monomial::var(kVarLambda, 2), crat(-1, 3)));

    MdrExtract moyal = extract_mdr(realization_dispersion({RealizationKind::moyal, {}}, 4));
    CHECK(moyal.sigma == +1);
    CHECK(moyal.ell_star_sq == Polynomial::variable(kVarTheta));

    // undeformed k^2: relativistic limit
    Polynomial k2 = Polynomial::variable(kVarK).pow(2);
    MdrExtract flat = extract_mdr(k2);
    CHECK(flat.sigma == +1);
    CHECK(flat.ell_star_sq.is_zero());

    // malformed inputs
    Polynomial k = Polynomial::variable(kVarK);
    CHECK_THROWS_AS(extract_mdr(k2 + k), std::invalid_argument);          // odd term
    CHECK_THROWS_AS(extract_mdr(k2.scaled(crat(2))), std::invalid_argument);  // k^2 != 1
    CHECK_THROWS_AS(extract_mdr(k2 + Polynomial::one()), std::invalid_argument);
}

TEST_CASE("cross-realization universality") {
    CHECK(check_universality().pass);
}

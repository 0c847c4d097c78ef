#include "qmdr/verify.hpp"

#include "qmdr/a4.hpp"
#include "qmdr/symplectic.hpp"

namespace qmdr {

namespace {

Rat factorial(unsigned n) {
    Rat f = 1;
    for (unsigned k = 2; k <= n; ++k) f *= k;
    return f;
}

RatMatrix canonical_omega_2d(const Rat& scale = Rat(1)) {
    RatMatrix w(2, 2);
    w(0, 1) = scale;
    w(1, 0) = -scale;
    return w;
}

RatMatrix canonical_j_2d() {
    RatMatrix j(2, 2);
    j(0, 1) = -1;
    j(1, 0) = 1;
    return j;
}

}  // namespace

BackgroundFields random_background(size_t dim, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> entry(-3, 3);
    std::uniform_int_distribution<int> alpha_num(1, 4);
    BackgroundFields bg;
    bg.dim = dim;
    Matrix<Rat> a(dim, dim);
    for (size_t i = 0; i < dim; ++i)
        for (size_t j = 0; j < dim; ++j) a(i, j) = entry(rng);
    bg.g_closed = a.transpose() * a + Matrix<Rat>::identity(dim);  // SPD
    bg.B = Matrix<Rat>(dim, dim);
    for (size_t i = 0; i < dim; ++i)
        for (size_t j = i + 1; j < dim; ++j) {
            Rat v = entry(rng);
            bg.B(i, j) = v;
            bg.B(j, i) = -v;
        }
    bg.alpha_prime = Rat(alpha_num(rng), 2);
    return bg;
}

CheckReport check_berezin_flat_chart(const StarProduct& sp) {
    CheckReport rep = CheckReport::ok("berezin_flat_chart", sp.order, 1);
    DarbouxChart chart = sp.chart;
    VarId s = chart.dim();  // formal scale variable ell_*
    chart.formal_symbols.push_back(s);
    StarProduct local{chart, sp.order, sp.debug_c2_scale};

    Polynomial sp_arg = Polynomial::variable(s) * Polynomial::variable(chart.p(0));
    TruncatedSeries exp_star = star_exponential(local, sp_arg, 6);

    // star powers of a linear function are pointwise: grades >= 1 vanish
    for (unsigned r = 1; r <= local.order; ++r)
        if (!exp_star.coefficient(r).is_zero())
            return rep.fail("grade " + std::to_string(r) + " is nonzero for a linear exponent");

    // grade 0 equals the ordinary exponential series through s^5
    Polynomial expected;
    CRat i_pow(Rat(1));
    for (unsigned n = 0; n <= 5; ++n) {
        Monomial m = Monomial::var(s, n) * Monomial::var(chart.p(0), n);
        expected += Polynomial::term(m, i_pow * CRat(Rat(1) / factorial(n)));
        i_pow *= CRat::i();
    }
    Polynomial got;
    for (const auto& [m, c] : exp_star.coefficient(0).terms())
        if (m.degree_in(s) <= 5) got += Polynomial::term(m, c);
    if (!(got == expected)) return rep.fail("series differs from the pointwise exponential");

    // cubic coefficient: -sigma i p^3 / 6 with sigma = +1
    Polynomial cubic = exp_star.coefficient(0).coefficient_in(s, 3);
    Polynomial want = Polynomial::variable(chart.p(0)).pow(3).scaled(CRat(Rat(0), Rat(-1, 6)));
    if (!(cubic == want)) return rep.fail("cubic coefficient != -i p^3/6");
    return rep;
}

CheckReport check_polymer_expansion() {
    CheckReport rep = CheckReport::ok("polymer_expansion", 6, 1);
    Polynomial disp = realization_dispersion({RealizationKind::polymer, std::nullopt}, 6);
    Polynomial k = Polynomial::variable(kVarK);
    Polynomial lam2 = Polynomial::term(Monomial::var(kVarLambda, 2), CRat(Rat(1)));
    Polynomial lam4 = Polynomial::term(Monomial::var(kVarLambda, 4), CRat(Rat(1)));
    Polynomial expected = k.pow(2) - lam2.scaled(CRat(Rat(1, 3))) * k.pow(4) +
                          lam4.scaled(CRat(Rat(2, 45))) * k.pow(6);
    if (!(disp == expected)) return rep.fail("series differs from the sin^2 expansion");
    rep.note =
        "k^6 coefficient is 2 lambda^4/45 from the Taylor expansion; the displayed "
        "expansion's lambda^4/45 is off by a factor of 2";
    return rep;
}

CheckReport check_universality() {
    CheckReport rep = CheckReport::ok("cross_realization_universality", 6, 2);
    MdrExtract poly = extract_mdr(realization_dispersion({RealizationKind::polymer, {}}, 6));
    MdrExtract moyal = extract_mdr(realization_dispersion({RealizationKind::moyal, {}}, 4));

    Polynomial lam2 = Polynomial::term(Monomial::var(kVarLambda, 2), CRat(Rat(1)));
    Polynomial theta = Polynomial::variable(kVarTheta);
    if (poly.sigma != -1 || !(poly.ell_star_sq == lam2))
        return rep.fail("polymer extraction != (sigma=-1, ell*^2=lambda^2)");
    if (moyal.sigma != +1 || !(moyal.ell_star_sq == theta))
        return rep.fail("moyal extraction != (sigma=+1, ell*^2=|theta|)");

    // equal numeric scales: lambda^2 = |theta| = 1
    MdrExtract pn = extract_mdr(realization_dispersion({RealizationKind::polymer, Rat(1)}, 6));
    MdrExtract mn = extract_mdr(realization_dispersion({RealizationKind::moyal, Rat(1)}, 4));
    ScaleMatchReport match = scale_matching(mn.quartic_coefficient.constant_term().re,
                                            pn.quartic_coefficient.constant_term().re);
    if (!match.match || match.common_ell_star_sq != 1 || !match.opposite_signs)
        return rep.fail("scale_matching at lambda^2 = |theta| = 1 failed");
    return rep;
}

CheckReport check_sw_reconstruction(unsigned samples, std::uint64_t seed) {
    CheckReport rep = CheckReport::ok("sw_reconstruction", 0, 2 * samples);
    std::mt19937_64 rng(seed);
    for (size_t dim : {size_t(2), size_t(4)}) {
        for (unsigned s = 0; s < samples; ++s) {
            BackgroundFields bg = random_background(dim, rng);
            OpenStringData open = seiberg_witten_map(bg);
            PiRat beta = PiRat(2 * bg.alpha_prime) * PiRat::pi();
            PiMatrix lhs = open.G_open_inv + open.Theta.scaled(beta.inverse());
            PiMatrix rhs = (bg.g_closed.map([](const Rat& r) { return PiRat(r); }) +
                            bg.B.map([](const Rat& r) { return PiRat(r); }).scaled(beta))
                               .inverse();
            if (!(lhs == rhs))
                return rep.fail("d = " + std::to_string(dim) + ", sample " + std::to_string(s));
        }
    }
    // symbolic d = 2 closed form: g = I, B = b' eps => Theta = -beta^2 b'/(1 + beta^2 b'^2) eps
    BackgroundFields flat;
    flat.dim = 2;
    flat.g_closed = Matrix<Rat>::identity(2);
    flat.B = Matrix<Rat>(2, 2);
    flat.B(0, 1) = Rat(1, 3);
    flat.B(1, 0) = Rat(-1, 3);
    flat.alpha_prime = Rat(3, 4);
    OpenStringData open = seiberg_witten_map(flat);
    PiRat beta = PiRat(2 * flat.alpha_prime) * PiRat::pi();
    PiRat b = beta * PiRat(Rat(1, 3));  // the dimensionless b of the closed form
    PiRat coeff = -(b / (PiRat(1) + b * b));  // -b/(1+b^2)
    PiMatrix expected(2, 2);
    expected(0, 1) = coeff * beta;
    expected(1, 0) = -coeff * beta;
    if (!(open.Theta == expected)) return rep.fail("symbolic d = 2 closed form");
    PiMatrix g_open_expected = Matrix<Rat>::identity(2).map([&](const Rat& r) {
        return PiRat(r) * (PiRat(1) + b * b);
    });
    if (!(open.G_open == g_open_expected)) return rep.fail("symbolic d = 2 open metric");
    return rep;
}

CheckReport check_sw_product_form(unsigned samples, std::uint64_t seed) {
    CheckReport rep = CheckReport::ok("sw_product_form_sign", 0, samples);
    std::mt19937_64 rng(seed);
    bool all_equal = true, all_opposite = true;
    for (unsigned s = 0; s < samples; ++s) {
        BackgroundFields bg = random_background(2 + 2 * (s % 2), rng);
        if (bg.B.is_zero()) continue;
        OpenStringData open = seiberg_witten_map(bg);
        PiMatrix product = theta_product_form(bg);
        if (!(open.Theta == product)) all_equal = false;
        if (!(open.Theta == -product)) all_opposite = false;
        if (!all_equal && !all_opposite)
            return rep.fail("sample " + std::to_string(s) +
                            ": product form differs beyond an overall sign");
    }
    rep.note = all_equal ? "split form equals the (2 pi alpha')^2-scaled product form"
                         : "split form equals minus the scaled product form";
    return rep;
}

CheckReport check_phase_invariance(unsigned samples, std::uint64_t seed) {
    CheckReport rep = CheckReport::ok("theta_phase_invariance", 0, samples);
    std::mt19937_64 rng(seed);
    const std::vector<std::pair<Rat, Rat>> phases{
        {Rat(1), Rat(0)}, {Rat(0), Rat(1)}, {Rat(3, 5), Rat(4, 5)}, {Rat(5, 13), Rat(12, 13)}};
    std::uniform_int_distribution<int> entry(-5, 5);
    for (unsigned s = 0; s < samples; ++s) {
        size_t dim = 2 + 2 * (s % 2);
        PiMatrix theta(dim, dim);
        for (size_t i = 0; i < dim; ++i)
            for (size_t j = i + 1; j < dim; ++j) {
                PiRat v = PiRat(Rat(entry(rng))) * (s % 3 == 0 ? PiRat::pi() : PiRat(1));
                theta(i, j) = v;
                theta(j, i) = -v;
            }
        CheckReport inner = phase_invariance_check(theta, phases);
        if (!inner.pass) return rep.fail("sample " + std::to_string(s));
    }
    return rep;
}

CheckReport check_flux_linearity(long max_n) {
    CheckReport rep = CheckReport::ok("flux_linearity", 0, static_cast<unsigned>(2 * max_n));
    Rat alpha(7, 5);
    PiRat unit = flux_theta({1, Rat(1), Rat(1)}, alpha);
    for (long n = -max_n; n <= max_n; ++n) {
        PiRat v = flux_theta({n, Rat(1), Rat(1)}, alpha);
        long n_abs = n < 0 ? -n : n;
        if (!(v == unit * PiRat(Rat(n_abs))))
            return rep.fail("n = " + std::to_string(n));
    }
    return rep;
}

CheckReport check_a4_values() {
    CheckReport rep = CheckReport::ok("a4_realization_values", 6, 2);
    Polynomial poly = realization_dispersion({RealizationKind::polymer, Rat(1)}, 6);
    Polynomial moyal = realization_dispersion({RealizationKind::moyal, Rat(1)}, 4);
    A4Result a_poly = a4_from_symbol({poly, Rat(0)});
    A4Result a_moyal = a4_from_symbol({moyal, Rat(0)});
    if (!(a_poly.a4 == Polynomial(CRat(Rat(-1, 3)))))
        return rep.fail("a4(polymer, lambda = 1) != -1/3");
    if (!(a_moyal.a4 == Polynomial(CRat(Rat(1, 3)))))
        return rep.fail("a4(moyal, |theta| = 1) != +1/3");
    ScaleMatchReport m = scale_matching(Rat(1, 3), Rat(-1, 3));
    if (!m.match || m.common_ell_star_sq != 1) return rep.fail("scale_matching at 1/3, -1/3");
    return rep;
}

CheckReport check_ell_star_cases() {
    CheckReport rep = CheckReport::ok("ell_star_operator_norm", 0, 5);
    SymplecticData canonical{2, canonical_omega_2d(), canonical_j_2d(), +1};
    GeometricScale base = ell_star_squared(canonical);
    if (!base.exact || base.exact_value() != 1) return rep.fail("canonical pair != 1");

    for (Rat s : {Rat(2), Rat(3), Rat(1, 5)}) {
        SymplecticData scaled{2, canonical_omega_2d(s), canonical_j_2d(), +1};
        GeometricScale v = ell_star_squared(scaled);
        if (!v.exact || v.exact_value() != 1 / s)
            return rep.fail("omega scaled by " + rat_to_string(s));
    }

    // 4D block-diagonal with scales 1 and 2: operator norm is the max block norm
    SymplecticData block;
    block.dim = 4;
    block.omega = RatMatrix(4, 4);
    block.J = RatMatrix(4, 4);
    RatMatrix w1 = canonical_omega_2d(Rat(1)), w2 = canonical_omega_2d(Rat(2));
    RatMatrix j = canonical_j_2d();
    for (size_t i = 0; i < 2; ++i)
        for (size_t c = 0; c < 2; ++c) {
            block.omega(i, c) = w1(i, c);
            block.omega(2 + i, 2 + c) = w2(i, c);
            block.J(i, c) = j(i, c);
            block.J(2 + i, 2 + c) = j(i, c);
        }
    GeometricScale v = ell_star_squared(block);
    if (!v.exact || v.exact_value() != 1) return rep.fail("4D block case != max(1, 1/2)");
    return rep;
}

std::vector<CheckReport> run_verification(const VerifyConfig& cfg) {
    StarProduct sp{DarbouxChart(2), cfg.order, cfg.corrupt_c2};
    std::vector<CheckReport> out;
    out.push_back(check_associativity(sp, cfg.samples, cfg.seed));
    for (unsigned r = 0; r <= std::min(cfg.order, 4u); ++r)
        out.push_back(check_symmetry(sp, r, cfg.samples, cfg.seed));
    out.push_back(check_berezin_flat_chart(StarProduct{DarbouxChart(1), cfg.order,
                                                       cfg.corrupt_c2}));
    out.push_back(check_polymer_expansion());
    out.push_back(check_universality());
    out.push_back(check_sw_reconstruction(std::max(1u, cfg.samples / 2), cfg.seed + 1));
    out.push_back(check_sw_product_form(20, cfg.seed + 2));
    out.push_back(check_phase_invariance(20, cfg.seed + 3));
    out.push_back(check_flux_linearity(6));
    out.push_back(check_a4_values());
    out.push_back(check_ell_star_cases());
    return out;
}

}  // namespace qmdr

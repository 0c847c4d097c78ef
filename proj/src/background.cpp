#include "qmdr/background.hpp"

#include <cmath>

#include "qmdr/star.hpp"

namespace qmdr {

namespace {

PiRat two_pi_alpha(const Rat& alpha_prime) { return PiRat(2 * alpha_prime) * PiRat::pi(); }

PiMatrix lift(const Matrix<Rat>& m) {
    return m.map([](const Rat& r) { return PiRat(r); });
}

CPiMatrix complexify(const PiMatrix& m) {
    return m.map([](const PiRat& r) { return Complex<PiRat>(r); });
}

ThetaNorm norm_from_square(const PiRat& norm_sq) {
    ThetaNorm out;
    out.approx = std::sqrt(norm_sq.to_double());
    if (auto mono = norm_sq.as_pi_monomial()) {
        auto [c, k] = *mono;
        if (k % 2 == 0) {
            if (auto root = sqrt_exact(c)) {
                out.exact = std::make_pair(*root, k / 2);
            } else {
                out.coefficient_enclosure = sqrt_enclosure(c, Rat(1, 1000000000));
                out.enclosure_pi_power = k / 2;
            }
        }
    }
    return out;
}

}  // namespace

OpenStringData seiberg_witten_map(const BackgroundFields& bg) {
    if (!bg.g_closed.is_symmetric()) throw std::invalid_argument("g_closed is not symmetric");
    if (!bg.B.is_antisymmetric()) throw std::invalid_argument("B is not antisymmetric");
    if (bg.alpha_prime <= 0) throw std::invalid_argument("alpha_prime must be positive");

    PiRat beta = two_pi_alpha(bg.alpha_prime);
    PiMatrix combined = lift(bg.g_closed) + lift(bg.B).scaled(beta);
    PiMatrix m = combined.inverse();  // throws std::domain_error when singular

    PiMatrix sym = (m + m.transpose()).scaled(PiRat(Rat(1, 2)));
    PiMatrix antisym = (m - m.transpose()).scaled(PiRat(Rat(1, 2)));

    OpenStringData out;
    out.G_open_inv = sym;
    out.G_open = sym.inverse();
    out.Theta = antisym.scaled(beta);

    // |theta|^2 = 1/2 Theta_{ij} Theta^{ij}, indices lowered with G_open
    PiMatrix lowered = out.G_open * out.Theta * out.G_open;
    PiRat norm_sq(0);
    for (size_t i = 0; i < out.Theta.rows(); ++i)
        for (size_t j = 0; j < out.Theta.cols(); ++j)
            norm_sq += out.Theta(i, j) * lowered(i, j);
    out.theta_norm_sq = norm_sq * PiRat(Rat(1, 2));
    out.theta_norm = norm_from_square(out.theta_norm_sq);
    return out;
}

PiMatrix theta_product_form(const BackgroundFields& bg) {
    PiRat beta = two_pi_alpha(bg.alpha_prime);
    PiMatrix plus = lift(bg.g_closed) + lift(bg.B).scaled(beta);
    PiMatrix minus = lift(bg.g_closed) - lift(bg.B).scaled(beta);
    return (plus.inverse() * lift(bg.B) * minus.inverse()).scaled(-(beta * beta));
}

TypeCheckReport theta_type_check(const Matrix<Rat>& J, const PiMatrix& Theta) {
    if (J.rows() != Theta.rows() || J.cols() != Theta.cols())
        throw std::invalid_argument("theta_type_check: dimension mismatch");
    size_t d = J.rows();
    using C = Complex<PiRat>;
    CPiMatrix jc = J.map([](const Rat& r) { return C(PiRat(r)); });
    CPiMatrix tc = complexify(Theta);
    CPiMatrix id = CPiMatrix::identity(d);
    C i = C::i();
    C half = C(PiRat(Rat(1, 2)));
    // P+ projects onto the +i eigenspace of J, P- onto -i
    CPiMatrix p_plus = (id - jc.scaled(i)).scaled(half);
    CPiMatrix p_minus = (id + jc.scaled(i)).scaled(half);

    CPiMatrix hol = p_plus * tc * p_plus.transpose();
    CPiMatrix antihol = p_minus * tc * p_minus.transpose();
    CPiMatrix mixed_pm = p_plus * tc * p_minus.transpose();
    CPiMatrix mixed_mp = p_minus * tc * p_plus.transpose();

    TypeCheckReport rep;
    rep.mixed_plus_minus_zero = mixed_pm.is_zero();
    rep.mixed_minus_plus_zero = mixed_mp.is_zero();
    rep.holomorphic_eigenrelation = (jc * hol) == hol.scaled(i);
    rep.antiholomorphic_eigenrelation = (jc * antihol) == antihol.scaled(-i);
    return rep;
}

CheckReport phase_invariance_check(const PiMatrix& Theta,
                                   const std::vector<std::pair<Rat, Rat>>& phi_samples) {
    CheckReport rep = CheckReport::ok("theta_phase_invariance", 0,
                                      static_cast<unsigned>(phi_samples.size()));
    using C = Complex<PiRat>;
    auto norm_sq = [&](const CPiMatrix& t) {
        C acc;
        for (size_t i = 0; i < t.rows(); ++i)
            for (size_t j = 0; j < t.cols(); ++j) acc += t(i, j) * t(i, j).conj();
        return acc * C(PiRat(Rat(-1, 2)));
    };
    CPiMatrix base = complexify(Theta);
    C reference = norm_sq(base);
    for (size_t s = 0; s < phi_samples.size(); ++s) {
        const auto& [c, sn] = phi_samples[s];
        if (c * c + sn * sn != 1)
            throw std::invalid_argument("phase_invariance_check: non-unit phase pair");
        C phase{PiRat(c), PiRat(sn)};
        if (!(norm_sq(base.scaled(phase)) == reference))
            return rep.fail("phase sample " + std::to_string(s) + " changed the norm");
    }
    return rep;
}

PiRat flux_theta(const FluxData& flux, const Rat& alpha_prime) {
    long n_abs = flux.n < 0 ? -flux.n : flux.n;
    return PiRat(2 * alpha_prime * Rat(n_abs)) * PiRat::pi();
}

ScalarResult immirzi_from_flux(const FluxData& flux, const Rat& width) {
    if (flux.ell_P <= 0 || flux.ell_s <= 0)
        throw std::invalid_argument("immirzi_from_flux: lengths must be positive");
    long n_abs = flux.n < 0 ? -flux.n : flux.n;
    Rat ratio = flux.ell_s / flux.ell_P;
    Enclosure root = sqrt_enclosure(Rat(n_abs), width / ratio);
    return {{root.lo * ratio, root.hi * ratio}, root.exact()};
}

BracketReport bracket_scale_check(const Rat& gamma, const Rat& ell_P) {
    if (gamma <= 0 || ell_P <= 0)
        throw std::invalid_argument("bracket_scale_check: inputs must be positive");
    // induced bracket {A, E} with A = gamma * x, E = ell_P^2 * p, computed
    // through the grade-1 Moyal coefficient (the Poisson bracket)
    StarProduct sp{DarbouxChart(1), 1};
    Polynomial a = Polynomial::variable(sp.chart.q(0)).scaled(CRat(gamma));
    Polynomial e = Polynomial::variable(sp.chart.p(0)).scaled(CRat(ell_P * ell_P));
    Polynomial bracket = c_r(sp, 1, a, e);
    BracketReport rep{bracket.constant_term().re, false};
    rep.matches_gamma_ellP_sq = bracket == Polynomial(CRat(gamma * ell_P * ell_P));
    return rep;
}

Polynomial realization_dispersion(const Realization& r, unsigned order) {
    if (order < 2 || order % 2 != 0)
        throw std::invalid_argument("realization_dispersion: order must be even and >= 2");
    Polynomial k = Polynomial::variable(kVarK);
    if (r.kind == RealizationKind::moyal) {
        Polynomial theta = r.scale_sq ? Polynomial(CRat(*r.scale_sq))
                                      : Polynomial::variable(kVarTheta);
        Polynomial disp = k.pow(2);
        if (order >= 4) disp += theta.scaled(CRat(Rat(1, 3))) * k.pow(4);
        return disp;
    }
    // polymer: sin^2(lambda k) / lambda^2 through the requested order in k
    std::vector<Rat> coeffs = sin_sq_taylor(order);
    Polynomial disp;
    for (unsigned m = 1; 2 * m <= order; ++m) {
        Rat c = coeffs[2 * m];
        if (c == 0) continue;
        Polynomial scale_pow;  // lambda^(2m-2)
        if (r.scale_sq) {
            Rat v = 1;
            for (unsigned j = 1; j < m; ++j) v *= *r.scale_sq;
            scale_pow = Polynomial(CRat(v));
        } else {
            scale_pow = Polynomial::term(Monomial::var(kVarLambda, 2 * (m - 1)), CRat(Rat(1)));
        }
        disp += scale_pow.scaled(CRat(c)) * k.pow(2 * m);
    }
    return disp;
}

MdrExtract extract_mdr(const Polynomial& dispersion) {
    if (!dispersion.constant_term().is_zero())
        throw std::invalid_argument("extract_mdr: dispersion has a constant term");
    unsigned deg = dispersion.degree_in(kVarK);
    for (unsigned d = 1; d <= deg; d += 2)
        if (!dispersion.coefficient_in(kVarK, d).is_zero())
            throw std::invalid_argument("extract_mdr: dispersion has odd terms in k");
    if (!(dispersion.coefficient_in(kVarK, 2) == Polynomial::one()))
        throw std::invalid_argument("extract_mdr: k^2 coefficient is not 1");

    MdrExtract out;
    out.quartic_coefficient = dispersion.coefficient_in(kVarK, 4);
    if (out.quartic_coefficient.is_zero()) {
        out.sigma = +1;  // undeformed: sign reported as +1 with scale 0
        out.ell_star_sq = Polynomial::zero();
        return out;
    }
    int sig = 0;
    for (const auto& [m, c] : out.quartic_coefficient.terms()) {
        if (c.im != 0) throw std::invalid_argument("extract_mdr: complex quartic coefficient");
        int s = sign(c.re);
        if (sig == 0) sig = s;
        if (s != sig)
            throw std::invalid_argument("extract_mdr: quartic coefficient has mixed signs");
    }
    out.sigma = sig;
    out.ell_star_sq = out.quartic_coefficient.scaled(crat(3 * sig));
    return out;
}

}  // namespace qmdr

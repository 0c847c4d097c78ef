#include "qmdr/symplectic.hpp"

namespace qmdr {

ValidationReport validate(const SymplecticData& data) {
    ValidationReport rep;
    auto fail = [&rep](const std::string& what) {
        if (rep.first_violation.empty()) rep.first_violation = what;
    };

    rep.dimensions_ok = data.dim > 0 && data.dim % 2 == 0 && data.omega.square() &&
                        data.J.square() && data.omega.rows() == data.dim &&
                        data.J.rows() == data.dim;
    if (!rep.dimensions_ok) {
        fail("matrices must be square of matching even dimension");
        return rep;
    }

    rep.omega_antisymmetric = data.omega.is_antisymmetric();
    if (!rep.omega_antisymmetric) fail("omega is not antisymmetric");

    rep.omega_invertible = data.omega.determinant() != 0;
    if (!rep.omega_invertible) fail("omega is singular");

    rep.j_squares_to_minus_identity =
        data.J * data.J == RatMatrix::identity(data.dim).scaled(Rat(-1));
    if (!rep.j_squares_to_minus_identity) fail("J^2 != -I");

    RatMatrix g = data.induced_metric();
    rep.metric_symmetric = g.is_symmetric();
    if (!rep.metric_symmetric) fail("induced metric g = omega*J is not symmetric");

    rep.metric_positive_definite = true;
    if (rep.metric_symmetric) {
        for (size_t k = 1; k <= data.dim; ++k) {
            if (g.leading_minor(k) <= 0) {
                rep.metric_positive_definite = false;
                fail("induced metric fails positive-definiteness at leading minor " +
                     std::to_string(k));
                break;
            }
        }
    } else {
        rep.metric_positive_definite = false;
    }
    return rep;
}

UniPoly char_poly(const RatMatrix& a) {
    if (!a.square()) throw std::invalid_argument("char_poly of a non-square matrix");
    size_t n = a.rows();
    // Faddeev-LeVerrier: p(x) = x^n + c_{n-1} x^{n-1} + ... + c_0
    std::vector<Rat> c(n + 1, Rat(0));
    c[n] = 1;
    RatMatrix m(n, n);
    for (size_t k = 1; k <= n; ++k) {
        m = (k == 1) ? a : a * (m + RatMatrix::identity(n).scaled(c[n - k + 1]));
        c[n - k] = -m.trace() / Rat(static_cast<long>(k));
    }
    return UniPoly(std::move(c));
}

GeometricScale largest_eigenvalue(const RatMatrix& sym, const Rat& width) {
    UniPoly p = char_poly(sym);
    // Gershgorin upper bound
    Rat ub = 0;
    for (size_t i = 0; i < sym.rows(); ++i) {
        Rat row = 0;
        for (size_t j = 0; j < sym.cols(); ++j) row += qmdr::abs(sym(i, j));
        ub = std::max(ub, row);
    }
    ub += 1;
    Rat lo(-1), hi = ub;  // largest root lies in (lo, hi]
    if (sturm_root_count(p, lo, hi) == 0)
        throw std::domain_error("matrix has no eigenvalue in the expected range");
    while (hi - lo > width) {
        Rat mid = (lo + hi) / 2;
        if (sturm_root_count(p, mid, ub) >= 1)
            lo = mid;
        else
            hi = mid;
        // the enclosure may collapse onto an exact rational root early
        Rat cand = simplest_in_interval(lo, hi);
        if (p.eval(cand) == 0 && sturm_root_count(p, cand, ub) == 0)
            return {{cand, cand}, true};
    }
    return {{lo, hi}, false};
}

GeometricScale ell_star_squared(const SymplecticData& data, const Rat& width) {
    ValidationReport rep = validate(data);
    if (!rep.pass())
        throw std::invalid_argument("ell_star_squared on non-validated data: " +
                                    rep.first_violation);
    RatMatrix k = data.omega.inverse() * data.J;
    RatMatrix s = k.transpose() * k;
    // operator norm = sqrt(lambda_max(K^T K)); keep the enclosure certified
    GeometricScale lam = largest_eigenvalue(s, width * width / 4);
    if (lam.exact) {
        if (auto root = sqrt_exact(lam.exact_value())) return {{*root, *root}, true};
        Enclosure e = sqrt_enclosure(lam.exact_value(), width);
        return {e, false};
    }
    Enclosure lo = sqrt_enclosure(lam.value.lo, width / 2);
    Enclosure hi = sqrt_enclosure(lam.value.hi, width / 2);
    return {{lo.lo, hi.hi}, false};
}

int orientation_sigma(const SymplecticData& data) { return data.sigma >= 0 ? +1 : -1; }

}  // namespace qmdr

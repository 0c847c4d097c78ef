#pragma once

#include <string>

#include "qmdr/matrix.hpp"
#include "qmdr/rational.hpp"
#include "qmdr/unipoly.hpp"

namespace qmdr {

using RatMatrix = Matrix<Rat>;

/// The triple (omega, J) with the induced metric g(u,v) = omega(u, Jv) and an
/// explicit orientation flag. sigma is configured, not computed: any real J
/// with J^2 = -I has det J = +1, so a determinant sign can never distinguish
/// the two realizations.
struct SymplecticData {
    size_t dim = 0;
    RatMatrix omega;
    RatMatrix J;
    int sigma = +1;

    RatMatrix induced_metric() const { return omega * J; }
};

struct ValidationReport {
    bool dimensions_ok = false;
    bool omega_antisymmetric = false;
    bool omega_invertible = false;
    bool j_squares_to_minus_identity = false;
    bool metric_symmetric = false;
    bool metric_positive_definite = false;
    std::string first_violation;  // empty when everything passes

    bool pass() const {
        return dimensions_ok && omega_antisymmetric && omega_invertible &&
               j_squares_to_minus_identity && metric_symmetric && metric_positive_definite;
    }
};

ValidationReport validate(const SymplecticData& data);

/// ell_*^2 as an exact rational when recoverable, otherwise a certified
/// enclosure of the requested width.
struct GeometricScale {
    Enclosure value;
    bool exact = false;

    Rat exact_value() const {
        if (!exact) throw std::domain_error("geometric scale is not exact");
        return value.lo;
    }
};

/// Characteristic polynomial det(xI - A), exact (Faddeev-LeVerrier).
UniPoly char_poly(const RatMatrix& a);

/// Largest eigenvalue of a symmetric positive-semidefinite rational matrix,
/// recovered exactly when it is a small rational, else enclosed below `width`.
GeometricScale largest_eigenvalue(const RatMatrix& sym, const Rat& width);

/// Operator (spectral) norm of omega^{-1} J. Throws std::invalid_argument on
/// data that fails validation.
GeometricScale ell_star_squared(const SymplecticData& data,
                                const Rat& width = Rat(1, 1000000000));

/// The configured orientation flag of the realization.
int orientation_sigma(const SymplecticData& data);

}  // namespace qmdr

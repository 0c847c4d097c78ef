#pragma once

#include <functional>
#include <optional>

#include "qmdr/complexfield.hpp"
#include "qmdr/matrix.hpp"
#include "qmdr/pisymbol.hpp"
#include "qmdr/polynomial.hpp"
#include "qmdr/report.hpp"

namespace qmdr {

using PiMatrix = Matrix<PiRat>;
using CPiMatrix = Matrix<Complex<PiRat>>;

/// Closed-string background (g, B, alpha'). pi enters (g + 2 pi alpha' B)
/// as a formal symbol, so everything downstream stays exact.
struct BackgroundFields {
    size_t dim = 0;
    Matrix<Rat> g_closed;
    Matrix<Rat> B;
    Rat alpha_prime = 1;
};

/// |theta|: exact monomial c * pi^k when recoverable, with a double fallback.
struct ThetaNorm {
    std::optional<std::pair<Rat, unsigned>> exact;  // {c, k} meaning c * pi^k
    std::optional<Enclosure> coefficient_enclosure;  // enclosure of c when sqrt irrational
    std::optional<unsigned> enclosure_pi_power;
    double approx = 0;
};

struct OpenStringData {
    PiMatrix G_open;
    PiMatrix G_open_inv;
    PiMatrix Theta;
    PiRat theta_norm_sq;
    ThetaNorm theta_norm;
};

/// Split (g + 2 pi alpha' B)^{-1} into the open-string metric and the
/// noncommutativity bivector. Throws std::domain_error on a singular matrix.
OpenStringData seiberg_witten_map(const BackgroundFields& bg);

/// Per-component (2,0)+(0,2) type check of Theta against an almost-complex
/// structure J, via the holomorphic/antiholomorphic projectors (1 -+ iJ)/2.
struct TypeCheckReport {
    bool mixed_plus_minus_zero = false;
    bool mixed_minus_plus_zero = false;
    bool holomorphic_eigenrelation = false;      // J Theta^{(2,0)} = +i Theta^{(2,0)}
    bool antiholomorphic_eigenrelation = false;  // J Theta^{(0,2)} = -i Theta^{(0,2)}
    bool pass() const {
        return mixed_plus_minus_zero && mixed_minus_plus_zero && holomorphic_eigenrelation &&
               antiholomorphic_eigenrelation;
    }
};

TypeCheckReport theta_type_check(const Matrix<Rat>& J, const PiMatrix& Theta);

/// ||e^{i phi} Theta||^2 = ||Theta||^2 on the sesquilinear norm
/// -1/2 Theta^{ij} conj(Theta)_{ij}, for exact unit (cos, sin) pairs.
CheckReport phase_invariance_check(const PiMatrix& Theta,
                                   const std::vector<std::pair<Rat, Rat>>& phi_samples);

/// NS flux quantization data.
struct FluxData {
    long n = 0;     // topological charge
    Rat ell_s = 1;  // string length
    Rat ell_P = 1;  // Planck length
};

/// |theta| = 2 pi alpha' |n| (pi symbolic).
PiRat flux_theta(const FluxData& flux, const Rat& alpha_prime);

/// gamma = sqrt(|n|) * ell_s / ell_P, exact or enclosed.
struct ScalarResult {
    Enclosure value;
    bool exact = false;
};
ScalarResult immirzi_from_flux(const FluxData& flux, const Rat& width = Rat(1, 100000000));

/// Induced holonomy-flux bracket coefficient from rescaling the canonical
/// pair: A = gamma * x, E = ell_P^2 * p gives {A, E} = gamma * ell_P^2.
struct BracketReport {
    Rat coefficient;
    bool matches_gamma_ellP_sq = false;
};
BracketReport bracket_scale_check(const Rat& gamma, const Rat& ell_P);

/// A named dispersion-generating recipe. The scale symbol stays formal in the
/// dispersion polynomial: lambda for polymer, |theta| for Moyal.
enum class RealizationKind { polymer, moyal };

struct Realization {
    RealizationKind kind = RealizationKind::polymer;
    std::optional<Rat> scale_sq;  // numeric lambda^2 or |theta|; formal if absent

    int sigma() const { return kind == RealizationKind::polymer ? -1 : +1; }
    std::string name() const { return kind == RealizationKind::polymer ? "polymer" : "moyal"; }
};

/// Variable ids of the dispersion polynomials.
inline constexpr VarId kVarK = 0;      // momentum
inline constexpr VarId kVarLambda = 1; // polymer scale lambda
inline constexpr VarId kVarTheta = 2;  // Moyal scale |theta|

/// Effective squared-energy series in k:
///   polymer -> sin^2(lambda k)/lambda^2 through the requested even order,
///   moyal   -> k^2 + (|theta|/3) k^4.
/// Throws std::invalid_argument for order < 2 or odd order.
Polynomial realization_dispersion(const Realization& r, unsigned order);

struct MdrExtract {
    Polynomial quartic_coefficient;  // c4, possibly carrying the scale symbol
    int sigma = +1;
    Polynomial ell_star_sq;          // 3 |c4|
};

/// Read the universal form E^2 = p^2 + m^2 + sigma (ell_*^2/3) p^4 off a
/// dispersion polynomial in k. Requires zero constant and odd terms and a
/// unit k^2 coefficient.
MdrExtract extract_mdr(const Polynomial& dispersion);

/// Appendix-B product form -(g+2 pi a' B)^{-1} B (g-2 pi a' B)^{-1}, scaled by
/// (2 pi a')^2 to match the bivector normalization of the split form. Used to
/// compare sign conventions between the two displayed formulas.
PiMatrix theta_product_form(const BackgroundFields& bg);

}  // namespace qmdr

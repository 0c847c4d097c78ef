#pragma once

#include <random>

#include "qmdr/report.hpp"
#include "qmdr/series.hpp"

namespace qmdr {

/// Flat Darboux chart with n degrees of freedom. Variable ids 0..n-1 are the
/// positions q^i, ids n..2n-1 the momenta p_i. The Poisson tensor is the
/// canonical block form scaled by `poisson_scale`.
struct DarbouxChart {
    unsigned n = 1;
    Rat poisson_scale = 1;
    // formal scale symbols (e.g. the s of exp_*(i s p)) that may appear in
    // coefficients; anything else beyond the chart variables is foreign
    std::vector<VarId> formal_symbols;

    explicit DarbouxChart(unsigned dof = 1, Rat scale = Rat(1))
        : n(dof), poisson_scale(std::move(scale)) {}

    VarId q(unsigned i) const { return i; }
    VarId p(unsigned i) const { return n + i; }
    unsigned dim() const { return 2 * n; }

    /// omega^{ij}: +scale for (q^i, p_i), -scale for (p_i, q^i).
    Rat poisson(VarId a, VarId b) const {
        if (a < n && b == a + n) return poisson_scale;
        if (b < n && a == b + n) return -poisson_scale;
        return Rat(0);
    }

    std::vector<std::string> variable_names() const;
};

/// Moyal star product truncated at a fixed grading order. The grading tracks
/// powers of the deformation parameter (the i/2 factor lives in the Gaussian
/// coefficients; the formal parameter stands for ell_*^2).
struct StarProduct {
    DarbouxChart chart;
    unsigned order = 4;
    Rat debug_c2_scale = 1;  // != 1 corrupts C_2 for mutation tests
};

/// r-th Moyal bidifferential coefficient
/// C_r(f,g) = (1/r!) omega^{i1 j1}...omega^{ir jr} (d_{i1..ir} f)(d_{j1..jr} g).
Polynomial c_r(const StarProduct& sp, unsigned r, const Polynomial& f, const Polynomial& g);

/// f * g as a graded series: coefficient r is (i/2)^r C_r(f,g).
TruncatedSeries star(const StarProduct& sp, const Polynomial& f, const Polynomial& g);

/// Star product of two graded series (grading-consistent extension of `star`).
TruncatedSeries star_series(const StarProduct& sp, const TruncatedSeries& a,
                            const TruncatedSeries& b);

/// Left-associated n-fold star power; n = 0 gives the unit series.
TruncatedSeries star_power(const StarProduct& sp, const Polynomial& f, unsigned n);

/// Sigma_{n < terms} i^n f^{*n} / n!, exact.
TruncatedSeries star_exponential(const StarProduct& sp, const Polynomial& f, unsigned terms);

/// Random polynomial over the chart variables: total degree <= max_degree,
/// small integer coefficients, deterministic in the generator state.
Polynomial random_polynomial(const DarbouxChart& chart, unsigned max_degree,
                             std::mt19937_64& rng);

/// C_r(f,g) = (-1)^r C_r(g,f) on random pairs.
CheckReport check_symmetry(const StarProduct& sp, unsigned r, unsigned samples,
                           std::uint64_t seed);

/// (f*g)*h = f*(g*h) exactly at every grade, on random triples.
CheckReport check_associativity(const StarProduct& sp, unsigned samples, std::uint64_t seed);

}  // namespace qmdr

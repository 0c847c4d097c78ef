#pragma once

#include "qmdr/background.hpp"

namespace qmdr {

// Sign convention used throughout: the momentum-space symbol of -d^2 is +k^2.
// A dispersion k^2 - (lambda^2/3) k^4 therefore carries a4 = -lambda^2/3.

/// Momentum-space symbol of the squared operator: an even polynomial in k
/// with unit k^2 coefficient, plus the mass term.
struct OperatorSymbol {
    Polynomial symbol;  // in kVarK (and possibly a formal scale symbol)
    Rat mass_sq = 0;
};

struct A4Result {
    Polynomial a4;           // the k^4 coefficient of the symbol
    int sigma = +1;
    Polynomial ell_star_sq;  // 3 |a4|, so a4 = sigma * ell_star_sq / 3
};

/// a4 read off the k^4 coefficient (flat setting: curvature terms vanish).
A4Result a4_from_symbol(const OperatorSymbol& op);

/// Flat-background corollary of the displayed heat-kernel formula for a
/// constant endomorphism: volume * 180 E^2 / (360 (4 pi)^2), pi symbolic.
PiRat gilkey_a4_flat(const PiRat& endomorphism, const PiRat& volume);

struct ScaleMatchReport {
    bool match = false;          // |a4_st| == |a4_lqg|
    Rat common_ell_star_sq = 0;  // 3 |a4| when matched
    bool opposite_signs = false; // a4_st == -a4_lqg
    Rat ratio = 0;               // |a4_st / a4_lqg| when both nonzero
};

/// |a4^ST| = |a4^LQG| check; on a match returns the common ell_*^2 = 3|a4|.
ScaleMatchReport scale_matching(const Rat& a4_st, const Rat& a4_lqg);

}  // namespace qmdr

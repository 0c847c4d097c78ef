#include "qmdr/a4.hpp"

namespace qmdr {

A4Result a4_from_symbol(const OperatorSymbol& op) {
    // strip the mass term before applying the universal-form reader
    Polynomial kinetic = op.symbol - Polynomial(CRat(op.symbol.constant_term()));
    MdrExtract mdr = extract_mdr(kinetic);
    return {mdr.quartic_coefficient, mdr.sigma, mdr.ell_star_sq};
}

PiRat gilkey_a4_flat(const PiRat& endomorphism, const PiRat& volume) {
    if (volume.is_zero() || (volume.is_rational() && volume.rational_value() <= 0))
        throw std::invalid_argument("gilkey_a4_flat: volume must be positive");
    // 1/(360 (4 pi)^2) * 180 E^2 * volume = volume E^2 / (2 (4 pi)^2)
    PiRat denom = PiRat(Rat(32)) * PiRat::pi_pow(2);
    return volume * endomorphism * endomorphism / denom;
}

ScaleMatchReport scale_matching(const Rat& a4_st, const Rat& a4_lqg) {
    ScaleMatchReport rep;
    Rat abs_st = qmdr::abs(a4_st), abs_lqg = qmdr::abs(a4_lqg);
    rep.match = abs_st == abs_lqg;
    rep.opposite_signs = a4_st == -a4_lqg && a4_st != 0;
    if (rep.match) rep.common_ell_star_sq = 3 * abs_st;
    if (abs_lqg != 0) rep.ratio = abs_st / abs_lqg;
    return rep;
}

}  // namespace qmdr

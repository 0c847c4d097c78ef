#include "qmdr/pheno.hpp"

#include <cmath>
#include <map>

namespace qmdr {

double energy(const Dispersion& d, double p) {
    d.check_domain(p);
    double rad = p * p + d.m * d.m + d.sigma * d.ell_star_sq * p * p * p * p / 3.0;
    if (rad <= 0 && p > 0)
        throw DomainError("non-positive E^2 at p = " + std::to_string(p) +
                          " (sigma = -1 turnover)");
    return std::sqrt(std::max(rad, 0.0));
}

double group_velocity(const Dispersion& d, double p) {
    double e = energy(d, p);
    if (e <= 0) {
        if (p == 0) return 0;  // massless p -> 0 limit handled below
        throw DomainError("vanishing energy");
    }
    return (p + 2.0 * d.sigma * d.ell_star_sq * p * p * p / 3.0) / e;
}

double momentum_from_energy(const Dispersion& d, double e) {
    if (e < d.m) throw DomainError("energy below rest mass");
    if (e == d.m) return 0;
    // bracket: energy(p) is strictly increasing inside the validity domain
    double lo = 0;
    // the (1 - 1e-13) margin keeps ell_*^2 hi^2 below the threshold after the
    // sqrt/square round trip in floating point
    double hi = d.ell_star_sq > 0
                    ? std::sqrt(d.domain_threshold / d.ell_star_sq) * (1.0 - 1e-13)
                    : std::max(2.0 * e, 1.0);
    if (energy(d, hi) < e)
        throw DomainError("energy not attainable inside the validity domain");
    for (int it = 0; it < 200; ++it) {
        double mid = 0.5 * (lo + hi);
        if (energy(d, mid) < e)
            lo = mid;
        else
            hi = mid;
        if (hi - lo <= 1e-15 * hi) break;
    }
    return 0.5 * (lo + hi);
}

namespace {

// 1/v - 1, computed without the cancellation 1/group_velocity suffers when
// ell_*^2 p^2 is tiny: with P = p + 2 sigma ell^2 p^3 / 3 (so v = P/E),
// E^2 - P^2 = m^2 - sigma ell^2 p^4 - (4/9) ell^4 p^6 term by term.
double inverse_velocity_excess(const Dispersion& d, double p) {
    if (p == 0 && d.m == 0) return 0.0;
    double e = energy(d, p);
    double cap = p + 2.0 * d.sigma * d.ell_star_sq * p * p * p / 3.0;
    double p4 = p * p * p * p;
    double num = d.m * d.m - d.sigma * d.ell_star_sq * p4 -
                 4.0 / 9.0 * d.ell_star_sq * d.ell_star_sq * p4 * p * p;
    return num / (cap * (e + cap));
}

}  // namespace

double time_of_flight_delay(const Dispersion& d, const ObservationChannel& ch) {
    double p_high = momentum_from_energy(d, ch.e_high);
    double p_low = momentum_from_energy(d, ch.e_low);
    return ch.distance_time *
           (inverse_velocity_excess(d, p_low) - inverse_velocity_excess(d, p_high));
}

BoundResult invert_bound(const ObservationChannel& ch, int sigma, double m, double rel_tol) {
    if (ch.distance_time <= 0 || ch.e_high <= ch.e_low || ch.delta_t_bound <= 0)
        throw std::invalid_argument("invert_bound: invalid channel");
    Dispersion trial{m, 0, sigma};
    // validity-domain ceiling: ell_*^2 e_high^2 = threshold (p ~ e at high energy)
    double ceiling = trial.domain_threshold / (ch.e_high * ch.e_high);
    auto delay_at = [&](double ell_sq) {
        Dispersion d{m, ell_sq, sigma};
        return std::fabs(time_of_flight_delay(d, ch));
    };
    if (ch.e_high <= m) throw DomainError("observed energy below rest mass");
    double at_ceiling;
    for (int tries = 0;; ++tries) {
        try {
            at_ceiling = delay_at(ceiling);
            break;
        } catch (const DomainError&) {
            // p(E) pushes past the p-space ceiling (sigma = -1 has p > E);
            // back off until the channel energies are attainable
            if (tries >= 60) throw;
            ceiling *= 0.99;
        }
    }
    if (at_ceiling <= ch.delta_t_bound) return {ceiling, true};
    double lo = 0, hi = ceiling;
    while (hi - lo > rel_tol * hi) {
        double mid = 0.5 * (lo + hi);
        if (delay_at(mid) <= ch.delta_t_bound)
            lo = mid;
        else
            hi = mid;
    }
    return {0.5 * (lo + hi), false};
}

double UnitRegistry::convert(double value, const std::string& from, const std::string& to) const {
    // factors to the category base unit (GeV, meter, second)
    const std::map<std::string, std::pair<char, double>> table{
        {"eV", {'E', 1e-9}}, {"MeV", {'E', 1e-3}}, {"GeV", {'E', 1.0}},
        {"TeV", {'E', 1e3}}, {"EP", {'E', planck_energy_GeV}},
        {"m", {'L', 1.0}},   {"lP", {'L', planck_length_m}},
        {"s", {'T', 1.0}},
    };
    auto f = table.find(from);
    auto t = table.find(to);
    if (f == table.end()) throw std::invalid_argument("unknown unit: " + from);
    if (t == table.end()) throw std::invalid_argument("unknown unit: " + to);
    if (f->second.first != t->second.first)
        throw std::invalid_argument("unit category mismatch: " + from + " -> " + to);
    return value * f->second.second / t->second.second;
}

}  // namespace qmdr

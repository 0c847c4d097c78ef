#pragma once

#include <stdexcept>
#include <string>

namespace qmdr {

/// Numeric boundary of the toolkit: everything here is double precision.
/// Natural units with c = 1; energies and momenta share one unit, ell_star_sq
/// has units 1/energy^2.

struct DomainError : std::domain_error {
    using std::domain_error::domain_error;
};

/// Truncated quartic dispersion E^2 = p^2 + m^2 + sigma ell_*^2 p^4 / 3,
/// valid only while ell_*^2 p^2 stays below `domain_threshold`.
struct Dispersion {
    double m = 0;
    double ell_star_sq = 0;
    int sigma = +1;
    double domain_threshold = 0.1;

    void check_domain(double p) const {
        if (p < 0) throw DomainError("negative momentum");
        if (ell_star_sq * p * p > domain_threshold)
            throw DomainError("momentum outside the truncation validity domain (ell_*^2 p^2 = " +
                              std::to_string(ell_star_sq * p * p) + ")");
    }
};

/// Time-of-flight channel. Distance is a light-travel time (seconds) since
/// c = 1; energies in the same unit as the dispersion's.
struct ObservationChannel {
    double distance_time = 0;  // T = distance / c
    double e_high = 0;
    double e_low = 0;
    double delta_t_bound = 0;
};

double energy(const Dispersion& d, double p);
double group_velocity(const Dispersion& d, double p);

/// Momentum with the given energy, by bracketed bisection on `energy`.
double momentum_from_energy(const Dispersion& d, double e);

/// Delta t = T (1/v(p_low) - 1/v(p_high)); static-spacetime approximation.
double time_of_flight_delay(const Dispersion& d, const ObservationChannel& ch);

struct BoundResult {
    double ell_star_sq_bound = 0;
    bool unconstrained = false;  // bound hit the validity-domain ceiling
};

/// Largest ell_star_sq with |delay| <= delta_t_bound, by monotone bisection.
BoundResult invert_bound(const ObservationChannel& ch, int sigma, double m,
                         double rel_tol = 1e-12);

/// Unit registry for the streaming boundary. Planck-scale entries are
/// configuration, not hard-coded truth.
struct UnitRegistry {
    double planck_length_m = 1.616255e-35;   // CODATA-style default
    double planck_energy_GeV = 1.220890e19;  // CODATA-style default
    double speed_of_light_m_s = 2.99792458e8;

    /// Registered units: GeV, TeV, MeV, eV (energy); m, lP (length);
    /// s (time); EP (energy, Planck).
    double convert(double value, const std::string& from, const std::string& to) const;
};

}  // namespace qmdr

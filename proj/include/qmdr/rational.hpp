#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <optional>
#include <stdexcept>
#include <string>

namespace qmdr {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline std::string rat_to_string(const Rat& r) {
    if (denominator(r) == 1) return numerator(r).str();
    return numerator(r).str() + "/" + denominator(r).str();
}

inline Rat rat_from_string(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rat(Int(s));
    Int num(s.substr(0, slash));
    Int den(s.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("rational with zero denominator: " + s);
    return Rat(num, den);
}

inline int sign(const Rat& r) {
    if (r > 0) return 1;
    if (r < 0) return -1;
    return 0;
}

inline Rat abs(const Rat& r) { return r < 0 ? Rat(-r) : r; }

/// Integer square root of a non-negative integer, rounded down.
Int isqrt(const Int& n);

/// sqrt of a non-negative rational when it is again rational.
std::optional<Rat> sqrt_exact(const Rat& r);

/// Closed interval with rational endpoints; lo == hi means an exact value.
struct Enclosure {
    Rat lo;
    Rat hi;

    bool exact() const { return lo == hi; }
    Rat width() const { return hi - lo; }
    double midpoint() const { return (static_cast<double>(lo) + static_cast<double>(hi)) / 2.0; }
};

/// sqrt of a non-negative rational: exact when possible, otherwise a
/// bisection enclosure narrower than `width`.
Enclosure sqrt_enclosure(const Rat& r, const Rat& width);

/// The rational with the smallest denominator inside [lo, hi]
/// (Stern-Brocot walk). Used to recover exact eigenvalues from enclosures.
Rat simplest_in_interval(const Rat& lo, const Rat& hi);

}  // namespace qmdr

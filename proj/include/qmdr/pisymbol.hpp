#pragma once

#include <optional>
#include <string>

#include "qmdr/unipoly.hpp"

namespace qmdr {

/// Element of Q(pi): a ratio of rational polynomials in the formal symbol pi.
/// pi stays symbolic through all exact identities and is substituted
/// numerically only at the phenomenology boundary.
class PiRat {
public:
    PiRat() : num_(), den_(Rat(1)) {}
    PiRat(Rat r) : num_(std::move(r)), den_(Rat(1)) {}
    PiRat(long n) : num_(Rat(n)), den_(Rat(1)) {}
    PiRat(UniPoly num, UniPoly den);

    static PiRat pi() { return PiRat(UniPoly::x(), UniPoly(Rat(1))); }
    static PiRat pi_pow(unsigned k) { return PiRat(UniPoly::monomial(Rat(1), k), UniPoly(Rat(1))); }

    const UniPoly& num() const { return num_; }
    const UniPoly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_rational() const { return num_.degree() <= 0 && den_.degree() <= 0; }

    /// If the value is c * pi^k, returns {c, k}.
    std::optional<std::pair<Rat, unsigned>> as_pi_monomial() const;

    /// Exact rational value when pi does not occur.
    Rat rational_value() const;

    PiRat operator-() const;
    PiRat operator+(const PiRat& o) const;
    PiRat operator-(const PiRat& o) const;
    PiRat operator*(const PiRat& o) const;
    PiRat operator/(const PiRat& o) const;
    PiRat& operator+=(const PiRat& o) { return *this = *this + o; }
    PiRat& operator-=(const PiRat& o) { return *this = *this - o; }
    PiRat& operator*=(const PiRat& o) { return *this = *this * o; }
    bool operator==(const PiRat& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const PiRat& o) const { return !(*this == o); }

    PiRat inverse() const;

    /// Numeric value with pi = M_PI.
    double to_double() const;

    std::string to_string() const;

private:
    void normalize();

    UniPoly num_;
    UniPoly den_;
};

}  // namespace qmdr

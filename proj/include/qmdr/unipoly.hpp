#pragma once

#include <vector>

#include "qmdr/rational.hpp"

namespace qmdr {

/// Dense univariate polynomial over the rationals. Coefficient k is the
/// coefficient of x^k; the representation is normalized (no trailing zeros).
class UniPoly {
public:
    UniPoly() = default;
    explicit UniPoly(Rat constant) {
        if (constant != 0) coeffs_.push_back(std::move(constant));
    }
    explicit UniPoly(std::vector<Rat> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

    static UniPoly x() { return UniPoly(std::vector<Rat>{Rat(0), Rat(1)}); }
    static UniPoly monomial(Rat c, unsigned deg) {
        std::vector<Rat> v(deg + 1, Rat(0));
        v[deg] = std::move(c);
        return UniPoly(std::move(v));
    }

    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }  // -1 for zero
    const std::vector<Rat>& coeffs() const { return coeffs_; }
    Rat coeff(unsigned k) const { return k < coeffs_.size() ? coeffs_[k] : Rat(0); }
    Rat leading() const { return coeffs_.empty() ? Rat(0) : coeffs_.back(); }

    /// True when the polynomial is c * x^deg for a single power.
    bool is_monomial() const;

    UniPoly operator-() const;
    UniPoly operator+(const UniPoly& o) const;
    UniPoly operator-(const UniPoly& o) const;
    UniPoly operator*(const UniPoly& o) const;
    UniPoly operator*(const Rat& s) const;
    bool operator==(const UniPoly& o) const { return coeffs_ == o.coeffs_; }

    UniPoly derivative() const;
    Rat eval(const Rat& x) const;
    double eval(double x) const;

    /// Euclidean division: returns {quotient, remainder}.
    std::pair<UniPoly, UniPoly> divmod(const UniPoly& divisor) const;

    /// Monic gcd.
    static UniPoly gcd(UniPoly a, UniPoly b);

    /// Scale so the leading coefficient is 1 (zero stays zero).
    UniPoly monic() const;

private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    }

    std::vector<Rat> coeffs_;
};

/// Number of real roots of p in the half-open interval (a, b], by Sturm's
/// theorem. Roots are counted without multiplicity.
int sturm_root_count(const UniPoly& p, const Rat& a, const Rat& b);

}  // namespace qmdr

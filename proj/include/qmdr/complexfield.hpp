#pragma once

#include <complex>
#include <string>

#include "qmdr/rational.hpp"

namespace qmdr {

/// Complex numbers over an exact field T (T = Rat gives Gaussian rationals).
template <typename T>
struct Complex {
    T re{};
    T im{};

    Complex() = default;
    Complex(T r) : re(std::move(r)) {}
    Complex(T r, T i) : re(std::move(r)), im(std::move(i)) {}

    static Complex i() { return Complex(T(0), T(1)); }

    bool is_zero() const { return re == T(0) && im == T(0); }
    bool is_real() const { return im == T(0); }

    Complex conj() const { return Complex(re, -im); }

    Complex operator-() const { return Complex(-re, -im); }
    Complex operator+(const Complex& o) const { return Complex(re + o.re, im + o.im); }
    Complex operator-(const Complex& o) const { return Complex(re - o.re, im - o.im); }
    Complex operator*(const Complex& o) const {
        return Complex(re * o.re - im * o.im, re * o.im + im * o.re);
    }
    Complex operator/(const Complex& o) const {
        T d = o.re * o.re + o.im * o.im;
        if (d == T(0)) throw std::domain_error("complex division by zero");
        return Complex((re * o.re + im * o.im) / d, (im * o.re - re * o.im) / d);
    }
    Complex& operator+=(const Complex& o) { return *this = *this + o; }
    Complex& operator-=(const Complex& o) { return *this = *this - o; }
    Complex& operator*=(const Complex& o) { return *this = *this * o; }

    bool operator==(const Complex& o) const { return re == o.re && im == o.im; }
    bool operator!=(const Complex& o) const { return !(*this == o); }
};

/// Gaussian rationals: the coefficient field of all symbolic expansions.
using CRat = Complex<Rat>;

inline CRat crat(long num, long den = 1) { return CRat(Rat(num, den)); }

inline std::string crat_to_string(const CRat& c) {
    if (c.im == 0) return rat_to_string(c.re);
    if (c.re == 0) return rat_to_string(c.im) + "i";
    std::string im = rat_to_string(c.im);
    if (im.front() != '-') im = "+" + im;
    return rat_to_string(c.re) + im + "i";
}

inline std::complex<double> to_double(const CRat& c) {
    return {static_cast<double>(c.re), static_cast<double>(c.im)};
}

/// (i/2)^r as a Gaussian rational.
inline CRat i_half_pow(unsigned r) {
    CRat result(Rat(1));
    const CRat step(Rat(0), Rat(1, 2));
    for (unsigned k = 0; k < r; ++k) result *= step;
    return result;
}

}  // namespace qmdr

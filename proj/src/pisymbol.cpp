#include "qmdr/pisymbol.hpp"

#include <cmath>

namespace qmdr {

PiRat::PiRat(UniPoly num, UniPoly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw std::domain_error("PiRat with zero denominator");
    normalize();
}

void PiRat::normalize() {
    if (num_.is_zero()) {
        den_ = UniPoly(Rat(1));
        return;
    }
    UniPoly g = UniPoly::gcd(num_, den_);
    if (g.degree() > 0) {
        num_ = num_.divmod(g).first;
        den_ = den_.divmod(g).first;
    }
    Rat lead = den_.leading();
    num_ = num_ * (Rat(1) / lead);
    den_ = den_ * (Rat(1) / lead);
}

std::optional<std::pair<Rat, unsigned>> PiRat::as_pi_monomial() const {
    if (den_.degree() != 0) return std::nullopt;
    if (!num_.is_monomial()) return std::nullopt;
    if (num_.is_zero()) return std::make_pair(Rat(0), 0u);
    return std::make_pair(num_.leading() / den_.leading(),
                          static_cast<unsigned>(num_.degree()));
}

Rat PiRat::rational_value() const {
    if (num_.degree() > 0 || den_.degree() > 0)
        throw std::domain_error("PiRat carries a symbolic pi: " + to_string());
    return num_.coeff(0) / den_.coeff(0);
}

PiRat PiRat::operator-() const { return PiRat(-num_, den_); }

PiRat PiRat::operator+(const PiRat& o) const {
    return PiRat(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

PiRat PiRat::operator-(const PiRat& o) const {
    return PiRat(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

PiRat PiRat::operator*(const PiRat& o) const { return PiRat(num_ * o.num_, den_ * o.den_); }

PiRat PiRat::operator/(const PiRat& o) const {
    if (o.is_zero()) throw std::domain_error("PiRat division by zero");
    return PiRat(num_ * o.den_, den_ * o.num_);
}

PiRat PiRat::inverse() const {
    if (is_zero()) throw std::domain_error("PiRat inverse of zero");
    return PiRat(den_, num_);
}

double PiRat::to_double() const { return num_.eval(M_PI) / den_.eval(M_PI); }

std::string PiRat::to_string() const {
    auto poly_str = [](const UniPoly& p) {
        if (p.is_zero()) return std::string("0");
        std::string out;
        for (int k = p.degree(); k >= 0; --k) {
            Rat c = p.coeff(static_cast<unsigned>(k));
            if (c == 0) continue;
            if (!out.empty()) out += c > 0 ? " + " : " - ";
            else if (c < 0) out += "-";
            Rat a = qmdr::abs(c);
            if (a != 1 || k == 0) out += rat_to_string(a);
            if (k > 0) {
                if (a != 1) out += "*";
                out += "pi";
                if (k > 1) out += "^" + std::to_string(k);
            }
        }
        return out;
    };
    if (den_ == UniPoly(Rat(1))) return poly_str(num_);
    return "(" + poly_str(num_) + ")/(" + poly_str(den_) + ")";
}

}  // namespace qmdr

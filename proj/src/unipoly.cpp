#include "qmdr/unipoly.hpp"

namespace qmdr {

bool UniPoly::is_monomial() const {
    if (coeffs_.empty()) return true;  // zero counts as the empty monomial
    for (size_t k = 0; k + 1 < coeffs_.size(); ++k)
        if (coeffs_[k] != 0) return false;
    return true;
}

UniPoly UniPoly::operator-() const {
    std::vector<Rat> v(coeffs_.size());
    for (size_t k = 0; k < coeffs_.size(); ++k) v[k] = -coeffs_[k];
    return UniPoly(std::move(v));
}

UniPoly UniPoly::operator+(const UniPoly& o) const {
    std::vector<Rat> v(std::max(coeffs_.size(), o.coeffs_.size()), Rat(0));
    for (size_t k = 0; k < coeffs_.size(); ++k) v[k] += coeffs_[k];
    for (size_t k = 0; k < o.coeffs_.size(); ++k) v[k] += o.coeffs_[k];
    return UniPoly(std::move(v));
}

UniPoly UniPoly::operator-(const UniPoly& o) const { return *this + (-o); }

UniPoly UniPoly::operator*(const UniPoly& o) const {
    if (is_zero() || o.is_zero()) return UniPoly();
    std::vector<Rat> v(coeffs_.size() + o.coeffs_.size() - 1, Rat(0));
    for (size_t a = 0; a < coeffs_.size(); ++a)
        for (size_t b = 0; b < o.coeffs_.size(); ++b) v[a + b] += coeffs_[a] * o.coeffs_[b];
    return UniPoly(std::move(v));
}

UniPoly UniPoly::operator*(const Rat& s) const {
    if (s == 0) return UniPoly();
    std::vector<Rat> v(coeffs_);
    for (auto& c : v) c *= s;
    return UniPoly(std::move(v));
}

UniPoly UniPoly::derivative() const {
    if (coeffs_.size() < 2) return UniPoly();
    std::vector<Rat> v(coeffs_.size() - 1);
    for (size_t k = 1; k < coeffs_.size(); ++k) v[k - 1] = coeffs_[k] * Rat(static_cast<long>(k));
    return UniPoly(std::move(v));
}

Rat UniPoly::eval(const Rat& x) const {
    Rat acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

double UniPoly::eval(double x) const {
    double acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        acc = acc * x + static_cast<double>(*it);
    return acc;
}

std::pair<UniPoly, UniPoly> UniPoly::divmod(const UniPoly& divisor) const {
    if (divisor.is_zero()) throw std::domain_error("polynomial division by zero");
    UniPoly rem = *this;
    std::vector<Rat> q;
    int dd = divisor.degree();
    if (rem.degree() >= dd) q.assign(rem.degree() - dd + 1, Rat(0));
    while (!rem.is_zero() && rem.degree() >= dd) {
        int shift = rem.degree() - dd;
        Rat factor = rem.leading() / divisor.leading();
        q[shift] = factor;
        rem = rem - UniPoly::monomial(factor, static_cast<unsigned>(shift)) * divisor;
    }
    return {UniPoly(std::move(q)), std::move(rem)};
}

UniPoly UniPoly::gcd(UniPoly a, UniPoly b) {
    while (!b.is_zero()) {
        UniPoly r = a.divmod(b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

UniPoly UniPoly::monic() const {
    if (is_zero()) return UniPoly();
    return *this * (Rat(1) / leading());
}

namespace {

int sign_changes(const std::vector<UniPoly>& chain, const Rat& x) {
    int changes = 0, prev = 0;
    for (const auto& p : chain) {
        int s = sign(p.eval(x));
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++changes;
        prev = s;
    }
    return changes;
}

}  // namespace

int sturm_root_count(const UniPoly& p, const Rat& a, const Rat& b) {
    if (p.is_zero()) throw std::domain_error("Sturm count of the zero polynomial");
    std::vector<UniPoly> chain{p, p.derivative()};
    while (!chain.back().is_zero()) {
        const UniPoly& p0 = chain[chain.size() - 2];
        const UniPoly& p1 = chain.back();
        chain.push_back(-p0.divmod(p1).second);
    }
    chain.pop_back();
    return sign_changes(chain, a) - sign_changes(chain, b);
}

}  // namespace qmdr

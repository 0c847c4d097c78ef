#include "qmdr/polynomial.hpp"

#include <set>

namespace qmdr {

std::string Monomial::to_string(const std::vector<std::string>* names) const {
    if (exps.empty()) return "1";
    std::string out;
    for (auto& [v, e] : exps) {
        if (!out.empty()) out += " ";
        out += (names && v < names->size()) ? (*names)[v] : "x" + std::to_string(v);
        if (e > 1) out += "^" + std::to_string(e);
    }
    return out;
}

Polynomial Polynomial::operator-() const {
    Polynomial r;
    for (auto& [m, c] : terms_) r.terms_[m] = -c;
    return r;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    Polynomial r = *this;
    for (auto& [m, c] : o.terms_) r.insert(m, c);
    return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
    Polynomial r = *this;
    for (auto& [m, c] : o.terms_) r.insert(m, -c);
    return r;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
    Polynomial r;
    for (auto& [ma, ca] : terms_)
        for (auto& [mb, cb] : o.terms_) r.insert(ma * mb, ca * cb);
    return r;
}

Polynomial Polynomial::scaled(const CRat& s) const {
    Polynomial r;
    if (s.is_zero()) return r;
    for (auto& [m, c] : terms_) r.terms_[m] = c * s;
    return r;
}

Polynomial Polynomial::pow(unsigned n) const {
    Polynomial r = one();
    for (unsigned k = 0; k < n; ++k) r *= *this;
    return r;
}

Polynomial Polynomial::conj() const {
    Polynomial r;
    for (auto& [m, c] : terms_) r.terms_[m] = c.conj();
    return r;
}

Polynomial Polynomial::derive(VarId v) const {
    Polynomial r;
    for (auto& [m, c] : terms_) {
        auto it = m.exps.find(v);
        if (it == m.exps.end()) continue;
        unsigned e = it->second;
        Monomial lowered = m;
        if (e == 1)
            lowered.exps.erase(v);
        else
            lowered.exps[v] = e - 1;
        r.insert(lowered, c * CRat(Rat(static_cast<long>(e))));
    }
    return r;
}

Polynomial Polynomial::coefficient_in(VarId v, unsigned k) const {
    Polynomial r;
    for (auto& [m, c] : terms_) {
        if (m.degree_in(v) != k) continue;
        Monomial stripped = m;
        stripped.exps.erase(v);
        r.insert(stripped, c);
    }
    return r;
}

unsigned Polynomial::degree_in(VarId v) const {
    unsigned d = 0;
    for (auto& [m, c] : terms_) d = std::max(d, m.degree_in(v));
    return d;
}

Polynomial Polynomial::substitute(VarId v, const CRat& value) const {
    Polynomial r;
    for (auto& [m, c] : terms_) {
        unsigned e = m.degree_in(v);
        CRat scale = c;
        for (unsigned k = 0; k < e; ++k) scale *= value;
        Monomial stripped = m;
        stripped.exps.erase(v);
        r.insert(stripped, scale);
    }
    return r;
}

Polynomial Polynomial::truncate_total_degree(unsigned max_degree) const {
    Polynomial r;
    for (auto& [m, c] : terms_)
        if (m.total_degree() <= max_degree) r.terms_[m] = c;
    return r;
}

std::vector<VarId> Polynomial::variables() const {
    std::set<VarId> vs;
    for (auto& [m, c] : terms_)
        for (auto& [v, e] : m.exps) vs.insert(v);
    return {vs.begin(), vs.end()};
}

std::complex<double> Polynomial::eval(const std::map<VarId, double>& point) const {
    std::complex<double> acc = 0;
    for (auto& [m, c] : terms_) {
        double mono = 1;
        for (auto& [v, e] : m.exps) {
            auto it = point.find(v);
            if (it == point.end()) throw std::invalid_argument("unbound variable in eval");
            for (unsigned k = 0; k < e; ++k) mono *= it->second;
        }
        acc += to_double(c) * mono;
    }
    return acc;
}

std::string Polynomial::to_string(const std::vector<std::string>* names) const {
    if (terms_.empty()) return "0";
    std::string out;
    for (auto& [m, c] : terms_) {
        if (!out.empty()) out += " + ";
        out += "(" + crat_to_string(c) + ")";
        if (!m.exps.empty()) out += " " + m.to_string(names);
    }
    return out;
}

Polynomial expand_analytic(const std::vector<Rat>& taylor_coeffs, const Polynomial& arg,
                           unsigned order) {
    if (!arg.constant_term().is_zero())
        throw std::invalid_argument("expand_analytic: argument has a nonzero constant term");
    Polynomial result;
    Polynomial arg_pow = Polynomial::one();
    for (size_t n = 0; n < taylor_coeffs.size(); ++n) {
        if (n > 0) {
            arg_pow = (arg_pow * arg).truncate_total_degree(order);
            if (arg_pow.is_zero()) break;
        }
        if (taylor_coeffs[n] != 0)
            result += arg_pow.scaled(CRat(taylor_coeffs[n]));
    }
    return result.truncate_total_degree(order);
}

namespace {
Rat factorial(unsigned n) {
    Rat f = 1;
    for (unsigned k = 2; k <= n; ++k) f *= k;
    return f;
}
}  // namespace

std::vector<Rat> sin_taylor(unsigned order) {
    std::vector<Rat> c(order + 1, Rat(0));
    for (unsigned n = 1; n <= order; n += 2)
        c[n] = Rat((n / 2) % 2 == 0 ? 1 : -1) / factorial(n);
    return c;
}

std::vector<Rat> cos_taylor(unsigned order) {
    std::vector<Rat> c(order + 1, Rat(0));
    for (unsigned n = 0; n <= order; n += 2)
        c[n] = Rat((n / 2) % 2 == 0 ? 1 : -1) / factorial(n);
    return c;
}

std::vector<Rat> exp_taylor(unsigned order) {
    std::vector<Rat> c(order + 1);
    for (unsigned n = 0; n <= order; ++n) c[n] = Rat(1) / factorial(n);
    return c;
}

std::vector<Rat> sin_sq_taylor(unsigned order) {
    // sin^2 x = (1 - cos 2x)/2
    std::vector<Rat> c(order + 1, Rat(0));
    for (unsigned n = 2; n <= order; n += 2) {
        Rat pow2 = 1;
        for (unsigned k = 1; k < n; ++k) pow2 *= 2;  // 2^(n-1)
        c[n] = Rat((n / 2) % 2 == 1 ? 1 : -1) * pow2 / factorial(n);
    }
    return c;
}

}  // namespace qmdr

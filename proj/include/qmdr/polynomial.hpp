#pragma once

#include <map>
#include <string>
#include <vector>

#include "qmdr/complexfield.hpp"

namespace qmdr {

using VarId = unsigned;

/// Sparse monomial: variable-id -> positive exponent. Zero exponents are
/// never stored, so the empty map is the constant monomial 1.
struct Monomial {
    std::map<VarId, unsigned> exps;

    static Monomial one() { return {}; }
    static Monomial var(VarId v, unsigned e = 1) {
        Monomial m;
        if (e > 0) m.exps[v] = e;
        return m;
    }

    unsigned total_degree() const {
        unsigned d = 0;
        for (auto& [v, e] : exps) d += e;
        return d;
    }
    unsigned degree_in(VarId v) const {
        auto it = exps.find(v);
        return it == exps.end() ? 0 : it->second;
    }

    Monomial operator*(const Monomial& o) const {
        Monomial r = *this;
        for (auto& [v, e] : o.exps) r.exps[v] += e;
        return r;
    }

    auto operator<=>(const Monomial& o) const = default;

    std::string to_string(const std::vector<std::string>* names = nullptr) const;
};

/// Sparse multivariate polynomial over the Gaussian rationals. All arithmetic
/// is exact; a zero coefficient is never stored.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(CRat constant) {
        if (!constant.is_zero()) terms_[Monomial::one()] = std::move(constant);
    }

    static Polynomial zero() { return {}; }
    static Polynomial one() { return Polynomial(CRat(Rat(1))); }
    static Polynomial variable(VarId v) {
        Polynomial p;
        p.terms_[Monomial::var(v)] = CRat(Rat(1));
        return p;
    }
    static Polynomial term(Monomial m, CRat c) {
        Polynomial p;
        if (!c.is_zero()) p.terms_[std::move(m)] = std::move(c);
        return p;
    }

    const std::map<Monomial, CRat>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.exps.empty());
    }
    CRat constant_term() const { return coefficient(Monomial::one()); }
    CRat coefficient(const Monomial& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? CRat() : it->second;
    }
    unsigned total_degree() const {
        unsigned d = 0;
        for (auto& [m, c] : terms_) d = std::max(d, m.total_degree());
        return d;
    }

    Polynomial operator-() const;
    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
    Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }
    Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }
    bool operator==(const Polynomial& o) const { return terms_ == o.terms_; }

    Polynomial scaled(const CRat& s) const;
    Polynomial pow(unsigned n) const;
    Polynomial conj() const;

    /// Exact partial derivative with respect to v.
    Polynomial derive(VarId v) const;

    /// Collect the coefficient of v^k as a polynomial in the other variables.
    Polynomial coefficient_in(VarId v, unsigned k) const;

    /// Largest power of v occurring.
    unsigned degree_in(VarId v) const;

    /// Exact substitution v := value.
    Polynomial substitute(VarId v, const CRat& value) const;

    /// Drop all terms of total degree above `max_degree`.
    Polynomial truncate_total_degree(unsigned max_degree) const;

    /// Set of variable ids actually present.
    std::vector<VarId> variables() const;

    std::complex<double> eval(const std::map<VarId, double>& point) const;

    std::string to_string(const std::vector<std::string>* names = nullptr) const;

private:
    void insert(const Monomial& m, const CRat& c) {
        if (c.is_zero()) return;
        auto [it, inserted] = terms_.emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    std::map<Monomial, CRat> terms_;
};

/// Sigma c_n * arg^n truncated at total degree `order`, for arg with zero
/// constant term. taylor_coeffs[n] = c_n.
Polynomial expand_analytic(const std::vector<Rat>& taylor_coeffs, const Polynomial& arg,
                           unsigned order);

/// Taylor coefficients of standard functions, through degree `order`.
std::vector<Rat> sin_taylor(unsigned order);
std::vector<Rat> cos_taylor(unsigned order);
std::vector<Rat> exp_taylor(unsigned order);
std::vector<Rat> sin_sq_taylor(unsigned order);

}  // namespace qmdr

#pragma once

#include "qmdr/polynomial.hpp"

namespace qmdr {

/// Power series in the formal deformation parameter, truncated at a fixed
/// grading order. coefficient(r) multiplies the r-th power of the parameter;
/// the parameter itself is a grading index, never an ordinary variable.
class TruncatedSeries {
public:
    explicit TruncatedSeries(unsigned order) : coeffs_(order + 1) {}
    TruncatedSeries(unsigned order, std::vector<std::string> registry)
        : coeffs_(order + 1), registry_(std::move(registry)) {}

    static TruncatedSeries constant(unsigned order, Polynomial p) {
        TruncatedSeries s(order);
        s.coeffs_[0] = std::move(p);
        return s;
    }
    static TruncatedSeries unit(unsigned order) { return constant(order, Polynomial::one()); }

    unsigned order() const { return static_cast<unsigned>(coeffs_.size()) - 1; }
    const Polynomial& coefficient(unsigned r) const { return coeffs_.at(r); }
    void set_coefficient(unsigned r, Polynomial p) { coeffs_.at(r) = std::move(p); }
    const std::vector<std::string>& registry() const { return registry_; }
    void set_registry(std::vector<std::string> names) { registry_ = std::move(names); }

    bool is_zero() const {
        for (auto& c : coeffs_)
            if (!c.is_zero()) return false;
        return true;
    }

    TruncatedSeries operator-() const;
    TruncatedSeries operator+(const TruncatedSeries& o) const;
    TruncatedSeries operator-(const TruncatedSeries& o) const;
    bool operator==(const TruncatedSeries& o) const { return coeffs_ == o.coeffs_; }

    TruncatedSeries scaled(const CRat& s) const;
    TruncatedSeries conj() const;

    /// Truncate (or keep) at the given order.
    TruncatedSeries truncated(unsigned order) const;

    std::string to_string(const std::vector<std::string>* names = nullptr) const;

private:
    friend TruncatedSeries series_mul(const TruncatedSeries&, const TruncatedSeries&);

    std::vector<Polynomial> coeffs_;
    std::vector<std::string> registry_;  // variable names; empty = unconstrained
};

/// Cauchy product in the deformation grading, truncated at min(order_a, order_b).
/// Throws std::invalid_argument when both operands carry registries and they differ.
TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b);

}  // namespace qmdr

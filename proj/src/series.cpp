#include "qmdr/series.hpp"

namespace qmdr {

TruncatedSeries TruncatedSeries::operator-() const {
    TruncatedSeries r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

TruncatedSeries TruncatedSeries::operator+(const TruncatedSeries& o) const {
    unsigned n = std::min(order(), o.order());
    TruncatedSeries r = truncated(n);
    for (unsigned k = 0; k <= n; ++k) r.coeffs_[k] += o.coeffs_[k];
    return r;
}

TruncatedSeries TruncatedSeries::operator-(const TruncatedSeries& o) const {
    return *this + (-o);
}

TruncatedSeries TruncatedSeries::scaled(const CRat& s) const {
    TruncatedSeries r = *this;
    for (auto& c : r.coeffs_) c = c.scaled(s);
    return r;
}

TruncatedSeries TruncatedSeries::conj() const {
    TruncatedSeries r = *this;
    for (auto& c : r.coeffs_) c = c.conj();
    return r;
}

TruncatedSeries TruncatedSeries::truncated(unsigned order) const {
    TruncatedSeries r(std::min(order, this->order()), registry_);
    for (unsigned k = 0; k <= r.order(); ++k) r.coeffs_[k] = coeffs_[k];
    return r;
}

std::string TruncatedSeries::to_string(const std::vector<std::string>* names) const {
    const std::vector<std::string>* nm = names;
    if (!nm && !registry_.empty()) nm = &registry_;
    std::string out;
    for (unsigned r = 0; r <= order(); ++r) {
        if (coeffs_[r].is_zero()) continue;
        if (!out.empty()) out += " + ";
        out += "[" + coeffs_[r].to_string(nm) + "]";
        if (r > 0) out += " t^" + std::to_string(r);
    }
    return out.empty() ? "0" : out;
}

TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b) {
    if (!a.registry().empty() && !b.registry().empty() && a.registry() != b.registry())
        throw std::invalid_argument("series_mul: variable-registry mismatch");
    unsigned n = std::min(a.order(), b.order());
    TruncatedSeries r(n, a.registry().empty() ? b.registry() : a.registry());
    for (unsigned s = 0; s <= n; ++s) {
        Polynomial acc;
        for (unsigned u = 0; u <= s; ++u) acc += a.coefficient(u) * b.coefficient(s - u);
        r.set_coefficient(s, std::move(acc));
    }
    return r;
}

}  // namespace qmdr

#include "qmdr/star.hpp"

#include <algorithm>

namespace qmdr {

std::vector<std::string> DarbouxChart::variable_names() const {
    std::vector<std::string> names(2 * n);
    for (unsigned i = 0; i < n; ++i) {
        names[i] = n == 1 ? "q" : "q" + std::to_string(i + 1);
        names[n + i] = n == 1 ? "p" : "p" + std::to_string(i + 1);
    }
    return names;
}

namespace {

Rat factorial(unsigned n) {
    Rat f = 1;
    for (unsigned k = 2; k <= n; ++k) f *= k;
    return f;
}

// One application of the Poisson bi-derivation to a list of f (x) g pairs.
std::vector<std::pair<Polynomial, Polynomial>> poisson_step(
    const DarbouxChart& chart, const std::vector<std::pair<Polynomial, Polynomial>>& pairs) {
    std::vector<std::pair<Polynomial, Polynomial>> out;
    for (const auto& [f, g] : pairs) {
        for (unsigned i = 0; i < chart.n; ++i) {
            VarId qi = chart.q(i), pi = chart.p(i);
            Polynomial fq = f.derive(qi), fp = f.derive(pi);
            if (!fq.is_zero()) {
                Polynomial gp = g.derive(pi);
                if (!gp.is_zero())
                    out.emplace_back(fq.scaled(CRat(chart.poisson_scale)), std::move(gp));
            }
            if (!fp.is_zero()) {
                Polynomial gq = g.derive(qi);
                if (!gq.is_zero())
                    out.emplace_back(fp.scaled(CRat(-chart.poisson_scale)), std::move(gq));
            }
        }
    }
    return out;
}

}  // namespace

Polynomial c_r(const StarProduct& sp, unsigned r, const Polynomial& f, const Polynomial& g) {
    if (r > sp.order) throw std::out_of_range("c_r: grade exceeds the truncation order");
    std::vector<std::pair<Polynomial, Polynomial>> pairs{{f, g}};
    for (unsigned k = 0; k < r; ++k) {
        pairs = poisson_step(sp.chart, pairs);
        if (pairs.empty()) return Polynomial::zero();
    }
    Polynomial sum;
    for (const auto& [a, b] : pairs) sum += a * b;
    Polynomial result = sum.scaled(CRat(Rat(1) / factorial(r)));
    if (r == 2 && sp.debug_c2_scale != 1) result = result.scaled(CRat(sp.debug_c2_scale));
    return result;
}

namespace {

void check_foreign_variables(const DarbouxChart& chart, const Polynomial& f) {
    for (VarId v : f.variables()) {
        if (v < chart.dim()) continue;
        if (std::find(chart.formal_symbols.begin(), chart.formal_symbols.end(), v) !=
            chart.formal_symbols.end())
            continue;
        throw std::invalid_argument("star: foreign variable x" + std::to_string(v));
    }
}

}  // namespace

TruncatedSeries star(const StarProduct& sp, const Polynomial& f, const Polynomial& g) {
    check_foreign_variables(sp.chart, f);
    check_foreign_variables(sp.chart, g);
    TruncatedSeries s(sp.order, sp.chart.variable_names());
    for (unsigned r = 0; r <= sp.order; ++r)
        s.set_coefficient(r, c_r(sp, r, f, g).scaled(i_half_pow(r)));
    return s;
}

TruncatedSeries star_series(const StarProduct& sp, const TruncatedSeries& a,
                            const TruncatedSeries& b) {
    unsigned n = std::min({sp.order, a.order(), b.order()});
    TruncatedSeries s(n, sp.chart.variable_names());
    for (unsigned grade = 0; grade <= n; ++grade) {
        Polynomial acc;
        for (unsigned r = 0; r <= grade; ++r)
            for (unsigned u = 0; u + r <= grade; ++u) {
                unsigned v = grade - r - u;
                Polynomial term = c_r(sp, r, a.coefficient(u), b.coefficient(v));
                if (!term.is_zero()) acc += term.scaled(i_half_pow(r));
            }
        s.set_coefficient(grade, std::move(acc));
    }
    return s;
}

TruncatedSeries star_power(const StarProduct& sp, const Polynomial& f, unsigned n) {
    TruncatedSeries acc = TruncatedSeries::unit(sp.order);
    acc.set_registry(sp.chart.variable_names());
    TruncatedSeries fs = TruncatedSeries::constant(sp.order, f);
    fs.set_registry(sp.chart.variable_names());
    for (unsigned k = 0; k < n; ++k) acc = star_series(sp, acc, fs);
    return acc;
}

TruncatedSeries star_exponential(const StarProduct& sp, const Polynomial& f, unsigned terms) {
    if (terms < 1) throw std::invalid_argument("star_exponential: terms must be >= 1");
    TruncatedSeries sum(sp.order, sp.chart.variable_names());
    TruncatedSeries power = TruncatedSeries::unit(sp.order);
    power.set_registry(sp.chart.variable_names());
    TruncatedSeries fs = TruncatedSeries::constant(sp.order, f);
    fs.set_registry(sp.chart.variable_names());
    CRat i_pow(Rat(1));
    for (unsigned n = 0; n < terms; ++n) {
        if (n > 0) {
            power = star_series(sp, power, fs);
            i_pow *= CRat::i();
        }
        sum = sum + power.scaled(i_pow * CRat(Rat(1) / factorial(n)));
    }
    return sum;
}

Polynomial random_polynomial(const DarbouxChart& chart, unsigned max_degree,
                             std::mt19937_64& rng) {
    std::uniform_int_distribution<int> coeff(-6, 6);
    std::uniform_int_distribution<unsigned> deg(0, max_degree);
    std::uniform_int_distribution<unsigned> var(0, chart.dim() - 1);
    std::uniform_int_distribution<unsigned> nterms(1, 5);
    Polynomial p;
    unsigned t = nterms(rng);
    for (unsigned k = 0; k < t; ++k) {
        Monomial m;
        unsigned d = deg(rng);
        for (unsigned j = 0; j < d; ++j) m = m * Monomial::var(var(rng));
        p += Polynomial::term(m, crat(coeff(rng)));
    }
    return p;
}

CheckReport check_symmetry(const StarProduct& sp, unsigned r, unsigned samples,
                           std::uint64_t seed) {
    CheckReport rep = CheckReport::ok("fedosov_symmetry_r" + std::to_string(r), sp.order, samples);
    std::mt19937_64 rng(seed + r);
    int parity = (r % 2 == 0) ? +1 : -1;
    for (unsigned s = 0; s < samples; ++s) {
        Polynomial f = random_polynomial(sp.chart, 3, rng);
        Polynomial g = random_polynomial(sp.chart, 3, rng);
        Polynomial lhs = c_r(sp, r, f, g);
        Polynomial rhs = c_r(sp, r, g, f).scaled(crat(parity));
        if (!(lhs == rhs)) {
            auto names = sp.chart.variable_names();
            return rep.fail("sample " + std::to_string(s) + ": f = " + f.to_string(&names) +
                            ", g = " + g.to_string(&names));
        }
    }
    return rep;
}

CheckReport check_associativity(const StarProduct& sp, unsigned samples, std::uint64_t seed) {
    CheckReport rep = CheckReport::ok("moyal_associativity", sp.order, samples);
    std::mt19937_64 rng(seed);
    for (unsigned s = 0; s < samples; ++s) {
        Polynomial f = random_polynomial(sp.chart, 3, rng);
        Polynomial g = random_polynomial(sp.chart, 3, rng);
        Polynomial h = random_polynomial(sp.chart, 3, rng);
        TruncatedSeries lhs = star_series(sp, star(sp, f, g),
                                          TruncatedSeries::constant(sp.order, h));
        TruncatedSeries rhs = star_series(sp, TruncatedSeries::constant(sp.order, f),
                                          star(sp, g, h));
        if (!(lhs == rhs)) {
            for (unsigned grade = 0; grade <= sp.order; ++grade) {
                if (!(lhs.coefficient(grade) == rhs.coefficient(grade))) {
                    rep.failing_grade = grade;
                    break;
                }
            }
            auto names = sp.chart.variable_names();
            return rep.fail("sample " + std::to_string(s) + ": f = " + f.to_string(&names) +
                            ", g = " + g.to_string(&names) + ", h = " + h.to_string(&names));
        }
    }
    return rep;
}

}  // namespace qmdr

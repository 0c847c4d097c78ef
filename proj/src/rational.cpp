#include "qmdr/rational.hpp"

namespace qmdr {

Int isqrt(const Int& n) {
    if (n < 0) throw std::domain_error("isqrt of negative integer");
    if (n < 2) return n;
    Int x = n, y = (x + 1) / 2;
    while (y < x) {
        x = y;
        y = (x + n / x) / 2;
    }
    return x;
}

std::optional<Rat> sqrt_exact(const Rat& r) {
    if (r < 0) return std::nullopt;
    Int n = numerator(r), d = denominator(r);
    Int sn = isqrt(n), sd = isqrt(d);
    if (sn * sn == n && sd * sd == d) return Rat(sn, sd);
    return std::nullopt;
}

Enclosure sqrt_enclosure(const Rat& r, const Rat& width) {
    if (r < 0) throw std::domain_error("sqrt of negative rational");
    if (auto e = sqrt_exact(r)) return {*e, *e};
    Rat lo = 0, hi = r < 1 ? Rat(1) : r;
    while (hi - lo > width) {
        Rat mid = (lo + hi) / 2;
        if (mid * mid <= r)
            lo = mid;
        else
            hi = mid;
    }
    return {lo, hi};
}

Rat simplest_in_interval(const Rat& lo, const Rat& hi) {
    if (lo > hi) throw std::invalid_argument("empty interval");
    if (lo <= 0 && hi >= 0) return 0;
    if (hi < 0) return -simplest_in_interval(-hi, -lo);
    // 0 < lo <= hi: continued-fraction descent.
    Int fl = numerator(lo) / denominator(lo);            // floor(lo)
    Int cl = fl + (fl * denominator(lo) == numerator(lo) ? 0 : 1);  // ceil(lo)
    if (Rat(cl) <= hi) return Rat(cl);
    // no integer in the interval; recurse on the fractional parts
    Rat sub = simplest_in_interval(1 / (hi - Rat(fl)), 1 / (lo - Rat(fl)));
    return Rat(fl) + 1 / sub;
}

}  // namespace qmdr

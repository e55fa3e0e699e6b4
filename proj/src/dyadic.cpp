#include "qframe/dyadic.hpp"

#include <cmath>

#include "qframe/errors.hpp"

namespace qframe {

DyadicReal DyadicReal::make(BigInt n, int e) {
    DyadicReal r;
    if (n.is_zero()) return r;
    size_t tz = n.mag().trailing_zero_bits();
    if (tz > 0) {
        n = BigInt(n.sign(), n.mag().shr(tz));
        e += static_cast<int>(tz);
    }
    r.num = std::move(n);
    r.exp = e;
    return r;
}

DyadicReal operator+(const DyadicReal& a, const DyadicReal& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    int e = std::min(a.exp, b.exp);
    BigInt na = a.num.shl(static_cast<size_t>(a.exp - e));
    BigInt nb = b.num.shl(static_cast<size_t>(b.exp - e));
    return DyadicReal::make(na + nb, e);
}

DyadicReal operator-(const DyadicReal& a, const DyadicReal& b) { return a + (-b); }

DyadicReal operator*(const DyadicReal& a, const DyadicReal& b) {
    if (a.is_zero() || b.is_zero()) return {};
    return DyadicReal::make(a.num * b.num, a.exp + b.exp);
}

int DyadicReal::compare(const DyadicReal& a, const DyadicReal& b) {
    if (a.sign() != b.sign()) return a.sign() < b.sign() ? -1 : 1;
    if (a.is_zero()) return 0;
    int e = std::min(a.exp, b.exp);
    BigInt na = a.num.shl(static_cast<size_t>(a.exp - e));
    BigInt nb = b.num.shl(static_cast<size_t>(b.exp - e));
    return BigInt::compare(na, nb);
}

double DyadicReal::to_double() const { return std::ldexp(num.to_double(), exp); }

std::string DyadicReal::to_string() const {
    return num.to_string() + "*2^" + std::to_string(exp);
}

DyadicReal truncated_div(const DyadicReal& x, const DyadicReal& y, int ell) {
    if (y.is_zero()) throw domain_error("dyadic division by zero");
    if (x.is_zero()) return {};
    // x/y * 2^ell = (xn/yn) * 2^(xe - ye + ell)
    int e = x.exp - y.exp + ell;
    BigInt n = x.num;
    BigInt d = y.num;
    if (e >= 0) n = n.shl(static_cast<size_t>(e));
    else d = d.shl(static_cast<size_t>(-e));
    BigInt t = BigInt::divmod_trunc(n, d).quot;
    return DyadicReal::make(t, -ell);
}

DyadicReal truncated_ratio(int64_t num, int64_t den, int k) {
    if (den == 0) throw domain_error("zero denominator");
    return truncated_div(DyadicReal::from_int(num), DyadicReal::from_int(den), k);
}

int max_ell_strict(const DyadicReal& d) {
    if (d.is_zero()) return kEllInfinity;
    // |d| = m * 2^e with 2^(b-1) <= m < 2^b:  |d| < 2^-L  iff  L <= -(b + e)
    // (m odd, so |d| = 2^(b-1+e) exactly when m == 1, still < 2^(b+e))
    return -(static_cast<int>(d.num.mag().bit_length()) + d.exp);
}

int max_ell_leq(const DyadicReal& d) {
    if (d.is_zero()) return kEllInfinity;
    if (d.num.mag().is_one()) return -d.exp; // |d| = 2^exp, equality admitted
    return max_ell_strict(d);
}

} // namespace qframe

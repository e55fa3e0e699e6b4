#pragma once

#include <limits>
#include <string>

#include "qframe/bigint.hpp"

namespace qframe {

// Exact dyadic rational num * 2^exp, canonical: num odd or zero, zero has exp 0.
// Dyadics are closed under +, -, *; division is provided only in truncated form.
struct DyadicReal {
    BigInt num;
    int exp = 0;

    DyadicReal() = default;
    static DyadicReal make(BigInt n, int e);
    static DyadicReal from_int(int64_t v) { return make(BigInt(v), 0); }
    // v * 2^e for int v
    static DyadicReal scaled(int64_t v, int e) { return make(BigInt(v), e); }

    bool is_zero() const { return num.is_zero(); }
    int sign() const { return num.sign(); }

    DyadicReal operator-() const { return make(-num, exp); }
    DyadicReal abs() const { return make(num.abs(), exp); }

    friend DyadicReal operator+(const DyadicReal& a, const DyadicReal& b);
    friend DyadicReal operator-(const DyadicReal& a, const DyadicReal& b);
    friend DyadicReal operator*(const DyadicReal& a, const DyadicReal& b);

    static int compare(const DyadicReal& a, const DyadicReal& b);
    friend bool operator==(const DyadicReal& a, const DyadicReal& b) { return compare(a, b) == 0; }
    friend bool operator<(const DyadicReal& a, const DyadicReal& b) { return compare(a, b) < 0; }
    friend bool operator<=(const DyadicReal& a, const DyadicReal& b) { return compare(a, b) <= 0; }

    double to_double() const;
    std::string to_string() const; // "num*2^exp"
};

// Quotient x / y truncated toward zero at bit index -ell; exact truncation of
// the exact quotient, so |result - x/y| <= 2^-ell.
DyadicReal truncated_div(const DyadicReal& x, const DyadicReal& y, int ell);

// k-fractional-bit truncation (toward zero) of the integer ratio num/den.
DyadicReal truncated_ratio(int64_t num, int64_t den, int k);

// Largest integer L with |d| < 2^-L; for d == 0 returns kEllInfinity.
// Callers compare L against trial precisions ell >= 0.
inline constexpr int kEllInfinity = std::numeric_limits<int>::max() / 2;
int max_ell_strict(const DyadicReal& d);
// Largest integer L with |d| <= 2^-L; kEllInfinity for d == 0.
int max_ell_leq(const DyadicReal& d);

struct DyadicComplex {
    DyadicReal re;
    DyadicReal im;

    DyadicComplex() = default;
    DyadicComplex(DyadicReal r, DyadicReal i) : re(std::move(r)), im(std::move(i)) {}
    static DyadicComplex from_int(int64_t r, int64_t i = 0) {
        return {DyadicReal::from_int(r), DyadicReal::from_int(i)};
    }

    bool is_zero() const { return re.is_zero() && im.is_zero(); }
    bool is_real() const { return im.is_zero(); }
    bool is_imaginary() const { return re.is_zero(); }

    friend DyadicComplex operator+(const DyadicComplex& a, const DyadicComplex& b) {
        return {a.re + b.re, a.im + b.im};
    }
    friend DyadicComplex operator-(const DyadicComplex& a, const DyadicComplex& b) {
        return {a.re - b.re, a.im - b.im};
    }
    friend DyadicComplex operator*(const DyadicComplex& a, const DyadicComplex& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend bool operator==(const DyadicComplex& a, const DyadicComplex& b) {
        return a.re == b.re && a.im == b.im;
    }

    std::string to_string() const { return re.to_string() + " + i*" + im.to_string(); }
};

} // namespace qframe

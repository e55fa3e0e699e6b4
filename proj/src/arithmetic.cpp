#include "qframe/arithmetic.hpp"

#include <cmath>

#include "qframe/errors.hpp"

namespace qframe {

AccuracyLevel::AccuracyLevel(int l) : ell(l) {
    if (l < 0) throw domain_error("accuracy level must be nonnegative");
}

namespace {

void require_canonical(const BasisState& s, const char* op) {
    if (!s.canonical())
        throw precondition_error(std::string(op) + " requires canonical operands, got " +
                                 s.to_string());
}

void require_pure_real(const BasisState& s, const char* op) {
    if (!s.is_pure_real())
        throw unsupported_error(std::string(op) +
                                " is defined componentwise; operand has a nonzero "
                                "imaginary component: " + s.to_string());
}

// -1 / 0 / +1 by the highest occupied index where the strings differ.
int compare_magnitudes(const BitInterval& a, const BitInterval& b) {
    int hi = std::max(a.hi, b.hi);
    int lo = std::min(a.lo, b.lo);
    for (int j = hi; j >= lo; --j) {
        bool ba = a.bit_at(j);
        bool bb = b.bit_at(j);
        if (ba != bb) return ba ? 1 : -1;
    }
    return 0;
}

// encode a comparison sign: -1 negative, 0 zero, +1 positive
int effective_sign(Sign sign, const BitInterval& bi) {
    if (bi.all_zero()) return 0;
    return sign == Sign::minus ? -1 : 1;
}

} // namespace

bool eq_a(const BasisState& x, const BasisState& y) {
    require_canonical(x, "=A");
    require_canonical(y, "=A");
    return x == y;
}

bool leq_a(const BasisState& x, const BasisState& y) {
    require_canonical(x, "<=A");
    require_canonical(y, "<=A");
    require_pure_real(x, "<=A");
    require_pure_real(y, "<=A");
    int sx = effective_sign(x.re_sign, x.re);
    int sy = effective_sign(y.re_sign, y.re);
    if (sx != sy) return sx < sy;
    if (sx == 0) return true;
    int mag = compare_magnitudes(x.re, y.re);
    return sx > 0 ? mag <= 0 : mag >= 0;
}

bool lt_a(const BasisState& x, const BasisState& y) { return leq_a(x, y) && !eq_a(x, y); }

namespace {

template <typename Pred>
double proj_expectation(const PureState& x, const PureState& y, Pred&& pred) {
    double acc = 0.0;
    for (const auto& [u, ax] : x.terms()) {
        if (!u.canonical()) continue; // outside the rational string basis
        double wx = std::norm(ax);
        for (const auto& [v, ay] : y.terms()) {
            if (!v.canonical()) continue;
            if (pred(u, v)) acc += wx * std::norm(ay);
        }
    }
    return acc;
}

} // namespace

double proj_eq_a(const PureState& x, const PureState& y) {
    return proj_expectation(x, y, [](const BasisState& u, const BasisState& v) {
        return eq_a(u, v);
    });
}

double proj_leq_a(const PureState& x, const PureState& y) {
    for (const auto& [u, amp] : x.terms())
        if (u.canonical()) require_pure_real(u, "P_<=A");
    for (const auto& [v, amp] : y.terms())
        if (v.canonical()) require_pure_real(v, "P_<=A");
    return proj_expectation(x, y, [](const BasisState& u, const BasisState& v) {
        return leq_a(u, v);
    });
}

namespace {

template <typename Op>
BasisState value_level_op(const BasisState& x, const BasisState& y, const char* name, Op&& op) {
    require_canonical(x, name);
    require_canonical(y, name);
    return encode(op(value_of(x), value_of(y)));
}

} // namespace

BasisState add_a(const BasisState& x, const BasisState& y) {
    return value_level_op(x, y, "+A", [](const DyadicComplex& a, const DyadicComplex& b) {
        return a + b;
    });
}

BasisState sub_a(const BasisState& x, const BasisState& y) {
    return value_level_op(x, y, "-A", [](const DyadicComplex& a, const DyadicComplex& b) {
        return a - b;
    });
}

BasisState mul_a(const BasisState& x, const BasisState& y) {
    return value_level_op(x, y, "*A", [](const DyadicComplex& a, const DyadicComplex& b) {
        return a * b;
    });
}

BasisState div_a(const BasisState& x, const BasisState& y, AccuracyLevel acc) {
    require_canonical(x, "/A");
    require_canonical(y, "/A");
    require_pure_real(x, "/A");
    require_pure_real(y, "/A");
    DyadicReal vy = value_of(y).re;
    if (vy.is_zero()) throw domain_error("arithmetic division by zero");
    DyadicReal q = truncated_div(value_of(x).re, vy, acc.ell);
    return encode(DyadicComplex{q, DyadicReal{}});
}

BasisState abs_a(const BasisState& x) {
    require_canonical(x, "|.|A");
    require_pure_real(x, "|.|A");
    BasisState out = x;
    out.re_sign = Sign::plus;
    return out;
}

namespace {

template <typename Op>
MixedState mixed_op(const PureState& x, const PureState& y, Op&& op) {
    MixedState out;
    for (const auto& [u, ax] : x.terms()) {
        double wx = std::norm(ax);
        for (const auto& [v, ay] : y.terms())
            out.ensemble.push_back({wx * std::norm(ay), op(u, v)});
    }
    out.validate();
    return out;
}

} // namespace

MixedState mixed_add(const PureState& x, const PureState& y) {
    return mixed_op(x, y, [](const BasisState& u, const BasisState& v) { return add_a(u, v); });
}

MixedState mixed_sub(const PureState& x, const PureState& y) {
    return mixed_op(x, y, [](const BasisState& u, const BasisState& v) { return sub_a(u, v); });
}

} // namespace qframe

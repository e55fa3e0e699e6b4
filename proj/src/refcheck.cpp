#include "qframe/refcheck.hpp"

#include "qframe/arithmetic.hpp"
#include "qframe/errors.hpp"
#include "qframe/sampling.hpp"

namespace qframe::refcheck {

__int128 scaled_component(Sign sign, const BitInterval& bi, int scale) {
    __int128 acc = 0;
    for (int j = bi.lo; j <= bi.hi; ++j) {
        if (!bi.bit_at(j)) continue;
        int e = j + scale;
        if (e < 0) throw domain_error("scale too small for occupied index");
        if (e > 120) throw domain_error("scaled component exceeds 120 bits");
        acc += static_cast<__int128>(1) << e;
    }
    return sign == Sign::minus ? -acc : acc;
}

std::vector<BasisState> enumerate_real_canonical(int radius) {
    std::vector<BasisState> out;
    out.push_back(BasisState::zero());
    for (int lo = -radius; lo <= 0; ++lo) {
        for (int hi = 0; hi <= radius; ++hi) {
            int n = hi - lo + 1;
            for (uint64_t pattern = 0; pattern < (1ull << n); ++pattern) {
                std::vector<uint8_t> bits(static_cast<size_t>(n));
                for (int i = 0; i < n; ++i) bits[static_cast<size_t>(i)] = (pattern >> i) & 1u;
                BitInterval bi(lo, hi, std::move(bits));
                if (!bi.canonical() || bi.all_zero()) continue;
                for (Sign s : {Sign::plus, Sign::minus}) {
                    BasisState b;
                    b.re_sign = s;
                    b.re = bi;
                    out.push_back(b);
                }
            }
        }
    }
    return out;
}

namespace {

// scaled integer value of the library's dyadic result; throws if the scale
// cannot represent it exactly (it always can for sweep-sized operands)
__int128 scaled_dyadic(const DyadicReal& v, int scale) {
    if (v.is_zero()) return 0;
    int e = v.exp + scale;
    if (e < 0) throw domain_error("dyadic value has more fractional bits than the scale");
    __int128 n = 0;
    for (size_t i = v.num.mag().bit_length(); i-- > 0;)
        n = (n << 1) | (v.num.mag().bit(i) ? 1 : 0);
    n <<= e;
    return v.num.sign() < 0 ? -n : n;
}

struct PairOutcome {
    uint64_t mismatches = 0;
    std::string first;
};

PairOutcome check_pair(const BasisState& x, const BasisState& y, int scale) {
    PairOutcome out;
    const __int128 vx = scaled_component(x.re_sign, x.re, scale);
    const __int128 vy = scaled_component(y.re_sign, y.re, scale);
    auto fail = [&](const char* what) {
        ++out.mismatches;
        if (out.first.empty())
            out.first = std::string(what) + ": x=" + x.to_string() + " y=" + y.to_string();
    };
    // value route (scale^2 for the product)
    if (scaled_dyadic(value_of(add_a(x, y)).re, scale) != vx + vy) fail("add");
    if (scaled_dyadic(value_of(sub_a(x, y)).re, scale) != vx - vy) fail("sub");
    if (scaled_dyadic(value_of(mul_a(x, y)).re, 2 * scale) != vx * vy) fail("mul");
    // predicate route
    if (eq_a(x, y) != (vx == vy)) fail("eq");
    if (leq_a(x, y) != (vx <= vy)) fail("leq");
    return out;
}

} // namespace

SweepResult oracle_sweep(int radius, Exec exec) {
    const std::vector<BasisState> states = enumerate_real_canonical(radius);
    const int scale = radius + 1;
    const int64_t n = static_cast<int64_t>(states.size());
    std::vector<uint64_t> mism(static_cast<size_t>(n), 0);
    std::vector<std::string> firsts(static_cast<size_t>(n));

    auto row = [&](int64_t i) {
        uint64_t m = 0;
        std::string first;
        for (int64_t j = 0; j < n; ++j) {
            PairOutcome o = check_pair(states[static_cast<size_t>(i)],
                                       states[static_cast<size_t>(j)], scale);
            m += o.mismatches;
            if (first.empty()) first = o.first;
        }
        mism[static_cast<size_t>(i)] = m;
        firsts[static_cast<size_t>(i)] = first;
    };

    if (exec == Exec::parallel) {
#pragma omp parallel for schedule(dynamic) num_threads(qframe::par::max_threads())
        for (int64_t i = 0; i < n; ++i) row(i);
    } else {
        for (int64_t i = 0; i < n; ++i) row(i);
    }

    SweepResult result;
    result.checks = static_cast<uint64_t>(n) * static_cast<uint64_t>(n) * 5;
    for (int64_t i = 0; i < n; ++i) {
        result.mismatches += mism[static_cast<size_t>(i)];
        if (result.first_mismatch.empty()) result.first_mismatch = firsts[static_cast<size_t>(i)];
    }
    return result;
}

DivSweepResult div_sweep(int pairs, int ell_min, int ell_max, int radius, uint64_t seed,
                         Exec exec) {
    // sample operands up front so results do not depend on thread count
    Rng rng(seed);
    std::vector<std::pair<BasisState, BasisState>> ops;
    ops.reserve(static_cast<size_t>(pairs));
    for (int i = 0; i < pairs; ++i)
        ops.emplace_back(random_real_canonical(rng, radius), random_real_nonzero(rng, radius));

    std::vector<uint64_t> viol(static_cast<size_t>(pairs), 0);
    std::vector<std::string> firsts(static_cast<size_t>(pairs));

    auto one = [&](int i) {
        const auto& [x, y] = ops[static_cast<size_t>(i)];
        uint64_t v = 0;
        std::string first;
        for (int ell = ell_min; ell <= ell_max; ++ell) {
            BasisState q = div_a(x, y, AccuracyLevel(ell));
            const int scale = radius + ell;
            __int128 qx = scaled_component(x.re_sign, x.re, scale);
            __int128 qy = scaled_component(y.re_sign, y.re, scale);
            __int128 qq = scaled_component(q.re_sign, q.re, scale);
            // |q - x/y| <= 2^-ell  <=>  |q*y - x| * 2^ell <= |y|   (scaled)
            __int128 lhs = qq * qy - qx * (static_cast<__int128>(1) << scale);
            if (lhs < 0) lhs = -lhs;
            __int128 rhs = qy < 0 ? -qy : qy;
            bool bound_ok = lhs <= (rhs << (scale - ell));
            // truncation toward zero: |q| <= |x/y| and sign(q) in {0, sign(x/y)}
            __int128 aqx = qx < 0 ? -qx : qx;
            __int128 aqy = qy < 0 ? -qy : qy;
            __int128 aqq = qq < 0 ? -qq : qq;
            bool trunc_ok = aqq * aqy <= aqx * (static_cast<__int128>(1) << scale);
            if (qq != 0) {
                int sq = qq < 0 ? -1 : 1;
                int sxy = (qx < 0) == (qy < 0) ? 1 : -1;
                trunc_ok = trunc_ok && sq == sxy;
            }
            if (!bound_ok || !trunc_ok) {
                ++v;
                if (first.empty())
                    first = "div x=" + x.to_string() + " y=" + y.to_string() +
                            " ell=" + std::to_string(ell);
            }
        }
        viol[static_cast<size_t>(i)] = v;
        firsts[static_cast<size_t>(i)] = first;
    };

    if (exec == Exec::parallel) {
#pragma omp parallel for schedule(dynamic) num_threads(qframe::par::max_threads())
        for (int i = 0; i < pairs; ++i) one(i);
    } else {
        for (int i = 0; i < pairs; ++i) one(i);
    }

    DivSweepResult result;
    result.checks = static_cast<uint64_t>(pairs) *
                    static_cast<uint64_t>(ell_max - ell_min + 1);
    for (int i = 0; i < pairs; ++i) {
        result.violations += viol[static_cast<size_t>(i)];
        if (result.first_violation.empty())
            result.first_violation = firsts[static_cast<size_t>(i)];
    }
    return result;
}

} // namespace qframe::refcheck

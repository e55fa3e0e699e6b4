#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "qframe/bigint.hpp"
#include "qframe/dyadic.hpp"
#include "qframe/errors.hpp"

using namespace qframe;

namespace {

BigUint from_u128(unsigned __int128 v) {
    BigUint acc;
    for (int i = 127; i >= 0; --i) {
        acc = acc.shl(1);
        if ((v >> i) & 1) acc = acc + BigUint(1);
    }
    return acc;
}

unsigned __int128 to_u128(const BigUint& v) {
    unsigned __int128 acc = 0;
    for (size_t i = v.bit_length(); i-- > 0;) acc = (acc << 1) | (v.bit(i) ? 1 : 0);
    return acc;
}

} // namespace

TEST_CASE("small arithmetic against built-in integers") {
    std::mt19937_64 rng(42);
    for (int i = 0; i < 2000; ++i) {
        uint64_t a = rng() >> (rng() % 40);
        uint64_t b = rng() >> (rng() % 40);
        CHECK(to_u128(BigUint(a) + BigUint(b)) == static_cast<unsigned __int128>(a) + b);
        CHECK(to_u128(BigUint(a) * BigUint(b)) == static_cast<unsigned __int128>(a) * b);
        if (b != 0) {
            auto dm = BigUint::divmod(BigUint(a), BigUint(b));
            CHECK(dm.quot.to_u64() == a / b);
            CHECK(dm.rem.to_u64() == a % b);
        }
    }
}

TEST_CASE("division identity on wide operands") {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 300; ++i) {
        unsigned __int128 a = (static_cast<unsigned __int128>(rng()) << 64) | rng();
        unsigned __int128 b = rng() | 1;
        BigUint ba = from_u128(a), bb = from_u128(b);
        auto dm = BigUint::divmod(ba, bb);
        CHECK(dm.quot * bb + dm.rem == ba);
        CHECK(BigUint::compare(dm.rem, bb) < 0);
    }
    CHECK_THROWS_AS(BigUint::divmod(BigUint(1), BigUint(0)), domain_error);
}

TEST_CASE("shifts, bits, trailing zeros") {
    BigUint v(0b1011000);
    CHECK(v.bit_length() == 7);
    CHECK(v.trailing_zero_bits() == 3);
    CHECK(v.shr(3).to_u64() == 0b1011);
    CHECK(v.shl(64).shr(64).to_u64() == 0b1011000);
    CHECK(v.bit(3));
    CHECK_FALSE(v.bit(2));
    CHECK(BigUint().bit_length() == 0);
}

TEST_CASE("isqrt is the floor square root") {
    std::mt19937_64 rng(3);
    for (int i = 0; i < 200; ++i) {
        uint64_t n = rng() >> (rng() % 30);
        BigUint r = isqrt(BigUint(n));
        unsigned __int128 rr = to_u128(r);
        CHECK(rr * rr <= n);
        CHECK((rr + 1) * (rr + 1) > n);
    }
    CHECK(isqrt(BigUint(0)).is_zero());
    CHECK(isqrt(BigUint(1)).to_u64() == 1);
    CHECK(isqrt(BigUint(2)).to_u64() == 1);
}

TEST_CASE("gcd") {
    CHECK(gcd(BigUint(12), BigUint(18)).to_u64() == 6);
    CHECK(gcd(BigUint(7), BigUint(13)).to_u64() == 1);
    CHECK(gcd(BigUint(0), BigUint(5)).to_u64() == 5);
}

TEST_CASE("decimal rendering") {
    CHECK(BigUint(0).to_string() == "0");
    CHECK(BigUint(1234567890123456789ull).to_string() == "1234567890123456789");
    CHECK(BigInt(-42).to_string() == "-42");
    BigUint big = BigUint(1).shl(100);
    CHECK(big.to_string() == "1267650600228229401496703205376");
}

TEST_CASE("signed arithmetic and truncated division") {
    std::mt19937_64 rng(9);
    for (int i = 0; i < 2000; ++i) {
        int64_t a = static_cast<int64_t>(rng()) >> (rng() % 40 + 8);
        int64_t b = static_cast<int64_t>(rng()) >> (rng() % 40 + 8);
        CHECK((BigInt(a) + BigInt(b)).to_i64() == a + b);
        CHECK((BigInt(a) - BigInt(b)).to_i64() == a - b);
        if (b != 0) {
            auto dm = BigInt::divmod_trunc(BigInt(a), BigInt(b));
            CHECK(dm.quot.to_i64() == a / b); // C++ division truncates toward zero
            CHECK(dm.rem.to_i64() == a % b);
        }
        CHECK((BigInt::compare(BigInt(a), BigInt(b)) < 0) == (a < b));
    }
}

TEST_CASE("dyadic canonical form") {
    DyadicReal v = DyadicReal::make(BigInt(12), 0); // 12 = 3 * 2^2
    CHECK(v.num.to_i64() == 3);
    CHECK(v.exp == 2);
    CHECK(DyadicReal::from_int(0).exp == 0);
    CHECK(DyadicReal::from_int(0).is_zero());
    CHECK(DyadicReal::scaled(5, -1).to_double() == doctest::Approx(2.5));
}

TEST_CASE("dyadic field operations against doubles") {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 1000; ++i) {
        int64_t na = static_cast<int64_t>(rng() % 2001) - 1000;
        int64_t nb = static_cast<int64_t>(rng() % 2001) - 1000;
        int ea = static_cast<int>(rng() % 9) - 4;
        int eb = static_cast<int>(rng() % 9) - 4;
        DyadicReal a = DyadicReal::scaled(na, ea);
        DyadicReal b = DyadicReal::scaled(nb, eb);
        double da = std::ldexp(static_cast<double>(na), ea);
        double db = std::ldexp(static_cast<double>(nb), eb);
        CHECK((a + b).to_double() == da + db);
        CHECK((a - b).to_double() == da - db);
        CHECK((a * b).to_double() == da * db);
        CHECK((DyadicReal::compare(a, b) < 0) == (da < db));
    }
}

TEST_CASE("truncated dyadic division") {
    // 1/3 to 4 bits: 5/16
    DyadicReal q = truncated_ratio(1, 3, 4);
    CHECK(q.num.to_i64() == 5);
    CHECK(q.exp == -4);
    // exact quotients come out exact
    CHECK(truncated_ratio(1, 2, 3) == DyadicReal::scaled(1, -1));
    // truncation toward zero for negatives: -1/3 at 2 bits is -1/4
    DyadicReal nq = truncated_ratio(-1, 3, 2);
    CHECK(nq.num.to_i64() == -1);
    CHECK(nq.exp == -2);
    CHECK_THROWS_AS(truncated_ratio(1, 0, 3), domain_error);
}

TEST_CASE("threshold exponents") {
    CHECK(max_ell_strict(DyadicReal::from_int(0)) == kEllInfinity);
    CHECK(max_ell_strict(DyadicReal::from_int(1)) == -1);   // 1 < 2^0 is false
    CHECK(max_ell_leq(DyadicReal::from_int(1)) == 0);       // 1 <= 2^0
    CHECK(max_ell_strict(DyadicReal::scaled(1, -3)) == 2);  // 1/8 < 1/4
    CHECK(max_ell_leq(DyadicReal::scaled(1, -3)) == 3);     // 1/8 <= 1/8
    CHECK(max_ell_strict(DyadicReal::scaled(3, -3)) == 1);  // 3/8 < 1/2
    CHECK(max_ell_leq(DyadicReal::scaled(3, -3)) == 1);     // 3/8 <= 1/2, not 1/4
    CHECK(max_ell_strict(DyadicReal::scaled(-3, -3)) == 1); // uses |d|
    std::mt19937_64 rng(13);
    for (int i = 0; i < 500; ++i) {
        int64_t n = static_cast<int64_t>(rng() % 4001) - 2000;
        if (n == 0) continue;
        DyadicReal d = DyadicReal::scaled(n, static_cast<int>(rng() % 13) - 6).abs();
        int ls = max_ell_strict(d);
        int ll = max_ell_leq(d);
        CHECK(DyadicReal::compare(d, DyadicReal::scaled(1, -ls)) < 0);
        CHECK(DyadicReal::compare(d, DyadicReal::scaled(1, -(ls + 1))) >= 0);
        CHECK(DyadicReal::compare(d, DyadicReal::scaled(1, -ll)) <= 0);
        CHECK(DyadicReal::compare(d, DyadicReal::scaled(1, -(ll + 1))) > 0);
    }
}

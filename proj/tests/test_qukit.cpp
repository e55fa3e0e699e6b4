#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "qframe/errors.hpp"
#include "qframe/qukit.hpp"
#include "qframe/reports.hpp"

using namespace qframe;

TEST_CASE("kmin reproduces the known pairs") {
    const std::pair<uint64_t, uint64_t> pairs[] = {{2, 2}, {3, 3}, {4, 2},  {5, 5}, {6, 6},
                                                   {7, 7}, {8, 2}, {9, 3}, {10, 10}};
    for (const auto& [n, k] : pairs) CHECK(kmin(n) == k);
    // primes map to themselves
    for (uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 31ull}) CHECK(kmin(p) == p);
    // radical of a mixed power
    CHECK(kmin(12) == 6);
    CHECK(kmin(360) == 30); // 2^3 3^2 5
    CHECK_THROWS_AS(kmin(1), domain_error);
    CHECK_THROWS_AS(kmin(0), domain_error);
}

TEST_CASE("verify_kmin brute force") {
    CHECK(verify_kmin(4, 2));
    CHECK_FALSE(verify_kmin(3, 2));
    CHECK(verify_kmin(6, 6));
    CHECK_FALSE(verify_kmin(6, 4));
    CHECK(verify_kmin(8, 2));
    CHECK_THROWS_AS(verify_kmin(1, 2), domain_error);
}

TEST_CASE("kmin equals the smallest oracle-accepted base up to 50") {
    for (uint64_t n = 2; n <= 50; ++n) {
        uint64_t k = kmin(n);
        CHECK(verify_kmin(n, k));
        for (uint64_t smaller = 2; smaller < k; ++smaller) CHECK_FALSE(verify_kmin(n, smaller));
    }
}

TEST_CASE("prime base validation") {
    PrimeBase b = PrimeBase::from_primes({2, 3, 5});
    CHECK(b.k == 30);
    CHECK_THROWS_AS(PrimeBase::from_primes({2, 4}), domain_error);  // not prime
    CHECK_THROWS_AS(PrimeBase::from_primes({3, 2}), domain_error);  // not ascending
    CHECK_THROWS_AS(PrimeBase::from_primes({2, 2}), domain_error);  // not distinct
    CHECK_THROWS_AS(PrimeBase::from_primes({}), domain_error);
}

TEST_CASE("CRT digit map is a bijection for every corpus base") {
    for (const auto& primes : std::vector<std::vector<uint32_t>>{
             {2}, {3}, {7}, {2, 3}, {2, 5}, {3, 5}, {2, 3, 5}}) {
        PrimeBase base = PrimeBase::from_primes(primes);
        REQUIRE(base.k <= 30);
        std::vector<bool> seen(base.k, false);
        for (uint64_t d = 0; d < base.k; ++d) {
            auto residues = crt_residues(base, d);
            uint64_t back = crt_digit(base, residues);
            CHECK(back == d);
            CHECK_FALSE(seen[back]);
            seen[back] = true;
        }
    }
    // the worked example: base {2,3}, residues (1,2) -> digit 5
    PrimeBase b23 = PrimeBase::from_primes({2, 3});
    CHECK(crt_digit(b23, {1, 2}) == 5);
    CHECK_THROWS_AS(crt_digit(b23, {1, 3}), domain_error);
    CHECK_THROWS_AS(crt_digit(b23, {1}), domain_error);
}

TEST_CASE("qukit value: zero and single-site examples") {
    PrimeBase b23 = PrimeBase::from_primes({2, 3});
    QukitBasisState z = QukitBasisState::zero(b23);
    RationalPair v = qukit_value(z, b23);
    CHECK(v.re.num.is_zero());
    CHECK(v.im.num.is_zero());

    // site 0 with residues (1,2): composite digit 5, value 5
    QukitBasisState s = QukitBasisState::zero(b23);
    s.re_digits = {{1}, {2}};
    RationalPair v5 = qukit_value(s, b23);
    CHECK(v5.re.num.to_i64() == 5);
    CHECK(v5.re.den.is_one());
}

TEST_CASE("qukit value with fractional sites is an exact rational") {
    PrimeBase b23 = PrimeBase::from_primes({2, 3});
    // digits at sites -1, 0: composite d(-1) = 5, d(0) = 1 -> 1 + 5/6
    QukitBasisState s = QukitBasisState::zero(b23);
    s.re_lo = -1;
    s.re_hi = 0;
    s.re_digits = {{1, 1}, {2, 1}}; // site -1 residues (1,2)=5, site 0 residues (1,1)=1
    RationalPair v = qukit_value(s, b23);
    CHECK(v.re.num.to_i64() == 11);
    CHECK(v.re.den.to_u64() == 6);
    CHECK(v.re.to_string() == "11/6");
    // reduction: digit 3 at site -1 only -> 3/6 = 1/2
    QukitBasisState h = QukitBasisState::zero(b23);
    h.re_lo = -1;
    h.re_hi = 0;
    h.re_digits = {{1, 0}, {0, 0}}; // site -1 residues (1,0) -> digit 3
    RationalPair vh = qukit_value(h, b23);
    CHECK(vh.re.num.to_i64() == 1);
    CHECK(vh.re.den.to_u64() == 2);
}

TEST_CASE("base {2} reduces to the string-core value") {
    PrimeBase b2 = PrimeBase::from_primes({2});
    Rng rng(13);
    for (int i = 0; i < 200; ++i) {
        BasisState s = random_complex_canonical(rng, 3, 10);
        QukitBasisState q = from_binary_state(s);
        RationalPair v = qukit_value(q, b2);
        DyadicComplex d = value_of(s);
        // cross-multiplied equality of num/den and num2 * 2^exp
        auto agree = [](const ExactRational& r, const DyadicReal& dy) {
            if (dy.is_zero()) return r.num.is_zero();
            if (dy.exp >= 0)
                return BigInt::compare(r.num, dy.num.shl(static_cast<size_t>(dy.exp)) *
                                                   BigInt(1, r.den)) == 0;
            BigUint scale = BigUint(1).shl(static_cast<size_t>(-dy.exp));
            return BigInt::compare(r.num * BigInt(1, scale), dy.num * BigInt(1, r.den)) == 0;
        };
        CHECK(agree(v.re, d.re));
        CHECK(agree(v.im, d.im));
    }
}

TEST_CASE("qukit canonical stripping uses the composite digit") {
    PrimeBase b23 = PrimeBase::from_primes({2, 3});
    QukitBasisState s = QukitBasisState::zero(b23);
    s.re_lo = -2;
    s.re_hi = 1;
    // sites: -2 -> (0,0), -1 -> (1,0), 0 -> (0,0), 1 -> (0,0): strip both ends
    s.re_digits = {{0, 1, 0, 0}, {0, 0, 0, 0}};
    QukitBasisState c = canonicalize_qukit(s);
    CHECK(c.re_lo == -1);
    CHECK(c.re_hi == 0);
    CHECK(c.re_digits[0] == std::vector<uint8_t>{1, 0});
    // an all-zero component collapses to one site with sign +
    QukitBasisState z = QukitBasisState::zero(b23);
    z.re_sign = Sign::minus;
    QukitBasisState cz = canonicalize_qukit(z);
    CHECK(cz.re_sign == Sign::plus);
    CHECK(cz.re_sites() == 1);
}

TEST_CASE("digit range validation") {
    PrimeBase b23 = PrimeBase::from_primes({2, 3});
    QukitBasisState s = QukitBasisState::zero(b23);
    s.re_digits = {{2}, {0}}; // 2 out of range for prime 2
    CHECK_THROWS_AS(qukit_value(s, b23), domain_error);
}

TEST_CASE("global U(1) phase accumulates per occupied site") {
    PrimeBase b23 = PrimeBase::from_primes({2, 3});
    const double theta = 0.37;
    ProductGaugeElement g = ProductGaugeElement::global_phase(b23, theta, 0.0);
    // three re sites, one im site
    QukitBasisState s = QukitBasisState::zero(b23);
    s.re_lo = -1;
    s.re_hi = 1;
    s.re_digits = {{1, 0, 1}, {2, 1, 0}};
    QukitState out = apply_product_gauge(g, QukitState(s), b23);
    REQUIRE(out.terms().size() == 1);
    Amplitude amp = out.terms().begin()->second;
    CHECK(std::abs(amp - std::polar(1.0, 3 * theta)) < 1e-12);
    // probabilities never move under pure phases
    CHECK(std::norm(amp) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("identity product gauge and norm preservation") {
    PrimeBase b23 = PrimeBase::from_primes({2, 3});
    QukitBasisState s = QukitBasisState::zero(b23);
    s.re_digits = {{1}, {2}};
    QukitState in(s);
    QukitState id_out = apply_product_gauge(ProductGaugeElement::identity(b23), in, b23);
    REQUIRE(id_out.terms().size() == 1);
    CHECK(id_out.terms().begin()->first == s);

    Rng rng(17);
    for (int i = 0; i < 10; ++i) {
        ProductGaugeElement g = random_product_gauge(rng, b23);
        QukitState out = apply_product_gauge(g, in, b23);
        CHECK(std::abs(out.norm_sq() - 1.0) <= 1e-12);
    }
}

TEST_CASE("U(1)-only elements never change any probability") {
    PrimeBase b235 = PrimeBase::from_primes({2, 3, 5});
    Rng rng(19);
    std::uniform_real_distribution<double> angle(0.0, 6.28);
    QukitBasisState s = QukitBasisState::zero(b235);
    s.re_lo = -1;
    s.re_hi = 0;
    s.re_digits = {{1, 0}, {2, 1}, {4, 0}};
    QukitState in(s);
    for (int i = 0; i < 10; ++i) {
        ProductGaugeElement g = ProductGaugeElement::global_phase(b235, angle(rng), angle(rng));
        g.theta[0] = angle(rng); // local phase override
        QukitState out = apply_product_gauge(g, in, b235);
        REQUIRE(out.terms().size() == 1);
        CHECK(out.terms().begin()->first == s);
        CHECK(std::norm(out.terms().begin()->second) == doctest::Approx(1.0).epsilon(1e-12));
    }
}

TEST_CASE("SU(p) blocks act on their digit register") {
    PrimeBase b23 = PrimeBase::from_primes({2, 3});
    Rng rng(23);
    ProductGaugeElement g = ProductGaugeElement::identity(b23);
    g.blocks[1] = random_sun(rng, 3); // rotate only the 3-digit register
    QukitBasisState s = QukitBasisState::zero(b23);
    s.re_digits = {{1}, {0}};
    QukitState out = apply_product_gauge(g, QukitState(s), b23);
    // the 3-registers of both chains spread (one site each), the 2-registers
    // never move
    CHECK(out.terms().size() <= 9);
    for (const auto& [t, amp] : out.terms()) {
        CHECK(t.re_digits[0][0] == 1);
        CHECK(t.im_digits[0][0] == 0);
        CHECK(t.re_digits[1][0] <= 2);
    }
    CHECK(std::abs(out.norm_sq() - 1.0) <= 1e-12);
}

TEST_CASE("block validation") {
    PrimeBase b23 = PrimeBase::from_primes({2, 3});
    ProductGaugeElement g = ProductGaugeElement::identity(b23);
    g.blocks[0] = CMatrix::identity(3); // wrong dimension for prime 2
    CHECK_THROWS_AS(g.validate(b23), domain_error);
    ProductGaugeElement g2 = ProductGaugeElement::identity(b23);
    g2.blocks[1].at(0, 0) = 2.0;
    CHECK_THROWS_AS(g2.validate(b23), invariant_error);
}

TEST_CASE("unary observable") {
    PrimeBase b23 = PrimeBase::from_primes({2, 3});
    QukitBasisState s = QukitBasisState::zero(b23);
    s.re_lo = -2;
    s.re_hi = 1;
    s.re_digits = {{1, 0, 1, 1}, {0, 2, 0, 1}};
    auto [re_sites, im_sites] = site_counts(s);
    CHECK(re_sites == 4);
    CHECK(im_sites == 1);
}

TEST_CASE("base and state JSON shapes") {
    PrimeBase b23 = PrimeBase::from_primes({2, 3});
    nlohmann::json bj = reports::base_to_json(b23);
    CHECK(bj["primes"] == nlohmann::json::array({2, 3}));
    CHECK(bj["k"] == 6);
    QukitBasisState s = QukitBasisState::zero(b23);
    s.re_digits = {{1}, {2}};
    nlohmann::json sj = reports::qukit_state_to_json(s, b23);
    CHECK(sj["re"]["digits"]["2"] == "1");
    CHECK(sj["re"]["digits"]["3"] == "2");
}

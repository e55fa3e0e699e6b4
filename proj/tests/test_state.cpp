#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qframe/errors.hpp"
#include "qframe/refcheck.hpp"
#include "qframe/sampling.hpp"
#include "qframe/state.hpp"
#include "qframe/state_json.hpp"

using namespace qframe;

namespace {

// independent valuation oracle: plain bit loop into a scaled integer
long long oracle_scaled(Sign sign, const BitInterval& bi, int scale) {
    long long acc = 0;
    for (int j = bi.lo; j <= bi.hi; ++j)
        if (bi.bit_at(j)) acc += 1ll << (j + scale);
    return sign == Sign::minus ? -acc : acc;
}

long long lib_scaled(const DyadicReal& v, int scale) {
    if (v.is_zero()) return 0;
    return v.num.to_i64() * (1ll << (v.exp + scale));
}

BitInterval raw(int lo, int hi, const std::string& msb_first) {
    std::vector<uint8_t> bits(msb_first.size());
    for (size_t i = 0; i < msb_first.size(); ++i)
        bits[msb_first.size() - 1 - i] = msb_first[i] == '1' ? 1 : 0;
    return BitInterval(lo, hi, std::move(bits));
}

} // namespace

TEST_CASE("canonicalize strips padding") {
    // 0011.0100 on [-4,3] -> 11.01 on [-2,1]
    BasisState s = canonicalize(Sign::plus, raw(-4, 3, "00110100"), Sign::plus,
                                BitInterval::zero());
    CHECK(s.re.lo == -2);
    CHECK(s.re.hi == 1);
    CHECK(s.re.to_string() == "11.01");
    CHECK(s.canonical());
}

TEST_CASE("canonicalize normalizes zero to sign +") {
    BasisState s = canonicalize(Sign::minus, raw(-2, 2, "00000"), Sign::minus,
                                raw(-1, 1, "000"));
    CHECK(s == BasisState::zero());
    CHECK(s.re_sign == Sign::plus);
    CHECK(s.im_sign == Sign::plus);
}

TEST_CASE("canonicalize keeps canonical states unchanged") {
    BasisState s = parse_real_state("+1011.0101");
    CHECK(s.re.lo == -4);
    CHECK(s.re.hi == 3);
    CHECK(s.re.to_string() == "1011.0101");
    CHECK(canonicalize(s) == s);
}

TEST_CASE("canonicalize is idempotent on random raw input") {
    Rng rng(17);
    for (int i = 0; i < 500; ++i) {
        std::uniform_int_distribution<int> lo_d(-5, 0), hi_d(0, 5), bit_d(0, 1);
        int lo = lo_d(rng), hi = hi_d(rng);
        std::vector<uint8_t> bits(static_cast<size_t>(hi - lo + 1));
        for (auto& b : bits) b = static_cast<uint8_t>(bit_d(rng));
        BasisState once = canonicalize(Sign::minus, BitInterval(lo, hi, bits), Sign::plus,
                                       BitInterval::zero());
        CHECK(canonicalize(once) == once);
        CHECK(once.canonical());
    }
}

TEST_CASE("interval must contain the binal point") {
    CHECK_THROWS_AS(BitInterval(1, 3, {1, 0, 1}), domain_error);
    CHECK_THROWS_AS(BitInterval(-3, -1, {1, 0, 1}), domain_error);
}

TEST_CASE("value of the canonical zero") {
    DyadicComplex v = value_of(BasisState::zero());
    CHECK(v.is_zero());
    CHECK(v.re.exp == 0);
}

TEST_CASE("value of |+,-ell> is 2^-ell") {
    // single 1 bit at index -3
    BasisState s = parse_real_state("+0.001");
    DyadicComplex v = value_of(s);
    CHECK(v.re == DyadicReal::scaled(1, -3));
    CHECK(v.im.is_zero());
}

TEST_CASE("value agrees with the bit-loop oracle and the frozen example") {
    BasisState s = parse_real_state("+1011.0101");
    DyadicComplex v = value_of(s);
    // oracle first: scaled integer from a plain loop
    CHECK(lib_scaled(v.re, 4) == oracle_scaled(s.re_sign, s.re, 4));
    // frozen: 11.3125 = 181 * 2^-4
    CHECK(v.re.num.to_i64() == 181);
    CHECK(v.re.exp == -4);
    CHECK(v.re.to_double() == 11.3125);
}

TEST_CASE("value is invariant under zero padding") {
    Rng rng(23);
    for (int i = 0; i < 300; ++i) {
        BasisState s = random_complex_canonical(rng, 3, 10);
        // pad both chains with zeros on both ends
        std::vector<uint8_t> re_bits(s.re.bits.size() + 3, 0);
        std::copy(s.re.bits.begin(), s.re.bits.end(), re_bits.begin() + 2);
        BasisState padded = s;
        padded.re = BitInterval(s.re.lo - 2, s.re.hi + 1, std::move(re_bits));
        CHECK(value_of(padded).re == value_of(s).re);
    }
}

TEST_CASE("encode frozen examples") {
    CHECK(encode(DyadicComplex::from_int(0)) == BasisState::zero());

    BasisState v25 = encode({DyadicReal::scaled(5, -1), DyadicReal{}});
    CHECK(v25.re.lo == -1);
    CHECK(v25.re.hi == 1);
    CHECK(v25.re.to_string() == "10.1");

    // -0.25 + 1i -> (-, "0.01"; +, "1.")
    BasisState c = encode({DyadicReal::scaled(-1, -2), DyadicReal::from_int(1)});
    CHECK(c.re_sign == Sign::minus);
    CHECK(c.re.to_string() == "0.01");
    CHECK(c.im_sign == Sign::plus);
    CHECK(c.im.to_string() == "1");
}

TEST_CASE("value and encode invert each other") {
    // encode(value(.)) is the identity on every canonical state within radius 3
    for (const BasisState& s : refcheck::enumerate_real_canonical(3)) {
        CHECK(encode(value_of(s)) == s);
        // and value(encode(.)) is the identity on the corresponding values
        DyadicComplex v = value_of(s);
        CHECK(value_of(encode(v)) == v);
    }
}

TEST_CASE("round trip holds for every complex state within radius 3") {
    // exhaustive over both chains: pair every real pattern with every
    // imaginary pattern
    auto reals = refcheck::enumerate_real_canonical(3);
    size_t failures = 0;
    for (const BasisState& re_part : reals) {
        for (const BasisState& im_part : reals) {
            BasisState s = re_part;
            s.im_sign = im_part.re_sign;
            s.im = im_part.re;
            if (encode(value_of(s)) != s) ++failures;
        }
    }
    CHECK(failures == 0);
}

TEST_CASE("pure state normalization and pruning") {
    BasisState a = parse_real_state("+1");
    BasisState b = parse_real_state("+10");
    PureState::TermMap terms;
    terms[a] = Amplitude(1.0 / std::sqrt(2.0), 0.0);
    terms[b] = Amplitude(0.0, 1.0 / std::sqrt(2.0));
    PureState s = PureState::from_terms(terms);
    CHECK(s.support_size() == 2);
    CHECK(s.norm_sq() == doctest::Approx(1.0).epsilon(1e-14));

    terms[b] = Amplitude(0.5, 0.0);
    CHECK_THROWS_AS(PureState::from_terms(terms), invariant_error);
    PureState fixed = PureState::from_terms(terms, /*renormalize=*/true);
    CHECK(fixed.norm_sq() == doctest::Approx(1.0).epsilon(1e-14));

    // amplitudes below the pruning threshold disappear
    terms[a] = Amplitude(1.0, 0.0);
    terms[b] = Amplitude(1e-16, 0.0);
    PureState pruned = PureState::from_terms(terms);
    CHECK(pruned.is_basis());
}

TEST_CASE("inner product") {
    BasisState x = parse_real_state("+1");
    BasisState y = parse_real_state("+10");
    PureState px = PureState::basis(x);
    PureState py = PureState::basis(y);
    CHECK(inner_product(px, px) == Amplitude(1.0, 0.0));
    CHECK(inner_product(px, py) == Amplitude(0.0, 0.0));
    PureState sup = PureState::uniform({x, y});
    CHECK(inner_product(sup, px).real() == doctest::Approx(1.0 / std::sqrt(2.0)));
    // conjugation side: <x|sup> vs <sup|x>
    PureState::TermMap t;
    t[x] = Amplitude(0.0, 1.0);
    PureState ix = PureState::from_terms(t);
    CHECK(inner_product(px, ix).imag() == doctest::Approx(1.0));
    CHECK(inner_product(ix, px).imag() == doctest::Approx(-1.0));
}

TEST_CASE("raw records are distinct Fock states") {
    // "1" on [0,0] vs "01" on [0,1] have equal value but different occupancy
    BasisState a = parse_real_state("+1");
    BasisState b;
    b.re = raw(0, 1, "01");
    CHECK(a != b);
    CHECK_FALSE(b.canonical());
    CHECK(value_of(a).re == value_of(b).re);
}

TEST_CASE("serialization round-trips basis states") {
    Rng rng(31);
    for (int i = 0; i < 200; ++i) {
        BasisState s = random_complex_canonical(rng, 4, 12);
        CHECK(deserialize_basis(serialize(s)) == s);
    }
    // raw (non-canonical) records survive the round trip too
    BasisState b;
    b.re = raw(-1, 1, "010");
    CHECK(deserialize_basis(serialize(b)) == b);
}

TEST_CASE("serialization round-trips superpositions and ensembles") {
    Rng rng(37);
    for (int i = 0; i < 50; ++i) {
        BasisState a = random_complex_canonical(rng, 3, 8);
        BasisState b = random_complex_canonical(rng, 3, 8);
        if (a == b) continue;
        PureState s = PureState::uniform({a, b});
        PureState back = deserialize_pure(serialize(s));
        CHECK(state_distance(s, back) < 1e-15);
    }
    MixedState m;
    m.ensemble.push_back({0.25, parse_real_state("+1")});
    m.ensemble.push_back({0.75, PureState::basis(parse_real_state("+10.1"))});
    MixedState back = deserialize_mixed(serialize(m));
    CHECK(back.ensemble.size() == 2);
    CHECK(back.ensemble[0].weight == 0.25);
}

TEST_CASE("malformed documents raise parse errors") {
    // bits length does not match interval
    CHECK_THROWS_AS(
        deserialize_basis(R"({"re":{"sign":"+","lo":-1,"hi":1,"bits":"10"},)"
                          R"("im":{"sign":"+","lo":0,"hi":0,"bits":"0"}})"),
        parse_error);
    // bad sign
    CHECK_THROWS_AS(
        deserialize_basis(R"({"re":{"sign":"x","lo":0,"hi":0,"bits":"0"},)"
                          R"("im":{"sign":"+","lo":0,"hi":0,"bits":"0"}})"),
        parse_error);
    // interval missing the binal point
    CHECK_THROWS_AS(
        deserialize_basis(R"({"re":{"sign":"+","lo":1,"hi":2,"bits":"10"},)"
                          R"("im":{"sign":"+","lo":0,"hi":0,"bits":"0"}})"),
        parse_error);
    // broken JSON reports a byte position
    try {
        deserialize_basis("{\"re\": }");
        CHECK(false);
    } catch (const parse_error& e) {
        CHECK(e.position() >= 0);
    }
}

TEST_CASE("mixed state validation") {
    MixedState m;
    m.ensemble.push_back({0.5, parse_real_state("+1")});
    CHECK_THROWS_AS(m.validate(), invariant_error);
    m.ensemble.push_back({0.5, parse_real_state("+10")});
    m.validate();
    m.ensemble.push_back({-0.1, parse_real_state("+11")});
    CHECK_THROWS_AS(m.validate(), invariant_error);
}

TEST_CASE("state literals reject malformed text") {
    CHECK_THROWS_AS(parse_real_state("+.1"), parse_error);
    CHECK_THROWS_AS(parse_real_state("1.0"), parse_error);
    CHECK_THROWS_AS(parse_real_state("+12"), parse_error);
}

TEST_CASE("enumeration size at radius 3") {
    // 127 nonzero canonical patterns x 2 signs + zero
    CHECK(refcheck::enumerate_real_canonical(3).size() == 255);
}

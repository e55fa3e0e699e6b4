#include "qframe/state.hpp"

#include <algorithm>
#include <cmath>

#include "qframe/errors.hpp"

namespace qframe {

Sign sign_from_char(char c) {
    if (c == '+') return Sign::plus;
    if (c == '-') return Sign::minus;
    throw parse_error(std::string("bad sign character '") + c + "'");
}

BitInterval::BitInterval(int lo_, int hi_, std::vector<uint8_t> bits_)
    : lo(lo_), hi(hi_), bits(std::move(bits_)) {
    if (lo > 0 || hi < 0)
        throw domain_error("bit interval must contain the binal point (index 0)");
    if (bits.size() != static_cast<size_t>(hi - lo + 1))
        throw domain_error("bit vector length does not match interval");
    for (uint8_t b : bits)
        if (b > 1) throw domain_error("bits must be 0 or 1");
}

bool BitInterval::all_zero() const {
    return std::all_of(bits.begin(), bits.end(), [](uint8_t b) { return b == 0; });
}

bool BitInterval::canonical() const {
    if (all_zero()) return lo == 0 && hi == 0;
    if (lo < 0 && bits.front() == 0) return false;
    if (hi > 0 && bits.back() == 0) return false;
    return true;
}

int BitInterval::ones_count() const {
    int n = 0;
    for (uint8_t b : bits) n += b;
    return n;
}

std::string BitInterval::to_string() const {
    std::string s;
    for (int j = hi; j >= lo; --j) {
        s.push_back(bit_at(j) ? '1' : '0');
        if (j == 0 && j != lo) s.push_back('.');
    }
    return s;
}

bool BasisState::canonical() const {
    if (!re.canonical() || !im.canonical()) return false;
    if (re.all_zero() && re_sign != Sign::plus) return false;
    if (im.all_zero() && im_sign != Sign::plus) return false;
    return true;
}

std::string BasisState::to_string() const {
    return std::string(1, sign_char(re_sign)) + re.to_string() + " " +
           sign_char(im_sign) + im.to_string();
}

BitInterval canonicalize(const BitInterval& raw) {
    if (raw.all_zero()) return BitInterval::zero();
    int hi = raw.hi;
    while (hi > 0 && !raw.bit_at(hi)) --hi;
    int lo = raw.lo;
    while (lo < 0 && !raw.bit_at(lo)) ++lo;
    std::vector<uint8_t> bits(static_cast<size_t>(hi - lo + 1));
    for (int j = lo; j <= hi; ++j)
        bits[static_cast<size_t>(j - lo)] = raw.bit_at(j) ? 1 : 0;
    return BitInterval(lo, hi, std::move(bits));
}

BasisState canonicalize(Sign raw_re_sign, const BitInterval& raw_re,
                        Sign raw_im_sign, const BitInterval& raw_im) {
    BasisState out;
    out.re = canonicalize(raw_re);
    out.im = canonicalize(raw_im);
    out.re_sign = out.re.all_zero() ? Sign::plus : raw_re_sign;
    out.im_sign = out.im.all_zero() ? Sign::plus : raw_im_sign;
    return out;
}

BasisState canonicalize(const BasisState& raw) {
    return canonicalize(raw.re_sign, raw.re, raw.im_sign, raw.im);
}

DyadicReal real_value_of(Sign sign, const BitInterval& bi) {
    BigUint mag;
    for (int j = bi.hi; j >= bi.lo; --j) {
        mag = mag.shl(1);
        if (bi.bit_at(j)) mag = mag + BigUint(1);
    }
    if (mag.is_zero()) return {};
    return DyadicReal::make(BigInt(sign == Sign::minus ? -1 : 1, mag), bi.lo);
}

DyadicComplex value_of(const BasisState& s) {
    return {real_value_of(s.re_sign, s.re), real_value_of(s.im_sign, s.im)};
}

BitInterval encode_magnitude(const DyadicReal& v) {
    if (v.is_zero()) return BitInterval::zero();
    const BigUint& mag = v.num.mag();
    int low = v.exp;
    int high = low + static_cast<int>(mag.bit_length()) - 1;
    int lo = std::min(low, 0);
    int hi = std::max(high, 0);
    std::vector<uint8_t> bits(static_cast<size_t>(hi - lo + 1), 0);
    for (int j = low; j <= high; ++j)
        bits[static_cast<size_t>(j - lo)] = mag.bit(static_cast<size_t>(j - low)) ? 1 : 0;
    return BitInterval(lo, hi, std::move(bits));
}

BasisState encode(const DyadicComplex& v) {
    BasisState out;
    out.re = encode_magnitude(v.re);
    out.re_sign = v.re.sign() < 0 ? Sign::minus : Sign::plus;
    out.im = encode_magnitude(v.im);
    out.im_sign = v.im.sign() < 0 ? Sign::minus : Sign::plus;
    return out;
}

namespace {

std::pair<Sign, BitInterval> parse_component(const std::string& text) {
    if (text.size() < 2) throw parse_error("state literal too short: '" + text + "'");
    Sign sign = sign_from_char(text[0]);
    std::string digits = text.substr(1);
    auto dot = digits.find('.');
    std::string int_part = dot == std::string::npos ? digits : digits.substr(0, dot);
    std::string frac_part = dot == std::string::npos ? "" : digits.substr(dot + 1);
    if (int_part.empty()) throw parse_error("integer part must be nonempty in '" + text + "'");
    for (char c : int_part + frac_part)
        if (c != '0' && c != '1') throw parse_error(std::string("bad binary digit '") + c + "'");
    int hi = static_cast<int>(int_part.size()) - 1;
    int lo = -static_cast<int>(frac_part.size());
    std::vector<uint8_t> bits(static_cast<size_t>(hi - lo + 1));
    for (int j = lo; j <= hi; ++j) {
        char c = j >= 0 ? int_part[static_cast<size_t>(hi - j)]
                        : frac_part[static_cast<size_t>(-j - 1)];
        bits[static_cast<size_t>(j - lo)] = c == '1' ? 1 : 0;
    }
    return {sign, BitInterval(lo, hi, std::move(bits))};
}

} // namespace

BasisState parse_real_state(const std::string& text) {
    auto [sign, bi] = parse_component(text);
    return canonicalize(sign, bi, Sign::plus, BitInterval::zero());
}

BasisState parse_complex_state(const std::string& re_text, const std::string& im_text) {
    auto [rs, rb] = parse_component(re_text);
    auto [is, ib] = parse_component(im_text);
    return canonicalize(rs, rb, is, ib);
}

PureState::PureState(const BasisState& b) { terms_[b] = Amplitude(1.0, 0.0); }

PureState PureState::from_terms(TermMap terms, bool renormalize) {
    PureState out;
    out.terms_.clear();
    for (auto& [state, amp] : terms)
        if (std::abs(amp) > kAmpPrune) out.terms_.emplace(state, amp);
    if (out.terms_.empty()) throw invariant_error("superposition has no support");
    double n2 = out.norm_sq();
    if (renormalize) {
        double inv = 1.0 / std::sqrt(n2);
        for (auto& [state, amp] : out.terms_) amp *= inv;
    } else if (std::abs(n2 - 1.0) > kNormTol) {
        throw invariant_error("superposition norm " + std::to_string(n2) + " is not 1");
    }
    return out;
}

PureState PureState::uniform(const std::vector<BasisState>& states) {
    if (states.empty()) throw invariant_error("empty superposition");
    TermMap terms;
    double amp = 1.0 / std::sqrt(static_cast<double>(states.size()));
    for (const auto& s : states) {
        if (terms.count(s)) throw invariant_error("duplicate basis state in uniform superposition");
        terms[s] = Amplitude(amp, 0.0);
    }
    return from_terms(std::move(terms));
}

const BasisState& PureState::only_term() const {
    if (!is_basis()) throw unsupported_error("state is a superposition, not a basis state");
    return terms_.begin()->first;
}

Amplitude PureState::amplitude(const BasisState& b) const {
    auto it = terms_.find(b);
    return it == terms_.end() ? Amplitude(0.0, 0.0) : it->second;
}

double PureState::norm_sq() const {
    double n2 = 0.0;
    for (const auto& [state, amp] : terms_) n2 += std::norm(amp);
    return n2;
}

double state_distance(const PureState& x, const PureState& y) {
    double d2 = 0.0;
    for (const auto& [state, amp] : x.terms()) d2 += std::norm(amp - y.amplitude(state));
    for (const auto& [state, amp] : y.terms())
        if (!x.terms().count(state)) d2 += std::norm(amp);
    return std::sqrt(d2);
}

Amplitude inner_product(const PureState& x, const PureState& y) {
    // sum over the smaller support
    const PureState& small = x.support_size() <= y.support_size() ? x : y;
    const PureState& large = x.support_size() <= y.support_size() ? y : x;
    Amplitude acc(0.0, 0.0);
    for (const auto& [state, amp] : small.terms()) {
        Amplitude other = large.amplitude(state);
        // <x|y> conjugates x's amplitude
        if (&small == &x) acc += std::conj(amp) * other;
        else acc += std::conj(other) * amp;
    }
    return acc;
}

void MixedState::validate() const {
    double total = 0.0;
    for (const auto& e : ensemble) {
        if (e.weight < 0.0) throw invariant_error("negative ensemble weight");
        total += e.weight;
    }
    if (std::abs(total - 1.0) > kNormTol)
        throw invariant_error("ensemble weights sum to " + std::to_string(total));
}

std::complex<double> MixedState::expected_value() const {
    std::complex<double> acc(0.0, 0.0);
    for (const auto& e : ensemble) {
        if (std::holds_alternative<BasisState>(e.state)) {
            DyadicComplex v = value_of(std::get<BasisState>(e.state));
            acc += e.weight * std::complex<double>(v.re.to_double(), v.im.to_double());
        } else {
            for (const auto& [state, amp] : std::get<PureState>(e.state).terms()) {
                DyadicComplex v = value_of(state);
                acc += e.weight * std::norm(amp) *
                       std::complex<double>(v.re.to_double(), v.im.to_double());
            }
        }
    }
    return acc;
}

} // namespace qframe

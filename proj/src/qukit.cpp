#include "qframe/qukit.hpp"

#include <algorithm>
#include <cmath>

#include "qframe/errors.hpp"

namespace qframe {

uint64_t kmin(uint64_t n) {
    if (n < 2) throw domain_error("kmin is defined for n >= 2");
    uint64_t radical = 1;
    uint64_t m = n;
    for (uint64_t p = 2; p * p <= m; ++p) {
        if (m % p == 0) {
            radical *= p;
            while (m % p == 0) m /= p;
        }
    }
    if (m > 1) radical *= m;
    return radical;
}

bool verify_kmin(uint64_t n, uint64_t k) {
    if (n < 2 || k < 2) throw domain_error("verify_kmin needs n, k >= 2");
    // does n divide k^e for some e <= n?
    uint64_t pow_mod = 1 % n;
    for (uint64_t e = 1; e <= n; ++e) {
        pow_mod = static_cast<uint64_t>((static_cast<unsigned __int128>(pow_mod) * k) % n);
        if (pow_mod == 0) return true;
    }
    return false;
}

namespace {

bool is_prime_u32(uint32_t p) {
    if (p < 2) return false;
    for (uint32_t d = 2; static_cast<uint64_t>(d) * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

} // namespace

PrimeBase PrimeBase::from_primes(std::vector<uint32_t> primes) {
    if (primes.empty()) throw domain_error("prime base needs at least one prime");
    PrimeBase b;
    b.primes = std::move(primes);
    uint64_t k = 1;
    for (size_t i = 0; i < b.primes.size(); ++i) {
        if (!is_prime_u32(b.primes[i])) throw domain_error("base factor is not prime");
        if (i > 0 && b.primes[i] <= b.primes[i - 1])
            throw domain_error("base primes must be ascending and distinct");
        k *= b.primes[i];
    }
    b.k = k;
    return b;
}

QukitBasisState QukitBasisState::zero(const PrimeBase& base) {
    QukitBasisState s;
    s.re_digits.assign(base.primes.size(), {0});
    s.im_digits.assign(base.primes.size(), {0});
    return s;
}

uint8_t QukitBasisState::re_digit(size_t prime_idx, int j) const {
    return re_digits[prime_idx][static_cast<size_t>(j - re_lo)];
}

uint8_t QukitBasisState::im_digit(size_t prime_idx, int j) const {
    return im_digits[prime_idx][static_cast<size_t>(j - im_lo)];
}

void validate_qukit_state(const QukitBasisState& s, const PrimeBase& base) {
    if (s.re_lo > 0 || s.re_hi < 0 || s.im_lo > 0 || s.im_hi < 0)
        throw domain_error("qukit intervals must contain the binal point");
    if (s.re_digits.size() != base.primes.size() || s.im_digits.size() != base.primes.size())
        throw domain_error("digit registers do not match the base");
    for (size_t h = 0; h < base.primes.size(); ++h) {
        if (s.re_digits[h].size() != static_cast<size_t>(s.re_sites()) ||
            s.im_digits[h].size() != static_cast<size_t>(s.im_sites()))
            throw domain_error("digit vector length does not match interval");
        for (uint8_t d : s.re_digits[h])
            if (d >= base.primes[h]) throw domain_error("digit out of range for its prime");
        for (uint8_t d : s.im_digits[h])
            if (d >= base.primes[h]) throw domain_error("digit out of range for its prime");
    }
}

namespace {

bool composite_zero_at(const std::vector<std::vector<uint8_t>>& digits, size_t idx) {
    for (const auto& reg : digits)
        if (reg[idx] != 0) return false;
    return true;
}

void strip_component(int& lo, int& hi, std::vector<std::vector<uint8_t>>& digits, Sign& sign) {
    bool all_zero = true;
    for (size_t i = 0; i < digits[0].size() && all_zero; ++i)
        all_zero = composite_zero_at(digits, i);
    if (all_zero) {
        lo = 0;
        hi = 0;
        for (auto& reg : digits) reg.assign(1, 0);
        sign = Sign::plus;
        return;
    }
    int new_hi = hi;
    while (new_hi > 0 && composite_zero_at(digits, static_cast<size_t>(new_hi - lo))) --new_hi;
    int new_lo = lo;
    while (new_lo < 0 && composite_zero_at(digits, static_cast<size_t>(new_lo - lo))) ++new_lo;
    for (auto& reg : digits)
        reg = std::vector<uint8_t>(reg.begin() + (new_lo - lo), reg.begin() + (new_hi - lo + 1));
    lo = new_lo;
    hi = new_hi;
}

} // namespace

QukitBasisState canonicalize_qukit(const QukitBasisState& s) {
    QukitBasisState out = s;
    strip_component(out.re_lo, out.re_hi, out.re_digits, out.re_sign);
    strip_component(out.im_lo, out.im_hi, out.im_digits, out.im_sign);
    return out;
}

uint64_t crt_digit(const PrimeBase& base, const std::vector<uint8_t>& residues) {
    if (residues.size() != base.primes.size())
        throw domain_error("residue tuple does not match the base");
    for (size_t h = 0; h < residues.size(); ++h)
        if (residues[h] >= base.primes[h]) throw domain_error("residue out of range");
    // k is small at desk scale; scan the unique solution
    for (uint64_t d = 0; d < base.k; ++d) {
        bool ok = true;
        for (size_t h = 0; h < base.primes.size() && ok; ++h)
            ok = d % base.primes[h] == residues[h];
        if (ok) return d;
    }
    throw invariant_error("CRT digit not found"); // unreachable for a valid base
}

std::vector<uint8_t> crt_residues(const PrimeBase& base, uint64_t digit) {
    if (digit >= base.k) throw domain_error("composite digit out of range");
    std::vector<uint8_t> r(base.primes.size());
    for (size_t h = 0; h < base.primes.size(); ++h)
        r[h] = static_cast<uint8_t>(digit % base.primes[h]);
    return r;
}

ExactRational ExactRational::make(BigInt num, BigUint den) {
    if (den.is_zero()) throw domain_error("zero denominator");
    if (num.is_zero()) return ExactRational{};
    BigUint g = gcd(num.mag(), den);
    if (!g.is_one()) {
        num = BigInt(num.sign(), BigUint::divmod(num.mag(), g).quot);
        den = BigUint::divmod(den, g).quot;
    }
    ExactRational out;
    out.num = std::move(num);
    out.den = std::move(den);
    return out;
}

double ExactRational::to_double() const {
    double d = 0.0;
    for (size_t i = den.limbs().size(); i-- > 0;) d = d * 4294967296.0 + den.limbs()[i];
    if (d == 0.0) d = 1.0;
    return num.to_double() / d;
}

std::string ExactRational::to_string() const {
    return den.is_one() ? num.to_string() : num.to_string() + "/" + den.to_string();
}

namespace {

ExactRational component_value(Sign sign, int lo, int hi,
                              const std::vector<std::vector<uint8_t>>& digits,
                              const PrimeBase& base) {
    BigUint acc;
    const BigUint kbig(base.k);
    for (int j = hi; j >= lo; --j) {
        std::vector<uint8_t> residues(base.primes.size());
        for (size_t h = 0; h < base.primes.size(); ++h)
            residues[h] = digits[h][static_cast<size_t>(j - lo)];
        acc = acc * kbig + BigUint(crt_digit(base, residues));
    }
    if (acc.is_zero()) return ExactRational{};
    BigUint den(1);
    for (int i = 0; i < -lo; ++i) den = den * kbig;
    return ExactRational::make(BigInt(sign == Sign::minus ? -1 : 1, acc), den);
}

} // namespace

RationalPair qukit_value(const QukitBasisState& s, const PrimeBase& base) {
    validate_qukit_state(s, base);
    return {component_value(s.re_sign, s.re_lo, s.re_hi, s.re_digits, base),
            component_value(s.im_sign, s.im_lo, s.im_hi, s.im_digits, base)};
}

std::pair<int, int> site_counts(const QukitBasisState& s) {
    return {s.re_sites(), s.im_sites()};
}

ProductGaugeElement ProductGaugeElement::identity(const PrimeBase& base) {
    ProductGaugeElement g;
    for (uint32_t p : base.primes) g.blocks.push_back(CMatrix::identity(p));
    return g;
}

ProductGaugeElement ProductGaugeElement::global_phase(const PrimeBase& base, double theta,
                                                      double phi) {
    ProductGaugeElement g = identity(base);
    g.theta_default = theta;
    g.phi_default = phi;
    return g;
}

double ProductGaugeElement::theta_at(int j) const {
    auto it = theta.find(j);
    return it == theta.end() ? theta_default : it->second;
}

double ProductGaugeElement::phi_at(int j) const {
    auto it = phi.find(j);
    return it == phi.end() ? phi_default : it->second;
}

void ProductGaugeElement::validate(const PrimeBase& base, double tol) const {
    if (blocks.size() != base.primes.size())
        throw domain_error("block count does not match the base");
    for (size_t h = 0; h < blocks.size(); ++h) {
        const CMatrix& b = blocks[h];
        if (b.rows() != base.primes[h] || b.cols() != base.primes[h])
            throw domain_error("block dimension does not match its prime");
        if (!b.is_unitary(tol)) throw invariant_error("gauge block is not unitary");
    }
}

ProductGaugeElement random_product_gauge(Rng& rng, const PrimeBase& base) {
    ProductGaugeElement g;
    std::uniform_real_distribution<double> angle(0.0, 2.0 * 3.14159265358979323846);
    g.theta_default = angle(rng);
    g.phi_default = angle(rng);
    for (uint32_t p : base.primes) g.blocks.push_back(random_sun(rng, p));
    return g;
}

QukitState::QukitState(const QukitBasisState& b) { terms_[b] = Amplitude(1.0, 0.0); }

QukitState QukitState::from_terms(TermMap terms, bool renormalize) {
    QukitState out;
    for (auto& [state, amp] : terms)
        if (std::abs(amp) > kAmpPrune) out.terms_.emplace(state, amp);
    if (out.terms_.empty()) throw invariant_error("qukit superposition has no support");
    double n2 = out.norm_sq();
    if (renormalize) {
        double inv = 1.0 / std::sqrt(n2);
        for (auto& [state, amp] : out.terms_) amp *= inv;
    } else if (std::abs(n2 - 1.0) > kNormTol) {
        throw invariant_error("qukit superposition norm is not 1");
    }
    return out;
}

double QukitState::norm_sq() const {
    double n2 = 0.0;
    for (const auto& [state, amp] : terms_) n2 += std::norm(amp);
    return n2;
}

QukitState apply_product_gauge(const ProductGaugeElement& g, const QukitState& x,
                               const PrimeBase& base) {
    g.validate(base);
    const size_t m = base.primes.size();
    QukitState::TermMap out;
    for (const auto& [state, amp] : x.terms()) {
        validate_qukit_state(state, base);
        // U(1) phases accumulate once per occupied site
        Amplitude phased = amp;
        for (int j = state.re_lo; j <= state.re_hi; ++j)
            phased *= std::polar(1.0, g.theta_at(j));
        for (int j = state.im_lo; j <= state.im_hi; ++j)
            phased *= std::polar(1.0, g.phi_at(j));

        // branching slots: (chain, prime, site) with p_h outcomes each
        struct Slot {
            bool re;
            size_t prime;
            int site;
            uint8_t in;
        };
        std::vector<Slot> slots;
        double branches = 1.0;
        for (size_t h = 0; h < m; ++h) {
            for (int j = state.re_lo; j <= state.re_hi; ++j)
                slots.push_back({true, h, j, state.re_digit(h, j)});
            for (int j = state.im_lo; j <= state.im_hi; ++j)
                slots.push_back({false, h, j, state.im_digit(h, j)});
            branches *= std::pow(static_cast<double>(base.primes[h]),
                                 state.re_sites() + state.im_sites());
        }
        if (branches > 65536.0)
            throw resource_error("product-gauge expansion would exceed the branch cap");

        std::vector<std::pair<QukitBasisState, Amplitude>> partial{{state, phased}};
        for (const auto& slot : slots) {
            const CMatrix& block = g.blocks[slot.prime];
            std::vector<std::pair<QukitBasisState, Amplitude>> next;
            next.reserve(partial.size() * base.primes[slot.prime]);
            for (const auto& [ps, pa] : partial) {
                for (uint32_t outd = 0; outd < base.primes[slot.prime]; ++outd) {
                    Amplitude a = pa * block.at(outd, slot.in);
                    if (std::abs(a) <= kAmpPrune) continue;
                    QukitBasisState ns = ps;
                    auto& reg = slot.re ? ns.re_digits[slot.prime] : ns.im_digits[slot.prime];
                    int lo = slot.re ? ns.re_lo : ns.im_lo;
                    reg[static_cast<size_t>(slot.site - lo)] = static_cast<uint8_t>(outd);
                    next.emplace_back(std::move(ns), a);
                }
            }
            partial = std::move(next);
        }
        for (auto& [ns, a] : partial) out[ns] += a;
    }
    return QukitState::from_terms(std::move(out));
}

QukitBasisState from_binary_state(const BasisState& s) {
    QukitBasisState out;
    out.re_sign = s.re_sign;
    out.im_sign = s.im_sign;
    out.re_lo = s.re.lo;
    out.re_hi = s.re.hi;
    out.im_lo = s.im.lo;
    out.im_hi = s.im.hi;
    out.re_digits = {s.re.bits};
    out.im_digits = {s.im.bits};
    return out;
}

} // namespace qframe

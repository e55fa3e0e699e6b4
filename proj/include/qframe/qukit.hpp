#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "qframe/bigint.hpp"
#include "qframe/matrix.hpp"
#include "qframe/sampling.hpp"
#include "qframe/state.hpp"

namespace qframe {

// Smallest base in which 1/n has a finite digit expansion: the radical of n
// (product of its distinct prime factors). n >= 2.
uint64_t kmin(uint64_t n);

// Brute-force oracle: true iff n divides k^e for some e <= n, i.e. 1/n
// terminates in base k. Independent of the factorization route in kmin.
bool verify_kmin(uint64_t n, uint64_t k);

// Base k = p_1 p_2 ... p_m as a product of distinct primes.
struct PrimeBase {
    std::vector<uint32_t> primes; // ascending, distinct, prime
    uint64_t k = 2;

    static PrimeBase from_primes(std::vector<uint32_t> primes);
};

// Qupit-tuple string state: per prime p_h a digit function on the shared
// intervals; digit h at site j lies in [0, p_h).
struct QukitBasisState {
    Sign re_sign = Sign::plus;
    Sign im_sign = Sign::plus;
    int re_lo = 0, re_hi = 0;
    int im_lo = 0, im_hi = 0;
    std::vector<std::vector<uint8_t>> re_digits; // [prime index][site - lo]
    std::vector<std::vector<uint8_t>> im_digits;

    static QukitBasisState zero(const PrimeBase& base);

    int re_sites() const { return re_hi - re_lo + 1; }
    int im_sites() const { return im_hi - im_lo + 1; }
    uint8_t re_digit(size_t prime_idx, int j) const;
    uint8_t im_digit(size_t prime_idx, int j) const;

    friend bool operator==(const QukitBasisState&, const QukitBasisState&) = default;
    friend auto operator<=>(const QukitBasisState&, const QukitBasisState&) = default;
};

void validate_qukit_state(const QukitBasisState& s, const PrimeBase& base);

// Strip sites whose composite digit (all primes) is zero from both ends,
// keeping the binal point inside; exact-zero components collapse to one site.
QukitBasisState canonicalize_qukit(const QukitBasisState& s);

// Chinese-remainder bijection between composite digits in [0, k) and residue
// tuples (d mod p_1, ..., d mod p_m).
uint64_t crt_digit(const PrimeBase& base, const std::vector<uint8_t>& residues);
std::vector<uint8_t> crt_residues(const PrimeBase& base, uint64_t digit);

// Exact rational, reduced, den >= 1.
struct ExactRational {
    BigInt num;
    BigUint den = BigUint(1);

    static ExactRational make(BigInt num, BigUint den);
    double to_double() const;
    std::string to_string() const;
    friend bool operator==(const ExactRational& a, const ExactRational& b) {
        return a.num == b.num && a.den == b.den;
    }
};

struct RationalPair {
    ExactRational re;
    ExactRational im;
};

// Componentwise value sign * sum_j d(j) k^j with d(j) the CRT composite digit.
RationalPair qukit_value(const QukitBasisState& s, const PrimeBase& base);

// Unary observable: occupied site counts of the two chains.
std::pair<int, int> site_counts(const QukitBasisState& s);

// Element of U(1) x SU(p_1) x ... x SU(p_m) acting site-wise: U(1) phases
// theta_j (a chain) and phi_k (b chain) multiply amplitudes per occupied
// site; each SU(p_h) block acts on the h-th digit register.
struct ProductGaugeElement {
    double theta_default = 0.0;
    double phi_default = 0.0;
    std::map<int, double> theta; // per-site overrides, a chain
    std::map<int, double> phi;   // b chain
    std::vector<CMatrix> blocks; // default per-prime blocks, SU(p_h)

    static ProductGaugeElement identity(const PrimeBase& base);
    static ProductGaugeElement global_phase(const PrimeBase& base, double theta, double phi);

    double theta_at(int j) const;
    double phi_at(int j) const;
    void validate(const PrimeBase& base, double tol = 1e-12) const;
};

ProductGaugeElement random_product_gauge(Rng& rng, const PrimeBase& base);

// Superposition over qupit-tuple strings.
class QukitState {
public:
    using TermMap = std::map<QukitBasisState, Amplitude>;

    explicit QukitState(const QukitBasisState& b);
    static QukitState from_terms(TermMap terms, bool renormalize = false);

    const TermMap& terms() const { return terms_; }
    double norm_sq() const;

private:
    QukitState() = default;
    TermMap terms_;
};

QukitState apply_product_gauge(const ProductGaugeElement& g, const QukitState& x,
                               const PrimeBase& base);

// Embed a binary (base {2}) string-core state as a qukit state.
QukitBasisState from_binary_state(const BasisState& s);

} // namespace qframe

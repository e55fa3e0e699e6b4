#pragma once

#include <complex>
#include <cstdint>
#include <map>
#include <string>
#include <variant>
#include <vector>

#include "qframe/dyadic.hpp"

namespace qframe {

using Amplitude = std::complex<double>;

// Amplitudes below this are pruned from superpositions.
inline constexpr double kAmpPrune = 1e-15;
// Allowed drift of sum |amp|^2 from 1, and of ensemble weights from 1.
inline constexpr double kNormTol = 1e-12;

enum class Sign : uint8_t { plus, minus };

inline char sign_char(Sign s) { return s == Sign::plus ? '+' : '-'; }
Sign sign_from_char(char c);

// Qubit occupancy record on an integer interval [lo, hi] around the binal
// point (index 0). bits[i] is the qubit state at index lo + i.
// Canonical form excludes leading/trailing zero runs: bit(lo) != 0 when
// lo < 0 and bit(hi) != 0 when hi > 0. Non-canonical ("raw") records are
// legal values too; they appear as gauge images and compare structurally.
struct BitInterval {
    int lo = 0;
    int hi = 0;
    std::vector<uint8_t> bits; // size hi - lo + 1, values 0/1

    BitInterval() : bits{0} {}
    BitInterval(int lo_, int hi_, std::vector<uint8_t> bits_);

    static BitInterval zero() { return {}; }

    bool bit_at(int j) const {
        return j >= lo && j <= hi && bits[static_cast<size_t>(j - lo)] != 0;
    }
    bool all_zero() const;
    bool canonical() const;
    int ones_count() const;
    int site_count() const { return hi - lo + 1; }

    // Digits from index hi down to lo (most significant first).
    std::string to_string() const;

    friend bool operator==(const BitInterval&, const BitInterval&) = default;
    friend auto operator<=>(const BitInterval&, const BitInterval&) = default;
};

// One complex binary rational string state: sign + qubit string for the real
// chain and the same for the imaginary chain.
struct BasisState {
    Sign re_sign = Sign::plus;
    BitInterval re;
    Sign im_sign = Sign::plus;
    BitInterval im;

    static BasisState zero() { return {}; }

    bool canonical() const;
    bool is_pure_real() const { return im.all_zero(); }
    bool is_pure_imag() const { return re.all_zero(); }
    int site_count() const { return re.site_count() + im.site_count(); }

    // "+11.01" style, both components.
    std::string to_string() const;

    friend bool operator==(const BasisState&, const BasisState&) = default;
    friend auto operator<=>(const BasisState&, const BasisState&) = default;
};

// Strip leading/trailing zeros and normalize exact-zero components to the
// canonical zero record (+, single 0 bit at index 0).
BitInterval canonicalize(const BitInterval& raw);
BasisState canonicalize(Sign raw_re_sign, const BitInterval& raw_re,
                        Sign raw_im_sign, const BitInterval& raw_im);
BasisState canonicalize(const BasisState& raw);

// Eigenvalue of the number-value operator on the state: componentwise
// sign * sum_j bit(j) * 2^j. Defined for raw records as well (padding with
// zeros does not change the value).
DyadicComplex value_of(const BasisState& s);
DyadicReal real_value_of(Sign sign, const BitInterval& bi);

// Exact inverse of value_of onto canonical states.
BasisState encode(const DyadicComplex& v);
BitInterval encode_magnitude(const DyadicReal& v); // |v| as a bit record

// Parse "+11.01" / "-0.001" (binary digits, '.' marks index 0). The integer
// part must be nonempty. Result is canonicalized.
BasisState parse_real_state(const std::string& text);
BasisState parse_complex_state(const std::string& re_text, const std::string& im_text);

// Finite normalized superposition of BasisState occupancy records. Keys are
// structural: records differing only by zero padding are distinct Fock
// states and are kept apart.
class PureState {
public:
    using TermMap = std::map<BasisState, Amplitude>;

    PureState() : PureState(BasisState::zero()) {}
    explicit PureState(const BasisState& b);

    static PureState basis(const BasisState& b) { return PureState(b); }
    // Prunes tiny amplitudes, then either checks the norm (throws
    // invariant_error if off by more than kNormTol) or rescales.
    static PureState from_terms(TermMap terms, bool renormalize = false);
    // Equal-amplitude superposition of the given distinct basis states.
    static PureState uniform(const std::vector<BasisState>& states);

    const TermMap& terms() const { return terms_; }
    size_t support_size() const { return terms_.size(); }
    bool is_basis() const { return terms_.size() == 1; }
    const BasisState& only_term() const; // throws unsupported_error unless basis
    Amplitude amplitude(const BasisState& b) const;
    double norm_sq() const;

    friend bool operator==(const PureState&, const PureState&) = default;

private:
    TermMap terms_;
};

// l2 distance between superpositions (term-wise).
double state_distance(const PureState& x, const PureState& y);
Amplitude inner_product(const PureState& x, const PureState& y);

// Probability-weighted ensemble (density-operator diagonal).
struct MixedState {
    struct Entry {
        double weight;
        std::variant<BasisState, PureState> state;
    };
    std::vector<Entry> ensemble;

    // Throws invariant_error on negative weights or weight sum off by
    // more than kNormTol.
    void validate() const;
    // Expected number value of the ensemble (basis entries contribute their
    // value; pure entries the amplitude-squared-weighted value).
    std::complex<double> expected_value() const;
};

} // namespace qframe

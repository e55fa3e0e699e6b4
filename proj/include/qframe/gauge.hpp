#pragma once

#include <array>
#include <map>
#include <vector>

#include "qframe/cauchy.hpp"
#include "qframe/matrix.hpp"
#include "qframe/sampling.hpp"
#include "qframe/state.hpp"

namespace qframe {

// Unitarity / special-unitarity tolerance for gauge matrices.
inline constexpr double kGaugeTol = 1e-12;

// Single-site SU(2) element. entry(i, h) is the amplitude for input qubit
// state h to land on output state i.
struct SiteUnitary {
    std::array<std::array<Amplitude, 2>, 2> m{{{Amplitude(1, 0), Amplitude(0, 0)},
                                               {Amplitude(0, 0), Amplitude(1, 0)}}};

    static SiteUnitary identity() { return {}; }
    // [[cos t, sin t], [-sin t, cos t]]
    static SiteUnitary rotation(double theta);
    static SiteUnitary from_rows(Amplitude a00, Amplitude a01, Amplitude a10, Amplitude a11);

    const Amplitude& entry(int i, int h) const {
        return m[static_cast<size_t>(i)][static_cast<size_t>(h)];
    }

    SiteUnitary dagger() const;
    friend SiteUnitary operator*(const SiteUnitary& a, const SiteUnitary& b);

    // max |U - I| entrywise
    double deviation_from_identity() const;
    double max_abs_diff(const SiteUnitary& other) const;
    // throws invariant_error unless U^dagger U = I and det = 1 within tol
    void validate(double tol = kGaugeTol) const;

    CMatrix to_cmatrix() const;
};

SiteUnitary random_site_unitary(Rng& rng); // Haar on SU(2)

// Site-wise gauge assignment for the real (a) and imaginary (b) chains.
// The sign qubits are never touched. Global transforms use one unitary for
// every site of both chains; local transforms override per site and fall
// back to the default elsewhere.
struct GaugeTransform {
    enum class Kind { global, local };

    Kind kind = Kind::global;
    SiteUnitary default_u;
    std::map<int, SiteUnitary> a_chain; // local overrides only
    std::map<int, SiteUnitary> b_chain;

    static GaugeTransform identity() { return {}; }
    static GaugeTransform global(const SiteUnitary& u);
    // u on the whole a chain, identity pinned on the b-chain companion site 0
    // so pure-real experiments leave the imaginary zero record untouched
    static GaugeTransform global_real(const SiteUnitary& u);
    static GaugeTransform local(std::map<int, SiteUnitary> a, std::map<int, SiteUnitary> b,
                                const SiteUnitary& default_u);

    const SiteUnitary& at_a(int j) const;
    const SiteUnitary& at_b(int j) const;

    GaugeTransform inverse() const;
    // throws invariant_error on a non-unitary entry or a global with overrides
    void validate(double tol = kGaugeTol) const;
    // max deviation from identity over the occupied sites of s
    double deviation_from_identity_on(const BasisState& s) const;
};

// Site-wise product (g2 after g1).
GaugeTransform compose(const GaugeTransform& g2, const GaugeTransform& g1);

GaugeTransform random_global_gauge(Rng& rng);
GaugeTransform random_local_gauge(Rng& rng, int lo, int hi);

// Full expansion of the gauged state: every occupied site (alpha, j) becomes
// sum_i entry(i, alpha) at site j. Output terms are raw occupancy records on
// the same intervals; support grows by 2^(occupied sites). Guarded by a site
// cap (resource_error).
PureState apply_gauge(const GaugeTransform& g, const PureState& x);
inline constexpr int kGaugeSiteCap = 22;

// Drop numerically residual support after a back-transformation: terms with
// |amp| < kProjectionPrune and, if their total mass stays below leak_tol,
// all non-canonical terms; renormalizes. Throws invariant_error when true
// leakage exceeds leak_tol.
inline constexpr double kProjectionPrune = 1e-9;
PureState project_to_rational(const PureState& s, double leak_tol = 1e-9);

// <U pair | P_{=AU} | U pair> evaluated per its definition as the plain
// projector expectation of the back-transformed states.
double transformed_eq_probability(const GaugeTransform& g, const PureState& x,
                                  const PureState& y);

// (U x U) mixed_add (U^dag x U^dag): ensemble of forward-gauged sums.
MixedState transformed_add_a(const GaugeTransform& g, const PureState& x, const PureState& y);

// Lazy view of O_U = U O U^dagger; images are computed on demand and the
// operator is never materialized as a matrix.
struct TransformedOperator {
    GaugeTransform gauge;
    CauchyOperator base;

    // O_U applied to the frame integer state U|s_n> (full expansion).
    PureState image_expanded(int n) const;
};

TransformedOperator transform_operator(const GaugeTransform& g, const CauchyOperator& op);

// Cauchy condition evaluated in the U frame by composing the conjugated
// operations (subtraction, absolute value, comparison each wrapped in
// U ... U^dagger numerically), never by shortcutting to the original-frame
// check. Product-form states keep the horizon-64 chain tractable.
CauchyVerdict is_cauchy_in_frame(const GaugeTransform& g, const CauchyOperator& op,
                                 const CauchyParams& p, Exec exec = Exec::parallel);

// Truncated sequence built from a fixed 0/1 function f on (-inf, top] with
// f(top) = 1; element m is the raw occupancy record of f on [-m, top].
struct FseqSpec {
    int top = 0;
    std::vector<uint8_t> pattern; // f(top - i) = pattern[i mod size]
    int m_max = 12;

    FseqSpec(int top_, std::vector<uint8_t> pattern_, int m_max_);
    static FseqSpec ones(int m_max) { return FseqSpec(0, {1}, m_max); }

    bool f(int j) const; // j <= top
    BasisState state_at(int m) const;
};

struct DivergenceEntry {
    int j = 0;
    int k = 0;
    double p = 0.0; // original-frame P_{j,k,ell}
};

// Original-frame Cauchy probabilities of the gauged sequence U|f>_m for all
// pairs 1 <= j < k <= m_max. Rejects gauges that act as the identity on the
// occupied a-chain sites (degenerate experiment).
std::vector<DivergenceEntry> original_frame_divergence(const FseqSpec& spec,
                                                       const GaugeTransform& g, int ell,
                                                       Exec exec = Exec::parallel);

} // namespace qframe

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qframe/gauge.hpp"
#include "qframe/matrix.hpp"

namespace qframe {

inline constexpr double kCodeTol = 1e-12;

// Logical qubit as a pair of orthogonal subspaces of an n-qubit space.
// basis0/basis1 are orthonormal and ordered by descending total-spin weight,
// so the last vector of each block is the lowest-weight representative.
struct LogicalCode {
    int n_physical = 0;
    CMatrix proj0, proj1;
    std::vector<CVector> basis0, basis1;

    size_t dim() const { return size_t{1} << n_physical; }
    // idempotence, Hermiticity, mutual orthogonality within kCodeTol
    void validate() const;
};

// Two physical qubits: logical 0 = the isospin I=1 (triplet) subspace,
// logical 1 = the I=0 (singlet) subspace.
LogicalCode two_qubit_isospin_code();

// Three physical qubits: the two I=1/2 blocks of 4 + 2 + 2 are the logical
// 0 and 1 subspaces (block 0 couples qubits 1,2 to a singlet).
LogicalCode three_qubit_code();

// Projector onto the total-spin I=3/2 subspace of three qubits (the block
// left over by three_qubit_code).
CMatrix three_qubit_spin32_projector();

// max over b of || [P_b, u x ... x u] || (spectral norm); theory predicts 0
// for global u. Throws invariant_error for non-unitary u.
double invariance_defect(const LogicalCode& code, const SiteUnitary& u);

// Same commutator defect for an arbitrary per-qubit product (control case:
// non-global products generically break invariance).
double invariance_defect_product(const LogicalCode& code, const std::vector<SiteUnitary>& us);

// max defect over `samples` Haar-random global elements; samples are drawn
// up front from the seed, so the result is thread-count independent.
double invariance_defect_sweep(const LogicalCode& code, int samples, uint64_t seed,
                               Exec exec = Exec::parallel);

// Tensor product of per-bit subspace representatives. representative = -1
// selects the lowest-weight basis vector of each block; otherwise it indexes
// into the block bases (domain_error when out of range).
CVector encode_logical(const std::string& bits, const LogicalCode& code, int representative = -1);
inline constexpr size_t kLogicalDimCap = 1u << 14;

struct DecodePosition {
    double p0 = 0.0;
    double p1 = 0.0;
    double leakage = 0.0; // 1 - p0 - p1
};

struct DecodeResult {
    std::vector<DecodePosition> positions;
    std::string argmax_bits() const;
    double max_leakage() const;
};

// Per-position subspace-membership probabilities; support outside both
// subspaces is reported as leakage, not an exception.
DecodeResult decode_logical(const CVector& state, const LogicalCode& code);

// u applied to every physical qubit of an encoded register.
CVector apply_global_to_register(const SiteUnitary& u, const CVector& state);
CVector apply_per_qubit(const std::vector<SiteUnitary>& us, const CVector& state);

struct CollapseRow {
    int gauge_index = 0; // 0 is the identity control
    bool logical_match = false;
    double min_fidelity = 1.0;
    double max_fidelity = 1.0;
    double max_leakage = 0.0;
};

struct CollapseReport {
    int n_physical = 0;
    int gauge_samples = 0;
    int strings = 0;
    std::vector<CollapseRow> rows; // per gauge, identity first
    bool logical_constant = false; // decode identical across all global gauges
    double max_nonidentity_fidelity = 0.0;
    // non-global control gauge: subspace leakage (identically zero for the
    // two-qubit code, whose blocks span the whole space) and the shift of the
    // per-position decode distribution
    double local_control_leakage = 0.0;
    double local_control_shift = 0.0;
    bool local_control_disturbed = false;
};

// Logical-level outcomes are identical across sampled global gauges while the
// physical states move (fidelity < 1); a non-global control shows leakage.
CollapseReport frame_collapse_demo(const LogicalCode& code, int gauge_samples, int strings,
                                   uint64_t seed);

} // namespace qframe

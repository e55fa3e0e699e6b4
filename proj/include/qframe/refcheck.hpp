#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qframe/parallel.hpp"
#include "qframe/state.hpp"

namespace qframe::refcheck {

// Reference valuation path for small states, independent of the bignum and
// encode/value machinery: plain bit loops into a scaled 128-bit integer.
// Used to cross-check the arithmetic module; keep it free of calls into
// value_of/encode so the two routes stay separate.

// sum_j bit(j) * 2^(j + scale), signed; throws domain_error if any occupied
// index j has j + scale < 0 or the sum would need more than 120 bits.
__int128 scaled_component(Sign sign, const BitInterval& bi, int scale);

// Every canonical pure-real BasisState with re interval within
// [-radius, radius] (zero included, both signs for nonzero patterns).
std::vector<BasisState> enumerate_real_canonical(int radius);

struct SweepResult {
    uint64_t checks = 0;
    uint64_t mismatches = 0;
    std::string first_mismatch; // empty when clean
};

// Exhaustive oracle-equivalence sweep over all operand pairs from
// enumerate_real_canonical(radius): value-level add/sub/mul against the
// scaled-integer reference, and eq/leq predicates against integer compare.
SweepResult oracle_sweep(int radius, Exec exec = Exec::parallel);

struct DivSweepResult {
    uint64_t checks = 0;
    uint64_t violations = 0;
    std::string first_violation;
};

// Random-pair division sweep: for each pair and each ell in
// [ell_min, ell_max], checks |value(div_a(x,y,ell)) - x/y| <= 2^-ell and
// truncation toward zero, all in scaled integer arithmetic.
DivSweepResult div_sweep(int pairs, int ell_min, int ell_max, int radius, uint64_t seed,
                         Exec exec = Exec::parallel);

} // namespace qframe::refcheck

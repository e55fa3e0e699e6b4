#pragma once

#include "qframe/state.hpp"

namespace qframe {

// Target precision 2^-ell for division.
struct AccuracyLevel {
    int ell;
    explicit AccuracyLevel(int l);
};

// Arithmetic equality: same signs and same distributions of 1s on both
// components. Inputs must be canonical (canonical zeros already compare
// equal whatever sign the raw input carried).
bool eq_a(const BasisState& x, const BasisState& y);

// Arithmetic order on pure-real canonical states: highest differing occupied
// index decides, with the zero-least and negative-reversal rules. Agrees with
// comparison of the number values. Throws unsupported_error when either
// operand has a nonzero imaginary component.
bool leq_a(const BasisState& x, const BasisState& y);
bool lt_a(const BasisState& x, const BasisState& y);

// Projector expectations over superpositions: sum of |amp_x(u)|^2|amp_y(v)|^2
// over basis pairs satisfying the relation. The projectors range over the
// rational string basis, so non-canonical (zero-padded) support carries no
// probability mass.
double proj_eq_a(const PureState& x, const PureState& y);
double proj_leq_a(const PureState& x, const PureState& y);

// Exact value-level operations: value(op(x,y)) = value(x) op value(y), result
// canonical. Complex multiplication is the full product.
BasisState add_a(const BasisState& x, const BasisState& y);
BasisState sub_a(const BasisState& x, const BasisState& y);
BasisState mul_a(const BasisState& x, const BasisState& y);

// Quotient truncated toward zero at bit -ell; pure-real operands only.
// Throws domain_error when value(y) = 0.
BasisState div_a(const BasisState& x, const BasisState& y, AccuracyLevel acc);

// Componentwise absolute value of a pure-real state (sign forced +).
BasisState abs_a(const BasisState& x);

// Density-operator-diagonal arithmetic on superpositions: one ensemble entry
// per basis pair (u, v) with weight |amp_x(u)|^2 |amp_y(v)|^2 and state
// op_a(u, v). Off-diagonal coherences are dropped by construction.
MixedState mixed_add(const PureState& x, const PureState& y);
MixedState mixed_sub(const PureState& x, const PureState& y);

} // namespace qframe

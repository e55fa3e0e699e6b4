#pragma once

#include <functional>
#include <string>
#include <vector>

#include "qframe/arithmetic.hpp"
#include "qframe/parallel.hpp"
#include "qframe/state.hpp"

namespace qframe {

// Probe bounds for the truncated Cauchy tests. A verdict is always relative
// to these bounds, never an absolute claim.
struct CauchyParams {
    int ell_max;
    int horizon;
    int witness_budget;
    double eps_p = 1e-9; // acceptance slack for probability-1 tests

    CauchyParams(int ell_max_, int horizon_, int witness_budget_);
};

struct EllRecord {
    int ell = 0;
    bool ok = false;
    int witness = -1; // minimal h <= witness_budget when ok
    // failing pair beyond the witness budget (basis path records deviation,
    // probability path records min_p)
    int fail_j = -1;
    int fail_k = -1;
    double deviation = 0.0;
    double min_p = 1.0; // minimum pair probability seen past the chosen h
};

struct CauchyVerdict {
    bool holds = false;
    std::vector<EllRecord> per_ell; // ell = 0 .. ell_max
    CauchyParams params;
};

// Sequence of states indexed 0..horizon through a pure generator.
class StateSequence {
public:
    StateSequence(std::function<PureState(int)> gen, int horizon);
    PureState at(int n) const;
    int horizon() const { return horizon_; }

private:
    std::function<PureState(int)> gen_;
    int horizon_;
};

// Candidate number: a normalized map from nonnegative-integer string states
// (indexed by value) to rational string states.
struct CauchyOperator {
    std::function<PureState(int)> image;
    std::string label;

    PureState at(int n) const;
};

// The nonnegative-integer string state |n> (sign +, lo = 0).
BasisState integer_state(uint64_t n);
bool is_integer_state(const BasisState& s);

// Basis-level Cauchy check (componentwise |difference| <=_A 2^-ell, matching
// the probability form on 0/1 outcomes). Every element must be a single basis
// state; superpositions raise unsupported_error.
CauchyVerdict is_cauchy_basis_seq(const StateSequence& seq, const CauchyParams& p,
                                  Exec exec = Exec::parallel);

// P_{j,m,ell}: probability that the real AND imaginary arithmetic differences
// of the two superpositions are <=_A 2^-ell. Only canonical (rational-string)
// support carries probability.
double cauchy_probability(const StateSequence& seq, int j, int m, int ell);

// Truncated liminf/limsup evaluation over P_{j,k,ell}.
CauchyVerdict is_cauchy_super(const StateSequence& seq, const CauchyParams& p,
                              Exec exec = Exec::parallel);

// Interleaved cross test; both sequences must individually pass first
// (precondition_error otherwise).
bool equivalent_seqs(const StateSequence& a, const StateSequence& b, const CauchyParams& p,
                     Exec exec = Exec::parallel);

// Operator Cauchy condition over integer-state indices; basis-valued images
// take the strict componentwise path, superposed images the probability path.
CauchyVerdict is_cauchy_operator(const CauchyOperator& op, const CauchyParams& p,
                                 Exec exec = Exec::parallel);

enum class NumberKind { real, imaginary, complex_number };
const char* to_string(NumberKind k);

// Pure-real / pure-imaginary / complex classification of a Cauchy operator by
// the tail magnitudes of the other component (top half of the horizon).
NumberKind classify_number(const CauchyOperator& op, const CauchyParams& p);

// Numerical operations on Cauchy operators. Superposed images contribute
// their weight-dominant basis representative (ties broken by value order).
CauchyOperator op_add_r(const CauchyOperator& a, const CauchyOperator& b);
CauchyOperator op_sub_r(const CauchyOperator& a, const CauchyOperator& b);
CauchyOperator op_mul_r(const CauchyOperator& a, const CauchyOperator& b);
// Divisor must not be equivalent to zero under the probe bounds; quotient
// accuracy grows with the index (ell = n).
CauchyOperator op_div_r(const CauchyOperator& a, const CauchyOperator& b,
                        const CauchyParams& zero_probe);

// Test corpus generators.
CauchyOperator constant_operator(const DyadicComplex& q);
CauchyOperator truncation_operator(int64_t num, int64_t den);      // real n/d
CauchyOperator truncation_operator_imag(int64_t num, int64_t den); // i * n/d
CauchyOperator sqrt2_operator();
CauchyOperator parity_operator(); // 0,1,0,1,...: not Cauchy

// Weight-dominant basis representative of a superposition.
BasisState dominant_representative(const PureState& s);

namespace detail {

// Shared verdict assembly for the basis path: per ordered pair (j < k) the
// largest ell with the componentwise condition, plus a reporting deviation.
// Used by both the plain and the gauged (in-frame) checks.
struct PairEllTable {
    int count = 0;                 // indices 0..count-1
    std::vector<int> max_ell;      // size count*(count-1)/2
    std::vector<double> deviation; // same layout
};
size_t pair_index(int j, int k, int count);
CauchyVerdict verdict_from_pair_table(const PairEllTable& t, const CauchyParams& p);

// Probability path: per pair, P values for ell = 0..ell_max.
struct ProbPairTable {
    int count = 0;
    int ell_max = 0;
    std::vector<double> p; // [pair_index * (ell_max+1) + ell]
};
CauchyVerdict verdict_from_prob_table(const ProbPairTable& t, const CauchyParams& p);

// Value-grouped support of a superposition (canonical terms only).
struct ValueGroups {
    std::vector<DyadicComplex> values;
    std::vector<double> weights;
    bool pure_real = true;
    double canonical_mass = 0.0;
};
ValueGroups group_by_value(const PureState& s);
// Probability that both component differences are <=_A 2^-ell.
double pair_probability(const ValueGroups& a, const ValueGroups& b, int ell);

} // namespace detail

} // namespace qframe

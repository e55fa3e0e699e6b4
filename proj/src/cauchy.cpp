#include "qframe/cauchy.hpp"

#include <algorithm>
#include <cmath>

#include "qframe/errors.hpp"

namespace qframe {

CauchyParams::CauchyParams(int ell_max_, int horizon_, int witness_budget_)
    : ell_max(ell_max_), horizon(horizon_), witness_budget(witness_budget_) {
    if (ell_max < 0) throw domain_error("ell_max must be nonnegative");
    if (horizon <= 0 || witness_budget < 0) throw domain_error("probe bounds must be positive");
    if (horizon <= witness_budget) throw domain_error("horizon must exceed the witness budget");
}

StateSequence::StateSequence(std::function<PureState(int)> gen, int horizon)
    : gen_(std::move(gen)), horizon_(horizon) {
    if (horizon_ <= 0) throw domain_error("sequence horizon must be positive");
}

PureState StateSequence::at(int n) const {
    if (n < 0 || n > horizon_) throw domain_error("sequence index outside [0, horizon]");
    return gen_(n);
}

PureState CauchyOperator::at(int n) const {
    if (n < 0) throw domain_error("integer state index must be nonnegative");
    return image(n);
}

BasisState integer_state(uint64_t n) {
    return encode(DyadicComplex::from_int(static_cast<int64_t>(n)));
}

bool is_integer_state(const BasisState& s) {
    return s.canonical() && s.is_pure_real() && s.re_sign == Sign::plus && s.re.lo == 0;
}

namespace detail {

size_t pair_index(int j, int k, int count) {
    // row-major over j < k
    return static_cast<size_t>(j) * count - static_cast<size_t>(j) * (j + 1) / 2 +
           static_cast<size_t>(k - j - 1);
}

namespace {

// min over pairs with both indices > h, as a function of h in [0, count-2];
// empty ranges give the identity element.
template <typename T>
std::vector<T> suffix_pair_min(const std::vector<T>& table, int count, T identity) {
    std::vector<T> row_min(static_cast<size_t>(count), identity);
    for (int j = 0; j < count; ++j) {
        T m = identity;
        for (int k = j + 1; k < count; ++k)
            m = std::min(m, table[pair_index(j, k, count)]);
        row_min[static_cast<size_t>(j)] = m;
    }
    // M[h] = min over j > h of row_min[j]
    std::vector<T> M(static_cast<size_t>(count), identity);
    for (int h = count - 2; h >= 0; --h)
        M[static_cast<size_t>(h)] = std::min(M[static_cast<size_t>(h + 1)],
                                             row_min[static_cast<size_t>(h + 1)]);
    return M;
}

} // namespace

CauchyVerdict verdict_from_pair_table(const PairEllTable& t, const CauchyParams& p) {
    CauchyVerdict v{false, {}, p};
    const int count = t.count;
    auto M = suffix_pair_min(t.max_ell, count, kEllInfinity);

    // worst pair entirely beyond the witness budget, for failure reports
    int worst_ell = kEllInfinity, worst_j = -1, worst_k = -1;
    double worst_dev = 0.0;
    for (int j = p.witness_budget + 1; j < count; ++j)
        for (int k = j + 1; k < count; ++k) {
            size_t idx = pair_index(j, k, count);
            if (t.max_ell[idx] < worst_ell) {
                worst_ell = t.max_ell[idx];
                worst_j = j;
                worst_k = k;
                worst_dev = t.deviation[idx];
            }
        }

    v.holds = true;
    for (int ell = 0; ell <= p.ell_max; ++ell) {
        EllRecord r;
        r.ell = ell;
        r.ok = false;
        for (int h = 0; h <= p.witness_budget && h < count; ++h) {
            if (M[static_cast<size_t>(h)] >= ell) {
                r.ok = true;
                r.witness = h;
                break;
            }
        }
        if (!r.ok) {
            r.fail_j = worst_j;
            r.fail_k = worst_k;
            r.deviation = worst_dev;
            v.holds = false;
        }
        v.per_ell.push_back(r);
    }
    return v;
}

CauchyVerdict verdict_from_prob_table(const ProbPairTable& t, const CauchyParams& p) {
    CauchyVerdict v{false, {}, p};
    const int count = t.count;
    const int width = t.ell_max + 1;
    v.holds = true;
    for (int ell = 0; ell <= p.ell_max; ++ell) {
        std::vector<double> slice(t.p.size() / static_cast<size_t>(width));
        for (size_t i = 0; i < slice.size(); ++i)
            slice[i] = t.p[i * static_cast<size_t>(width) + static_cast<size_t>(ell)];
        auto M = suffix_pair_min(slice, count, 2.0);

        EllRecord r;
        r.ell = ell;
        r.ok = false;
        for (int h = 0; h <= p.witness_budget && h < count; ++h) {
            if (M[static_cast<size_t>(h)] >= 1.0 - p.eps_p) {
                r.ok = true;
                r.witness = h;
                r.min_p = std::min(M[static_cast<size_t>(h)], 1.0);
                break;
            }
        }
        if (!r.ok) {
            // minimum and argmin beyond the budget
            double min_p = 2.0;
            for (int j = p.witness_budget + 1; j < count; ++j)
                for (int k = j + 1; k < count; ++k) {
                    double pv = slice[pair_index(j, k, count)];
                    if (pv < min_p) {
                        min_p = pv;
                        r.fail_j = j;
                        r.fail_k = k;
                    }
                }
            r.min_p = min_p > 1.5 ? 1.0 : min_p;
            r.deviation = 1.0 - r.min_p;
            v.holds = false;
        }
        v.per_ell.push_back(r);
    }
    return v;
}

ValueGroups group_by_value(const PureState& s) {
    // collect canonical terms, then merge equal values
    std::vector<std::pair<DyadicComplex, double>> raw;
    ValueGroups g;
    for (const auto& [state, amp] : s.terms()) {
        if (!state.canonical()) continue;
        double w = std::norm(amp);
        g.canonical_mass += w;
        raw.emplace_back(value_of(state), w);
        if (!raw.back().first.is_real()) g.pure_real = false;
    }
    auto less = [](const DyadicComplex& a, const DyadicComplex& b) {
        int c = DyadicReal::compare(a.re, b.re);
        if (c != 0) return c < 0;
        return DyadicReal::compare(a.im, b.im) < 0;
    };
    std::sort(raw.begin(), raw.end(),
              [&](const auto& a, const auto& b) { return less(a.first, b.first); });
    for (auto& [val, w] : raw) {
        if (!g.values.empty() && g.values.back() == val) g.weights.back() += w;
        else {
            g.values.push_back(val);
            g.weights.push_back(w);
        }
    }
    return g;
}

namespace {

// window path for two pure-real grouped supports (values ascending)
double pair_probability_real(const ValueGroups& a, const ValueGroups& b, int ell) {
    std::vector<double> prefix(b.values.size() + 1, 0.0);
    for (size_t i = 0; i < b.values.size(); ++i) prefix[i + 1] = prefix[i] + b.weights[i];
    const DyadicReal tol = DyadicReal::scaled(1, -ell);
    double acc = 0.0;
    auto less_re = [](const DyadicComplex& x, const DyadicReal& v) {
        return DyadicReal::compare(x.re, v) < 0;
    };
    auto greater_re = [](const DyadicReal& v, const DyadicComplex& x) {
        return DyadicReal::compare(v, x.re) < 0;
    };
    for (size_t i = 0; i < a.values.size(); ++i) {
        DyadicReal lo = a.values[i].re - tol;
        DyadicReal hi = a.values[i].re + tol;
        auto first = std::lower_bound(b.values.begin(), b.values.end(), lo, less_re);
        auto last = std::upper_bound(b.values.begin(), b.values.end(), hi, greater_re);
        acc += a.weights[i] * (prefix[static_cast<size_t>(last - b.values.begin())] -
                               prefix[static_cast<size_t>(first - b.values.begin())]);
    }
    return acc;
}

} // namespace

double pair_probability(const ValueGroups& a, const ValueGroups& b, int ell) {
    if (a.pure_real && b.pure_real && a.values.size() * b.values.size() > 4096)
        return pair_probability_real(a, b, ell);
    double acc = 0.0;
    for (size_t i = 0; i < a.values.size(); ++i)
        for (size_t j = 0; j < b.values.size(); ++j) {
            DyadicComplex d = a.values[i] - b.values[j];
            if (max_ell_leq(d.re.abs()) >= ell && max_ell_leq(d.im.abs()) >= ell)
                acc += a.weights[i] * b.weights[j];
        }
    return acc;
}

} // namespace detail

namespace {

detail::PairEllTable pair_table_from_values(const std::vector<DyadicComplex>& vals,
                                                 Exec exec) {
    detail::PairEllTable t;
    t.count = static_cast<int>(vals.size());
    size_t pairs = static_cast<size_t>(t.count) * (t.count - 1) / 2;
    t.max_ell.assign(pairs, 0);
    t.deviation.assign(pairs, 0.0);

    const int64_t n = static_cast<int64_t>(pairs);
    auto cell = [&](int64_t flat) {
        // invert flat -> (j, k)
        int j = 0;
        int64_t rem = flat;
        int64_t row = t.count - 1;
        while (rem >= row) {
            rem -= row;
            --row;
            ++j;
        }
        int k = j + 1 + static_cast<int>(rem);
        DyadicReal dre = (vals[static_cast<size_t>(j)].re - vals[static_cast<size_t>(k)].re).abs();
        DyadicReal dim = (vals[static_cast<size_t>(j)].im - vals[static_cast<size_t>(k)].im).abs();
        size_t idx = detail::pair_index(j, k, t.count);
        t.max_ell[idx] = std::min(max_ell_leq(dre), max_ell_leq(dim));
        t.deviation[idx] = std::max(dre.to_double(), dim.to_double());
    };

    if (exec == Exec::parallel) {
#pragma omp parallel for schedule(static) num_threads(qframe::par::max_threads())
        for (int64_t i = 0; i < n; ++i) cell(i);
    } else {
        for (int64_t i = 0; i < n; ++i) cell(i);
    }
    return t;
}

CauchyVerdict basis_verdict_of(const std::vector<PureState>& elems, const CauchyParams& p,
                               Exec exec, const char* caller) {
    std::vector<DyadicComplex> vals;
    vals.reserve(elems.size());
    for (const auto& e : elems) {
        if (!e.is_basis())
            throw unsupported_error(std::string(caller) +
                                    ": superposed element; use the superposition check");
        vals.push_back(value_of(e.only_term()));
    }
    return detail::verdict_from_pair_table(pair_table_from_values(vals, exec), p);
}

detail::ProbPairTable prob_table_of(const std::vector<detail::ValueGroups>& groups,
                                    const CauchyParams& p, Exec exec) {
    detail::ProbPairTable t;
    t.count = static_cast<int>(groups.size());
    t.ell_max = p.ell_max;
    const int width = p.ell_max + 1;
    size_t pairs = static_cast<size_t>(t.count) * (t.count - 1) / 2;
    t.p.assign(pairs * static_cast<size_t>(width), 0.0);

    const int64_t n = static_cast<int64_t>(pairs);
    auto cell = [&](int64_t flat) {
        int j = 0;
        int64_t rem = flat;
        int64_t row = t.count - 1;
        while (rem >= row) {
            rem -= row;
            --row;
            ++j;
        }
        int k = j + 1 + static_cast<int>(rem);
        size_t base = detail::pair_index(j, k, t.count) * static_cast<size_t>(width);
        for (int ell = 0; ell <= p.ell_max; ++ell)
            t.p[base + static_cast<size_t>(ell)] =
                detail::pair_probability(groups[static_cast<size_t>(j)],
                                         groups[static_cast<size_t>(k)], ell);
    };

    if (exec == Exec::parallel) {
#pragma omp parallel for schedule(dynamic) num_threads(qframe::par::max_threads())
        for (int64_t i = 0; i < n; ++i) cell(i);
    } else {
        for (int64_t i = 0; i < n; ++i) cell(i);
    }
    return t;
}

} // namespace

CauchyVerdict is_cauchy_basis_seq(const StateSequence& seq, const CauchyParams& p, Exec exec) {
    if (seq.horizon() < p.horizon)
        throw domain_error("sequence horizon smaller than probe horizon");
    std::vector<PureState> elems;
    for (int n = 0; n <= p.horizon; ++n) elems.push_back(seq.at(n));
    return basis_verdict_of(elems, p, exec, "is_cauchy_basis_seq");
}

double cauchy_probability(const StateSequence& seq, int j, int m, int ell) {
    if (j > seq.horizon() || m > seq.horizon())
        throw domain_error("probe index beyond sequence horizon");
    auto gj = detail::group_by_value(seq.at(j));
    auto gm = detail::group_by_value(seq.at(m));
    return detail::pair_probability(gj, gm, ell);
}

CauchyVerdict is_cauchy_super(const StateSequence& seq, const CauchyParams& p, Exec exec) {
    if (seq.horizon() < p.horizon)
        throw domain_error("sequence horizon smaller than probe horizon");
    std::vector<detail::ValueGroups> groups;
    for (int n = 0; n <= p.horizon; ++n) groups.push_back(detail::group_by_value(seq.at(n)));
    return detail::verdict_from_prob_table(prob_table_of(groups, p, exec), p);
}

bool equivalent_seqs(const StateSequence& a, const StateSequence& b, const CauchyParams& p,
                     Exec exec) {
    std::vector<PureState> ea, eb;
    for (int n = 0; n <= p.horizon; ++n) {
        ea.push_back(a.at(n));
        eb.push_back(b.at(n));
    }
    bool all_basis = true;
    for (const auto& e : ea) all_basis = all_basis && e.is_basis();
    for (const auto& e : eb) all_basis = all_basis && e.is_basis();

    // precondition: both individually Cauchy under p
    auto check = [&](const StateSequence& s) {
        return all_basis ? is_cauchy_basis_seq(s, p, exec).holds
                         : is_cauchy_super(s, p, exec).holds;
    };
    if (!check(a) || !check(b))
        throw precondition_error("equivalent_seqs requires individually Cauchy inputs");

    const int count = p.horizon + 1;
    if (all_basis) {
        // strict cross condition over the full (j,k) rectangle
        std::vector<DyadicComplex> va, vb;
        for (const auto& e : ea) va.push_back(value_of(e.only_term()));
        for (const auto& e : eb) vb.push_back(value_of(e.only_term()));
        std::vector<int> cross(static_cast<size_t>(count) * count, 0);
        const int64_t n2 = static_cast<int64_t>(cross.size());
        auto cell = [&](int64_t flat) {
            int j = static_cast<int>(flat / count);
            int k = static_cast<int>(flat % count);
            DyadicReal dre = (va[static_cast<size_t>(j)].re - vb[static_cast<size_t>(k)].re).abs();
            DyadicReal dim = (va[static_cast<size_t>(j)].im - vb[static_cast<size_t>(k)].im).abs();
            cross[static_cast<size_t>(flat)] = std::min(max_ell_leq(dre), max_ell_leq(dim));
        };
        if (exec == Exec::parallel) {
#pragma omp parallel for schedule(static) num_threads(qframe::par::max_threads())
            for (int64_t i = 0; i < n2; ++i) cell(i);
        } else {
            for (int64_t i = 0; i < n2; ++i) cell(i);
        }
        // M[h] = min over j,k > h
        std::vector<int> M(static_cast<size_t>(count), kEllInfinity);
        for (int h = count - 2; h >= 0; --h) {
            int m = M[static_cast<size_t>(h + 1)];
            for (int k = h + 1; k < count; ++k) {
                m = std::min(m, cross[static_cast<size_t>(h + 1) * count + k]);
                m = std::min(m, cross[static_cast<size_t>(k) * count + (h + 1)]);
            }
            M[static_cast<size_t>(h)] = m;
        }
        for (int ell = 0; ell <= p.ell_max; ++ell) {
            bool ok = false;
            for (int h = 0; h <= p.witness_budget; ++h)
                if (M[static_cast<size_t>(h)] >= ell) {
                    ok = true;
                    break;
                }
            if (!ok) return false;
        }
        return true;
    }

    // probability cross test
    std::vector<detail::ValueGroups> ga, gb;
    for (const auto& e : ea) ga.push_back(detail::group_by_value(e));
    for (const auto& e : eb) gb.push_back(detail::group_by_value(e));
    for (int ell = 0; ell <= p.ell_max; ++ell) {
        std::vector<double> cross(static_cast<size_t>(count) * count, 0.0);
        const int64_t n2 = static_cast<int64_t>(cross.size());
        auto cell = [&](int64_t flat) {
            int j = static_cast<int>(flat / count);
            int k = static_cast<int>(flat % count);
            cross[static_cast<size_t>(flat)] =
                detail::pair_probability(ga[static_cast<size_t>(j)], gb[static_cast<size_t>(k)],
                                         ell);
        };
        if (exec == Exec::parallel) {
#pragma omp parallel for schedule(dynamic) num_threads(qframe::par::max_threads())
            for (int64_t i = 0; i < n2; ++i) cell(i);
        } else {
            for (int64_t i = 0; i < n2; ++i) cell(i);
        }
        std::vector<double> M(static_cast<size_t>(count), 2.0);
        for (int h = count - 2; h >= 0; --h) {
            double m = M[static_cast<size_t>(h + 1)];
            for (int k = h + 1; k < count; ++k) {
                m = std::min(m, cross[static_cast<size_t>(h + 1) * count + k]);
                m = std::min(m, cross[static_cast<size_t>(k) * count + (h + 1)]);
            }
            M[static_cast<size_t>(h)] = m;
        }
        bool ok = false;
        for (int h = 0; h <= p.witness_budget; ++h)
            if (M[static_cast<size_t>(h)] >= 1.0 - p.eps_p) {
                ok = true;
                break;
            }
        if (!ok) return false;
    }
    return true;
}

CauchyVerdict is_cauchy_operator(const CauchyOperator& op, const CauchyParams& p, Exec exec) {
    std::vector<PureState> images;
    for (int n = 0; n <= p.horizon; ++n) images.push_back(op.at(n));
    bool all_basis = true;
    for (const auto& im : images) all_basis = all_basis && im.is_basis();
    if (all_basis) return basis_verdict_of(images, p, exec, "is_cauchy_operator");
    std::vector<detail::ValueGroups> groups;
    groups.reserve(images.size());
    for (const auto& im : images) groups.push_back(detail::group_by_value(im));
    return detail::verdict_from_prob_table(prob_table_of(groups, p, exec), p);
}

const char* to_string(NumberKind k) {
    switch (k) {
        case NumberKind::real: return "real";
        case NumberKind::imaginary: return "imaginary";
        default: return "complex";
    }
}

NumberKind classify_number(const CauchyOperator& op, const CauchyParams& p) {
    if (!is_cauchy_operator(op, p).holds)
        throw precondition_error("classify_number requires a Cauchy operator");
    bool im_small = true;
    bool re_small = true;
    for (int n = p.horizon / 2 + 1; n <= p.horizon; ++n) {
        const PureState image = op.at(n);
        for (const auto& [state, amp] : image.terms()) {
            if (!state.canonical()) continue;
            DyadicComplex v = value_of(state);
            if (max_ell_leq(v.im.abs()) < p.ell_max) im_small = false;
            if (max_ell_leq(v.re.abs()) < p.ell_max) re_small = false;
        }
    }
    if (im_small) return NumberKind::real;
    if (re_small) return NumberKind::imaginary;
    return NumberKind::complex_number;
}

BasisState dominant_representative(const PureState& s) {
    const BasisState* best = nullptr;
    double best_w = -1.0;
    DyadicComplex best_v;
    auto value_less = [](const DyadicComplex& a, const DyadicComplex& b) {
        int c = DyadicReal::compare(a.re, b.re);
        if (c != 0) return c < 0;
        return DyadicReal::compare(a.im, b.im) < 0;
    };
    for (const auto& [state, amp] : s.terms()) {
        double w = std::norm(amp);
        DyadicComplex v = value_of(state);
        if (w > best_w || (w == best_w && best && value_less(v, best_v))) {
            best = &state;
            best_w = w;
            best_v = v;
        }
    }
    return canonicalize(*best);
}

namespace {

CauchyOperator binary_op(const CauchyOperator& a, const CauchyOperator& b,
                         BasisState (*f)(const BasisState&, const BasisState&),
                         const std::string& label) {
    auto fa = a.image;
    auto fb = b.image;
    return CauchyOperator{[fa, fb, f](int n) {
                              return PureState::basis(f(dominant_representative(fa(n)),
                                                        dominant_representative(fb(n))));
                          },
                          label};
}

} // namespace

CauchyOperator op_add_r(const CauchyOperator& a, const CauchyOperator& b) {
    return binary_op(a, b, &add_a, "(" + a.label + " +R " + b.label + ")");
}

CauchyOperator op_sub_r(const CauchyOperator& a, const CauchyOperator& b) {
    return binary_op(a, b, &sub_a, "(" + a.label + " -R " + b.label + ")");
}

CauchyOperator op_mul_r(const CauchyOperator& a, const CauchyOperator& b) {
    return binary_op(a, b, &mul_a, "(" + a.label + " *R " + b.label + ")");
}

CauchyOperator op_div_r(const CauchyOperator& a, const CauchyOperator& b,
                        const CauchyParams& zero_probe) {
    StateSequence bs([im = b.image](int n) { return im(n); }, zero_probe.horizon);
    StateSequence zero([](int) { return PureState::basis(BasisState::zero()); },
                       zero_probe.horizon);
    if (equivalent_seqs(bs, zero, zero_probe))
        throw domain_error("division by an operator equivalent to zero");
    auto fa = a.image;
    auto fb = b.image;
    return CauchyOperator{[fa, fb](int n) {
                              return PureState::basis(div_a(dominant_representative(fa(n)),
                                                            dominant_representative(fb(n)),
                                                            AccuracyLevel(n)));
                          },
                          "(" + a.label + " /R " + b.label + ")"};
}

CauchyOperator constant_operator(const DyadicComplex& q) {
    BasisState s = encode(q);
    return CauchyOperator{[s](int) { return PureState::basis(s); }, "const:" + q.to_string()};
}

CauchyOperator truncation_operator(int64_t num, int64_t den) {
    if (den == 0) throw domain_error("zero denominator");
    return CauchyOperator{[num, den](int n) {
                              return PureState::basis(
                                  encode({truncated_ratio(num, den, n), DyadicReal{}}));
                          },
                          "trunc:" + std::to_string(num) + "/" + std::to_string(den)};
}

CauchyOperator truncation_operator_imag(int64_t num, int64_t den) {
    if (den == 0) throw domain_error("zero denominator");
    return CauchyOperator{[num, den](int n) {
                              return PureState::basis(
                                  encode({DyadicReal{}, truncated_ratio(num, den, n)}));
                          },
                          "itrunc:" + std::to_string(num) + "/" + std::to_string(den)};
}

CauchyOperator sqrt2_operator() {
    return CauchyOperator{[](int n) {
                              // floor(sqrt(2 * 4^n)) * 2^-n
                              BigUint root = isqrt(BigUint(2).shl(2 * static_cast<size_t>(n)));
                              DyadicReal v = DyadicReal::make(BigInt(1, root), -n);
                              return PureState::basis(encode({v, DyadicReal{}}));
                          },
                          "sqrt2"};
}

CauchyOperator parity_operator() {
    return CauchyOperator{[](int n) {
                              return PureState::basis(encode(DyadicComplex::from_int(n % 2)));
                          },
                          "parity"};
}

} // namespace qframe

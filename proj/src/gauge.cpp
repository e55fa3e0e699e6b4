#include "qframe/gauge.hpp"

#include <algorithm>
#include <cmath>

#include "qframe/errors.hpp"

namespace qframe {

SiteUnitary SiteUnitary::rotation(double theta) {
    SiteUnitary u;
    double c = std::cos(theta), s = std::sin(theta);
    u.m = {{{Amplitude(c, 0), Amplitude(s, 0)}, {Amplitude(-s, 0), Amplitude(c, 0)}}};
    return u;
}

SiteUnitary SiteUnitary::from_rows(Amplitude a00, Amplitude a01, Amplitude a10, Amplitude a11) {
    SiteUnitary u;
    u.m = {{{a00, a01}, {a10, a11}}};
    u.validate();
    return u;
}

SiteUnitary SiteUnitary::dagger() const {
    SiteUnitary u;
    u.m = {{{std::conj(m[0][0]), std::conj(m[1][0])},
            {std::conj(m[0][1]), std::conj(m[1][1])}}};
    return u;
}

SiteUnitary operator*(const SiteUnitary& a, const SiteUnitary& b) {
    SiteUnitary u;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            u.m[static_cast<size_t>(i)][static_cast<size_t>(j)] =
                a.entry(i, 0) * b.entry(0, j) + a.entry(i, 1) * b.entry(1, j);
    return u;
}

double SiteUnitary::deviation_from_identity() const {
    double d = 0.0;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            d = std::max(d, std::abs(entry(i, j) - Amplitude(i == j ? 1.0 : 0.0, 0.0)));
    return d;
}

double SiteUnitary::max_abs_diff(const SiteUnitary& other) const {
    double d = 0.0;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) d = std::max(d, std::abs(entry(i, j) - other.entry(i, j)));
    return d;
}

void SiteUnitary::validate(double tol) const {
    SiteUnitary gram = dagger() * (*this);
    if (gram.deviation_from_identity() > tol)
        throw invariant_error("site matrix is not unitary");
    Amplitude det = m[0][0] * m[1][1] - m[0][1] * m[1][0];
    if (std::abs(det - Amplitude(1.0, 0.0)) > tol)
        throw invariant_error("site matrix determinant is not 1");
}

CMatrix SiteUnitary::to_cmatrix() const {
    CMatrix c(2, 2);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) c.at(static_cast<size_t>(i), static_cast<size_t>(j)) = entry(i, j);
    return c;
}

SiteUnitary random_site_unitary(Rng& rng) {
    CMatrix m = random_su2(rng);
    SiteUnitary u;
    u.m = {{{m.at(0, 0), m.at(0, 1)}, {m.at(1, 0), m.at(1, 1)}}};
    return u;
}

GaugeTransform GaugeTransform::global(const SiteUnitary& u) {
    GaugeTransform g;
    g.kind = Kind::global;
    g.default_u = u;
    g.validate();
    return g;
}

GaugeTransform GaugeTransform::global_real(const SiteUnitary& u) {
    GaugeTransform g;
    g.kind = Kind::local;
    g.default_u = u;
    g.b_chain[0] = SiteUnitary::identity();
    g.validate();
    return g;
}

GaugeTransform GaugeTransform::local(std::map<int, SiteUnitary> a, std::map<int, SiteUnitary> b,
                                     const SiteUnitary& default_u) {
    GaugeTransform g;
    g.kind = Kind::local;
    g.a_chain = std::move(a);
    g.b_chain = std::move(b);
    g.default_u = default_u;
    g.validate();
    return g;
}

const SiteUnitary& GaugeTransform::at_a(int j) const {
    if (kind == Kind::local) {
        auto it = a_chain.find(j);
        if (it != a_chain.end()) return it->second;
    }
    return default_u;
}

const SiteUnitary& GaugeTransform::at_b(int j) const {
    if (kind == Kind::local) {
        auto it = b_chain.find(j);
        if (it != b_chain.end()) return it->second;
    }
    return default_u;
}

GaugeTransform GaugeTransform::inverse() const {
    GaugeTransform g = *this;
    g.default_u = default_u.dagger();
    for (auto& [site, u] : g.a_chain) u = u.dagger();
    for (auto& [site, u] : g.b_chain) u = u.dagger();
    return g;
}

void GaugeTransform::validate(double tol) const {
    if (kind == Kind::global && (!a_chain.empty() || !b_chain.empty()))
        throw invariant_error("global gauge must not carry per-site overrides");
    default_u.validate(tol);
    for (const auto& [site, u] : a_chain) u.validate(tol);
    for (const auto& [site, u] : b_chain) u.validate(tol);
}

double GaugeTransform::deviation_from_identity_on(const BasisState& s) const {
    double d = 0.0;
    for (int j = s.re.lo; j <= s.re.hi; ++j)
        d = std::max(d, at_a(j).deviation_from_identity());
    for (int j = s.im.lo; j <= s.im.hi; ++j)
        d = std::max(d, at_b(j).deviation_from_identity());
    return d;
}

GaugeTransform compose(const GaugeTransform& g2, const GaugeTransform& g1) {
    if (g2.kind == GaugeTransform::Kind::global && g1.kind == GaugeTransform::Kind::global)
        return GaugeTransform::global(g2.default_u * g1.default_u);
    GaugeTransform g;
    g.kind = GaugeTransform::Kind::local;
    g.default_u = g2.default_u * g1.default_u;
    auto merge = [&](const std::map<int, SiteUnitary>& m2, const std::map<int, SiteUnitary>& m1,
                     bool a_side) {
        std::map<int, SiteUnitary> out;
        for (const auto& [site, u] : m2) out.emplace(site, u);
        for (const auto& [site, u] : m1) out.emplace(site, u);
        for (auto& [site, u] : out)
            u = (a_side ? g2.at_a(site) : g2.at_b(site)) * (a_side ? g1.at_a(site) : g1.at_b(site));
        return out;
    };
    g.a_chain = merge(g2.a_chain, g1.a_chain, true);
    g.b_chain = merge(g2.b_chain, g1.b_chain, false);
    return g;
}

GaugeTransform random_global_gauge(Rng& rng) {
    return GaugeTransform::global(random_site_unitary(rng));
}

GaugeTransform random_local_gauge(Rng& rng, int lo, int hi) {
    std::map<int, SiteUnitary> a, b;
    for (int j = lo; j <= hi; ++j) {
        a[j] = random_site_unitary(rng);
        b[j] = random_site_unitary(rng);
    }
    return GaugeTransform::local(std::move(a), std::move(b), random_site_unitary(rng));
}

PureState apply_gauge(const GaugeTransform& g, const PureState& x) {
    g.validate();
    PureState::TermMap out;
    for (const auto& [state, amp] : x.terms()) {
        const int nr = state.re.site_count();
        const int ni = state.im.site_count();
        if (nr + ni > kGaugeSiteCap)
            throw resource_error("gauged expansion would exceed the site cap");
        // per-site columns: the transformed creation operator of the input bit
        std::vector<std::array<Amplitude, 2>> cols;
        cols.reserve(static_cast<size_t>(nr + ni));
        for (int j = state.re.lo; j <= state.re.hi; ++j) {
            const SiteUnitary& u = g.at_a(j);
            int in = state.re.bit_at(j) ? 1 : 0;
            cols.push_back({u.entry(0, in), u.entry(1, in)});
        }
        for (int j = state.im.lo; j <= state.im.hi; ++j) {
            const SiteUnitary& u = g.at_b(j);
            int in = state.im.bit_at(j) ? 1 : 0;
            cols.push_back({u.entry(0, in), u.entry(1, in)});
        }
        // expand the product over output bit assignments
        std::vector<Amplitude> amps{amp};
        for (const auto& col : cols) {
            std::vector<Amplitude> next(amps.size() * 2);
            for (size_t i = 0; i < amps.size(); ++i) {
                next[2 * i] = amps[i] * col[0];
                next[2 * i + 1] = amps[i] * col[1];
            }
            amps = std::move(next);
        }
        const int total = nr + ni;
        for (size_t idx = 0; idx < amps.size(); ++idx) {
            if (std::abs(amps[idx]) <= kAmpPrune) continue;
            BasisState t = state;
            for (int b = 0; b < total; ++b) {
                // bit b of idx, MSB-first over the cols order
                int bit = (idx >> (total - 1 - b)) & 1u;
                if (b < nr) t.re.bits[static_cast<size_t>(b)] = static_cast<uint8_t>(bit);
                else t.im.bits[static_cast<size_t>(b - nr)] = static_cast<uint8_t>(bit);
            }
            out[t] += amps[idx];
        }
    }
    return PureState::from_terms(std::move(out));
}

PureState project_to_rational(const PureState& s, double leak_tol) {
    PureState::TermMap keep;
    double leak = 0.0;
    for (const auto& [state, amp] : s.terms()) {
        if (std::abs(amp) < kProjectionPrune) continue;
        if (!state.canonical()) {
            leak += std::norm(amp);
            continue;
        }
        keep.emplace(state, amp);
    }
    if (leak > leak_tol)
        throw invariant_error("state leaks outside the rational string basis (mass " +
                              std::to_string(leak) + ")");
    if (keep.empty()) throw invariant_error("projection removed all support");
    return PureState::from_terms(std::move(keep), /*renormalize=*/true);
}

double transformed_eq_probability(const GaugeTransform& g, const PureState& x,
                                  const PureState& y) {
    GaugeTransform inv = g.inverse();
    return proj_eq_a(apply_gauge(inv, x), apply_gauge(inv, y));
}

MixedState transformed_add_a(const GaugeTransform& g, const PureState& x, const PureState& y) {
    GaugeTransform inv = g.inverse();
    PureState bx = project_to_rational(apply_gauge(inv, x));
    PureState by = project_to_rational(apply_gauge(inv, y));
    MixedState diag = mixed_add(bx, by);
    MixedState out;
    for (const auto& e : diag.ensemble)
        out.ensemble.push_back(
            {e.weight, apply_gauge(g, PureState::basis(std::get<BasisState>(e.state)))});
    out.validate();
    return out;
}

PureState TransformedOperator::image_expanded(int n) const {
    return apply_gauge(gauge, base.at(n));
}

TransformedOperator transform_operator(const GaugeTransform& g, const CauchyOperator& op) {
    g.validate();
    return TransformedOperator{g, op};
}

// ---------------------------------------------------------------------------
// product-form gauged states for the in-frame chain

namespace {

// Per-site qubit 2-vectors; a gauged basis state stays a product state, so
// the chain at horizon-scale string lengths never expands the support.
struct ProductChain {
    int lo = 0, hi = 0;
    std::vector<std::array<Amplitude, 2>> site; // amplitude of output state 0/1
};

struct GaugedBasis {
    Sign re_sign = Sign::plus, im_sign = Sign::plus;
    ProductChain re, im;
};

ProductChain lift_chain(const BitInterval& bi) {
    ProductChain c;
    c.lo = bi.lo;
    c.hi = bi.hi;
    c.site.resize(static_cast<size_t>(bi.site_count()));
    for (int j = bi.lo; j <= bi.hi; ++j)
        c.site[static_cast<size_t>(j - bi.lo)] = bi.bit_at(j)
                                                     ? std::array<Amplitude, 2>{Amplitude(0), Amplitude(1)}
                                                     : std::array<Amplitude, 2>{Amplitude(1), Amplitude(0)};
    return c;
}

GaugedBasis lift(const BasisState& s) {
    return GaugedBasis{s.re_sign, s.im_sign, lift_chain(s.re), lift_chain(s.im)};
}

void apply_chain(const GaugeTransform& g, ProductChain& c, bool a_side) {
    for (int j = c.lo; j <= c.hi; ++j) {
        const SiteUnitary& u = a_side ? g.at_a(j) : g.at_b(j);
        auto& v = c.site[static_cast<size_t>(j - c.lo)];
        v = {u.entry(0, 0) * v[0] + u.entry(0, 1) * v[1],
             u.entry(1, 0) * v[0] + u.entry(1, 1) * v[1]};
    }
}

GaugedBasis gauged(const GaugeTransform& g, GaugedBasis s) {
    apply_chain(g, s.re, true);
    apply_chain(g, s.im, false);
    return s;
}

// per-site leakage allowance when reading a product state back as a basis
// record; genuine leakage is O(1)
constexpr double kSnapTol = 1e-7;

BitInterval snap_chain(const ProductChain& c) {
    std::vector<uint8_t> bits(c.site.size());
    for (size_t i = 0; i < c.site.size(); ++i) {
        double a0 = std::abs(c.site[i][0]);
        double a1 = std::abs(c.site[i][1]);
        int dominant = a1 > a0 ? 1 : 0;
        double off = dominant ? a0 : a1;
        if (off > kSnapTol)
            throw invariant_error("site leaks off the qubit basis after back-transformation");
        bits[i] = static_cast<uint8_t>(dominant);
    }
    return BitInterval(c.lo, c.hi, std::move(bits));
}

BasisState snap(const GaugedBasis& s) {
    BasisState out;
    out.re_sign = s.re_sign;
    out.im_sign = s.im_sign;
    out.re = snap_chain(s.re);
    out.im = snap_chain(s.im);
    return out;
}

// round trip through the frame: U then U^dagger then read back
BasisState through_frame(const GaugeTransform& g, const GaugeTransform& inv,
                         const BasisState& s) {
    return snap(gauged(inv, gauged(g, lift(s))));
}

// componentwise arithmetic absolute value: both signs forced +
BasisState abs_components(const BasisState& s) {
    BasisState out = s;
    out.re_sign = Sign::plus;
    out.im_sign = Sign::plus;
    return out;
}

// conjugated threshold exponent of the pair (j, k) for basis images:
// every arithmetic step runs in the U frame through explicit forward and
// backward transformations, each chain acting on its own sites
std::pair<int, double> chain_pair_ell(const GaugeTransform& g, const GaugeTransform& inv,
                                        const GaugedBasis& psi_j, const GaugedBasis& psi_k) {
    // conjugated subtraction
    BasisState xj = canonicalize(snap(gauged(inv, psi_j)));
    BasisState xk = canonicalize(snap(gauged(inv, psi_k)));
    BasisState d = sub_a(xj, xk);
    // conjugated componentwise absolute value on U d
    BasisState a = abs_components(canonicalize(through_frame(g, inv, d)));
    // conjugated comparison against U|+,-ell>; the back-transformed component
    // values carry the whole ladder of ell thresholds at once
    DyadicComplex v = value_of(canonicalize(through_frame(g, inv, a)));
    int ell = std::min(max_ell_leq(v.re.abs()), max_ell_leq(v.im.abs()));
    double dev = std::max(v.re.to_double(), v.im.abs().to_double());
    return {ell, dev};
}

} // namespace

CauchyVerdict is_cauchy_in_frame(const GaugeTransform& g, const CauchyOperator& op,
                                 const CauchyParams& p, Exec exec) {
    g.validate();
    const GaugeTransform inv = g.inverse();

    std::vector<PureState> images;
    images.reserve(static_cast<size_t>(p.horizon) + 1);
    for (int n = 0; n <= p.horizon; ++n) images.push_back(op.at(n));
    bool all_basis = true;
    for (const auto& im : images) all_basis = all_basis && im.is_basis();

    const int count = p.horizon + 1;
    if (all_basis) {
        // frame states kept in product form
        std::vector<GaugedBasis> psi;
        psi.reserve(images.size());
        for (const auto& im : images) psi.push_back(gauged(g, lift(im.only_term())));

        detail::PairEllTable t;
        t.count = count;
        size_t pairs = static_cast<size_t>(count) * (count - 1) / 2;
        t.max_ell.assign(pairs, 0);
        t.deviation.assign(pairs, 0.0);
        const int64_t n2 = static_cast<int64_t>(pairs);
        auto cell = [&](int64_t flat) {
            int j = 0;
            int64_t rem = flat;
            int64_t row = count - 1;
            while (rem >= row) {
                rem -= row;
                --row;
                ++j;
            }
            int k = j + 1 + static_cast<int>(rem);
            auto [ell, dev] = chain_pair_ell(g, inv, psi[static_cast<size_t>(j)],
                                               psi[static_cast<size_t>(k)]);
            size_t idx = detail::pair_index(j, k, count);
            t.max_ell[idx] = ell;
            t.deviation[idx] = dev;
        };
        if (exec == Exec::parallel) {
#pragma omp parallel for schedule(dynamic) num_threads(qframe::par::max_threads())
            for (int64_t i = 0; i < n2; ++i) cell(i);
        } else {
            for (int64_t i = 0; i < n2; ++i) cell(i);
        }
        return detail::verdict_from_pair_table(t, p);
    }

    // superposed images: expanded chain at ensemble level
    std::vector<PureState> back;
    back.reserve(images.size());
    for (const auto& im : images)
        back.push_back(project_to_rational(apply_gauge(inv, apply_gauge(g, im))));

    detail::ProbPairTable t;
    t.count = count;
    t.ell_max = p.ell_max;
    const int width = p.ell_max + 1;
    size_t pairs = static_cast<size_t>(count) * (count - 1) / 2;
    t.p.assign(pairs * static_cast<size_t>(width), 0.0);
    const int64_t n2 = static_cast<int64_t>(pairs);
    auto cell = [&](int64_t flat) {
        int j = 0;
        int64_t rem = flat;
        int64_t row = count - 1;
        while (rem >= row) {
            rem -= row;
            --row;
            ++j;
        }
        int k = j + 1 + static_cast<int>(rem);
        MixedState ens = mixed_sub(back[static_cast<size_t>(j)], back[static_cast<size_t>(k)]);
        size_t base = detail::pair_index(j, k, count) * static_cast<size_t>(width);
        for (const auto& e : ens.ensemble) {
            const BasisState& d = std::get<BasisState>(e.state);
            BasisState a = abs_components(canonicalize(through_frame(g, inv, d)));
            DyadicComplex v = value_of(canonicalize(through_frame(g, inv, a)));
            int ell_ok = std::min(max_ell_leq(v.re.abs()), max_ell_leq(v.im.abs()));
            for (int ell = 0; ell <= p.ell_max; ++ell)
                if (ell_ok >= ell) t.p[base + static_cast<size_t>(ell)] += e.weight;
        }
    };
    if (exec == Exec::parallel) {
#pragma omp parallel for schedule(dynamic) num_threads(qframe::par::max_threads())
        for (int64_t i = 0; i < n2; ++i) cell(i);
    } else {
        for (int64_t i = 0; i < n2; ++i) cell(i);
    }
    return detail::verdict_from_prob_table(t, p);
}

FseqSpec::FseqSpec(int top_, std::vector<uint8_t> pattern_, int m_max_)
    : top(top_), pattern(std::move(pattern_)), m_max(m_max_) {
    if (top < 0) throw domain_error("fseq top index must be nonnegative");
    if (pattern.empty() || pattern.front() != 1)
        throw domain_error("fseq pattern must start with 1 (f(top) = 1)");
    for (uint8_t b : pattern)
        if (b > 1) throw domain_error("fseq pattern bits must be 0 or 1");
    if (m_max < 2) throw domain_error("fseq needs m_max >= 2 for pair probes");
}

bool FseqSpec::f(int j) const {
    if (j > top) return false;
    return pattern[static_cast<size_t>(top - j) % pattern.size()] != 0;
}

BasisState FseqSpec::state_at(int m) const {
    if (m < 1 || m > m_max) throw domain_error("fseq index outside [1, m_max]");
    std::vector<uint8_t> bits(static_cast<size_t>(top + m + 1));
    for (int j = -m; j <= top; ++j) bits[static_cast<size_t>(j + m)] = f(j) ? 1 : 0;
    BasisState s;
    s.re = BitInterval(-m, top, std::move(bits));
    return s;
}

std::vector<DivergenceEntry> original_frame_divergence(const FseqSpec& spec,
                                                       const GaugeTransform& g, int ell,
                                                       Exec exec) {
    g.validate();
    // the experiment is empty if the gauge fixes every occupied a-chain site
    double dev = 0.0;
    for (int j = -spec.m_max; j <= spec.top; ++j)
        dev = std::max(dev, g.at_a(j).deviation_from_identity());
    if (dev <= kGaugeTol)
        throw domain_error("degenerate experiment: gauge is the identity on the occupied sites");

    std::vector<detail::ValueGroups> groups(static_cast<size_t>(spec.m_max) + 1);
    for (int m = 1; m <= spec.m_max; ++m)
        groups[static_cast<size_t>(m)] =
            detail::group_by_value(apply_gauge(g, PureState::basis(spec.state_at(m))));

    std::vector<std::pair<int, int>> pairs;
    for (int j = 1; j <= spec.m_max; ++j)
        for (int k = j + 1; k <= spec.m_max; ++k) pairs.emplace_back(j, k);

    std::vector<DivergenceEntry> table(pairs.size());
    const int64_t n = static_cast<int64_t>(pairs.size());
    auto cell = [&](int64_t i) {
        auto [j, k] = pairs[static_cast<size_t>(i)];
        table[static_cast<size_t>(i)] = {
            j, k,
            detail::pair_probability(groups[static_cast<size_t>(j)],
                                     groups[static_cast<size_t>(k)], ell)};
    };
    if (exec == Exec::parallel) {
#pragma omp parallel for schedule(dynamic) num_threads(qframe::par::max_threads())
        for (int64_t i = 0; i < n; ++i) cell(i);
    } else {
        for (int64_t i = 0; i < n; ++i) cell(i);
    }
    return table;
}

} // namespace qframe

#include "qframe/dfs.hpp"

#include <algorithm>
#include <cmath>

#include "qframe/errors.hpp"

namespace qframe {

namespace {

CMatrix projector_from_basis(const std::vector<CVector>& basis, size_t dim) {
    CMatrix p(dim, dim);
    for (const auto& v : basis)
        for (size_t r = 0; r < dim; ++r)
            for (size_t c = 0; c < dim; ++c) p.at(r, c) += v[r] * std::conj(v[c]);
    return p;
}

CVector unit(std::initializer_list<std::pair<size_t, std::complex<double>>> entries, size_t dim) {
    CVector v(dim, 0.0);
    for (const auto& [idx, amp] : entries) v[idx] = amp;
    double n = vec_norm(v);
    for (auto& x : v) x /= n;
    return v;
}

} // namespace

void LogicalCode::validate() const {
    const double tol = kCodeTol;
    auto check_proj = [&](const CMatrix& p, const char* name) {
        if ((p * p).max_abs_diff(p) > tol)
            throw invariant_error(std::string(name) + " is not idempotent");
        if (p.dagger().max_abs_diff(p) > tol)
            throw invariant_error(std::string(name) + " is not Hermitian");
    };
    check_proj(proj0, "proj0");
    check_proj(proj1, "proj1");
    CMatrix zero(dim(), dim());
    if ((proj0 * proj1).max_abs_diff(zero) > tol)
        throw invariant_error("code subspaces are not orthogonal");
}

LogicalCode two_qubit_isospin_code() {
    LogicalCode code;
    code.n_physical = 2;
    const size_t dim = 4;
    // basis order |q1 q2>, qubit state 0 = spin up; weight descending
    code.basis0 = {
        unit({{0b00, 1.0}}, dim),                  // |00>, m = +1
        unit({{0b01, 1.0}, {0b10, 1.0}}, dim),     // (|01> + |10>)/sqrt2, m = 0
        unit({{0b11, 1.0}}, dim),                  // |11>, m = -1
    };
    code.basis1 = {
        unit({{0b01, 1.0}, {0b10, -1.0}}, dim), // singlet
    };
    code.proj0 = projector_from_basis(code.basis0, dim);
    code.proj1 = projector_from_basis(code.basis1, dim);
    code.validate();
    return code;
}

LogicalCode three_qubit_code() {
    LogicalCode code;
    code.n_physical = 3;
    const size_t dim = 8;
    const double r23 = std::sqrt(2.0 / 3.0);
    const double r16 = 1.0 / std::sqrt(6.0);
    // block 0: qubits 1,2 coupled to the singlet, free spin on qubit 3
    code.basis0 = {
        unit({{0b010, 1.0}, {0b100, -1.0}}, dim), // singlet x |0>, m = +1/2
        unit({{0b011, 1.0}, {0b101, -1.0}}, dim), // singlet x |1>, m = -1/2
    };
    // block 1: the I=1/2 component of triplet(1,2) x qubit 3
    code.basis1 = {
        // sqrt(2/3)|1,+1>|1> - sqrt(1/3)|1,0>|0>
        unit({{0b001, r23}, {0b010, -r16}, {0b100, -r16}}, dim),
        // sqrt(1/3)|1,0>|1> - sqrt(2/3)|1,-1>|0>
        unit({{0b011, r16}, {0b101, r16}, {0b110, -r23}}, dim),
    };
    code.proj0 = projector_from_basis(code.basis0, dim);
    code.proj1 = projector_from_basis(code.basis1, dim);
    code.validate();
    return code;
}

CMatrix three_qubit_spin32_projector() {
    LogicalCode code = three_qubit_code();
    return CMatrix::identity(8) - code.proj0 - code.proj1;
}

namespace {

CMatrix tensor_power(const CMatrix& u, int n) {
    CMatrix acc = u;
    for (int i = 1; i < n; ++i) acc = acc.kron(u);
    return acc;
}

double commutator_defect(const LogicalCode& code, const CMatrix& big) {
    double d = 0.0;
    for (const CMatrix* p : {&code.proj0, &code.proj1}) {
        CMatrix c = (*p) * big - big * (*p);
        d = std::max(d, c.spectral_norm());
    }
    return d;
}

} // namespace

double invariance_defect(const LogicalCode& code, const SiteUnitary& u) {
    u.validate();
    return commutator_defect(code, tensor_power(u.to_cmatrix(), code.n_physical));
}

double invariance_defect_product(const LogicalCode& code, const std::vector<SiteUnitary>& us) {
    if (static_cast<int>(us.size()) != code.n_physical)
        throw domain_error("one unitary per physical qubit required");
    CMatrix big = us[0].to_cmatrix();
    for (size_t i = 1; i < us.size(); ++i) big = big.kron(us[i].to_cmatrix());
    return commutator_defect(code, big);
}

double invariance_defect_sweep(const LogicalCode& code, int samples, uint64_t seed, Exec exec) {
    Rng rng(seed);
    std::vector<SiteUnitary> us;
    us.reserve(static_cast<size_t>(samples));
    for (int i = 0; i < samples; ++i) us.push_back(random_site_unitary(rng));

    std::vector<double> defects(static_cast<size_t>(samples), 0.0);
    if (exec == Exec::parallel) {
#pragma omp parallel for schedule(dynamic) num_threads(qframe::par::max_threads())
        for (int i = 0; i < samples; ++i)
            defects[static_cast<size_t>(i)] = invariance_defect(code, us[static_cast<size_t>(i)]);
    } else {
        for (int i = 0; i < samples; ++i)
            defects[static_cast<size_t>(i)] = invariance_defect(code, us[static_cast<size_t>(i)]);
    }
    double worst = 0.0;
    for (double d : defects) worst = std::max(worst, d);
    return worst;
}

CVector encode_logical(const std::string& bits, const LogicalCode& code, int representative) {
    if (bits.empty()) throw domain_error("empty logical register");
    auto pick = [&](const std::vector<CVector>& basis) -> const CVector& {
        if (representative < 0) return basis.back(); // lowest weight
        if (static_cast<size_t>(representative) >= basis.size())
            throw domain_error("representative index outside the subspace basis");
        return basis[static_cast<size_t>(representative)];
    };
    CVector state{1.0};
    for (char c : bits) {
        if (c != '0' && c != '1') throw domain_error("logical bits must be 0 or 1");
        const CVector& rep = pick(c == '0' ? code.basis0 : code.basis1);
        if (state.size() * rep.size() > kLogicalDimCap)
            throw resource_error("logical register exceeds the dimension cap");
        state = kron(state, rep);
    }
    return state;
}

std::string DecodeResult::argmax_bits() const {
    std::string s;
    for (const auto& p : positions) s.push_back(p.p1 > p.p0 ? '1' : '0');
    return s;
}

double DecodeResult::max_leakage() const {
    double m = 0.0;
    for (const auto& p : positions) m = std::max(m, p.leakage);
    return m;
}

DecodeResult decode_logical(const CVector& state, const LogicalCode& code) {
    const size_t dim = state.size();
    int total_bits = 0;
    while ((size_t{1} << total_bits) < dim) ++total_bits;
    if ((size_t{1} << total_bits) != dim) throw domain_error("state dimension is not a power of 2");
    if (total_bits % code.n_physical != 0)
        throw domain_error("state dimension does not tile into code blocks");
    const int positions = total_bits / code.n_physical;

    DecodeResult out;
    for (int i = 0; i < positions; ++i) {
        DecodePosition p;
        CVector v0 = apply_block(code.proj0, state, total_bits, i * code.n_physical,
                                 code.n_physical);
        CVector v1 = apply_block(code.proj1, state, total_bits, i * code.n_physical,
                                 code.n_physical);
        p.p0 = vec_norm(v0) * vec_norm(v0);
        p.p1 = vec_norm(v1) * vec_norm(v1);
        p.leakage = std::max(0.0, 1.0 - p.p0 - p.p1);
        out.positions.push_back(p);
    }
    return out;
}

CVector apply_global_to_register(const SiteUnitary& u, const CVector& state) {
    int total_bits = 0;
    while ((size_t{1} << total_bits) < state.size()) ++total_bits;
    CVector cur = state;
    CMatrix m = u.to_cmatrix();
    for (int q = 0; q < total_bits; ++q) cur = apply_block(m, cur, total_bits, q, 1);
    return cur;
}

CVector apply_per_qubit(const std::vector<SiteUnitary>& us, const CVector& state) {
    int total_bits = 0;
    while ((size_t{1} << total_bits) < state.size()) ++total_bits;
    if (static_cast<int>(us.size()) != total_bits)
        throw domain_error("one unitary per qubit required");
    CVector cur = state;
    for (int q = 0; q < total_bits; ++q)
        cur = apply_block(us[static_cast<size_t>(q)].to_cmatrix(), cur, total_bits, q, 1);
    return cur;
}

CollapseReport frame_collapse_demo(const LogicalCode& code, int gauge_samples, int strings,
                                   uint64_t seed) {
    if (gauge_samples < 1 || strings < 1)
        throw domain_error("collapse demo needs at least one gauge and one string");
    Rng rng(seed);

    // logical payloads from random rational string states; at least one 0 bit
    // so the register carries a block-0 component that moves under the gauge
    const int radius = code.n_physical == 2 ? 2 : 1;
    std::vector<std::string> patterns;
    while (static_cast<int>(patterns.size()) < strings) {
        BasisState s = random_real_canonical(rng, radius);
        std::string bits;
        for (int j = s.re.hi; j >= s.re.lo; --j) bits.push_back(s.re.bit_at(j) ? '1' : '0');
        if (bits.find('0') == std::string::npos) continue;
        patterns.push_back(bits);
    }

    std::vector<CVector> encoded;
    encoded.reserve(patterns.size());
    for (const auto& bits : patterns) encoded.push_back(encode_logical(bits, code));

    CollapseReport report;
    report.n_physical = code.n_physical;
    report.gauge_samples = gauge_samples;
    report.strings = strings;
    report.logical_constant = true;

    std::vector<SiteUnitary> gauges{SiteUnitary::identity()};
    for (int i = 0; i < gauge_samples; ++i) gauges.push_back(random_site_unitary(rng));

    for (size_t gi = 0; gi < gauges.size(); ++gi) {
        CollapseRow row;
        row.gauge_index = static_cast<int>(gi);
        row.logical_match = true;
        row.min_fidelity = 1.0;
        row.max_fidelity = 0.0;
        for (size_t si = 0; si < encoded.size(); ++si) {
            CVector moved = apply_global_to_register(gauges[gi], encoded[si]);
            DecodeResult dec = decode_logical(moved, code);
            if (dec.argmax_bits() != patterns[si]) row.logical_match = false;
            row.max_leakage = std::max(row.max_leakage, dec.max_leakage());
            double fid = std::norm(dot(moved, encoded[si]));
            row.min_fidelity = std::min(row.min_fidelity, fid);
            row.max_fidelity = std::max(row.max_fidelity, fid);
        }
        if (gi > 0)
            report.max_nonidentity_fidelity =
                std::max(report.max_nonidentity_fidelity, row.max_fidelity);
        if (!row.logical_match) report.logical_constant = false;
        report.rows.push_back(row);
    }

    // non-global control: independent unitaries per physical qubit
    int total_qubits = code.n_physical * static_cast<int>(patterns.front().size());
    std::vector<SiteUnitary> locals;
    for (int q = 0; q < total_qubits; ++q) locals.push_back(random_site_unitary(rng));
    CVector moved = apply_per_qubit(locals, encoded.front());
    DecodeResult before = decode_logical(encoded.front(), code);
    DecodeResult after = decode_logical(moved, code);
    report.local_control_leakage = after.max_leakage();
    for (size_t i = 0; i < after.positions.size(); ++i) {
        report.local_control_shift =
            std::max(report.local_control_shift,
                     std::abs(after.positions[i].p0 - before.positions[i].p0));
        report.local_control_shift =
            std::max(report.local_control_shift,
                     std::abs(after.positions[i].p1 - before.positions[i].p1));
    }
    report.local_control_disturbed =
        report.local_control_leakage > 1e-9 || report.local_control_shift > 1e-6;
    return report;
}

} // namespace qframe

#include "qframe/frames.hpp"

#include <algorithm>
#include <deque>

#include "qframe/errors.hpp"

namespace qframe {

Frame step_frame(const FrameStep& w, const Frame& f) {
    Frame child;
    child.id = f.id + 1; // field builders assign their own ids
    child.stage = f.stage + 1;
    child.parent = f.id;
    child.relative = w.gauge;
    child.cumulative = compose(w.gauge, f.cumulative);
    return child;
}

Frame apply_same_stage_gauge(const GaugeTransform& u, const Frame& f) {
    Frame out = f;
    out.relative = compose(u, f.relative);
    out.cumulative = compose(u, f.cumulative);
    return out;
}

double gauge_max_diff(const GaugeTransform& g1, const GaugeTransform& g2) {
    std::vector<int> sites{0};
    for (const auto& [site, u] : g1.a_chain) sites.push_back(site);
    for (const auto& [site, u] : g1.b_chain) sites.push_back(site);
    for (const auto& [site, u] : g2.a_chain) sites.push_back(site);
    for (const auto& [site, u] : g2.b_chain) sites.push_back(site);
    double d = g1.default_u.max_abs_diff(g2.default_u);
    for (int s : sites) {
        d = std::max(d, g1.at_a(s).max_abs_diff(g2.at_a(s)));
        d = std::max(d, g1.at_b(s).max_abs_diff(g2.at_b(s)));
    }
    return d;
}

double PathAudit::max_step_deviation() const {
    double d = reassociation_deviation;
    for (double s : step_deviation) d = std::max(d, s);
    return d;
}

Frame compose_path(const std::vector<FrameStep>& steps, const Frame& f0, PathAudit* audit) {
    if (steps.empty()) throw domain_error("path must contain at least one step");
    Frame cur = f0;
    for (const auto& step : steps) {
        Frame next = step_frame(step, cur);
        if (audit)
            audit->step_deviation.push_back(
                gauge_max_diff(next.cumulative, compose(step.gauge, cur.cumulative)));
        cur = next;
    }
    if (audit) {
        // reassociate: fold the step gauges right-to-left before applying
        GaugeTransform folded = steps.back().gauge;
        for (size_t i = steps.size() - 1; i-- > 0;) folded = compose(folded, steps[i].gauge);
        audit->reassociation_deviation =
            gauge_max_diff(cur.cumulative, compose(folded, f0.cumulative));
    }
    return cur;
}

const FrameField::Node& FrameField::node(int64_t id) const {
    for (const auto& n : nodes)
        if (n.id == id) return n;
    throw domain_error("unknown frame id");
}

FrameField build_frame_field(int depth, int gauge_samples, bool two_way, uint64_t seed,
                             int64_t node_cap, bool identity_gauges) {
    if (depth < 1 || gauge_samples < 1)
        throw domain_error("frame field needs depth >= 1 and gauge_samples >= 1");
    Rng rng(seed);
    auto sample_gauge = [&]() {
        return identity_gauges ? GaugeTransform::identity() : random_global_gauge(rng);
    };

    FrameField field;
    int64_t next_id = 0;
    auto guard = [&] {
        if (static_cast<int64_t>(field.nodes.size()) >= node_cap)
            throw resource_error("frame field exceeds the node cap");
    };

    field.nodes.push_back({next_id++, 0, std::nullopt, GaugeTransform::identity(),
                           GaugeTransform::identity()});
    field.stage_min = 0;
    field.stage_max = depth;

    // descendants
    std::deque<int64_t> frontier{0};
    for (int stage = 1; stage <= depth; ++stage) {
        std::deque<int64_t> next_frontier;
        for (int64_t pid : frontier) {
            const FrameField::Node parent = field.node(pid);
            for (int s = 0; s < gauge_samples; ++s) {
                guard();
                GaugeTransform u = sample_gauge();
                FrameField::Node child{next_id++, stage, pid, u,
                                       compose(u, parent.cumulative)};
                field.edges.push_back({pid, child.id});
                field.nodes.push_back(child);
                next_frontier.push_back(child.id);
            }
        }
        frontier = std::move(next_frontier);
    }

    if (two_way) {
        field.stage_min = -depth;
        std::deque<int64_t> down_frontier{0}; // frames acquiring new parents
        for (int stage = -1; stage >= -depth; --stage) {
            std::deque<int64_t> next_frontier;
            for (int64_t cid : down_frontier) {
                const FrameField::Node child = field.node(cid);
                for (int s = 0; s < gauge_samples; ++s) {
                    guard();
                    GaugeTransform u = sample_gauge();
                    // child = W(u) parent, so the ancestor's cumulative gauge
                    // is u^-1 times the child's
                    FrameField::Node ancestor{next_id++, stage, std::nullopt,
                                              GaugeTransform::identity(),
                                              compose(u.inverse(), child.cumulative)};
                    field.edges.push_back({ancestor.id, cid});
                    field.nodes.push_back(ancestor);
                    next_frontier.push_back(ancestor.id);
                }
            }
            down_frontier = std::move(next_frontier);
        }
    }
    return field;
}

namespace {

// probability that the gauged states are =_AU, evaluated with the frame's
// conjugated projector
double frame_eq(const GaugeTransform& g, const PureState& a, const PureState& b) {
    return transformed_eq_probability(g, a, b);
}

bool eval_law_in_frame(const std::string& law, const GaugeTransform& g) {
    const double pass = 1.0 - 1e-9;
    auto lift = [&](const BasisState& s) { return apply_gauge(g, PureState::basis(s)); };
    if (law == "additive-inverse") {
        for (const char* lit : {"+1.1", "-10.01", "+0.001", "+0", "-1"}) {
            BasisState x = parse_real_state(lit);
            BasisState nx = encode(DyadicComplex{} - value_of(x));
            MixedState sum = transformed_add_a(g, lift(x), lift(nx));
            PureState zero = lift(BasisState::zero());
            for (const auto& e : sum.ensemble)
                if (e.weight > 1e-12 &&
                    frame_eq(g, std::get<PureState>(e.state), zero) < pass)
                    return false;
        }
        return true;
    }
    if (law == "add-commutes") {
        const std::pair<const char*, const char*> pairs[] = {
            {"+1.1", "+10.01"}, {"-1", "+0.111"}, {"+0", "-101.1"}};
        for (const auto& [sx, sy] : pairs) {
            BasisState x = parse_real_state(sx);
            BasisState y = parse_real_state(sy);
            MixedState xy = transformed_add_a(g, lift(x), lift(y));
            MixedState yx = transformed_add_a(g, lift(y), lift(x));
            const auto& sxy = std::get<PureState>(xy.ensemble.front().state);
            const auto& syx = std::get<PureState>(yx.ensemble.front().state);
            if (frame_eq(g, sxy, syx) < pass) return false;
        }
        return true;
    }
    if (law == "broken-doubling") {
        // deliberately false: claims 1 +_A 1 =_A 0
        BasisState one = parse_real_state("+1");
        MixedState sum = transformed_add_a(g, lift(one), lift(one));
        PureState zero = lift(BasisState::zero());
        const auto& s = std::get<PureState>(sum.ensemble.front().state);
        return frame_eq(g, s, zero) >= pass;
    }
    throw domain_error("unknown law '" + law + "'");
}

} // namespace

std::vector<std::string> known_laws() {
    return {"additive-inverse", "add-commutes", "broken-doubling"};
}

LawReport demo_physical_law_transport(const FrameField& field, const std::string& law_name) {
    LawReport report;
    report.law = law_name;
    for (const auto& node : field.nodes)
        report.per_frame.emplace_back(node.id, eval_law_in_frame(law_name, node.cumulative));
    report.uniform = true;
    report.value = report.per_frame.front().second;
    for (const auto& [id, v] : report.per_frame)
        if (v != report.value) report.uniform = false;
    return report;
}

} // namespace qframe

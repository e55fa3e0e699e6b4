#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qframe/gauge.hpp"

namespace qframe {

// A reference frame in the iterated field: its stage, the gauge relative to
// the frame it came from, and the cached cumulative gauge back to the base.
struct Frame {
    int64_t id = 0;
    int stage = 0;
    std::optional<int64_t> parent;
    GaugeTransform relative;   // gauge of the step that created this frame
    GaugeTransform cumulative; // ordered product down from the base frame

    static Frame base() { return {}; }
};

// Stage-step operator W(U): takes a frame at stage j to a frame at stage
// j+1 with cumulative gauge U * U'.
struct FrameStep {
    GaugeTransform gauge;
};

Frame step_frame(const FrameStep& w, const Frame& f);

// Same-stage gauge change V(U); W(U) = V(U) * W(identity).
Frame apply_same_stage_gauge(const GaugeTransform& u, const Frame& f);

// max entrywise difference of two gauges over their override sites and the
// default (probed at site 0)
double gauge_max_diff(const GaugeTransform& g1, const GaugeTransform& g2);

struct PathAudit {
    // per-step recurrence deviation |U_{j+k} - U'_{j+k} U_{j+k-1}|
    std::vector<double> step_deviation;
    // final cumulative gauge vs the independently re-associated product
    double reassociation_deviation = 0.0;
    double max_step_deviation() const;
};

// Fold of step_frame over a nonempty step list; records the recurrence audit.
Frame compose_path(const std::vector<FrameStep>& steps, const Frame& f0,
                   PathAudit* audit = nullptr);

struct FrameField {
    struct Node {
        int64_t id;
        int stage;
        std::optional<int64_t> parent;
        GaugeTransform relative;
        GaugeTransform cumulative;
    };
    struct Edge {
        int64_t from;
        int64_t to;
    };
    std::vector<Node> nodes; // base frame first
    std::vector<Edge> edges; // parent -> child (emanation direction)
    int stage_min = 0;
    int stage_max = 0;

    const Node& node(int64_t id) const;
};

// Finite truncation of the frame field: gauge_samples children per frame per
// stage up to depth; two_way additionally grows ancestor stages with negative
// indices. Deterministic for a given seed. identity_gauges replaces sampling
// with identity steps (pure isomorphism chains).
FrameField build_frame_field(int depth, int gauge_samples, bool two_way, uint64_t seed,
                             int64_t node_cap = 200000, bool identity_gauges = false);

// Per-frame truth values of a built-in dyadic-arithmetic law evaluated with
// the frame's conjugated operations. Laws: "additive-inverse",
// "add-commutes", "broken-doubling" (the last is false by construction).
struct LawReport {
    std::string law;
    std::vector<std::pair<int64_t, bool>> per_frame; // (frame id, verdict)
    bool uniform = false;                            // all frames agree
    bool value = false;                              // the common verdict
};

LawReport demo_physical_law_transport(const FrameField& field, const std::string& law_name);
std::vector<std::string> known_laws();

} // namespace qframe

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qframe/errors.hpp"
#include "qframe/frames.hpp"
#include "qframe/reports.hpp"

using namespace qframe;

TEST_CASE("step frame advances the stage and accumulates the gauge") {
    Rng rng(3);
    Frame f0 = Frame::base();
    f0.cumulative = random_global_gauge(rng);
    GaugeTransform u = random_global_gauge(rng);
    Frame child = step_frame({u}, f0);
    CHECK(child.stage == 1);
    CHECK(child.parent == f0.id);
    CHECK(gauge_max_diff(child.cumulative, compose(u, f0.cumulative)) < 1e-15);
    // identity step: same cumulative gauge, stage + 1
    Frame iso = step_frame({GaugeTransform::identity()}, f0);
    CHECK(iso.stage == 1);
    CHECK(gauge_max_diff(iso.cumulative, f0.cumulative) < 1e-15);
}

TEST_CASE("W(U) decomposes as V(U) after the identity step") {
    Rng rng(5);
    for (int i = 0; i < 50; ++i) {
        Frame f = Frame::base();
        f.cumulative = random_global_gauge(rng);
        GaugeTransform u = random_global_gauge(rng);
        Frame direct = step_frame({u}, f);
        Frame via = apply_same_stage_gauge(u, step_frame({GaugeTransform::identity()}, f));
        CHECK(direct.stage == via.stage);
        CHECK(gauge_max_diff(direct.cumulative, via.cumulative) < 1e-12);
    }
}

TEST_CASE("path composition: single step, identity paths, audits") {
    Rng rng(7);
    Frame f0 = Frame::base();
    GaugeTransform u = random_global_gauge(rng);
    PathAudit audit;
    Frame one = compose_path({{u}}, f0, &audit);
    Frame direct = step_frame({u}, f0);
    CHECK(one.stage == direct.stage);
    CHECK(gauge_max_diff(one.cumulative, direct.cumulative) < 1e-15);
    CHECK(audit.max_step_deviation() < 1e-12);

    // identity steps advance the stage only
    std::vector<FrameStep> ids(4, FrameStep{GaugeTransform::identity()});
    Frame idp = compose_path(ids, f0);
    CHECK(idp.stage == 4);
    CHECK(gauge_max_diff(idp.cumulative, f0.cumulative) < 1e-15);

    CHECK_THROWS_AS(compose_path({}, f0), domain_error);
}

TEST_CASE("random paths satisfy the recurrence and reassociation") {
    Rng rng(11);
    for (int i = 0; i < 100; ++i) {
        Frame f0 = Frame::base();
        f0.cumulative = random_global_gauge(rng);
        std::vector<FrameStep> steps;
        int len = 1 + static_cast<int>(rng() % 6);
        for (int s = 0; s < len; ++s) steps.push_back({random_global_gauge(rng)});
        PathAudit audit;
        Frame end = compose_path(steps, f0, &audit);
        CHECK(end.stage == len);
        CHECK(audit.max_step_deviation() < 1e-10);
        CHECK(static_cast<int>(audit.step_deviation.size()) == len);
    }
}

TEST_CASE("frame field: one stage, three children") {
    FrameField f = build_frame_field(1, 3, false, 42);
    CHECK(f.nodes.size() == 4);
    CHECK(f.edges.size() == 3);
    CHECK(f.stage_min == 0);
    CHECK(f.stage_max == 1);
    for (const auto& e : f.edges) CHECK(e.from == 0);
}

TEST_CASE("frame field: identity chain") {
    FrameField f = build_frame_field(2, 1, false, 42, 1000, /*identity_gauges=*/true);
    CHECK(f.nodes.size() == 3);
    CHECK(f.edges.size() == 2);
    for (const auto& n : f.nodes)
        CHECK(gauge_max_diff(n.cumulative, GaugeTransform::identity()) < 1e-15);
}

TEST_CASE("frame field node counts and acyclicity") {
    FrameField f = build_frame_field(3, 2, false, 9);
    // 1 + 2 + 4 + 8
    CHECK(f.nodes.size() == 15);
    CHECK(f.edges.size() == 14);
    // edges always step one stage up
    for (const auto& e : f.edges)
        CHECK(f.node(e.to).stage == f.node(e.from).stage + 1);
    // every non-root frame has an inbound edge
    for (const auto& n : f.nodes) {
        if (n.stage == f.stage_min) continue;
        bool has_in = false;
        for (const auto& e : f.edges) has_in = has_in || e.to == n.id;
        CHECK(has_in);
    }
}

TEST_CASE("two-way field grows ancestor stages") {
    FrameField f = build_frame_field(2, 2, true, 17);
    CHECK(f.stage_min == -2);
    CHECK(f.stage_max == 2);
    // descendants 1+2+4, ancestors 2+4
    CHECK(f.nodes.size() == 13);
    // the base frame now has inbound edges from stage -1
    int base_in = 0;
    for (const auto& e : f.edges)
        if (e.to == 0) ++base_in;
    CHECK(base_in == 2);
    // ancestor cumulative gauges invert their step: child = W(u) ancestor
    for (const auto& e : f.edges) {
        const auto& parent = f.node(e.from);
        const auto& child = f.node(e.to);
        if (parent.stage >= 0) continue;
        // recover u from the two cumulatives and check the recurrence
        GaugeTransform u = child.stage == parent.stage + 1
                               ? compose(child.cumulative, parent.cumulative.inverse())
                               : GaugeTransform::identity();
        CHECK(gauge_max_diff(compose(u, parent.cumulative), child.cumulative) < 1e-12);
    }
}

TEST_CASE("frame field resource guard") {
    CHECK_THROWS_AS(build_frame_field(10, 10, false, 1, 500), resource_error);
}

TEST_CASE("law transport is uniform across frames") {
    FrameField f = build_frame_field(2, 2, false, 23);
    LawReport add_inv = demo_physical_law_transport(f, "additive-inverse");
    CHECK(add_inv.uniform);
    CHECK(add_inv.value);
    CHECK(add_inv.per_frame.size() == f.nodes.size());

    LawReport comm = demo_physical_law_transport(f, "add-commutes");
    CHECK(comm.uniform);
    CHECK(comm.value);

    // falsity is frame-invariant too
    LawReport broken = demo_physical_law_transport(f, "broken-doubling");
    CHECK(broken.uniform);
    CHECK_FALSE(broken.value);

    CHECK_THROWS_AS(demo_physical_law_transport(f, "no-such-law"), domain_error);
}

TEST_CASE("field export formats") {
    FrameField f = build_frame_field(1, 2, false, 29);
    nlohmann::json doc = reports::field_to_json(f);
    CHECK(doc["nodes"].size() == 3);
    CHECK(doc["edges"].size() == 2);
    CHECK(doc["nodes"][0].contains("gauge"));
    std::string dot = reports::field_to_graphviz(f);
    CHECK(dot.find("digraph") != std::string::npos);
    CHECK(dot.find("f0 -> f1") != std::string::npos);
}

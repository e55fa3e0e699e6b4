// qframe: rational string states, Cauchy operators, gauge frames.
// Every subcommand is seeded and emits a machine-readable report; identical
// config + seed gives byte-identical output.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "qframe/arithmetic.hpp"
#include "qframe/errors.hpp"
#include "qframe/reports.hpp"
#include "qframe/state_json.hpp"
#include "qframe/version.hpp"

namespace {

using qframe::reports::Report;

struct OutputOptions {
    std::string format = "json";
    std::string out_path;
};

std::string render_text(const Report& r) {
    std::ostringstream os;
    os << (r.pass ? "PASS" : "FAIL") << " " << r.doc["subcommand"].get<std::string>() << "\n";
    if (r.doc.contains("results")) {
        for (auto it = r.doc["results"].begin(); it != r.doc["results"].end(); ++it) {
            if (it.value().is_primitive()) os << "  " << it.key() << " = " << it.value().dump() << "\n";
        }
    }
    return os.str();
}

int emit(const Report& r, const OutputOptions& out) {
    std::string body;
    if (out.format == "json") body = r.doc.dump(2) + "\n";
    else if (out.format == "csv") {
        if (r.csv.empty()) throw qframe::domain_error("this subcommand has no CSV table");
        body = r.csv;
    } else if (out.format == "text") {
        body = render_text(r);
    } else {
        throw qframe::domain_error("unknown format '" + out.format + "'");
    }
    if (out.out_path.empty()) {
        std::cout << body;
    } else {
        std::ofstream f(out.out_path, std::ios::binary);
        if (!f) throw qframe::domain_error("cannot open output file " + out.out_path);
        f << body;
    }
    return r.pass ? 0 : 1;
}

std::string slurp(const std::string& path) {
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream f(path, std::ios::binary);
    if (!f) throw qframe::domain_error("cannot open " + path);
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

// arith utility mode: apply one relation or operation to serialized states
int run_state_op(const std::string& op, const std::string& lhs_path, const std::string& rhs_path,
                 uint64_t seed, int ell, const OutputOptions& out) {
    using namespace qframe;
    BasisState x = canonicalize(deserialize_basis(slurp(lhs_path)));
    nlohmann::json results;
    if (op == "abs") {
        results["state"] = to_json(abs_a(x));
    } else {
        BasisState y = canonicalize(deserialize_basis(slurp(rhs_path)));
        if (op == "add") results["state"] = to_json(add_a(x, y));
        else if (op == "sub") results["state"] = to_json(sub_a(x, y));
        else if (op == "mul") results["state"] = to_json(mul_a(x, y));
        else if (op == "div") results["state"] = to_json(div_a(x, y, AccuracyLevel(ell)));
        else if (op == "eq") results["value"] = eq_a(x, y);
        else if (op == "leq") results["value"] = leq_a(x, y);
        else throw domain_error("unknown state op '" + op + "'");
    }
    Report r;
    r.pass = true;
    r.doc = nlohmann::json{{"tool", "qframe"},
                           {"version", kVersion},
                           {"subcommand", "arith-op"},
                           {"config", {{"op", op}, {"ell", ell}, {"seed", seed}}},
                           {"results", results},
                           {"pass", true}};
    return emit(r, out);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"qframe: rational string states, Cauchy operators, and gauge frame fields"};
    app.set_version_flag("--version", qframe::kVersion);
    app.require_subcommand(1);

    qframe::reports::CommonParams params;
    OutputOptions out;
    app.fallthrough();
    app.add_option("--seed", params.seed, "random seed (echoed into every report)");
    app.add_option("--format", out.format, "json|csv|text")->check(CLI::IsMember({"json", "csv", "text"}));
    app.add_option("--out", out.out_path, "write the report to FILE instead of stdout");

    auto add_probe_opts = [&](CLI::App* sub) {
        sub->add_option("--ell-max,--ell", params.ell_max, "largest precision exponent probed");
        sub->add_option("--horizon", params.horizon, "largest sequence index probed");
        sub->add_option("--witness-budget", params.witness_budget, "largest witness h searched");
    };

    // kmin
    auto* kmin_cmd = app.add_subcommand("kmin", "minimal-base table with brute-force oracle");
    int kmin_max = 10;
    kmin_cmd->add_option("--max", kmin_max, "largest n in the table");

    // arith
    auto* arith_cmd = app.add_subcommand("arith", "oracle-equivalence sweep (or one state op)");
    int arith_radius = 3, arith_div_pairs = 10000, arith_ell = 8;
    std::string arith_op, arith_lhs = "-", arith_rhs = "-";
    arith_cmd->add_option("--radius", arith_radius, "interval radius of the exhaustive sweep");
    arith_cmd->add_option("--div-pairs", arith_div_pairs, "random division pairs");
    arith_cmd->add_option("--op", arith_op,
                          "utility mode: add|sub|mul|div|eq|leq|abs on serialized states");
    arith_cmd->add_option("--lhs", arith_lhs, "state JSON file or - for stdin");
    arith_cmd->add_option("--rhs", arith_rhs, "state JSON file or - for stdin");
    arith_cmd->add_option("--div-ell", arith_ell, "accuracy 2^-ell for --op div");
    add_probe_opts(arith_cmd);

    // cauchy
    auto* cauchy_cmd = app.add_subcommand("cauchy", "operator Cauchy verdict");
    std::string cauchy_op = "const:1";
    cauchy_cmd->add_option("--op", cauchy_op, "const:N | trunc:N/D | itrunc:N/D | sqrt2 | parity");
    add_probe_opts(cauchy_cmd);

    // gauge
    auto* gauge_cmd = app.add_subcommand("gauge", "covariance + preservation, or fseq divergence");
    int gauge_pairs = 100, gauge_ell = -1, gauge_mmax = 12;
    std::string fseq_pattern, u_spec = "rot:0.3";
    gauge_cmd->add_option("--samples", params.samples, "random gauges sampled");
    gauge_cmd->add_option("--pairs", gauge_pairs, "random state pairs per covariance sweep");
    gauge_cmd->add_option("--fseq", fseq_pattern, "divergence mode: pattern ('ones' or 0/1 digits)");
    gauge_cmd->add_option("--u", u_spec, "unitary spec rot:THETA | bitflip | haar");
    gauge_cmd->add_option("--div-ell", gauge_ell,
                          "precision exponent of the divergence table (default: --ell, else 2)");
    gauge_cmd->add_option("--m-max", gauge_mmax, "largest fseq index probed");
    add_probe_opts(gauge_cmd);

    // frames
    auto* frames_cmd = app.add_subcommand("frames", "frame-field build + law transport");
    bool two_way = false;
    int frame_paths = 100;
    frames_cmd->add_option("--depth", params.depth, "iteration depth");
    frames_cmd->add_option("--samples", params.samples, "children per frame per stage");
    frames_cmd->add_flag("--two-way", two_way, "extend to ancestor stages");
    frames_cmd->add_option("--paths", frame_paths, "random composition paths audited");

    // dfs
    auto* dfs_cmd = app.add_subcommand("dfs", "logical-subspace invariance + collapse demo");
    int dfs_gauges = 20, dfs_strings = 10;
    dfs_cmd->add_option("--samples", params.samples, "random global elements for the defect sweep");
    dfs_cmd->add_option("--gauges", dfs_gauges, "global gauges in the collapse demo");
    dfs_cmd->add_option("--strings", dfs_strings, "encoded strings in the collapse demo");


    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        using namespace qframe::reports;
        if (kmin_cmd->parsed()) return emit(run_kmin(kmin_max, params.seed), out);
        if (arith_cmd->parsed()) {
            if (!arith_op.empty()) return run_state_op(arith_op, arith_lhs, arith_rhs, params.seed, arith_ell, out);
            return emit(run_arith(params, arith_radius, arith_div_pairs), out);
        }
        if (cauchy_cmd->parsed()) return emit(run_cauchy(params, cauchy_op), out);
        if (gauge_cmd->parsed()) {
            if (!fseq_pattern.empty()) {
                int div_ell = gauge_ell >= 0 ? gauge_ell
                              : gauge_cmd->count("--ell-max") ? params.ell_max
                                                              : 2;
                return emit(run_gauge_divergence(params, fseq_pattern, u_spec, div_ell,
                                                 gauge_mmax),
                            out);
            }
            if (!gauge_cmd->count("--samples")) params.samples = 20;
            return emit(run_gauge(params, gauge_pairs), out);
        }
        if (frames_cmd->parsed()) {
            if (!frames_cmd->count("--samples")) params.samples = 3;
            return emit(run_frames(params, two_way, frame_paths), out);
        }
        if (dfs_cmd->parsed()) {
            if (!dfs_cmd->count("--samples")) params.samples = 1000;
            return emit(run_dfs(params, dfs_gauges, dfs_strings), out);
        }
    } catch (const qframe::domain_error& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const qframe::parse_error& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const qframe::error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}

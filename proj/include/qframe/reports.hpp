#pragma once

#include <string>

#include <json.hpp>

#include "qframe/cauchy.hpp"
#include "qframe/dfs.hpp"
#include "qframe/frames.hpp"
#include "qframe/gauge.hpp"
#include "qframe/qukit.hpp"
#include "qframe/refcheck.hpp"

namespace qframe::reports {

// One experiment run: machine-readable document plus the overall verdict.
struct Report {
    nlohmann::json doc;
    bool pass = false;
    std::string csv; // filled when the result is naturally tabular
};

struct CommonParams {
    uint64_t seed = 12345;
    int ell_max = 8;
    int horizon = 64;
    int witness_budget = 32;
    int samples = 50;
    int depth = 2;

    nlohmann::json to_json() const;
    CauchyParams cauchy() const { return CauchyParams(ell_max, horizon, witness_budget); }
};

// ---- JSON encodings of the module interfaces ----

nlohmann::json verdict_to_json(const CauchyVerdict& v);
nlohmann::json unitary_to_json(const SiteUnitary& u);
SiteUnitary unitary_from_json(const nlohmann::json& doc);
nlohmann::json gauge_to_json(const GaugeTransform& g);
GaugeTransform gauge_from_json(const nlohmann::json& doc);
nlohmann::json field_to_json(const FrameField& f);
std::string field_to_graphviz(const FrameField& f);
std::string divergence_csv(const std::vector<DivergenceEntry>& table, int ell);
nlohmann::json base_to_json(const PrimeBase& b);
nlohmann::json qukit_state_to_json(const QukitBasisState& s, const PrimeBase& b);
nlohmann::json matrix_to_json(const CMatrix& m);
nlohmann::json code_to_json(const LogicalCode& c);

// ---- spec string parsers (CLI surface) ----

// const:N | trunc:N/D | itrunc:N/D | sqrt2 | parity
CauchyOperator parse_operator_spec(const std::string& spec);
// rot:THETA | bitflip | haar (haar consumes the rng)
SiteUnitary parse_unitary_spec(const std::string& spec, Rng& rng);
// ones | explicit 0/1 pattern starting with 1
std::vector<uint8_t> parse_fseq_pattern(const std::string& spec);

// ---- subcommand runners ----

Report run_kmin(int max_n, uint64_t seed);
Report run_arith(const CommonParams& p, int radius, int div_pairs);
Report run_cauchy(const CommonParams& p, const std::string& op_spec);
Report run_gauge(const CommonParams& p, int pair_samples);
Report run_gauge_divergence(const CommonParams& p, const std::string& fseq_pattern,
                            const std::string& u_spec, int ell, int m_max);
Report run_frames(const CommonParams& p, bool two_way, int paths);
Report run_dfs(const CommonParams& p, int collapse_gauges, int collapse_strings);

} // namespace qframe::reports

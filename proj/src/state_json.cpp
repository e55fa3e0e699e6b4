#include "qframe/state_json.hpp"

#include "qframe/errors.hpp"

namespace qframe {

using nlohmann::json;

json to_json(const BitInterval& bi, Sign sign) {
    return json{{"sign", std::string(1, sign_char(sign))},
                {"lo", bi.lo},
                {"hi", bi.hi},
                {"bits", [&] {
                     std::string s;
                     for (int j = bi.hi; j >= bi.lo; --j) s.push_back(bi.bit_at(j) ? '1' : '0');
                     return s;
                 }()}};
}

json to_json(const BasisState& s) {
    return json{{"re", to_json(s.re, s.re_sign)}, {"im", to_json(s.im, s.im_sign)}};
}

json to_json(const PureState& s) {
    json terms = json::array();
    for (const auto& [state, amp] : s.terms())
        terms.push_back(json{{"state", to_json(state)}, {"amp", {amp.real(), amp.imag()}}});
    return json{{"terms", terms}};
}

json to_json(const MixedState& s) {
    json ensemble = json::array();
    for (const auto& e : s.ensemble) {
        json state = std::holds_alternative<BasisState>(e.state)
                         ? to_json(std::get<BasisState>(e.state))
                         : to_json(std::get<PureState>(e.state));
        ensemble.push_back(json{{"w", e.weight}, {"state", state}});
    }
    return json{{"ensemble", ensemble}};
}

namespace {

[[noreturn]] void schema_fail(const std::string& path, const std::string& what) {
    throw parse_error("schema violation at " + path + ": " + what);
}

std::pair<Sign, BitInterval> component_from_json(const json& doc, const std::string& path) {
    if (!doc.is_object()) schema_fail(path, "expected object");
    for (const char* key : {"sign", "lo", "hi", "bits"})
        if (!doc.contains(key)) schema_fail(path, std::string("missing key '") + key + "'");
    const auto& sign_str = doc["sign"];
    if (!sign_str.is_string() || sign_str.get<std::string>().size() != 1)
        schema_fail(path + ".sign", "expected \"+\" or \"-\"");
    Sign sign;
    try {
        sign = sign_from_char(sign_str.get<std::string>()[0]);
    } catch (const parse_error& e) {
        schema_fail(path + ".sign", e.what());
    }
    if (!doc["lo"].is_number_integer() || !doc["hi"].is_number_integer())
        schema_fail(path, "lo/hi must be integers");
    int lo = doc["lo"].get<int>();
    int hi = doc["hi"].get<int>();
    if (lo > 0 || hi < 0) schema_fail(path, "interval must contain index 0");
    if (!doc["bits"].is_string()) schema_fail(path + ".bits", "expected string");
    std::string bits_str = doc["bits"].get<std::string>();
    if (bits_str.size() != static_cast<size_t>(hi - lo + 1))
        schema_fail(path + ".bits", "length " + std::to_string(bits_str.size()) +
                                        " does not match interval [" + std::to_string(lo) +
                                        "," + std::to_string(hi) + "]");
    std::vector<uint8_t> bits(bits_str.size());
    for (size_t i = 0; i < bits_str.size(); ++i) {
        char c = bits_str[i];
        if (c != '0' && c != '1') schema_fail(path + ".bits", "bad digit");
        // document lists hi..lo, storage is lo..hi
        bits[bits_str.size() - 1 - i] = c == '1' ? 1 : 0;
    }
    return {sign, BitInterval(lo, hi, std::move(bits))};
}

json parse_text(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw parse_error(e.what(), static_cast<long long>(e.byte));
    }
}

} // namespace

BasisState basis_state_from_json(const json& doc) {
    if (!doc.is_object() || !doc.contains("re") || !doc.contains("im"))
        schema_fail("$", "expected object with 're' and 'im'");
    auto [rs, rb] = component_from_json(doc["re"], "$.re");
    auto [is, ib] = component_from_json(doc["im"], "$.im");
    BasisState out;
    out.re_sign = rs;
    out.re = rb;
    out.im_sign = is;
    out.im = ib;
    return out;
}

PureState pure_state_from_json(const json& doc) {
    if (doc.is_object() && doc.contains("re")) return PureState::basis(basis_state_from_json(doc));
    if (!doc.is_object() || !doc.contains("terms") || !doc["terms"].is_array())
        schema_fail("$", "expected object with 'terms' array");
    PureState::TermMap terms;
    size_t i = 0;
    for (const auto& term : doc["terms"]) {
        std::string path = "$.terms[" + std::to_string(i++) + "]";
        if (!term.is_object() || !term.contains("state") || !term.contains("amp"))
            schema_fail(path, "expected {state, amp}");
        const auto& amp = term["amp"];
        if (!amp.is_array() || amp.size() != 2) schema_fail(path + ".amp", "expected [re,im]");
        BasisState state = basis_state_from_json(term["state"]);
        if (terms.count(state)) schema_fail(path, "duplicate basis state");
        terms[state] = Amplitude(amp[0].get<double>(), amp[1].get<double>());
    }
    return PureState::from_terms(std::move(terms));
}

MixedState mixed_state_from_json(const json& doc) {
    if (!doc.is_object() || !doc.contains("ensemble") || !doc["ensemble"].is_array())
        schema_fail("$", "expected object with 'ensemble' array");
    MixedState out;
    size_t i = 0;
    for (const auto& entry : doc["ensemble"]) {
        std::string path = "$.ensemble[" + std::to_string(i++) + "]";
        if (!entry.is_object() || !entry.contains("w") || !entry.contains("state"))
            schema_fail(path, "expected {w, state}");
        const auto& state = entry["state"];
        MixedState::Entry e;
        e.weight = entry["w"].get<double>();
        if (state.is_object() && state.contains("terms")) e.state = pure_state_from_json(state);
        else e.state = basis_state_from_json(state);
        out.ensemble.push_back(std::move(e));
    }
    out.validate();
    return out;
}

std::string serialize(const BasisState& s) { return to_json(s).dump(); }
std::string serialize(const PureState& s) { return to_json(s).dump(); }
std::string serialize(const MixedState& s) { return to_json(s).dump(); }

BasisState deserialize_basis(const std::string& text) {
    return basis_state_from_json(parse_text(text));
}

PureState deserialize_pure(const std::string& text) {
    return pure_state_from_json(parse_text(text));
}

MixedState deserialize_mixed(const std::string& text) {
    return mixed_state_from_json(parse_text(text));
}

} // namespace qframe

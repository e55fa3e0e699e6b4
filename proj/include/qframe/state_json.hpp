#pragma once

#include <string>

#include <json.hpp>

#include "qframe/state.hpp"

namespace qframe {

// JSON document formats:
//   BasisState: {"re":{"sign":"+","lo":-4,"hi":3,"bits":"10110101"},"im":{...}}
//               (bits listed from index hi down to lo, most significant first)
//   PureState:  {"terms":[{"state":{...},"amp":[re,im]},...]}
//   MixedState: {"ensemble":[{"w":p,"state":{...}},...]}

nlohmann::json to_json(const BitInterval& bi, Sign sign);
nlohmann::json to_json(const BasisState& s);
nlohmann::json to_json(const PureState& s);
nlohmann::json to_json(const MixedState& s);

BasisState basis_state_from_json(const nlohmann::json& doc);
PureState pure_state_from_json(const nlohmann::json& doc);
MixedState mixed_state_from_json(const nlohmann::json& doc);

std::string serialize(const BasisState& s);
std::string serialize(const PureState& s);
std::string serialize(const MixedState& s);

// Parses a BasisState or PureState document (a bare state object or one with
// "terms"). Throws parse_error with the byte position for malformed JSON and
// with a JSON-path message for schema violations.
BasisState deserialize_basis(const std::string& text);
PureState deserialize_pure(const std::string& text);
MixedState deserialize_mixed(const std::string& text);

} // namespace qframe

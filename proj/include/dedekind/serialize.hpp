#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "dedekind/conjectures.hpp"
#include "dedekind/invpoly.hpp"
#include "dedekind/kloosterman.hpp"
#include "dedekind/numroots.hpp"

namespace dedekind::serialize {

using nlohmann::json;

inline constexpr const char* kToolName = "dedekind";
inline constexpr const char* kToolVersion = "0.1.0";

/// {"b", "degree", "phi", "terms": {"<exponent>": coefficient}}
json to_json(const InvPoly& p);

/// Inverse of to_json(InvPoly). Throws std::invalid_argument on malformed input.
InvPoly invpoly_from_json(const json& j);

json to_json(const RootReport& r);
json to_json(const conjectures::Verdict& v);
json to_json(const conjectures::Conj21Prediction& p);
json to_json(const std::vector<conjectures::Table1Row>& rows);
json to_json(const kloosterman::Prop25Report& r);
json to_json(const numroots::ComplexRootSet& r);

enum class ReportStatus { ok, counterexamples, error };

std::string to_string(ReportStatus s);

/// Envelope shared by every subcommand.
json make_report(const std::string& command, ReportStatus status, json payload);

}  // namespace dedekind::serialize

#pragma once

// JSON form of verification reports, one object per line in sweep output.
// Counts are decimal strings so they survive JSON readers limited to doubles.

#include "hyperext/io.hpp"
#include "hyperext/verifier.hpp"

#include "json.hpp"

#include <string>

namespace hyperext {

inline constexpr const char* kSchema = "hyperext/1";

using Json = nlohmann::ordered_json;

inline Json report_to_json(const VerificationReport& rep, bool include_timing = true) {
    Json j;
    j["schema"] = kSchema;
    j["kind"] = rep.kind;
    Json cell = Json::object();
    for (const auto& [key, value] : rep.cell) cell[key] = value;
    j["cell"] = cell;
    j["regime"] = rep.regime ? Json(to_string(*rep.regime)) : Json(nullptr);
    j["claimed_bound"] = to_decimal(rep.claimed_bound);
    j["observed_max"] = to_decimal(rep.observed_max);
    j["gap_bound"] = rep.gap_bound ? Json(to_decimal(*rep.gap_bound)) : Json(nullptr);
    j["observed_below_bound"] = rep.observed_below_bound ? Json(to_decimal(*rep.observed_below_bound)) : Json(nullptr);
    j["status"] = rep.status ? Json(to_string(*rep.status)) : Json(nullptr);
    j["threshold_met"] = rep.threshold_met;
    if (rep.witness_family) {
        Json members = Json::array();
        for (const Hypergraph& h : *rep.witness_family) members.push_back(serialize_hypergraph(h));
        j["witness"] = members;
    } else {
        j["witness"] = rep.witness ? Json(serialize_hypergraph(*rep.witness)) : Json(nullptr);
    }
    j["families"] = rep.families;
    j["nodes"] = rep.nodes;
    j["millis"] = include_timing ? rep.millis : 0;
    if (!rep.error.empty()) j["error"] = rep.error;
    return j;
}

inline std::string report_to_jsonl(const VerificationReport& rep, bool include_timing = true) {
    return report_to_json(rep, include_timing).dump() + "\n";
}

}  // namespace hyperext

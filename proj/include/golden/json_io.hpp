#pragma once

// JSON mapping for node sequences, results, error reports and profiles.

#include <json.hpp>
#include <span>

#include "golden/criteria.hpp"
#include "golden/export.hpp"
#include "golden/methods.hpp"

namespace golden {

using Json = nlohmann::json;

// Accepts [[x, y], ...], [{"x": .., "y": ..}, ...] or {"nodes": [...], "k0": k}.
// Shape errors throw Error(invalid_nodes); a non-numeric k0 throws
// Error(invalid_param).
NodeSequence nodes_from_json(const Json& doc);
Json nodes_to_json(std::span<const Node> nodes);
Json to_json(const NodeSequence& seq);

// Unknown keys and ill-typed values throw Error(invalid_param). Null values
// count as absent.
MethodParams params_from_json(const Json& params);
// Parameters the method uses, defaults filled in.
Json params_to_json(Method method, const MethodParams& params);

Json to_json(const GoldenErrorReport& report);

// transformed ([x, y] pairs), provenance, the same nodes as transformed_nodes
// objects, hilltops, outcomes and, for the curve method, accepted flags per
// interval.
Json result_to_json(Method method, const GoldenResult& result);

Json to_json(const ProfileExport& profile);
// Reads "samples" and, when present, "markers" or the transformed_nodes /
// hilltops of an interpolate response.
ProfileExport profile_from_json(const Json& doc);

}  // namespace golden

#pragma once

#include <filesystem>
#include <string>

#include <json.hpp>

#include "unicell/opetopic_set.hpp"
#include "unicell/validate.hpp"

namespace unicell {

using Json = nlohmann::json;

// Document schema:
//   { "name": str, "truncation": int, "virtual_ceiling": int,
//     "cells": [ { "id": str, "dim": int,
//                  "target": str,                       (dim >= 1)
//                  "source": { "cell": str,             (dim >= 1)
//                              "children": [ { "slot": int, "node": {...} } ] } } ] }
// Unknown keys and missing required keys are rejected. Objects are emitted
// with sorted keys, so save(load(doc)) == doc up to key order.

Json diagram_to_json(const PastingDiagram& pd);
PastingDiagram diagram_from_json(const Json& j, int dim);

Json to_json(const OpetopicSet& x);
OpetopicSet opetopic_set_from_json(const Json& j);

Json to_json(const ValidationReport& r);

/// Reads a JSON file; throws DataError with the path on I/O or parse errors.
Json read_json_file(const std::filesystem::path& path);
void write_json_file(const std::filesystem::path& path, const Json& j);

}  // namespace unicell

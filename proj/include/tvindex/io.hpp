#pragma once

// JSON forms of setups, results and branching tables. Rationals travel as
// "p/q" strings in lowest terms; no floating point appears anywhere.

#include <filesystem>
#include <string>
#include <string_view>

#include "json.hpp"

#include "tvindex/branching.hpp"
#include "tvindex/index.hpp"
#include "tvindex/model.hpp"
#include "tvindex/spectrum.hpp"
#include "tvindex/sweep.hpp"

namespace tvi::io {

using Json = nlohmann::json;

/// Canonical text: sorted keys, two-space indent, trailing newline.
std::string dump(const Json& j);

Json to_json(const OperatorSetup& setup);
/// Throws ParseError naming the offending field. Does not validate.
OperatorSetup setup_from_json(const Json& j);

OperatorSetup read_setup(const std::filesystem::path& path);
void write_setup(const std::filesystem::path& path, const OperatorSetup& setup);

Json read_json(const std::filesystem::path& path);

Json to_json(const ValidationReport& report);
Json to_json(const IndexResult& result, const WeightVector& b);
Json to_json(const SignatureSum& result, const WeightVector& b);
Json to_json(const SpectrumTable& table);
Json to_json(const BranchingTable& table);
Json failures_to_json(const std::vector<SweepFailure>& failures);

/// Array of records {"b": [int...], "beta": "p/q"}.
BranchingTable branching_from_json(const Json& j);

/// Array of records {"b": [int...], "index": int | "inf"}; b missing from the
/// table have multiplicity 0.
TorusIndex torus_index_from_json(const Json& j);

/// "1,0,-1" -> {1, 0, -1}.
WeightVector parse_weight_list(std::string_view text);
SlopeVector parse_slope_list(std::string_view text);

}  // namespace tvi::io

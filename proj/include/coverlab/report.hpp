#pragma once

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

#include "coverlab/measure.hpp"
#include "coverlab/pipeline.hpp"
#include "coverlab/search.hpp"
#include "coverlab/threshold.hpp"

namespace coverlab {

using Json = nlohmann::json;  // key-ordered, so dumps are canonical

// Exact rational fields are emitted as "num/den" strings with a float mirror
// under "<key>_float". Exact fields never lose precision.
void put_rat(Json& j, const std::string& key, const Rat& value);

Json domination_json(const DominationReport& report, const Poset& poset);
Json influence_json(const InfluenceReport& report);
Json threshold_json(const ThresholdReport& report);
Json russo_check_json(const RussoCheckReport& report);
Json bound_chain_json(const BoundChainReport& report);
Json search_json(const SearchResult& result, int k, int n, const std::string& witness_file,
                 double wall_time_ms);

// Reproducibility sidecar written beside each requested output file as
// "<out>.manifest.json": the command, its parameters, the seed when the run
// is randomized, the budgets, and the produced files.
void write_run_manifest(const std::string& out_path, const std::string& command,
                        const Json& parameters, std::optional<std::uint64_t> seed,
                        const Json& budgets, const std::vector<std::string>& outputs);

}  // namespace coverlab

#pragma once

#include <cstdint>
#include <optional>

#include "json.hpp"
#include "lip/generators.hpp"
#include "lip/induced_dfs.hpp"
#include "lip/oracle.hpp"
#include "lip/ramsey.hpp"
#include "lip/spectral.hpp"

namespace lip {

using Json = nlohmann::ordered_json;

/// Run report. `sigma_seed` is absent when σ was the identity.
Json to_json(const GraphPair& pair, const RunResult& result, std::optional<std::uint64_t> sigma_seed,
             std::optional<std::size_t> target_len, bool include_trace);

Json to_json(const SpectralReport& report);
Json to_json(const Certificate& cert);
Json to_json(const ConditionReport& report);
Json to_json(const LongestPathResult& result);
Json to_json(const RamseyReport& report);
/// Clique partition sidecar of a superimposed instance.
Json cliques_to_json(const CliqueInstance& instance);

}  // namespace lip

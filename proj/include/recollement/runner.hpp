#pragma once

#include "recollement/algebra.hpp"
#include "recollement/report.hpp"

#include <cstdint>
#include <string>

namespace recoll {

/// Deterministic run configuration: the same config always yields a
/// byte-identical report.
struct RunConfig {
    std::string algebra;     // built-in name or document path
    std::string idempotent;  // element expression, "all-vertex-subsets", "all", or ""
    std::string ideal;       // comma-separated generator expressions (optional)
    std::size_t dim_bound = 2;
    uint64_t seed = 0;
    std::string mode = "brute"; // "brute" | "vertex"
};

/// Commands: analyze | jans-check | verify-recollement | kuhn-demo | ideals | ttf.
/// The first form resolves cfg.algebra as a built-in name or document path.
Report run_command(const std::string& command, const RunConfig& cfg);
Report run_command(const std::string& command, const AlgebraPtr& algebra,
                   const RunConfig& cfg);

} // namespace recoll

#pragma once

#include <string>

#include <json.hpp>

#include "gcmorse/pipeline.hpp"

namespace gcmorse {

// Reports use ordered JSON and deterministic iteration everywhere: the same
// input, flags and seed must produce byte-identical output.  (Timings are
// never part of a report; the CLI prints them to stderr.)
using Json = nlohmann::ordered_json;

// Full pipeline report: input echo, relabeling, tree, one-particle values,
// complex summary, trial/final function values, repair log, critical cells,
// Morse boundary matrices, homology by both routes, agreement flag, gauge
// summary.
Json run_report(const PipelineResult& r);

// Gauge-focused report: parameters, per-edge phase expressions, constraint
// expressions of critical 2-cells (nonzero ones).
Json gauge_report(const PipelineResult& r);

// The 1-skeleton of the two-particle complex in DOT (undirected); nodes are
// 0-cells, edges are 1-cells labeled by name; critical cells are bold.
std::string dot_skeleton(const PipelineResult& r);

}  // namespace gcmorse

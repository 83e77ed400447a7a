#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "megan/graph.hpp"

namespace megan {

// Fruchterman-Reingold with seeded initial positions and a fixed iteration
// count; bit-deterministic for a given (graph, seed).
std::vector<std::pair<double, double>> force_layout(const Graph& g, uint64_t seed,
                                                    int iterations = 200);

// Static SVG drawing: nodes colored from RGB feature rows when the feature
// dimension is 3 (gray otherwise); optional per-node highlight halo in [0,1].
std::string render_svg(const Graph& g, uint64_t layout_seed,
                       const std::vector<double>* node_highlight = nullptr);

// Nearest named color for prompt rendering; empty when features are not RGB.
std::string color_name(const Graph& g, int node);

}  // namespace megan

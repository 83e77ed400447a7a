#pragma once

#include <string>

#include "json.hpp"
#include "megan/graph.hpp"

namespace megan {

// Graph in the dataset item layout: node_count, one row per undirected edge,
// features aligned with that edge list.
nlohmann::ordered_json graph_to_json(const Graph& g);
Graph graph_from_json(const nlohmann::ordered_json& j, const std::string& context);

nlohmann::ordered_json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const nlohmann::ordered_json& j, int expected_rows, int cols_hint,
                        const std::string& what);

}  // namespace megan

#pragma once

#include <string>

#include "megan/graph.hpp"

namespace megan {

// One JSON document per dataset. Each undirected edge is listed once;
// symmetric directed pairs are materialized on load. Doubles are written
// with round-trip precision.
void save_dataset(const Dataset& dataset, const std::string& path);
Dataset load_dataset(const std::string& path);

std::string dataset_to_json(const Dataset& dataset);
Dataset dataset_from_json(const std::string& text, const std::string& context);

}  // namespace megan

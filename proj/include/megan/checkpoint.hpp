#pragma once

#include <string>

#include "megan/optimizer.hpp"

namespace megan {

// Flat binary checkpoint: magic, count, then per matrix
// {u32 name_len, name bytes, u32 rows, u32 cols, row-major doubles}.
void save_params(const ParamMap& params, const std::string& path);
ParamMap load_params(const std::string& path);

}  // namespace megan

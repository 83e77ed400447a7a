#pragma once

#include <string>

#include "megan/concepts.hpp"
#include "megan/llm_client.hpp"
#include "megan/losses.hpp"
#include "megan/model.hpp"
#include "megan/prototype.hpp"

namespace megan {

struct ReportConfig {
  int n_nearest = 4;
  std::string task_description;
  LlmEndpointConfig llm;
};

// Fully resolved run configuration: defaults, overlaid by the config file,
// overlaid by CLI flags. The resolved form is echoed into every stage's
// output directory.
struct RunConfig {
  uint64_t seed = 0;
  int workers = 0;  // 0 = hardware default
  ModelConfig model;
  TrainConfig train;
  MiningConfig mining;
  GaConfig ga;
  ReportConfig report;
};

std::string run_config_to_json(const RunConfig& config);
// Applies the fields present in `text` on top of `base`.
RunConfig run_config_from_json(const std::string& text, const std::string& context,
                               RunConfig base = RunConfig());
RunConfig load_run_config(const std::string& path, RunConfig base = RunConfig());

}  // namespace megan

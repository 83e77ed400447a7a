#pragma once

#include <string>

#include "megan/run_config.hpp"
#include "megan/train.hpp"

namespace megan {

constexpr int kStageVersion = 1;

// Checkpoint loading: `checkpoint_path` points at checkpoint.bin; the model
// manifest is its sibling manifest.json.
struct LoadedModel {
  ModelState state;
  std::string dataset_digest;
  std::string checkpoint_digest;
  double target_center = 0.0;
  uint64_t seed = 0;
};

LoadedModel load_model(const std::string& checkpoint_path);

void stage_gen_data(const std::string& task, int count, uint64_t seed, const std::string& out_path);

// Trains on the dataset's train split and writes config.json, manifest.json,
// checkpoint.bin, metrics.txt (one row per epoch) and metrics.json (test
// metrics) into out_dir.
EvalMetrics stage_train(const std::string& dataset_path, const RunConfig& config,
                        const std::string& out_dir);

// Concept mining over the full dataset; writes catalog.json and the config
// echo. Refuses a dataset whose digest differs from the checkpoint manifest.
ConceptCatalog stage_mine(const std::string& checkpoint_path, const std::string& dataset_path,
                          const RunConfig& config, const std::string& out_dir);

// Prototype optimization for every catalog concept; writes the updated
// catalog.json into out_dir.
ConceptCatalog stage_prototype(const std::string& catalog_path,
                               const std::string& checkpoint_path,
                               const std::string& dataset_path, const RunConfig& config,
                               const std::string& out_dir);

// Report compilation and rendering; metrics_path may be empty.
void stage_report(const std::string& catalog_path, const std::string& dataset_path,
                  const std::string& metrics_path, const RunConfig& config,
                  const std::string& timestamp, const std::string& out_dir);

// One explanation record per item in the query file (dataset format), as a
// JSON array string.
std::string stage_query(const std::string& checkpoint_path, const std::string& catalog_path,
                        const std::string& graph_file, const RunConfig& config);

EvalMetrics metrics_from_json_file(const std::string& path);

}  // namespace megan

#pragma once

#include <optional>
#include <vector>

#include "megan/losses.hpp"
#include "megan/model.hpp"

namespace megan {

struct TrainResult {
  ModelState state;
  std::vector<LossBreakdown> history;  // one entry per epoch
  double target_center = 0.0;          // regression co-training centering statistic
};

TrainResult train(const Dataset& dataset, const ModelConfig& model_config,
                  const TrainConfig& train_config);
TrainResult train(const Dataset& dataset, ModelState initial, const TrainConfig& train_config);

struct EvalMetrics {
  std::optional<double> accuracy;
  std::optional<double> r2;
  std::optional<double> node_auc;
  std::optional<double> edge_auc;
};

EvalMetrics evaluate(const Dataset& dataset, Split split, const ModelState& state);

// Micro-averaged ROC AUC with average ranks for ties; absent when only one
// label class is present.
std::optional<double> auc_score(const std::vector<double>& scores, const std::vector<int>& labels);

double median(std::vector<double> values);

}  // namespace megan

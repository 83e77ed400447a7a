#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "megan/graph.hpp"
#include "megan/optimizer.hpp"
#include "megan/tape.hpp"

namespace megan {

struct ModelConfig {
  int layers = 3;            // L
  int channels = 2;          // K
  int node_feature_dim = 3;  // N0
  int edge_feature_dim = 1;  // M0
  int hidden_dim = 64;       // D
  int attention_dim = 32;    // width of the attention scoring MLP
  int projection_dim = 128;  // P
  int output_dim = 1;        // C
  TaskKind task_kind = TaskKind::regression;
  std::vector<int> head_hidden{64};
  double leaky_slope = 0.2;
  double importance_threshold = 0.5;

  void validate() const;
};

struct ModelState {
  ModelConfig config;
  ParamMap params;

  static ModelState init(const ModelConfig& config, uint64_t seed);
};

// Per-channel node mask overrides applied at the pooling stage; channels
// without an entry use the model's own importances.
using MaskOverride = std::vector<std::optional<std::vector<double>>>;

struct ForwardOutput {
  Matrix y_pred;               // 1 x C (logits for classification)
  ExplanationMasks masks;      // V x K, E x K
  Matrix channel_embeddings;   // K x D
  Matrix channel_projections;  // K x P, unit rows
  std::vector<Matrix> layer_edge_attentions;  // L entries of E x K raw scores
};

ForwardOutput forward(const Graph& graph, const ModelState& state,
                      const MaskOverride* mask_override = nullptr);

// Change in the scalar output when channel k's pooled contribution is zeroed
// (regression: the prediction; classification: the class-k logit).
double leave_one_out_deviation(const Graph& graph, int channel, const ModelState& state);
std::vector<double> leave_one_out_all(const Graph& graph, const ModelState& state);

// --- tape-level interface for training ------------------------------------

struct TapeBindings {
  std::map<std::string, Value> values;
  Value get(const std::string& name) const;
};

TapeBindings bind_params(Tape& tape, const ModelState& state);

struct EncodeNodes {
  Value node_embeds;                // V x D after the final layer
  Value node_mask;                  // V x K
  Value edge_mask;                  // E x K
  std::vector<Value> layer_scores;  // per layer: E x K raw attention scores
  std::vector<int> src, dst;        // directed endpoints, cached
};

EncodeNodes encode_graph(Tape& tape, const Graph& graph, const ModelConfig& config,
                         const TapeBindings& params);

struct ReadoutNodes {
  std::vector<Value> channel_h;  // 1 x D per channel
  std::vector<Value> channel_z;  // 1 x P per channel, unit rows
  Value y;                       // 1 x C
};

ReadoutNodes readout(Tape& tape, const EncodeNodes& enc, const ModelConfig& config,
                     const TapeBindings& params, const MaskOverride* mask_override = nullptr);

// Pooling + projection of a single channel under an explicit node mask; used
// for the augmented contrastive views.
Value channel_projection(Tape& tape, const EncodeNodes& enc, int channel,
                         const std::vector<double>& node_mask, const ModelConfig& config,
                         const TapeBindings& params);

}  // namespace megan

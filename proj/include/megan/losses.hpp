#pragma once

#include <cstdint>
#include <vector>

#include "megan/graph.hpp"
#include "megan/rng.hpp"
#include "megan/tape.hpp"

namespace megan {

struct TrainConfig {
  double beta = 1.0;   // explanation co-training weight
  double gamma = 0.1;  // sparsity weight
  double mu = 1.0;     // contrastive weight
  double tau = 0.1;    // InfoNCE temperature
  double threshold = 0.5;  // mask binarization threshold t
  double noise_std = 0.1;  // augmentation noise sigma
  int epochs = 100;
  int batch_size = 32;
  double learning_rate = 1e-3;
  double evidence_delta = 0.5;  // regression co-training dead zone
  double evidence_shift = 1.0;  // pooled-evidence shift s
  bool detach_positive = false;
  uint64_t seed = 0;

  void validate() const;
};

struct LossBreakdown {
  double total = 0.0;
  double prediction = 0.0;
  double explanation = 0.0;
  double sparsity = 0.0;
  double contrastive = 0.0;
};

// Mean squared error (regression) or softmax cross-entropy (classification).
Value prediction_loss(Value y_pred, const std::vector<double>& target, TaskKind task);

// Per-channel binary targets for the explanation co-training loss.
std::vector<char> cotraining_targets(const std::vector<double>& target, TaskKind task,
                                     double center, double delta);

// Mean over channels of BCE(sigmoid(pooled evidence - shift), target_k).
Value explanation_cotraining_loss(Value node_mask, const std::vector<char>& channel_targets,
                                  double shift);

// Mean absolute mask value over node and edge masks together.
Value sparsity_loss(Value node_mask, Value edge_mask);

// Binarize channel k of the node mask at `threshold`, add N(0, sigma^2)
// noise, clamp to [0,1].
std::vector<double> augment_mask(const Matrix& node_mask, int channel, Rng& rng, double threshold,
                                 double sigma);

// InfoNCE over one channel: anchors and positives are B x P with unit rows;
// the negatives of each element are the other B-1 anchors. Returns the batch
// mean.
Value contrastive_loss(Value anchors, Value positives, double tau);

// Convenience evaluation without an external tape.
double contrastive_loss_value(const Matrix& anchors, const Matrix& positives, double tau);

}  // namespace megan

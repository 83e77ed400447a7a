#pragma once

#include <map>
#include <string>

#include "megan/matrix.hpp"

namespace megan {

// Named parameter collection. std::map keeps iteration order deterministic.
using ParamMap = std::map<std::string, Matrix>;

// Adam with bias correction.
class AdamOptimizer {
 public:
  AdamOptimizer(double learning_rate = 1e-3, double beta1 = 0.9, double beta2 = 0.999,
                double epsilon = 1e-8)
      : lr_(learning_rate), beta1_(beta1), beta2_(beta2), eps_(epsilon) {}

  // Applies one update in place; grads must contain an entry per parameter.
  void step(ParamMap& params, const ParamMap& grads);

  int step_count() const { return step_count_; }
  double learning_rate() const { return lr_; }

 private:
  struct Moments {
    Matrix m;
    Matrix v;
  };
  std::map<std::string, Moments> moments_;
  double lr_, beta1_, beta2_, eps_;
  int step_count_ = 0;
};

}  // namespace megan

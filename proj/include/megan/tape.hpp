#pragma once

#include <functional>
#include <string>
#include <vector>

#include "megan/matrix.hpp"

namespace megan {

class Tape;

// Handle to a node on a tape. Cheap to copy; the matrices live in the tape.
struct Value {
  Tape* tape = nullptr;
  int id = -1;

  bool valid() const { return tape != nullptr && id >= 0; }
  const Matrix& val() const;
  const Matrix& grad() const;
  double scalar() const { return val().at(0, 0); }
};

// Reverse-mode tape over dense matrices. Operations are recorded in
// topological order; backward() sweeps the recorded ops in reverse.
// A tape constructed with track_grad=false records values only (inference).
class Tape {
 public:
  explicit Tape(bool track_grad = true) : track_grad_(track_grad) { nodes_.reserve(256); }
  Tape(const Tape&) = delete;
  Tape& operator=(const Tape&) = delete;

  bool tracking() const { return track_grad_; }
  int size() const { return static_cast<int>(nodes_.size()); }

  Value input(Matrix m, const char* name = "input");

  const Matrix& val(int id) const { return nodes_[id].val; }
  const Matrix& grad(int id) const { return nodes_[id].grad; }

  // Seeds d(loss)/d(loss) = 1 and accumulates gradients for every node.
  // loss must be 1x1.
  void backward(Value loss);

  // General entry point: seeds several (node, upstream gradient) pairs.
  void backward_seeded(const std::vector<std::pair<Value, Matrix>>& seeds);

  int normalized_zero_rows() const { return normalized_zero_rows_; }
  void note_normalized_zero_rows(int n) { normalized_zero_rows_ += n; }

  // Low-level interface used by the op implementations.
  int push_node(Matrix val, const char* op);
  void set_back(int id, std::function<void(Tape&)> back) {
    if (track_grad_) nodes_[id].back = std::move(back);
  }
  Matrix& grad_mut(int id) { return nodes_[id].grad; }

 private:
  struct Node {
    Matrix val;
    Matrix grad;
    std::function<void(Tape&)> back;  // empty for leaves / inference tapes
    const char* op;
  };

  std::vector<Node> nodes_;
  bool track_grad_;
  int normalized_zero_rows_ = 0;
};

Value matmul(Value a, Value b);
Value transpose(Value a);
Value add(Value a, Value b);
Value sub(Value a, Value b);
Value mul(Value a, Value b);
Value add_rowvec(Value a, Value v);
Value mul_colvec(Value a, Value v);
Value scalar_mul(Value a, double s);
Value scalar_add(Value a, double s);
Value leaky_relu(Value a, double slope = 0.2);
Value sigmoid(Value a);
Value tanh_v(Value a);
Value exp_v(Value a);
Value log_v(Value a);
Value softplus(Value a);
Value abs_v(Value a);
Value concat_rows(const std::vector<Value>& parts);
Value concat_cols(const std::vector<Value>& parts);
Value gather_rows(Value a, const std::vector<int>& idx);
Value segment_sum(Value a, const std::vector<int>& ids, int n_segments);
Value segment_softmax(Value scores, const std::vector<int>& ids, int n_segments);
Value l2_normalize_rows(Value a);
Value sum_all(Value a);
Value mean_all(Value a);
Value row_sum(Value a);
Value col(Value a, int j);
Value cell(Value a, int r, int c);

}  // namespace megan

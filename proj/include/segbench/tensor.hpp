#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <vector>

namespace segbench {

using Shape = std::vector<std::int64_t>;

std::int64_t shape_numel(const Shape& s);
std::string shape_str(const Shape& s);

// Dense double tensor with shared storage and an optional gradient buffer.
// Convention for image data is N x C x H x W, row-major.
class Tensor {
 public:
  Tensor() = default;

  static Tensor zeros(Shape shape, bool requires_grad = false);
  static Tensor full(Shape shape, double value, bool requires_grad = false);
  static Tensor from_values(Shape shape, std::vector<double> values, bool requires_grad = false);

  bool defined() const { return s_ != nullptr; }
  const Shape& shape() const { return s_->shape; }
  std::int64_t dim(std::size_t i) const { return s_->shape[i]; }
  std::int64_t numel() const { return static_cast<std::int64_t>(s_->values.size()); }

  std::vector<double>& values() { return s_->values; }
  const std::vector<double>& values() const { return s_->values; }

  double scalar() const;  // value of a 1-element tensor

  bool requires_grad() const { return s_ && s_->requires_grad; }
  void set_requires_grad(bool rg);
  std::vector<double>& grad();
  const std::vector<double>& grad() const;
  void zero_grad();

  bool same_storage(const Tensor& o) const { return s_ == o.s_; }
  void check_finite(const std::string& what) const;

 private:
  struct Storage {
    Shape shape;
    std::vector<double> values;
    std::vector<double> grad;  // sized only while requires_grad
    bool requires_grad = false;
  };
  std::shared_ptr<Storage> s_;
};

// Argmax bookkeeping of a max-pool, reused by the unpooling decoder path.
// Offsets address the flat data array of the pre-pool source tensor.
struct PoolIndices {
  Shape shape;         // pooled output shape
  Shape source_shape;  // pre-pool input shape
  std::vector<std::int64_t> offsets;
};

struct TapeNode {
  const char* op = "";
  std::vector<Tensor> inputs;
  Tensor output;
  std::function<void()> replay;    // recompute output values from current inputs
  std::function<void()> backprop;  // accumulate input grads from output grad
};

// Eager reverse-mode tape. Nodes are recorded in execution order, which is a
// valid topological order of the DAG; backward walks it in reverse. One
// backward pass per recorded tape.
class Tape {
 public:
  void record(TapeNode node) { nodes_.push_back(std::move(node)); }
  void backward(const Tensor& loss);
  void replay_forward();
  std::size_t size() const { return nodes_.size(); }
  void clear() { nodes_.clear(); }

 private:
  std::vector<TapeNode> nodes_;
};

// Entry point named after what it does to the graph rooted at `loss`.
void backward(Tape& tape, const Tensor& loss);

}  // namespace segbench

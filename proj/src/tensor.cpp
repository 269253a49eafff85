#include "segbench/tensor.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace segbench {

std::int64_t shape_numel(const Shape& s) {
  std::int64_t n = 1;
  for (auto e : s) n *= e;
  return n;
}

std::string shape_str(const Shape& s) {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) os << "x";
    os << s[i];
  }
  os << "]";
  return os.str();
}

static void validate_shape(const Shape& shape) {
  if (shape.empty()) throw std::invalid_argument("tensor shape must have at least one extent");
  for (auto e : shape) {
    if (e <= 0) throw std::invalid_argument("tensor extents must be positive, got " + shape_str(shape));
  }
}

Tensor Tensor::zeros(Shape shape, bool requires_grad) {
  validate_shape(shape);
  Tensor t;
  t.s_ = std::make_shared<Storage>();
  t.s_->values.assign(static_cast<std::size_t>(shape_numel(shape)), 0.0);
  t.s_->shape = std::move(shape);
  t.set_requires_grad(requires_grad);
  return t;
}

Tensor Tensor::full(Shape shape, double value, bool requires_grad) {
  Tensor t = zeros(std::move(shape), requires_grad);
  for (auto& v : t.values()) v = value;
  return t;
}

Tensor Tensor::from_values(Shape shape, std::vector<double> values, bool requires_grad) {
  validate_shape(shape);
  if (static_cast<std::int64_t>(values.size()) != shape_numel(shape)) {
    throw std::invalid_argument("value count " + std::to_string(values.size()) +
                                " does not match shape " + shape_str(shape));
  }
  Tensor t;
  t.s_ = std::make_shared<Storage>();
  t.s_->shape = std::move(shape);
  t.s_->values = std::move(values);
  t.set_requires_grad(requires_grad);
  return t;
}

double Tensor::scalar() const {
  if (numel() != 1) throw std::invalid_argument("scalar() on tensor of shape " + shape_str(shape()));
  return s_->values[0];
}

void Tensor::set_requires_grad(bool rg) {
  s_->requires_grad = rg;
  if (rg) {
    s_->grad.assign(s_->values.size(), 0.0);
  } else {
    s_->grad.clear();
  }
}

std::vector<double>& Tensor::grad() {
  if (!requires_grad()) throw std::logic_error("grad() on tensor without requires_grad");
  return s_->grad;
}

const std::vector<double>& Tensor::grad() const {
  if (!requires_grad()) throw std::logic_error("grad() on tensor without requires_grad");
  return s_->grad;
}

void Tensor::zero_grad() {
  if (requires_grad()) s_->grad.assign(s_->values.size(), 0.0);
}

void Tensor::check_finite(const std::string& what) const {
  for (double v : s_->values) {
    if (!std::isfinite(v)) throw std::runtime_error("non-finite value in " + what);
  }
}

void Tape::backward(const Tensor& loss) {
  if (loss.numel() != 1) {
    throw std::invalid_argument("backward requires a scalar loss, got shape " + shape_str(loss.shape()));
  }
  if (!loss.requires_grad()) return;  // detached: nothing reachable contributes
  Tensor root = loss;                 // handles share storage
  root.grad()[0] = 1.0;
  for (auto it = nodes_.rbegin(); it != nodes_.rend(); ++it) {
    if (it->backprop) it->backprop();
  }
}

void Tape::replay_forward() {
  for (auto& n : nodes_) {
    if (n.replay) n.replay();
  }
}

void backward(Tape& tape, const Tensor& loss) { tape.backward(loss); }

}  // namespace segbench

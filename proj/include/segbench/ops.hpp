#pragma once

#include <memory>
#include <utility>

#include "segbench/tensor.hpp"

namespace segbench {

enum class Activation { relu, sigmoid, softmax2 };

// All operators are pure functions of their input values. Passing a tape
// records a node for backward/replay; a null tape runs forward only.
// Cross-correlation semantics, zero padding.
Tensor conv2d(Tape* tape, const Tensor& input, const Tensor& kernel, const Tensor& bias,
              std::int64_t stride, std::int64_t padding);

// Adjoint of conv2d; kernel is laid out cin x cout x kh x kw so the same
// buffer serves conv2d (as cout x cin) and its transpose.
Tensor conv_transpose2d(Tape* tape, const Tensor& input, const Tensor& kernel,
                        std::int64_t stride);

std::pair<Tensor, std::shared_ptr<const PoolIndices>> maxpool2d_indices(Tape* tape,
                                                                        const Tensor& input,
                                                                        std::int64_t window);

Tensor unpool2d(Tape* tape, const Tensor& input, std::shared_ptr<const PoolIndices> indices,
                const Shape& target_shape);

Tensor concat_channels(Tape* tape, const Tensor& a, const Tensor& b);

Tensor relu(Tape* tape, const Tensor& x);
Tensor sigmoid(Tape* tape, const Tensor& x);
Tensor softmax2(Tape* tape, const Tensor& x);
Tensor apply_activation(Tape* tape, const Tensor& x, Activation kind);

// Train mode normalizes with batch statistics and updates the running
// buffers in place (momentum 0.9); infer mode reads the running buffers.
Tensor batchnorm2d(Tape* tape, const Tensor& x, const Tensor& gamma, const Tensor& beta,
                   Tensor& running_mean, Tensor& running_var, bool training);

Tensor add(Tape* tape, const Tensor& a, const Tensor& b);
Tensor mul(Tape* tape, const Tensor& a, const Tensor& b);
Tensor upsample_nearest2(Tape* tape, const Tensor& x);
Tensor reduce_sum(Tape* tape, const Tensor& x);
Tensor reduce_mean(Tape* tape, const Tensor& x);

enum class LossKind { bce, soft_dice };

Tensor bce_loss(Tape* tape, const Tensor& pred, const Tensor& target);
Tensor soft_dice_loss(Tape* tape, const Tensor& pred, const Tensor& target);
Tensor compute_loss(Tape* tape, const Tensor& pred, const Tensor& target, LossKind kind);

inline constexpr double kBatchNormEpsilon = 1e-5;
inline constexpr double kBatchNormMomentum = 0.9;
inline constexpr double kBceClamp = 1e-7;
inline constexpr double kSoftDiceEpsilon = 1.0;

}  // namespace segbench

#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include "presam/dataset.hpp"
#include "presam/loss.hpp"
#include "presam/vec.hpp"

namespace presam {

enum class Activation { Tanh, Relu };
enum class LossHead { SoftmaxCrossEntropy, SquaredError };

/// Fully connected network with all weights flattened into one parameter
/// vector (layer by layer: row-major weight matrix, then bias). Weights are
/// always passed in, never stored, so a single model instance is safely
/// shared across threads.
class MicroMlp {
public:
    MicroMlp(std::vector<std::size_t> widths, Activation activation, LossHead head);

    std::size_t param_count() const { return param_count_; }
    std::size_t input_dim() const { return widths_.front(); }
    std::size_t output_dim() const { return widths_.back(); }
    const std::vector<std::size_t>& widths() const { return widths_; }
    Activation activation() const { return activation_; }
    LossHead head() const { return head_; }

    /// Scaled normal init (std 1/sqrt(fan_in)), zero biases; deterministic.
    Vec init_weights(std::uint64_t seed) const;

    /// Mean loss over the given sample indices.
    double batch_loss(const Vec& weights, const Dataset& data,
                      std::span<const std::size_t> batch) const;

    /// Mean loss and mean gradient (reverse mode) over the given indices.
    std::pair<double, Vec> batch_loss_grad(const Vec& weights, const Dataset& data,
                                           std::span<const std::size_t> batch) const;

    /// The full-dataset objective as a LossFunction over the flat weights.
    LossFunction full_loss(std::shared_ptr<const Dataset> data) const;

private:
    void check(const Vec& weights, const Dataset& data) const;

    std::vector<std::size_t> widths_;
    Activation activation_;
    LossHead head_;
    std::size_t param_count_ = 0;
    std::vector<std::size_t> weight_offsets_;  // per layer: offset of W, b follows
};

}  // namespace presam

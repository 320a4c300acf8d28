#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include "presam/dataset.hpp"
#include "presam/loss.hpp"
#include "presam/mlp.hpp"
#include "presam/rng.hpp"
#include "presam/vec.hpp"

namespace presam {

/// Zero-mean Gaussian noise with a diagonal covariance.
struct NoiseModel {
    Vec covariance_diag;
    std::uint64_t seed = 0;

    static NoiseModel isotropic(std::size_t dim, double sigma2, std::uint64_t seed);
    static NoiseModel diagonal(Vec covariance_diag, std::uint64_t seed);
};

/// Stochastic first-order oracle. refresh() draws a new realization (a noise
/// vector or a minibatch); evaluate() returns the gradient under the current
/// realization and bumps the call counter. One step of the optimizer calls
/// refresh() once and evaluate() once or twice, so both gradients of an
/// iteration see the same realization.
class GradientOracle {
public:
    virtual ~GradientOracle() = default;
    virtual std::size_t dim() const = 0;
    virtual void refresh() = 0;
    virtual Vec evaluate(const Vec& x) = 0;
    std::uint64_t calls() const { return calls_; }

protected:
    std::uint64_t calls_ = 0;
};

/// Exact analytic gradient plus state-independent additive noise.
class NoisyOracle final : public GradientOracle {
public:
    NoisyOracle(LossFunction loss, NoiseModel noise);

    std::size_t dim() const override { return loss_.dim; }
    void refresh() override;
    Vec evaluate(const Vec& x) override;

    const LossFunction& loss() const { return loss_; }

private:
    LossFunction loss_;
    Vec covariance_;
    NormalSampler sampler_;
    Vec xi_;
};

/// Minibatch-mean gradient of a MicroMlp objective; batches are drawn
/// uniformly without replacement on refresh().
class MinibatchOracle final : public GradientOracle {
public:
    MinibatchOracle(MicroMlp model, std::shared_ptr<const Dataset> data, std::size_t batch_size,
                    std::uint64_t seed);

    std::size_t dim() const override { return model_.param_count(); }
    void refresh() override;
    Vec evaluate(const Vec& weights) override;

    std::span<const std::size_t> current_batch() const { return batch_; }

private:
    MicroMlp model_;
    std::shared_ptr<const Dataset> data_;
    std::size_t batch_size_;
    std::mt19937_64 rng_;
    std::vector<std::size_t> batch_;
};

/// Fresh realization, one gradient sample.
Vec sample_stochastic_grad(GradientOracle& oracle, const Vec& x);

/// Convenience factory mirroring the oracle contract above.
std::unique_ptr<MinibatchOracle> minibatch_oracle(const MicroMlp& model,
                                                  std::shared_ptr<const Dataset> data,
                                                  std::size_t batch_size, std::uint64_t seed);

}  // namespace presam

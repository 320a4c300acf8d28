#include "presam/mlp.hpp"

#include <cmath>

#include "presam/errors.hpp"
#include "presam/rng.hpp"

namespace presam {

MicroMlp::MicroMlp(std::vector<std::size_t> widths, Activation activation, LossHead head)
    : widths_(std::move(widths)), activation_(activation), head_(head) {
    if (widths_.size() < 2) throw InvalidInputError("MicroMlp: need at least input and output widths");
    for (std::size_t w : widths_) {
        if (w == 0) throw InvalidInputError("MicroMlp: zero layer width");
    }
    weight_offsets_.reserve(widths_.size() - 1);
    for (std::size_t l = 0; l + 1 < widths_.size(); ++l) {
        weight_offsets_.push_back(param_count_);
        param_count_ += widths_[l + 1] * (widths_[l] + 1);
    }
}

Vec MicroMlp::init_weights(std::uint64_t seed) const {
    Vec w(param_count_, 0.0);
    NormalSampler normal(derive_seed(seed, 0x1417));
    for (std::size_t l = 0; l + 1 < widths_.size(); ++l) {
        const std::size_t rows = widths_[l + 1], cols = widths_[l];
        const double scale = 1.0 / std::sqrt(static_cast<double>(cols));
        double* W = w.data() + weight_offsets_[l];
        for (std::size_t i = 0; i < rows * cols; ++i) W[i] = scale * normal.next();
        // biases stay zero
    }
    return w;
}

void MicroMlp::check(const Vec& weights, const Dataset& data) const {
    if (weights.size() != param_count_) {
        throw InvalidInputError("MicroMlp: weight vector has size " + std::to_string(weights.size()) +
                                ", expected " + std::to_string(param_count_));
    }
    if (data.feature_dim != input_dim()) {
        throw InvalidInputError("MicroMlp: dataset feature dim does not match input width");
    }
}

namespace {

double head_loss_and_delta(LossHead head, const std::vector<double>& out, int label,
                           std::vector<double>& delta) {
    const std::size_t k = out.size();
    delta.assign(k, 0.0);
    if (head == LossHead::SoftmaxCrossEntropy) {
        double m = out[0];
        for (double v : out) m = std::max(m, v);
        double z = 0.0;
        for (std::size_t i = 0; i < k; ++i) z += std::exp(out[i] - m);
        const double lse = m + std::log(z);
        for (std::size_t i = 0; i < k; ++i) delta[i] = std::exp(out[i] - lse);
        delta[static_cast<std::size_t>(label)] -= 1.0;
        return lse - out[static_cast<std::size_t>(label)];
    }
    // squared error against the one-hot target
    double loss = 0.0;
    for (std::size_t i = 0; i < k; ++i) {
        const double t = (static_cast<int>(i) == label) ? 1.0 : 0.0;
        delta[i] = out[i] - t;
        loss += 0.5 * delta[i] * delta[i];
    }
    return loss;
}

}  // namespace

double MicroMlp::batch_loss(const Vec& weights, const Dataset& data,
                            std::span<const std::size_t> batch) const {
    return batch_loss_grad(weights, data, batch).first;
}

std::pair<double, Vec> MicroMlp::batch_loss_grad(const Vec& weights, const Dataset& data,
                                                 std::span<const std::size_t> batch) const {
    check(weights, data);
    if (batch.empty()) throw InvalidInputError("MicroMlp: empty batch");
    const std::size_t layers = widths_.size() - 1;

    Vec grad(param_count_, 0.0);
    double loss = 0.0;

    std::vector<std::vector<double>> acts(widths_.size());
    std::vector<double> delta, next_delta;

    for (std::size_t b : batch) {
        if (b >= data.size()) throw InvalidInputError("MicroMlp: batch index out of range");
        const auto row = data.row(b);
        acts[0].assign(row.begin(), row.end());

        for (std::size_t l = 0; l < layers; ++l) {
            const std::size_t rows = widths_[l + 1], cols = widths_[l];
            const double* W = weights.data() + weight_offsets_[l];
            const double* bias = W + rows * cols;
            auto& in = acts[l];
            auto& out = acts[l + 1];
            out.assign(rows, 0.0);
            for (std::size_t i = 0; i < rows; ++i) {
                double z = bias[i];
                const double* wrow = W + i * cols;
                for (std::size_t j = 0; j < cols; ++j) z += wrow[j] * in[j];
                if (l + 1 == layers) {
                    out[i] = z;  // linear head
                } else {
                    out[i] = activation_ == Activation::Tanh ? std::tanh(z) : std::max(z, 0.0);
                }
            }
        }

        loss += head_loss_and_delta(head_, acts[layers], data.labels[b], delta);

        for (std::size_t l = layers; l-- > 0;) {
            const std::size_t rows = widths_[l + 1], cols = widths_[l];
            double* gW = grad.data() + weight_offsets_[l];
            double* gb = gW + rows * cols;
            const auto& in = acts[l];
            for (std::size_t i = 0; i < rows; ++i) {
                const double d = delta[i];
                double* grow = gW + i * cols;
                for (std::size_t j = 0; j < cols; ++j) grow[j] += d * in[j];
                gb[i] += d;
            }
            if (l == 0) break;
            const double* W = weights.data() + weight_offsets_[l];
            next_delta.assign(cols, 0.0);
            for (std::size_t i = 0; i < rows; ++i) {
                const double d = delta[i];
                const double* wrow = W + i * cols;
                for (std::size_t j = 0; j < cols; ++j) next_delta[j] += wrow[j] * d;
            }
            // chain through the activation of layer l's output
            const auto& a = acts[l];
            for (std::size_t j = 0; j < cols; ++j) {
                next_delta[j] *= activation_ == Activation::Tanh ? 1.0 - a[j] * a[j]
                                                                 : (a[j] > 0.0 ? 1.0 : 0.0);
            }
            delta = next_delta;
        }
    }

    const double inv = 1.0 / static_cast<double>(batch.size());
    loss *= inv;
    for (double& v : grad) v *= inv;
    return {loss, std::move(grad)};
}

LossFunction MicroMlp::full_loss(std::shared_ptr<const Dataset> data) const {
    if (!data || data->size() == 0) throw InvalidInputError("MicroMlp: empty dataset");
    std::vector<std::size_t> all(data->size());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
    LossFunction f;
    f.dim = param_count_;
    f.name = "micro-mlp";
    const MicroMlp model = *this;
    auto idx = std::make_shared<std::vector<std::size_t>>(std::move(all));
    f.value = [model, data, idx](const Vec& w) { return model.batch_loss(w, *data, *idx); };
    f.gradient = [model, data, idx](const Vec& w) {
        return model.batch_loss_grad(w, *data, *idx).second;
    };
    f.minimum = 0.0;
    return f;
}

}  // namespace presam

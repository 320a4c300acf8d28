#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "presam/vec.hpp"

namespace presam {

/// Row-major feature matrix plus integer labels.
struct Dataset {
    std::size_t feature_dim = 0;
    Vec features;  // size() == n * feature_dim
    std::vector<int> labels;

    std::size_t size() const { return labels.size(); }

    std::span<const double> row(std::size_t i) const {
        return {features.data() + i * feature_dim, feature_dim};
    }
};

/// Gaussian blobs, one unit-variance cluster per class at separation *
/// e_{c mod dim}. Deterministic under the seed.
Dataset make_blobs(std::size_t n_per_class, std::size_t dim, std::size_t n_classes,
                   double separation, std::uint64_t seed);

/// Reassigns each label with probability flip_rate to a uniformly chosen
/// different class.
void flip_labels(Dataset& data, double flip_rate, std::size_t n_classes, std::uint64_t seed);

/// CSV with one sample per row, features first, integer label last.
void write_dataset_csv(const Dataset& data, const std::string& path);
Dataset read_dataset_csv(const std::string& path);

}  // namespace presam

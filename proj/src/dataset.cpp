#include "presam/dataset.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "presam/errors.hpp"
#include "presam/rng.hpp"

namespace presam {

Dataset make_blobs(std::size_t n_per_class, std::size_t dim, std::size_t n_classes,
                   double separation, std::uint64_t seed) {
    if (n_per_class == 0 || dim == 0 || n_classes < 2) {
        throw InvalidInputError("make_blobs: need n_per_class >= 1, dim >= 1, n_classes >= 2");
    }
    Dataset data;
    data.feature_dim = dim;
    data.features.reserve(n_per_class * n_classes * dim);
    data.labels.reserve(n_per_class * n_classes);
    NormalSampler normal(derive_seed(seed, 0xda7a));
    for (std::size_t c = 0; c < n_classes; ++c) {
        for (std::size_t k = 0; k < n_per_class; ++k) {
            for (std::size_t j = 0; j < dim; ++j) {
                const double mean = (j == c % dim) ? separation : 0.0;
                data.features.push_back(mean + normal.next());
            }
            data.labels.push_back(static_cast<int>(c));
        }
    }
    return data;
}

void flip_labels(Dataset& data, double flip_rate, std::size_t n_classes, std::uint64_t seed) {
    if (flip_rate < 0.0 || flip_rate > 1.0) {
        throw InvalidInputError("flip_labels: flip_rate must lie in [0, 1]");
    }
    if (flip_rate == 0.0) return;
    std::mt19937_64 rng(derive_seed(seed, 0xf11b));
    for (auto& label : data.labels) {
        if (uniform_unit(rng) >= flip_rate) continue;
        const auto shift = 1 + static_cast<int>(rng() % (n_classes - 1));
        label = (label + shift) % static_cast<int>(n_classes);
    }
}

void write_dataset_csv(const Dataset& data, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("write_dataset_csv: cannot open '" + path + "'");
    char buf[32];
    for (std::size_t i = 0; i < data.size(); ++i) {
        const auto row = data.row(i);
        for (double v : row) {
            std::snprintf(buf, sizeof(buf), "%.17g", v);
            out << buf << ',';
        }
        out << data.labels[i] << '\n';
    }
    if (!out) throw std::runtime_error("write_dataset_csv: write failed for '" + path + "'");
}

Dataset read_dataset_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("read_dataset_csv: cannot open '" + path + "'");
    Dataset data;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::stringstream ss(line);
        std::string cell;
        std::vector<double> cells;
        while (std::getline(ss, cell, ',')) cells.push_back(std::stod(cell));
        if (cells.size() < 2) throw std::runtime_error("read_dataset_csv: malformed row in '" + path + "'");
        if (data.feature_dim == 0) {
            data.feature_dim = cells.size() - 1;
        } else if (cells.size() - 1 != data.feature_dim) {
            throw std::runtime_error("read_dataset_csv: ragged rows in '" + path + "'");
        }
        for (std::size_t j = 0; j + 1 < cells.size(); ++j) data.features.push_back(cells[j]);
        data.labels.push_back(static_cast<int>(cells.back()));
    }
    return data;
}

}  // namespace presam

#pragma once

#include <cmath>
#include <cstddef>
#include <vector>

#include "presam/errors.hpp"

namespace presam {

/// Dense double-precision parameter vector. Model iterates, gradients,
/// perturbations and running averages all share this representation.
using Vec = std::vector<double>;

inline Vec zeros(std::size_t dim) { return Vec(dim, 0.0); }

inline void check_same_dim(const Vec& a, const Vec& b, const char* where) {
    if (a.size() != b.size()) {
        throw InvalidInputError(std::string(where) + ": dimension mismatch (" +
                                std::to_string(a.size()) + " vs " + std::to_string(b.size()) + ")");
    }
}

inline double dot(const Vec& a, const Vec& b) {
    check_same_dim(a, b, "dot");
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline double l2_norm_sq(const Vec& a) {
    double s = 0.0;
    for (double v : a) s += v * v;
    return s;
}

inline double l2_norm(const Vec& a) { return std::sqrt(l2_norm_sq(a)); }

inline double linf_norm(const Vec& a) {
    double m = 0.0;
    for (double v : a) m = std::max(m, std::abs(v));
    return m;
}

inline bool all_finite(const Vec& a) {
    for (double v : a)
        if (!std::isfinite(v)) return false;
    return true;
}

inline Vec add(const Vec& a, const Vec& b) {
    check_same_dim(a, b, "add");
    Vec out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
    return out;
}

inline Vec sub(const Vec& a, const Vec& b) {
    check_same_dim(a, b, "sub");
    Vec out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
    return out;
}

inline Vec scaled_copy(double alpha, const Vec& a) {
    Vec out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = alpha * a[i];
    return out;
}

/// y += alpha * x
inline void axpy(Vec& y, double alpha, const Vec& x) {
    check_same_dim(y, x, "axpy");
    for (std::size_t i = 0; i < y.size(); ++i) y[i] += alpha * x[i];
}

}  // namespace presam

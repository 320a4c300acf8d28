#include "presam/loss.hpp"

#include <cmath>
#include <memory>
#include <utility>

#include "presam/errors.hpp"

namespace presam {

namespace {

double softplus(double z) { return z > 0.0 ? z + std::log1p(std::exp(-z)) : std::log1p(std::exp(z)); }

double logistic(double z) {
    if (z >= 0.0) return 1.0 / (1.0 + std::exp(-z));
    const double e = std::exp(z);
    return e / (1.0 + e);
}

}  // namespace

Vec eval_grad(const LossFunction& loss, const Vec& x) {
    if (x.size() != loss.dim) {
        throw InvalidInputError("eval_grad: point dimension " + std::to_string(x.size()) +
                                " does not match loss dimension " + std::to_string(loss.dim));
    }
    Vec g = loss.gradient(x);
    if (g.size() != loss.dim || !all_finite(g)) {
        throw NumericOverflowError("eval_grad: non-finite gradient from '" + loss.name + "'");
    }
    return g;
}

double finite_diff_check(const LossFunction& loss, const Vec& x, double h) {
    if (!(h > 0.0) || !std::isfinite(h)) throw InvalidInputError("finite_diff_check: h must be > 0");
    const Vec g = eval_grad(loss, x);
    Vec p = x;
    double worst = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double xi = p[i];
        p[i] = xi + h;
        const double fp = loss.value(p);
        p[i] = xi - h;
        const double fm = loss.value(p);
        p[i] = xi;
        const double fd = (fp - fm) / (2.0 * h);
        const double rel = std::abs(fd - g[i]) / std::max(std::abs(g[i]), 1e-8);
        worst = std::max(worst, rel);
    }
    return worst;
}

LossFunction isotropic_quadratic(std::size_t dim) {
    if (dim == 0) throw InvalidInputError("isotropic_quadratic: dim must be positive");
    LossFunction f;
    f.dim = dim;
    f.name = "quadratic";
    f.value = [](const Vec& x) { return 0.5 * l2_norm_sq(x); };
    f.gradient = [](const Vec& x) { return x; };
    f.minimum = 0.0;
    f.smoothness = 1.0;
    return f;
}

LossFunction anisotropic_quadratic(Vec curvature) {
    if (curvature.empty()) throw InvalidInputError("anisotropic_quadratic: empty curvature");
    double lmax = 0.0;
    for (double c : curvature) {
        if (!(c > 0.0) || !std::isfinite(c)) {
            throw InvalidInputError("anisotropic_quadratic: curvatures must be finite and > 0");
        }
        lmax = std::max(lmax, c);
    }
    LossFunction f;
    f.dim = curvature.size();
    f.name = "aniso-quadratic";
    auto c = std::make_shared<Vec>(std::move(curvature));
    f.value = [c](const Vec& x) {
        double s = 0.0;
        for (std::size_t i = 0; i < x.size(); ++i) s += 0.5 * (*c)[i] * x[i] * x[i];
        return s;
    };
    f.gradient = [c](const Vec& x) {
        Vec g(x.size());
        for (std::size_t i = 0; i < x.size(); ++i) g[i] = (*c)[i] * x[i];
        return g;
    };
    f.minimum = 0.0;
    f.smoothness = lmax;
    return f;
}

LossFunction rosenbrock() {
    LossFunction f;
    f.dim = 2;
    f.name = "rosenbrock";
    f.value = [](const Vec& x) {
        const double a = 1.0 - x[0];
        const double b = x[1] - x[0] * x[0];
        return a * a + 100.0 * b * b;
    };
    f.gradient = [](const Vec& x) {
        const double b = x[1] - x[0] * x[0];
        return Vec{-2.0 * (1.0 - x[0]) - 400.0 * x[0] * b, 200.0 * b};
    };
    f.minimum = 0.0;
    return f;
}

LossFunction asymmetric_valley(double c_sharp, double c_flat, double smoothing) {
    if (!(c_sharp > c_flat) || !(c_flat > 0.0)) {
        throw InvalidInputError("asymmetric_valley: requires c_sharp > c_flat > 0");
    }
    if (!(smoothing > 0.0) || !std::isfinite(smoothing)) {
        throw InvalidInputError("asymmetric_valley: smoothing must be > 0");
    }
    LossFunction f;
    f.dim = 1;
    f.name = "asymmetric-valley";
    const double cs = c_sharp, cf = c_flat, s = smoothing;
    f.value = [cs, cf, s](const Vec& x) {
        const double z = x[0] / s;
        return cf * s * softplus(z) + cs * s * softplus(-z);
    };
    f.gradient = [cs, cf, s](const Vec& x) {
        const double z = x[0] / s;
        return Vec{cf * logistic(z) - cs * logistic(-z)};
    };
    f.minimum = 0.0;  // both softplus ramps are positive
    f.smoothness = (cs + cf) / (4.0 * s);
    return f;
}

}  // namespace presam

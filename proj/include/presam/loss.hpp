#pragma once

#include <functional>
#include <optional>
#include <string>

#include "presam/vec.hpp"

namespace presam {

/// Differentiable objective with exact analytic gradient. `minimum` is a
/// declared lower bound on the values, `smoothness` a gradient Lipschitz
/// constant; both optional.
struct LossFunction {
    std::size_t dim = 0;
    std::string name;
    std::function<double(const Vec&)> value;
    std::function<Vec(const Vec&)> gradient;
    std::optional<double> minimum;
    std::optional<double> smoothness;
};

/// Analytic gradient with dimension and finiteness checks.
Vec eval_grad(const LossFunction& loss, const Vec& x);

/// Worst per-coordinate relative error of central finite differences vs the
/// analytic gradient; denominators are floored at 1e-8.
double finite_diff_check(const LossFunction& loss, const Vec& x, double h);

/// f(x) = 0.5 ||x||^2
LossFunction isotropic_quadratic(std::size_t dim);

/// f(x) = 0.5 sum_i c_i x_i^2 with strictly positive curvatures.
LossFunction anisotropic_quadratic(Vec curvature);

/// Classic 2-D Rosenbrock, minimum 0 at (1, 1).
LossFunction rosenbrock();

/// One-dimensional loss dropping with slope ~ -c_sharp left of the origin and
/// rising with slope ~ +c_flat right of it; the kink is blended by softplus
/// ramps of the given width, so the function is C^infinity. Requires
/// c_sharp > c_flat > 0.
LossFunction asymmetric_valley(double c_sharp, double c_flat, double smoothing);

}  // namespace presam

#include "presam/perturbation.hpp"

#include <cmath>
#include <optional>

#include "presam/errors.hpp"

namespace presam {

namespace {

// Collapses D to a strictly positive diagonal vector, or nullopt when D is
// exactly the identity. |scalar multipliers| fold into the entries since the
// constraint ||D eps|| <= rho only sees magnitudes.
std::optional<Vec> effective_constraint_diagonal(const Preconditioner& D, std::size_t dim) {
    if (D.dim() != 0 && D.dim() != dim) {
        throw InvalidInputError("constraint preconditioner dimension mismatch");
    }
    const double s = std::abs(D.scalar_multiplier());
    switch (D.kind()) {
        case Preconditioner::Kind::Identity: {
            if (s == 0.0) throw InvalidPreconditionerError("constraint preconditioner is singular (zero scale)");
            if (s == 1.0) return std::nullopt;
            return Vec(dim, s);
        }
        case Preconditioner::Kind::Diagonal: {
            Vec d = D.diagonal_entries();
            for (double& v : d) {
                v *= s;
                if (!(v > 0.0)) {
                    throw InvalidPreconditionerError(
                        "constraint preconditioner is singular (zero diagonal entry)");
                }
            }
            return d;
        }
        case Preconditioner::Kind::Chain: {
            std::optional<Vec> acc;
            for (const auto& op : D.links()) {
                auto part = effective_constraint_diagonal(op, dim);
                if (!part) continue;
                if (!acc) {
                    acc = std::move(part);
                } else {
                    for (std::size_t i = 0; i < dim; ++i) (*acc)[i] *= (*part)[i];
                }
            }
            if (s == 0.0) throw InvalidPreconditionerError("constraint preconditioner is singular (zero scale)");
            if (s != 1.0) {
                if (!acc) acc = Vec(dim, 1.0);
                for (double& v : *acc) v *= s;
            }
            return acc;
        }
        case Preconditioner::Kind::Zero:
        case Preconditioner::Kind::RankOnePlusScaledIdentity:
            throw InvalidPreconditionerError(
                "constraint preconditioner must be an invertible diagonal or the identity");
    }
    throw InvalidPreconditionerError("constraint preconditioner: unknown kind");
}

}  // namespace

double diagonal_inverse_linf(const Preconditioner& D, std::size_t dim) {
    auto d = effective_constraint_diagonal(D, dim);
    if (!d) return 1.0;
    double m = 0.0;
    for (double v : *d) m = std::max(m, 1.0 / v);
    return m;
}

PerturbationSolution solve_perturbation(const Vec& g, const Preconditioner& C,
                                        const Preconditioner& D, double rho) {
    const std::size_t dim = g.size();
    if (dim == 0) throw InvalidInputError("solve_perturbation: empty gradient");
    if (!all_finite(g)) throw InvalidInputError("solve_perturbation: non-finite gradient");
    if (!std::isfinite(rho) || rho < 0.0) {
        throw InvalidInputError("solve_perturbation: rho must be finite and >= 0");
    }
    if (C.dim() != 0 && C.dim() != dim) {
        throw InvalidInputError("objective preconditioner dimension mismatch");
    }
    const auto d_entries = effective_constraint_diagonal(D, dim);

    // Structure-only image of g under C; any positive rescaling of C cancels
    // here exactly instead of up to rounding.
    const Vec y = C.apply_direction(g);

    Vec d_inv_y = y;  // D^{-1} C g, up to C's scalar magnitude
    if (d_entries) {
        for (std::size_t i = 0; i < dim; ++i) d_inv_y[i] = y[i] / (*d_entries)[i];
    }
    const double direction_norm = l2_norm(d_inv_y);

    PerturbationSolution out;
    out.epsilon = zeros(dim);
    const double full_norm = C.scale_magnitude() * direction_norm;
    if (!(full_norm > kDegeneracyTol)) {
        out.degenerate = true;
        return out;
    }

    if (d_entries) {
        for (std::size_t i = 0; i < dim; ++i) {
            out.epsilon[i] = rho * (d_inv_y[i] / (*d_entries)[i]) / direction_norm;
        }
    } else {
        for (std::size_t i = 0; i < dim; ++i) out.epsilon[i] = rho * y[i] / direction_norm;
    }
    if (!all_finite(out.epsilon)) {
        throw NumericOverflowError("solve_perturbation: non-finite perturbation");
    }
    out.objective_value = dot(C.apply(g), out.epsilon);
    return out;
}

}  // namespace presam

#pragma once

#include "presam/preconditioner.hpp"
#include "presam/vec.hpp"

namespace presam {

/// C g is treated as zero (and the perturbation skipped) once
/// ||D^{-1} C g|| falls at or below this.
inline constexpr double kDegeneracyTol = 1e-12;

struct PerturbationSolution {
    Vec epsilon;                  ///< maximizer of <C g, eps> over ||D eps|| <= rho
    double objective_value = 0.0; ///< <C g, epsilon>
    bool degenerate = false;      ///< C g vanished; epsilon is the zero vector
};

/// Closed form of the preconditioned subproblem
///   max_eps <C g, eps>  s.t.  ||D eps|| <= rho,
/// namely eps = rho * D^{-2} C g / ||D^{-1} C g||.
///
/// D must be invertible: the identity, a strictly positive diagonal, or a
/// chain of those. rho = 0 is allowed and yields the zero perturbation
/// without the degenerate flag.
PerturbationSolution solve_perturbation(const Vec& g, const Preconditioner& C,
                                        const Preconditioner& D, double rho);

/// ||D^{-1}||_inf = max_i 1/D_ii (1 for the identity). Same validity
/// requirements on D as solve_perturbation.
double diagonal_inverse_linf(const Preconditioner& D, std::size_t dim);

}  // namespace presam

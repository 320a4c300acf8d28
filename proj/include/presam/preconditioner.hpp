#pragma once

#include <cstddef>
#include <vector>

#include "presam/vec.hpp"

namespace presam {

/// Linear operator playing the role of the objective preconditioner C_t or
/// the constraint preconditioner D_t. Always stored structurally (diagonal
/// entries, rank-one factors, chains) so memory stays O(d); no dense
/// matrices.
///
/// Every operator carries a scalar multiplier on top of its structure.
/// scaled() only touches that multiplier, which keeps alpha*C exactly
/// representable; the subproblem solver cancels positive multipliers
/// analytically so that rescaling C never perturbs the solution, not even
/// in the last bit.
class Preconditioner {
public:
    enum class Kind { Identity, Zero, Diagonal, RankOnePlusScaledIdentity, Chain };

    Preconditioner() : kind_(Kind::Identity) {}

    static Preconditioner identity();
    static Preconditioner zero();
    /// Diagonal with non-negative entries (masks use zeros; strict
    /// positivity is only enforced where the operator acts as D_t).
    static Preconditioner diagonal(Vec entries);
    /// u v^T + ridge * I
    static Preconditioner rank_one_plus_scaled_identity(Vec u, Vec v, double ridge);
    /// Applies ops in list order: ops[0] first. Empty list behaves as the
    /// identity.
    static Preconditioner chain(std::vector<Preconditioner> ops);

    Kind kind() const { return kind_; }

    /// 0 means dimension-agnostic (Identity, Zero, or a chain of such).
    std::size_t dim() const { return dim_; }

    /// y = s * (A x), s the operator's scalar multiplier.
    Vec apply(const Vec& x) const;

    /// Structure-only application: scalar multipliers are reduced to their
    /// signs at every level. apply(x) == scale_magnitude() * apply_direction(x)
    /// in exact arithmetic.
    Vec apply_direction(const Vec& x) const;

    /// Product of |scalar multiplier| over the whole operator tree.
    double scale_magnitude() const;

    /// alpha * A as a scalar adjustment; structure entries are untouched.
    Preconditioner scaled(double alpha) const;

    bool is_identity_kind() const { return kind_ == Kind::Identity; }
    bool is_zero_kind() const { return kind_ == Kind::Zero; }

    const Vec& diagonal_entries() const { return diag_; }
    const Vec& rank_one_u() const { return u_; }
    const Vec& rank_one_v() const { return v_; }
    double rank_one_ridge() const { return ridge_; }
    double scalar_multiplier() const { return scale_; }
    const std::vector<Preconditioner>& links() const { return chain_; }

private:
    explicit Preconditioner(Kind kind) : kind_(kind) {}

    void check_dim(const Vec& x) const;

    Kind kind_;
    std::size_t dim_ = 0;
    double scale_ = 1.0;
    Vec diag_;
    Vec u_, v_;
    double ridge_ = 0.0;
    std::vector<Preconditioner> chain_;
};

/// Cascade of preconditioners: the result applies ops left to right, i.e.
/// its matrix is the product ops[n-1] * ... * ops[0].
Preconditioner compose_preconditioners(std::vector<Preconditioner> ops);

}  // namespace presam

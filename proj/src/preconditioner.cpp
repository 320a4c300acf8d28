#include "presam/preconditioner.hpp"

#include <cmath>
#include <utility>

#include "presam/errors.hpp"

namespace presam {

namespace {

double sign_of(double s) {
    if (s > 0.0) return 1.0;
    if (s < 0.0) return -1.0;
    return 0.0;
}

}  // namespace

Preconditioner Preconditioner::identity() { return Preconditioner(Kind::Identity); }

Preconditioner Preconditioner::zero() { return Preconditioner(Kind::Zero); }

Preconditioner Preconditioner::diagonal(Vec entries) {
    if (entries.empty()) throw InvalidInputError("diagonal preconditioner: empty entries");
    for (double v : entries) {
        if (!std::isfinite(v) || v < 0.0) {
            throw InvalidInputError("diagonal preconditioner: entries must be finite and >= 0");
        }
    }
    Preconditioner p(Kind::Diagonal);
    p.dim_ = entries.size();
    p.diag_ = std::move(entries);
    return p;
}

Preconditioner Preconditioner::rank_one_plus_scaled_identity(Vec u, Vec v, double ridge) {
    check_same_dim(u, v, "rank_one_plus_scaled_identity");
    if (u.empty()) throw InvalidInputError("rank_one_plus_scaled_identity: empty factors");
    if (!all_finite(u) || !all_finite(v) || !std::isfinite(ridge)) {
        throw InvalidInputError("rank_one_plus_scaled_identity: non-finite factor");
    }
    Preconditioner p(Kind::RankOnePlusScaledIdentity);
    p.dim_ = u.size();
    p.u_ = std::move(u);
    p.v_ = std::move(v);
    p.ridge_ = ridge;
    return p;
}

Preconditioner Preconditioner::chain(std::vector<Preconditioner> ops) {
    if (ops.empty()) return identity();
    std::size_t d = 0;
    for (const auto& op : ops) {
        if (op.dim() == 0) continue;
        if (d == 0) {
            d = op.dim();
        } else if (op.dim() != d) {
            throw InvalidInputError("chain: operators disagree on dimension");
        }
    }
    Preconditioner p(Kind::Chain);
    p.dim_ = d;
    p.chain_ = std::move(ops);
    return p;
}

void Preconditioner::check_dim(const Vec& x) const {
    if (dim_ != 0 && x.size() != dim_) {
        throw InvalidInputError("preconditioner: operand dimension " + std::to_string(x.size()) +
                                " does not match operator dimension " + std::to_string(dim_));
    }
}

Vec Preconditioner::apply(const Vec& x) const {
    check_dim(x);
    switch (kind_) {
        case Kind::Identity:
            return scale_ == 1.0 ? x : scaled_copy(scale_, x);
        case Kind::Zero:
            return zeros(x.size());
        case Kind::Diagonal: {
            Vec y(x.size());
            for (std::size_t i = 0; i < x.size(); ++i) y[i] = scale_ * (diag_[i] * x[i]);
            return y;
        }
        case Kind::RankOnePlusScaledIdentity: {
            const double inner = dot(v_, x);
            Vec y(x.size());
            for (std::size_t i = 0; i < x.size(); ++i) y[i] = scale_ * (u_[i] * inner + ridge_ * x[i]);
            return y;
        }
        case Kind::Chain: {
            Vec y = x;
            for (const auto& op : chain_) y = op.apply(y);
            if (scale_ != 1.0)
                for (double& v : y) v *= scale_;
            return y;
        }
    }
    throw InvalidInputError("preconditioner: unknown kind");
}

Vec Preconditioner::apply_direction(const Vec& x) const {
    check_dim(x);
    const double s = sign_of(scale_);
    switch (kind_) {
        case Kind::Identity:
            return s == 1.0 ? x : scaled_copy(s, x);
        case Kind::Zero:
            return zeros(x.size());
        case Kind::Diagonal: {
            Vec y(x.size());
            for (std::size_t i = 0; i < x.size(); ++i) y[i] = s * (diag_[i] * x[i]);
            return y;
        }
        case Kind::RankOnePlusScaledIdentity: {
            const double inner = dot(v_, x);
            Vec y(x.size());
            for (std::size_t i = 0; i < x.size(); ++i) y[i] = s * (u_[i] * inner + ridge_ * x[i]);
            return y;
        }
        case Kind::Chain: {
            Vec y = x;
            for (const auto& op : chain_) y = op.apply_direction(y);
            if (s != 1.0)
                for (double& v : y) v *= s;
            return y;
        }
    }
    throw InvalidInputError("preconditioner: unknown kind");
}

double Preconditioner::scale_magnitude() const {
    double m = std::abs(scale_);
    if (kind_ == Kind::Chain) {
        for (const auto& op : chain_) m *= op.scale_magnitude();
    }
    return m;
}

Preconditioner Preconditioner::scaled(double alpha) const {
    if (!std::isfinite(alpha)) throw InvalidInputError("scaled: non-finite factor");
    Preconditioner p = *this;
    p.scale_ *= alpha;
    return p;
}

Preconditioner compose_preconditioners(std::vector<Preconditioner> ops) {
    return Preconditioner::chain(std::move(ops));
}

}  // namespace presam

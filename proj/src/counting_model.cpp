#include "lisum/counting_model.hpp"

#include <cmath>
#include <limits>

namespace lisum {

namespace {

// T/2pi ln(T/2pi) - T/2pi + offset, unclamped.
Real rvm(Real height, Real offset) {
    const Real x = height / kTwoPi;
    return x * std::log(x) - x + offset;
}

// Upward root of x ln x - x + offset on x > 1 (the curve's minimum is at x = 1).
Real upward_root(Real offset) {
    Real x = std::numbers::e_v<Real>;
    for (int i = 0; i < 100; ++i) {
        const Real step = (x * std::log(x) - x + offset) / std::log(x);
        x -= step;
        if (std::fabs(step) <= 4 * std::numeric_limits<Real>::epsilon() * x) break;
    }
    return kTwoPi * x;
}

Real offset_of(CountingKind kind) {
    return kind == CountingKind::smooth_rvm_plus_7_8 ? Real(0.875) : Real(0);
}

Real half_width(Real b) {
    if (b == Real(-0.5)) throw DomainError("b = -1/2 is excluded");
    return std::fabs(2 * b + 1) / 2;
}

}  // namespace

CountingModel::CountingModel(CountingKind kind, std::shared_ptr<const ZeroCatalog> catalog)
    : kind_(kind), catalog_(std::move(catalog)) {
    if (kind_ == CountingKind::empirical) {
        if (!catalog_) throw EmptyCatalog();
        support_start_ = catalog_->ordinates().front();
    } else {
        support_start_ = upward_root(offset_of(kind_));
    }
}

CountingModel CountingModel::smooth(CountingKind kind) {
    if (kind == CountingKind::empirical) {
        throw ModelKindError("the empirical model needs a catalog");
    }
    return CountingModel(kind, nullptr);
}

CountingModel CountingModel::empirical(std::shared_ptr<const ZeroCatalog> catalog) {
    return CountingModel(CountingKind::empirical, std::move(catalog));
}

Real CountingModel::domain_max() const noexcept {
    return catalog_ ? catalog_->max_height() : std::numeric_limits<Real>::infinity();
}

Real CountingModel::evaluate(Real height) const {
    if (!(height >= 0)) throw DomainError("N(T) needs T >= 0");
    if (kind_ == CountingKind::empirical) {
        if (height > catalog_->max_height()) {
            throw RangeError("empirical N(T) evaluated past the catalog's max height");
        }
        return static_cast<Real>(catalog_->count_below(height));
    }
    if (!std::isfinite(height)) return height;
    // Below 2pi the smooth formula is spurious (it climbs back to 7/8 at T = 0).
    if (height <= kTwoPi) return 0;
    return std::max(Real(0), rvm(height, offset_of(kind_)));
}

Real CountingModel::density(Real height) const {
    if (kind_ == CountingKind::empirical) {
        throw ModelKindError("the empirical staircase has no density");
    }
    if (height < support_start_) return 0;
    return std::log(height / kTwoPi) / kTwoPi;
}

Real CountingModel::substitute_x(Real x, Real b) const {
    return evaluate(height_from_x(x, b));
}

Real height_from_x(Real x, Real b) {
    const Real half = half_width(b);
    if (!(std::fabs(x) < 1)) throw DomainError("x must lie in (-1, 1)");
    return half * std::sqrt((1 + x) / (1 - x));
}

Real x_from_height(Real height, Real b) {
    const Real half = half_width(b);
    if (!(height > 0)) throw DomainError("height must be positive");
    const Real t2 = height * height;
    const Real h2 = half * half;
    return (t2 - h2) / (t2 + h2);
}

}  // namespace lisum

#pragma once

#include <memory>

#include "lisum/types.hpp"
#include "lisum/zero_catalog.hpp"

namespace lisum {

enum class CountingKind { smooth_rvm, smooth_rvm_plus_7_8, empirical };

/// N(T), the number of zeros with 0 < Im rho <= T.
///
/// The smooth kinds use T/2pi ln(T/2pi) - T/2pi (optionally + 7/8) and are
/// clamped to zero below their upward zero crossing, which lies above 2pi.
/// The empirical kind is the right-continuous staircase of a catalog.
class CountingModel {
public:
    static CountingModel smooth(CountingKind kind = CountingKind::smooth_rvm_plus_7_8);
    static CountingModel empirical(std::shared_ptr<const ZeroCatalog> catalog);

    CountingKind kind() const noexcept { return kind_; }
    bool is_smooth() const noexcept { return kind_ != CountingKind::empirical; }

    /// +infinity for the smooth kinds, the catalog's max_height otherwise.
    Real domain_max() const noexcept;

    /// Smallest T with N(T) > 0 (for the empirical kind: the first ordinate).
    Real support_start() const noexcept { return support_start_; }

    /// Throws DomainError for T < 0 and RangeError past domain_max().
    Real evaluate(Real height) const;

    /// dN/dT for the smooth kinds (zero below support_start()).
    Real density(Real height) const;

    /// N at the height T(x) = |2b+1|/2 sqrt((1+x)/(1-x)). |x| < 1 required.
    Real substitute_x(Real x, Real b) const;

private:
    CountingModel(CountingKind kind, std::shared_ptr<const ZeroCatalog> catalog);

    CountingKind kind_;
    std::shared_ptr<const ZeroCatalog> catalog_;
    Real support_start_ = 0;
};

/// Height matching x under T -> (T^2 - c^2/4) / (T^2 + c^2/4), c = |2b+1|.
Real height_from_x(Real x, Real b);
Real x_from_height(Real height, Real b);

}  // namespace lisum

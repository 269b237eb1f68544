#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <vector>

#include "lisum/angle_kernel.hpp"
#include "lisum/zero_catalog.hpp"
#include "lisum/zero_sum.hpp"

namespace lisum {

/// Large-n form of k_{n,b} on RH:
///   (c/2) n ln n + (c/2)(gamma - 1 - ln(2pi/c)) n,   c = |2b+1|.
struct AsymptoticBreakdown {
    Real c = 0;
    Real main_term = 0;
    Real linear_term = 0;
    Real total = 0;
    Real gamma_const = kEulerGamma;
    /// ln(2pi/c), the shift inside the linear coefficient.
    Real log_shift = 0;
};

/// Requires n >= 1 (DomainError otherwise).
AsymptoticBreakdown asymptotic(const LiParams& params);

struct ResidualReport {
    Real b = 0;
    std::vector<std::int64_t> n_grid;
    std::vector<Real> totals;
    std::vector<Real> residuals;  // zero_sum total - asymptotic total
    /// Least-squares slope of ln|r| against ln n over the upper half of the
    /// grid; -inf when a residual there vanishes (see degenerate).
    Real fitted_exponent = 0;
    bool degenerate = false;
    /// |r(n)|/n non-increasing over consecutive upper-half points, each step
    /// allowed to grow by at most 10%.
    bool passes_o_n = false;
    /// tail_bound / |linear_term| at the largest n.
    Real tail_fraction = 0;
};

/// Slack on each step of the |r(n)|/n monotonicity test.
inline constexpr Real kMonotoneSlack = 0.10L;

struct ResidualOptions {
    SumOptions sum;
    /// Refuse (TailRegimeError) when tail_fraction exceeds max_tail_fraction.
    bool enforce_depth = false;
    Real max_tail_fraction = 0.01L;
};

/// Residual analysis from precomputed totals (one per grid point).
/// GridError when the grid has fewer than 4 points, is not strictly
/// increasing, starts below 1, or does not match the totals.
ResidualReport analyse_residuals(Real b, std::vector<std::int64_t> n_grid,
                                 std::vector<Real> totals);

/// Residuals of zero_sum totals against the asymptotic formula.
ResidualReport residual_study(Real b, const std::vector<std::int64_t>& n_grid,
                              std::shared_ptr<const ZeroCatalog> catalog,
                              const ResidualOptions& options = {});

/// True when each value is at most (1 + slack) times its predecessor.
bool non_increasing_with_slack(const std::vector<Real>& values, Real slack = kMonotoneSlack);

}  // namespace lisum

#include "lisum/asymptotics.hpp"

#include <cmath>
#include <limits>

namespace lisum {

AsymptoticBreakdown asymptotic(const LiParams& params) {
    if (params.n() < 1) throw DomainError("the asymptotic form needs n >= 1");
    const Real n = static_cast<Real>(params.n());
    AsymptoticBreakdown out;
    out.c = params.c();
    out.log_shift = std::log(kTwoPi / out.c);
    out.main_term = out.c / 2 * n * std::log(n);
    out.linear_term = out.c / 2 * (kEulerGamma - 1 - out.log_shift) * n;
    out.total = out.main_term + out.linear_term;
    return out;
}

bool non_increasing_with_slack(const std::vector<Real>& values, Real slack) {
    for (std::size_t i = 1; i < values.size(); ++i) {
        if (values[i] > (1 + slack) * values[i - 1]) return false;
    }
    return true;
}

namespace {

void validate_grid(const std::vector<std::int64_t>& n_grid) {
    if (n_grid.size() < 4) throw GridError("residual study needs at least 4 grid points");
    for (std::size_t i = 0; i < n_grid.size(); ++i) {
        if (n_grid[i] < 1) throw GridError("grid orders must be >= 1");
        if (i > 0 && n_grid[i] <= n_grid[i - 1]) throw GridError("grid must be strictly increasing");
    }
}

}  // namespace

ResidualReport analyse_residuals(Real b, std::vector<std::int64_t> n_grid,
                                 std::vector<Real> totals) {
    validate_grid(n_grid);
    if (n_grid.size() != totals.size()) throw GridError("one total per grid point expected");

    ResidualReport rep;
    rep.b = b;
    rep.n_grid = std::move(n_grid);
    rep.totals = std::move(totals);
    for (std::size_t i = 0; i < rep.n_grid.size(); ++i) {
        const auto a = asymptotic(LiParams(rep.n_grid[i], b));
        rep.residuals.push_back(rep.totals[i] - a.total);
    }

    const std::size_t lo = rep.n_grid.size() / 2;
    std::vector<Real> xs;
    std::vector<Real> ys;
    std::vector<Real> scaled;
    for (std::size_t i = lo; i < rep.n_grid.size(); ++i) {
        const Real n = static_cast<Real>(rep.n_grid[i]);
        const Real r = std::fabs(rep.residuals[i]);
        scaled.push_back(r / n);
        if (r == 0) rep.degenerate = true;
        xs.push_back(std::log(n));
        ys.push_back(r > 0 ? std::log(r) : Real(0));
    }
    if (rep.degenerate) {
        rep.fitted_exponent = -std::numeric_limits<Real>::infinity();
    } else {
        const Real m = static_cast<Real>(xs.size());
        Real mx = 0;
        Real my = 0;
        for (std::size_t i = 0; i < xs.size(); ++i) {
            mx += xs[i];
            my += ys[i];
        }
        mx /= m;
        my /= m;
        Real sxy = 0;
        Real sxx = 0;
        for (std::size_t i = 0; i < xs.size(); ++i) {
            sxy += (xs[i] - mx) * (ys[i] - my);
            sxx += (xs[i] - mx) * (xs[i] - mx);
        }
        rep.fitted_exponent = sxy / sxx;
    }
    rep.passes_o_n = non_increasing_with_slack(scaled);
    return rep;
}

ResidualReport residual_study(Real b, const std::vector<std::int64_t>& n_grid,
                              std::shared_ptr<const ZeroCatalog> catalog,
                              const ResidualOptions& options) {
    validate_grid(n_grid);
    const LiParams top(n_grid.back(), b);
    const Real t_max = catalog->max_height();
    const auto tail = tail_estimate(top, t_max);  // TailRegimeError if out of regime
    const Real fraction = tail.bound / std::fabs(asymptotic(top).linear_term);
    if (options.enforce_depth && !(fraction < options.max_tail_fraction)) {
        throw TailRegimeError("zero table too shallow: tail bound is " + std::to_string(double(fraction)) +
                              " of the linear term at the largest order");
    }

    ZeroSumEngine engine(std::move(catalog), b, options.sum);
    std::vector<Real> totals;
    totals.reserve(n_grid.size());
    for (const auto n : n_grid) totals.push_back(engine.sum(n).total);
    auto rep = analyse_residuals(b, n_grid, std::move(totals));
    rep.tail_fraction = fraction;
    return rep;
}

}  // namespace lisum

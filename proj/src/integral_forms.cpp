#include "lisum/integral_forms.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "lisum/zero_sum.hpp"

namespace lisum {

namespace {

void require_smooth(const CountingModel& model) {
    if (!model.is_smooth()) {
        throw ModelKindError("integral forms need a smooth counting model; "
                             "the staircase is handled by zero_sum");
    }
}

// Height with angle -phi under the canonical map, T = (c/2) cot(phi/2).
Real height_of_phi(Real c, Real phi) { return c / 2 / std::tan(phi / 2); }

// Sorted, de-duplicated union of point sets restricted to [lo, hi].
std::vector<Real> merge_points(std::vector<Real> pts, Real lo, Real hi) {
    pts.push_back(lo);
    pts.push_back(hi);
    std::erase_if(pts, [&](Real p) { return p < lo || p > hi; });
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    return pts;
}

// Integrand in T of one of the T-space forms; evaluated in T on
// [T_start, T_switch] and in u = 1/T on [1/T_cut, 1/T_switch].
QuadratureResult t_space_form(const LiParams& params, const CountingModel& model,
                              const QuadratureSpec& spec,
                              const std::function<Real(Real)>& integrand) {
    const Real n = static_cast<Real>(params.n());
    const Real c = params.c();
    const Real t_start = model.support_start();
    const Real t_cut = integral_cutoff(params);
    const Real t_switch = std::clamp(4 * c * n, t_start, t_cut);

    QuadratureResult total;
    if (t_switch > t_start) {
        // quarter periods of sin(n theta): theta = -phi_k, phi_k = k pi / (2n)
        std::vector<Real> pts = graded_breakpoints(t_start, t_switch, 0, 2);
        const Real dphi = kPi / (2 * n);
        for (Real phi = dphi; phi < kPi; phi += dphi) {
            const Real t = height_of_phi(c, phi);
            if (t < t_start) break;
            pts.push_back(t);
        }
        pts = merge_points(std::move(pts), t_start, t_switch);
        const auto r = integrate_panels(integrand, pts, spec);
        total.value += r.value;
        total.err_est += r.err_est;
        total.panels += r.panels;
    }
    {
        // far range: the phase is ~ -c n u, period 2pi/(cn) in u
        const Real u_lo = 1 / t_cut;
        const Real u_hi = 1 / t_switch;
        if (u_hi > u_lo) {
            const auto pts = graded_breakpoints(u_lo, u_hi, kPi / (2 * c * n), 2);
            const auto r = integrate_panels(
                [&](Real u) { return integrand(1 / u) / (u * u); }, pts, spec);
            total.value += r.value;
            total.err_est += r.err_est;
            total.panels += r.panels;
        }
    }
    const Real boundary = term_online(params.n(), params.b(), t_cut) * model.evaluate(t_cut);
    total.value += boundary + tail_estimate(params, t_cut).estimate;
    return total;
}

}  // namespace

Real integral_cutoff(const LiParams& params) {
    return std::max(Real(1e4), 20 * params.c() * static_cast<Real>(params.n()));
}

QuadratureResult integral_eq6(const LiParams& params, const CountingModel& model,
                              const QuadratureSpec& spec) {
    require_smooth(model);
    spec.validate();
    if (params.n() == 0) return {};
    const std::int64_t n = params.n();
    const Real b = params.b();
    return t_space_form(params, model, spec, [&](Real t) {
        const Angle a = theta(t, b);
        return -2 * static_cast<Real>(n) * std::sin(static_cast<Real>(n) * a.theta) *
               dtheta_dT(t, b) * model.evaluate(t);
    });
}

QuadratureResult integral_eq7(const LiParams& params, const CountingModel& model,
                              const QuadratureSpec& spec) {
    require_smooth(model);
    spec.validate();
    if (params.n() == 0) return {};
    const std::int64_t n = params.n();
    const Real b = params.b();
    const Real w2 = params.c() * params.c();
    return t_space_form(params, model, spec, [&](Real t) {
        const Real d = std::fma(t, t, w2 / 4);
        const Real weight = w2 * t / (d * d);
        return 2 * static_cast<Real>(n) * weight * chebyshev_U(n - 1, theta(t, b).cos_theta) *
               model.evaluate(t);
    });
}

QuadratureResult integral_eq8(const LiParams& params, const CountingModel& model,
                              const QuadratureSpec& spec) {
    require_smooth(model);
    spec.validate();
    if (params.n() == 0) return {};
    const std::int64_t n = params.n();
    const Real nn = static_cast<Real>(n);
    const Real c = params.c();
    // N vanishes for x below x(support_start), i.e. for phi above phi_start.
    const Real phi_start = 2 * std::atan(c / (2 * model.support_start()));

    std::vector<Real> pts{0};
    const Real dphi = kPi / (2 * nn);
    for (Real phi = dphi; phi < phi_start; phi += dphi) pts.push_back(phi);
    const Real first = std::min(dphi, phi_start);
    for (int j = 1; j <= 40; ++j) pts.push_back(std::ldexp(first, -j));
    pts = merge_points(std::move(pts), 0, phi_start);

    return integrate_panels(
        [&](Real phi) {
            // dx = -sin(phi) dphi; U_{n-1}(cos phi) sin(phi) is bounded by 1.
            const Real x = std::cos(phi);
            const Real weight = chebyshev_U(n - 1, x) * std::sin(phi);
            return 2 * nn * weight * model.evaluate(height_of_phi(c, phi));
        },
        pts, spec);
}

Real model_error_bound(const LiParams& params, const QuadratureSpec& spec) {
    if (params.n() == 0) return 0;
    const Real c = params.c();
    // substitute T = (c/2) cot(phi/2): |theta'| dT = dphi on (0, pi)
    std::vector<Real> pts{0};
    for (int j = 40; j >= 0; --j) pts.push_back(std::ldexp(kPi, -j));
    const auto r = integrate_panels(
        [&](Real phi) {
            const Real t = height_of_phi(c, phi);
            return 3 + std::log(std::max(t, Real(1)));
        },
        merge_points(std::move(pts), 0, kPi), spec);
    return 2 * static_cast<Real>(params.n()) * r.value;
}

}  // namespace lisum

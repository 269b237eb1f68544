#include "lisum/quadrature.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <queue>

namespace lisum {

namespace {

constexpr int kNodes = 10;

struct GaussRule {
    std::array<Real, kNodes> x{};
    std::array<Real, kNodes> w{};
};

// Legendre roots by Newton iteration from the Chebyshev guesses.
GaussRule make_rule() {
    GaussRule rule;
    for (int i = 0; i < kNodes; ++i) {
        Real z = std::cos(kPi * (i + Real(0.75)) / (kNodes + Real(0.5)));
        Real dp = 0;
        for (int it = 0; it < 100; ++it) {
            Real p0 = 1;
            Real p1 = z;
            for (int k = 2; k <= kNodes; ++k) {
                const Real p2 = ((2 * k - 1) * z * p1 - (k - 1) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            dp = kNodes * (z * p1 - p0) / (z * z - 1);
            const Real dz = p1 / dp;
            z -= dz;
            if (std::fabs(dz) <= std::numeric_limits<Real>::epsilon()) break;
        }
        rule.x[i] = z;
        rule.w[i] = 2 / ((1 - z * z) * dp * dp);
    }
    return rule;
}

const GaussRule& rule() {
    static const GaussRule r = make_rule();
    return r;
}

Real gauss(const std::function<Real(Real)>& f, Real a, Real b) {
    const auto& r = rule();
    const Real mid = (a + b) / 2;
    const Real half = (b - a) / 2;
    Real acc = 0;
    for (int i = 0; i < kNodes; ++i) acc += r.w[i] * f(mid + half * r.x[i]);
    return acc * half;
}

struct Panel {
    Real a = 0;
    Real b = 0;
    Real value = 0;
    Real err = 0;
    bool operator<(const Panel& o) const { return err < o.err; }
};

Panel evaluate(const std::function<Real(Real)>& f, Real a, Real b) {
    const Real mid = (a + b) / 2;
    const Real whole = gauss(f, a, b);
    const Real halves = gauss(f, a, mid) + gauss(f, mid, b);
    return {a, b, halves, std::fabs(halves - whole)};
}

}  // namespace

void QuadratureSpec::validate() const {
    if (!(rel_tol > 0) || !(abs_tol > 0)) {
        throw DomainError("quadrature tolerances must be positive");
    }
}

QuadratureResult integrate_panels(const std::function<Real(Real)>& f,
                                  std::span<const Real> breakpoints,
                                  const QuadratureSpec& spec) {
    spec.validate();
    QuadratureResult out;
    if (breakpoints.size() < 2) return out;

    std::priority_queue<Panel> work;
    Real total = 0;
    Real err = 0;
    for (std::size_t i = 0; i + 1 < breakpoints.size(); ++i) {
        if (!(breakpoints[i] < breakpoints[i + 1])) continue;
        const Panel p = evaluate(f, breakpoints[i], breakpoints[i + 1]);
        total += p.value;
        err += p.err;
        work.push(p);
    }

    std::size_t splits = 0;
    auto target = [&] { return std::max(spec.abs_tol, spec.rel_tol * std::fabs(total)); };
    while (err > target() && !work.empty()) {
        if (splits >= spec.max_subdivisions) {
            throw QuadratureError("quadrature did not converge within max_subdivisions", total, err);
        }
        const Panel worst = work.top();
        const Real mid = (worst.a + worst.b) / 2;
        if (!(worst.a < mid && mid < worst.b)) break;  // panel at precision floor
        work.pop();
        const Panel left = evaluate(f, worst.a, mid);
        const Panel right = evaluate(f, mid, worst.b);
        total += left.value + right.value - worst.value;
        err += left.err + right.err - worst.err;
        work.push(left);
        work.push(right);
        ++splits;
    }

    // Re-add from scratch to shed the drift of the running updates.
    out.panels = work.size();
    Real value = 0;
    Real e = 0;
    while (!work.empty()) {
        value += work.top().value;
        e += work.top().err;
        work.pop();
    }
    out.value = value;
    out.err_est = e;
    return out;
}

std::vector<Real> graded_breakpoints(Real lo, Real hi, Real step, Real ratio) {
    if (!(lo > 0) || !(hi > lo)) throw DomainError("graded breakpoints need 0 < lo < hi");
    std::vector<Real> pts{lo};
    Real t = lo;
    while (t < hi) {
        Real next = t * ratio;
        if (step > 0) next = std::min(next, t + step);
        t = std::min(next, hi);
        pts.push_back(t);
    }
    return pts;
}

Real sine_tail_by_parts(const DerivativeFn& g, Real y, Real tol, int max_pairs) {
    const Real c = std::cos(y);
    const Real s = std::sin(y);
    Real acc = 0;
    Real prev = std::numeric_limits<Real>::infinity();
    for (int k = 0; k < max_pairs; ++k) {
        const Real sign = (k % 2 == 0) ? 1 : -1;
        const Real term = sign * (g(2 * k, y) * c - g(2 * k + 1, y) * s);
        const Real size = std::fabs(g(2 * k, y)) + std::fabs(g(2 * k + 1, y));
        if (size > prev) break;  // asymptotic series has started to diverge
        acc += term;
        prev = size;
        if (size < tol) break;
    }
    return acc;
}

namespace {

// Shared driver: panels of a quarter period on (0, Y] then the by-parts tail.
QuadratureResult sine_weighted(const std::function<Real(Real)>& g, const DerivativeFn& derivs,
                               const QuadratureSpec& spec) {
    constexpr int kPeriods = 256;
    const Real y_max = 2 * kPi * kPeriods;
    std::vector<Real> pts{0};
    for (int k = 1; k <= 4 * kPeriods; ++k) pts.push_back(k * kPi / 2);
    pts.back() = y_max;
    const auto body = integrate_panels([&](Real y) { return g(y) * std::sin(y); }, pts, spec);
    QuadratureResult out = body;
    out.value += sine_tail_by_parts(derivs, y_max, spec.abs_tol * 1e-3L);
    return out;
}

// k! as a Real.
Real factorial(int k) {
    Real f = 1;
    for (int i = 2; i <= k; ++i) f *= i;
    return f;
}

Real harmonic(int k) {
    Real h = 0;
    for (int i = 1; i <= k; ++i) h += Real(1) / i;
    return h;
}

}  // namespace

QuadratureResult sine_integral(const QuadratureSpec& spec) {
    // g = 1/y, g^(k) = (-1)^k k! / y^(k+1)
    return sine_weighted(
        [](Real y) { return Real(1) / y; },
        [](int k, Real y) {
            return ((k % 2) ? -1 : 1) * factorial(k) / std::pow(y, k + 1);
        },
        spec);
}

QuadratureResult log_sine_integral(const QuadratureSpec& spec) {
    // g = ln(y)/y, g^(k) = (-1)^k k! (ln y - H_k) / y^(k+1)
    return sine_weighted(
        [](Real y) { return std::log(y) / y; },
        [](int k, Real y) {
            return ((k % 2) ? -1 : 1) * factorial(k) * (std::log(y) - harmonic(k)) /
                   std::pow(y, k + 1);
        },
        spec);
}

}  // namespace lisum

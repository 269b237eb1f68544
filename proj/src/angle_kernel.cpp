#include "lisum/angle_kernel.hpp"

#include <cmath>

namespace lisum {

namespace {

void require_height(Real height) {
    if (!(height > 0)) throw DomainError("ordinate T must be positive");
}

Real signed_width(Real b) {
    if (b == Real(-0.5)) throw DomainError("b = -1/2 is excluded");
    return 2 * b + 1;
}

}  // namespace

LiParams::LiParams(std::int64_t n, Real b) : n_(n), b_(b) {
    if (n < 0) throw DomainError("order n must be non-negative");
    if (!std::isfinite(b)) throw DomainError("shift b must be finite");
    const Real w = signed_width(b);
    c_ = std::fabs(w);
    sign_ = w > 0 ? 1 : -1;
}

Angle theta(Real height, Real b) {
    require_height(height);
    const Real w = signed_width(b);
    const Real quarter = (w * w) / 4;
    const Real num_sin = -w * height;
    const Real num_cos = std::fma(height, height, -quarter);
    const Real denom = std::fma(height, height, quarter);
    Angle a;
    a.theta = std::atan2(num_sin, num_cos);
    a.sin_theta = num_sin / denom;
    a.cos_theta = num_cos / denom;
    return a;
}

Real dtheta_dT(Real height, Real b) {
    require_height(height);
    const Real w = signed_width(b);
    return w / std::fma(height, height, (w * w) / 4);
}

Real term_online(std::int64_t n, Real b, Real height) {
    require_height(height);
    const Real c = std::fabs(signed_width(b));
    return detail::online_term_from_theta(n, detail::canonical_theta(c, height));
}

Real term_offline(std::int64_t n, Real b, std::complex<Real> rho) {
    // (rho+b)/(rho-1-b) = (p + iT)/(q + iT); work with its modulus and argument
    // separately so that an on-line rho (p = -q) gives modulus exactly 1.
    const Real p = rho.real() + b;
    const Real q = rho.real() - 1 - b;
    const Real t = rho.imag();
    if ((p == 0 && t == 0) || (q == 0 && t == 0)) {
        throw DomainError("rho sits at a zero or pole of the ratio");
    }
    const Real num2 = p * p + t * t;
    const Real den2 = q * q + t * t;
    const Real log_modulus = std::log1p((num2 - den2) / den2) / 2;
    // arg((p+iT) * conj(q+iT)) = arg((pq + T^2) + iT(q - p))
    const Real phi = std::atan2(t * (q - p), std::fma(t, t, p * q));
    const Real nn = static_cast<Real>(n);
    const Real growth = std::expm1(nn * log_modulus);
    const Real s = std::sin(nn * phi / 2);
    // 2(1 - r^n cos(n phi)) = 2(1 - r^n) + 4 r^n sin^2(n phi / 2)
    return -2 * growth + 4 * (1 + growth) * s * s;
}

Real chebyshev_U(std::int64_t k, Real x) {
    if (k < 0) throw DomainError("Chebyshev index must be non-negative");
    if (k == 0) return 1;
    Real prev = 1;
    Real cur = 2 * x;
    for (std::int64_t i = 2; i <= k; ++i) {
        const Real next = 2 * x * cur - prev;
        prev = cur;
        cur = next;
    }
    return cur;
}

}  // namespace lisum

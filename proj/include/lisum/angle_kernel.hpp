#pragma once

#include <complex>
#include <cstdint>

#include "lisum/types.hpp"

namespace lisum {

/// Order n >= 0 and shift b != -1/2 of the sum k_{n,b}.
class LiParams {
public:
    LiParams(std::int64_t n, Real b);

    std::int64_t n() const noexcept { return n_; }
    Real b() const noexcept { return b_; }
    /// c = |2b+1|; every on-line quantity depends on b only through c.
    Real c() const noexcept { return c_; }
    /// +1 for b > -1/2, -1 for b < -1/2.
    int sign_factor() const noexcept { return sign_; }

private:
    std::int64_t n_;
    Real b_;
    Real c_;
    int sign_;
};

/// Argument theta of (rho+b)/(rho-1-b) at rho = 1/2 + iT, in (-pi, pi].
struct Angle {
    Real theta = 0;
    Real sin_theta = 0;
    Real cos_theta = 0;
};

/// sin = -(2b+1)T/(T^2+(2b+1)^2/4), cos = (T^2-(2b+1)^2/4)/(T^2+(2b+1)^2/4);
/// theta from the two-argument arctangent of that pair.
/// DomainError for T <= 0 or b = -1/2.
Angle theta(Real height, Real b);

/// (2b+1) / (T^2 + (2b+1)^2/4).
Real dtheta_dT(Real height, Real b);

/// 2(1 - cos(n theta(T))): the contribution of the conjugate pair 1/2 +- iT.
/// Lies in [0, 4]; identical for b and -1-b.
Real term_online(std::int64_t n, Real b, Real height);

/// 2 Re(1 - ((rho+b)/(rho-1-b))^n) for an arbitrary rho and its conjugate.
/// DomainError when rho = -b or rho = 1+b.
Real term_offline(std::int64_t n, Real b, std::complex<Real> rho);

/// Chebyshev polynomial of the second kind, U_0 = 1, U_1 = 2x.
Real chebyshev_U(std::int64_t k, Real x);

namespace detail {

/// theta for the canonical shift c = |2b+1| > 0; always in (-pi, 0).
inline Real canonical_theta(Real c, Real height) {
    return std::atan2(-c * height, std::fma(height, height, -(c * c) / 4));
}

/// 2(1 - cos(n theta)) written as 4 sin^2(n theta / 2), free of cancellation.
inline Real online_term_from_theta(std::int64_t n, Real theta) {
    const Real s = std::sin(static_cast<Real>(n) * theta / 2);
    return 4 * s * s;
}

}  // namespace detail

}  // namespace lisum

#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "lisum/types.hpp"

namespace lisum {

struct QuadratureSpec {
    Real rel_tol = 1e-8L;
    Real abs_tol = 1e-10L;
    std::size_t max_subdivisions = 2'000'000;

    /// Throws DomainError unless both tolerances are positive.
    void validate() const;
};

struct QuadratureResult {
    Real value = 0;
    Real err_est = 0;
    std::size_t panels = 0;
};

/// Adaptive panel quadrature of f over consecutive breakpoints.
///
/// Each panel is integrated by 10-point Gauss-Legendre, once whole and once
/// as two halves; the halves are kept and their difference is the panel's
/// error estimate. The worst panel is bisected until the summed estimate
/// meets the tolerance. Breakpoints should resolve oscillation (a quarter
/// period per panel) and mark kinks of the integrand.
///
/// Throws QuadratureError (carrying the partial value) once
/// max_subdivisions bisections have not sufficed.
QuadratureResult integrate_panels(const std::function<Real(Real)>& f,
                                  std::span<const Real> breakpoints,
                                  const QuadratureSpec& spec);

/// Breakpoints lo = p_0 < ... < p_m = hi with p_{k+1} <= ratio * p_k on top
/// of any uniform spacing `step`; requires lo > 0.
std::vector<Real> graded_breakpoints(Real lo, Real hi, Real step, Real ratio = 2);

/// Derivatives g^(k)(Y) of the slowly varying factor in a sine tail.
using DerivativeFn = std::function<Real(int order, Real y)>;

/// Integral of g(y) sin(y) over [Y, inf) by repeated integration by parts:
///   sum_k (-1)^k [g^(2k)(Y) cos Y - g^(2k+1)(Y) sin Y],
/// stopping once the terms stop shrinking or fall below `tol`.
Real sine_tail_by_parts(const DerivativeFn& g, Real y, Real tol, int max_pairs = 12);

/// Integral of sin(y)/y over (0, inf) = pi/2.
QuadratureResult sine_integral(const QuadratureSpec& spec = {});

/// Integral of ln(y) sin(y)/y over (0, inf) = -pi gamma / 2.
QuadratureResult log_sine_integral(const QuadratureSpec& spec = {});

}  // namespace lisum

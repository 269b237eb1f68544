#pragma once

#include "lisum/angle_kernel.hpp"
#include "lisum/counting_model.hpp"
#include "lisum/quadrature.hpp"

namespace lisum {

/// k_{n,b} as integrals against a smooth counting model N(T).
///
/// All three forms reject the empirical staircase with ModelKindError; the
/// staircase version of the same integral is exactly zero_sum().
///
///   eq6:  -2n int sin(n theta) theta'(T) N(T) dT
///   eq7:   2n int (2b+1)^2 T / (T^2 + (2b+1)^2/4)^2 U_{n-1}(cos theta) N(T) dT
///   eq8:   2n int_{-1}^{1} U_{n-1}(x) N(x) dx, integrated in phi = arccos x
///
/// eq6 and eq7 run on [support_start, T_cut] (in u = 1/T past 4cn) and add
/// the closed-form tail of zero_sum_engine plus the by-parts boundary term
/// 2(1 - cos n theta(T_cut)) N(T_cut). eq8 covers the whole phi range.
QuadratureResult integral_eq6(const LiParams& params, const CountingModel& model,
                              const QuadratureSpec& spec = {});
QuadratureResult integral_eq7(const LiParams& params, const CountingModel& model,
                              const QuadratureSpec& spec = {});
QuadratureResult integral_eq8(const LiParams& params, const CountingModel& model,
                              const QuadratureSpec& spec = {});

/// T_cut = max(1e4, 20 c n).
Real integral_cutoff(const LiParams& params);

/// 2n int |theta'(T)| (3 + ln max(T, 1)) dT over [0, inf): how far a smooth
/// model obeying the counting envelope can move the integral.
Real model_error_bound(const LiParams& params, const QuadratureSpec& spec = {});

}  // namespace lisum

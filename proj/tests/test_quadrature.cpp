#include <cmath>
#include <numbers>
#include <vector>

#include "doctest.h"
#include "lisum/quadrature.hpp"

using namespace lisum;

TEST_CASE("sine integrals reproduce the closed forms") {
    const auto si = sine_integral();
    CHECK(std::fabs(si.value - kPi / 2) <= 1e-6L);
    CHECK(si.value == doctest::Approx(1.5707963).epsilon(1e-7));
    const auto ls = log_sine_integral();
    CHECK(std::fabs(ls.value + kPi * kEulerGamma / 2) <= 1e-5L);
    CHECK(ls.value == doctest::Approx(-0.9066882).epsilon(1e-7));
    CHECK(si.err_est >= 0);
    CHECK(ls.err_est >= 0);
    MESSAGE("pi/2 error " << static_cast<double>(si.value - kPi / 2) << ", -pi gamma/2 error "
                          << static_cast<double>(ls.value + kPi * kEulerGamma / 2));
}

TEST_CASE("Gauss-Legendre panels are exact on low-degree polynomials") {
    const std::vector<Real> bp{0, 1, 3};
    const auto r = integrate_panels([](Real x) { return std::pow(x, 19) - 3 * x * x; }, bp, {});
    const Real exact = std::pow(Real(3), 20) / 20 - 27;
    CHECK(r.value == doctest::Approx(static_cast<double>(exact)).epsilon(1e-17));
    CHECK(r.panels == 2);
}

TEST_CASE("adaptive bisection on a kink and an endpoint singularity") {
    const std::vector<Real> bp{-1, 2};
    const auto kink = integrate_panels([](Real x) { return std::fabs(x - 0.3L); }, bp, {.rel_tol = 1e-12L});
    CHECK(kink.value == doctest::Approx(0.5 * 1.3 * 1.3 + 0.5 * 1.7 * 1.7).epsilon(1e-9));
    const std::vector<Real> unit{0, 1};
    const auto root = integrate_panels([](Real x) { return 1 / std::sqrt(x); }, unit, {.rel_tol = 1e-10L});
    CHECK(root.value == doctest::Approx(2).epsilon(1e-9));
    CHECK(root.panels > 10);
}

TEST_CASE("QuadratureError carries the partial value") {
    const std::vector<Real> bp{0, 1};
    try {
        integrate_panels([](Real x) { return std::sin(1 / (x + 1e-4L)); }, bp,
                         {.rel_tol = 1e-14L, .abs_tol = 1e-16L, .max_subdivisions = 3});
        FAIL("expected QuadratureError");
    } catch (const QuadratureError& e) {
        CHECK(std::isfinite(e.partial_value()));
        CHECK(e.err_est() > 0);
    }
    CHECK_THROWS_AS(sine_integral({.rel_tol = 1e-30L, .abs_tol = 1e-30L, .max_subdivisions = 10}), QuadratureError);
}

TEST_CASE("specification guards") {
    CHECK_THROWS_AS((QuadratureSpec{.rel_tol = 0}.validate()), DomainError);
    CHECK_THROWS_AS((QuadratureSpec{.abs_tol = -1}.validate()), DomainError);
    CHECK_NOTHROW(QuadratureSpec{}.validate());
}

TEST_CASE("graded breakpoints") {
    const auto bp = graded_breakpoints(1e-3L, 100, 0.5L);
    CHECK(bp.front() == 1e-3L);
    CHECK(bp.back() == 100);
    for (std::size_t i = 1; i < bp.size(); ++i) {
        CHECK(bp[i] > bp[i - 1]);
        CHECK(bp[i] <= 2 * bp[i - 1] * (1 + 1e-15L));
        CHECK(bp[i] - bp[i - 1] <= 0.5L * (1 + 1e-15L));
    }
}

TEST_CASE("by-parts sine tail against the sine integral") {
    // int_Y^inf sin y / y dy = pi/2 - Si(Y); std::sin-integral is not in the library,
    // so compare with a direct quadrature out to a far period boundary plus its own tail.
    const DerivativeFn inv = [](int k, Real y) {
        Real f = 1;
        for (int i = 1; i <= k; ++i) f *= -i;
        return f / std::pow(y, k + 1);
    };
    const Real y0 = 200;
    const Real y1 = 2000 * kPi;
    std::vector<Real> bp;
    for (Real y = y0; y < y1; y += kPi / 2) bp.push_back(y);
    bp.push_back(y1);
    const auto mid = integrate_panels([](Real y) { return std::sin(y) / y; }, bp, {.rel_tol = 1e-14L, .abs_tol = 1e-18L});
    const Real far = sine_tail_by_parts(inv, y1, 1e-20L);
    const Real near = sine_tail_by_parts(inv, y0, 1e-20L);
    CHECK(std::fabs(near - (mid.value + far)) <= 1e-15L);
    // leading term cos(Y)/Y
    CHECK(near == doctest::Approx(static_cast<double>(std::cos(y0) / y0)).epsilon(1e-3));
}

#include <complex>
#include <random>

#include "doctest.h"
#include "lisum/angle_kernel.hpp"
#include "oracles.hpp"
#include "test_support.hpp"

using namespace lisum;
using testing::ulps;

TEST_CASE("LiParams guards and canonical shift") {
    CHECK_THROWS_AS(LiParams(3, -0.5L), DomainError);
    CHECK_THROWS_AS(LiParams(-1, 0), DomainError);
    const LiParams p(5, 1);
    CHECK(p.c() == 3);
    CHECK(p.sign_factor() == 1);
    const LiParams q(5, -2);
    CHECK(q.c() == 3);
    CHECK(q.sign_factor() == -1);
}

TEST_CASE("theta at the cosine zero T = (2b+1)/2") {
    const Angle a = theta(0.5L, 0);
    CHECK(a.cos_theta == 0);
    CHECK(a.sin_theta == -1);
    CHECK(a.theta == doctest::Approx(-kPi / 2).epsilon(1e-18));
}

TEST_CASE("theta at the first zero against a 50-digit oracle") {
    const Real t = 14.134725L;
    const Angle a = theta(t, 0);
    CHECK(a.sin_theta == doctest::Approx(-0.0706588).epsilon(1e-5));
    CHECK(a.cos_theta == doctest::Approx(0.9975006).epsilon(1e-6));
    CHECK(a.theta == doctest::Approx(-0.0707178).epsilon(1e-5));

    using oracle::Big;
    const oracle::BigComplex rho(Big("0.5"), Big("14.134725"));
    const auto z = rho / (rho - 1);
    const Big arg = atan2(z.imag(), z.real());
    CHECK(std::fabs(a.theta - static_cast<Real>(arg)) < 1e-18L);
}

TEST_CASE("theta for large T approaches -(2b+1)/T") {
    for (const Real b : {0.0L, 1.0L, 7.5L}) {
        const Real w = 2 * b + 1;
        for (const Real t : {1e3L, 1e5L, 1e7L}) {
            const Real th = theta(t, b).theta;
            // theta = -w/T - w^3/(12 T^3) + ...
            CHECK(std::fabs(th + w / t) <= w * w * w / (t * t * t));
        }
    }
}

TEST_CASE("theta lies in the lower half plane for b > -1/2") {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> logt(-3, 12);
    std::uniform_real_distribution<double> bs(-0.49, 50);
    for (int i = 0; i < 2000; ++i) {
        const Angle a = theta(std::pow(10.0L, logt(rng)), bs(rng));
        CHECK(a.sin_theta < 0);
        CHECK(a.theta < 0);
        CHECK(a.theta > -kPi);
    }
}

TEST_CASE("theta domain errors") {
    CHECK_THROWS_AS(theta(0, 0), DomainError);
    CHECK_THROWS_AS(theta(-1, 0), DomainError);
    CHECK_THROWS_AS(theta(1, -0.5L), DomainError);
    CHECK_THROWS_AS(dtheta_dT(0, 0), DomainError);
}

TEST_CASE("dtheta_dT closed form") {
    CHECK(dtheta_dT(0.5L, 0) == 2);
    CHECK(dtheta_dT(1, -2) == doctest::Approx(-12.0 / 13.0).epsilon(1e-18));
    for (const Real t : {1e3L, 1e6L}) {
        CHECK(std::fabs(dtheta_dT(t, 0) - 1 / (t * t)) <= 1 / (t * t * t * t));
    }
    // central difference of theta
    for (const Real b : {0.0L, 2.0L, -3.0L}) {
        const Real t = 7.3L;
        const Real h = 1e-6L;
        const Real fd = (theta(t + h, b).theta - theta(t - h, b).theta) / (2 * h);
        CHECK(dtheta_dT(t, b) == doctest::Approx(static_cast<double>(fd)).epsilon(1e-9));
    }
}

TEST_CASE("Pythagoras and the modulus identity over a random grid") {
    std::mt19937_64 rng(2024);
    std::uniform_real_distribution<double> logt(-3, 12);
    std::uniform_real_distribution<double> bs(-50, 50);
    Real worst_pyth = 0;
    Real worst_identity = 0;
    for (int i = 0; i < 20000; ++i) {
        const Real t = std::pow(10.0L, static_cast<Real>(logt(rng)));
        const Real b = bs(rng);
        if (b == -0.5L) continue;
        const Angle a = theta(t, b);
        worst_pyth = std::max(worst_pyth, ulps(a.sin_theta * a.sin_theta + a.cos_theta * a.cos_theta, 1));

        // 1/4 + b + b^2 = (2b+1)^2/4, so both sides are sums of non-negative terms
        const Real w = 2 * b + 1;
        const Real quarter = w * w / 4;
        const Real lhs_base = std::fma(t, t, -quarter);
        const Real lhs = std::fma(lhs_base, lhs_base, (w * t) * (w * t));
        const Real rhs_base = std::fma(t, t, quarter);
        worst_identity = std::max(worst_identity, ulps(lhs, rhs_base * rhs_base));
    }
    MESSAGE("worst Pythagoras ulps " << static_cast<double>(worst_pyth)
                                     << ", worst identity ulps " << static_cast<double>(worst_identity));
    CHECK(worst_pyth <= 4);
    CHECK(worst_identity <= 8);
}

TEST_CASE("term_online values and symmetry") {
    CHECK(term_online(0, 0, 14.134725L) == 0);
    CHECK(term_online(0, 3.7L, 1e4L) == 0);
    // n = 1, b = 0: 2(1 - cos theta) = 1/(T^2 + 1/4)
    const Real t = 14.134725L;
    CHECK(term_online(1, 0, t) == doctest::Approx(0.0049988).epsilon(1e-4));
    CHECK(ulps(term_online(1, 0, t), 1 / (t * t + Real(0.25))) <= 8);

    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> logt(-2, 8);
    std::uniform_int_distribution<int> ns(0, 5000);
    std::uniform_int_distribution<int> bq(-400, 400);
    for (int i = 0; i < 5000; ++i) {
        const Real b = bq(rng) / 8.0L;  // dyadic, so -1-b is exact
        if (b == -0.5L) continue;
        const Real tt = std::pow(10.0L, static_cast<Real>(logt(rng)));
        const int n = ns(rng);
        const Real v = term_online(n, b, tt);
        CHECK(v == term_online(n, -1 - b, tt));
        CHECK(v >= 0);
        CHECK(v <= 4);
    }
}

TEST_CASE("term_online against the 50-digit complex power") {
    const oracle::Big b0("0");
    for (const auto& [n, t] : std::initializer_list<std::pair<int, const char*>>{
             {1, "14.134725142"}, {7, "21.022039639"}, {50, "101.317851006"}, {1000, "2000.5"}}) {
        const Real mine = term_online(n, 0, static_cast<Real>(oracle::Big(t)));
        const Real ref = static_cast<Real>(oracle::pair_term(n, b0, oracle::Big("0.5"), oracle::Big(t)));
        CHECK(std::fabs(mine - ref) <= 1e-15L * std::max(Real(1), ref));
    }
}

TEST_CASE("term_offline on and off the critical line") {
    // on-line consistency: same bits as the real-angle route
    for (const Real b : {0.0L, 1.0L, -2.0L, 0.3L}) {
        for (const int n : {1, 3, 40, 999}) {
            for (const Real t : {0.7L, 25.0L, 1e4L}) {
                const Real off = term_offline(n, b, {0.5L, t});
                const Real on = term_online(n, b, t);
                CHECK(ulps(off, on) <= 8);
            }
        }
    }
    CHECK(term_offline(3, 0, {0.5L, 25}) == term_online(3, 0, 25));

    // modulus of the ratio at rho = 0.9 + 25i
    const std::complex<Real> rho{0.9L, 25};
    const Real r = std::abs(rho / (rho - Real(1)));
    CHECK(r == doctest::Approx(std::sqrt(625.81 / 625.01)).epsilon(1e-15));
    CHECK(r > 1);

    // first negative term, frozen from the 50-digit oracle
    int first_negative = 0;
    for (int n = 1; n <= 10000; ++n) {
        if (term_offline(n, 0, rho) < 0) {
            first_negative = n;
            break;
        }
    }
    CHECK(first_negative == 147);
    const Real ref147 = static_cast<Real>(
        oracle::pair_term(147, oracle::Big(0), oracle::Big("0.9"), oracle::Big(25)));
    CHECK(term_offline(147, 0, rho) == doctest::Approx(static_cast<double>(ref147)).epsilon(1e-12));

    for (const int n : {1, 10, 500, 5000}) {
        const Real ref = static_cast<Real>(
            oracle::pair_term(n, oracle::Big("0.25"), oracle::Big("0.9"), oracle::Big(25)));
        CHECK(std::fabs(term_offline(n, 0.25L, rho) - ref) <= 1e-13L * std::max(Real(1), std::fabs(ref)));
    }

    CHECK_THROWS_AS(term_offline(2, 0.25L, {-0.25L, 0}), DomainError);
    CHECK_THROWS_AS(term_offline(2, 0.25L, {1.25L, 0}), DomainError);
}

TEST_CASE("Chebyshev U recurrence") {
    CHECK(chebyshev_U(0, 0.3L) == 1);
    CHECK(chebyshev_U(1, 0.3L) == doctest::Approx(0.6));
    CHECK(chebyshev_U(3, 0.5L) == -1);
    for (int n = 1; n <= 10; ++n) CHECK(chebyshev_U(n - 1, 1) == n);
    CHECK_THROWS_AS(chebyshev_U(-1, 0), DomainError);
}

TEST_CASE("sin(n theta) = sin(theta) U_{n-1}(cos theta)") {
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> th(-kPi, kPi);
    Real worst = 0;
    for (int i = 0; i < 500; ++i) {
        const Real t = th(rng);
        for (int n = 1; n <= 200; ++n) {
            const Real lhs = std::sin(n * t);
            const Real rhs = std::sin(t) * chebyshev_U(n - 1, std::cos(t));
            worst = std::max(worst, std::fabs(lhs - rhs));
        }
    }
    CHECK(worst <= 1e-10L);
}

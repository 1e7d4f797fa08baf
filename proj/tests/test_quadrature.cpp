#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include <boost/math/quadrature/tanh_sinh.hpp>

#include "bergman/core.hpp"
#include "bergman/quadrature.hpp"
#include "bergman/special.hpp"
#include "bergman/verify.hpp"

using namespace bergman;
using doctest::Approx;

namespace {

constexpr double kPi = std::numbers::pi;

double rel(Complex a, Complex b) { return std::abs(a - b) / std::max(std::abs(a), std::abs(b)); }

} // namespace

TEST_CASE("Gauss-Jacobi rule integrates polynomials exactly") {
    for (double alpha : {-0.5, 0.0, 0.7, 3.2}) {
        for (double beta : {0.0, 1.0, 2.0}) {
            const RadialRule r = gauss_jacobi_rule(12, alpha, beta);
            REQUIRE(r.nodes.size() == 12);
            for (int k = 0; k < 24; ++k) {
                double q = 0.0;
                for (std::size_t i = 0; i < r.nodes.size(); ++i) q += r.weights[i] * std::pow(r.nodes[i], k);
                CHECK(q == Approx(std::beta(k + beta + 1.0, alpha + 1.0)).epsilon(1e-12));
            }
            for (double t : r.nodes) CHECK((t > 0.0 && t < 1.0));
            for (double wt : r.weights) CHECK(wt > 0.0);
        }
    }
    CHECK_THROWS_AS(gauss_jacobi_rule(8, -1.0, 0.0), DivergentIntegral);
}

TEST_CASE("sphere monomial integrals") {
    CHECK(sphere_monomial_integral({1, 0}, {0, 1}, 2) == 0.0);
    CHECK(sphere_monomial_integral({0, 0, 0}, {0, 0, 0}, 3) == 1.0);
    CHECK(sphere_monomial_integral({1, 0}, {1, 0}, 2) == Approx(0.5));

    SUBCASE("Monte Carlo sphere oracle") {
        BallSampler s(123);
        double acc_a = 0.0;
        double acc_b = 0.0;
        const int n = 1000000;
        for (int i = 0; i < n; ++i) {
            const BallPoint u = s.sphere_point(2);
            acc_a += std::norm(u(0));
            acc_b += std::norm(u(0)) * std::norm(u(0)) * std::norm(u(1));
        }
        CHECK(acc_a / n == Approx(sphere_monomial_integral({1, 0}, {1, 0}, 2)).epsilon(1e-2));
        CHECK(acc_b / n == Approx(sphere_monomial_integral({2, 1}, {2, 1}, 2)).epsilon(1e-2));
    }
}

TEST_CASE("radial moments") {
    CHECK(radial_moment(0, 0.0, 1) == Approx(1.0));
    CHECK(radial_moment(1, 1.0, 1) == Approx(1.0 / 6.0));
    boost::math::quadrature::tanh_sinh<double> integrator;
    const double oracle = integrator.integrate([](double t) { return t * t * t * std::sqrt(1.0 - t); }, 0.0, 1.0);
    CHECK(std::abs(radial_moment(2, 0.5, 2) - oracle) <= 1e-10 * oracle);
    CHECK_THROWS_AS(radial_moment(0, -1.0, 2), DivergentIntegral);
}

TEST_CASE("ball volume factor") {
    CHECK(ball_volume_factor(1) == Approx(kPi));
    CHECK(ball_volume_factor(2) == Approx(kPi * kPi));
    CHECK(ball_volume_factor(3) == Approx(kPi * kPi * kPi / 2.0));
}

TEST_CASE("exact ball integration") {
    for (int d = 1; d <= 3; ++d) {
        for (double lambda : {d + 0.5, d + 1.0, d + 2.7}) {
            const double c = c_lambda(d, lambda);
            CHECK(std::abs(c * integrate_ball_exact(MixedPoly::constant(d, 1.0), lambda, d) - 1.0) <= 1e-13);
            CHECK(integrate_ball_exact(MixedPoly::coordinate(d, 0), lambda, d) == Complex(0.0));
            for (const auto& m : enumerate_basis(d, 8)) {
                const Complex q = c * integrate_ball_exact(MixedPoly::monomial(m, m), lambda, d);
                double oracle = std::tgamma(lambda) / std::tgamma(lambda + m.degree());
                for (int x : m.entries()) oracle *= std::tgamma(x + 1.0);
                CHECK(rel(q, oracle) <= 1e-10);
            }
        }
    }
    // odd integrands vanish exactly
    const MixedPoly odd = MixedPoly::monomial({2, 1}, {1, 0}) + MixedPoly::monomial({0, 0}, {0, 1}, 3.0);
    CHECK(integrate_ball_exact(odd, 3.5, 2) == Complex(0.0));
    CHECK_THROWS_AS(integrate_ball_exact(MixedPoly::constant(2, 1.0), 2.0, 2), DivergentIntegral);
}

TEST_CASE("Monte Carlo integration") {
    SUBCASE("probability normalization") {
        const double lambda = 3.0;
        const auto est = integrate_ball_mc([](const BallPoint&) { return Complex(1.0); }, lambda, 2, 20000, 42);
        const double c = c_lambda(2, lambda);
        CHECK(std::abs(c * est.value - 1.0) <= 3.0 * c * est.std_error + 1e-12);
    }
    SUBCASE("|z|^2 at d=1, lambda=3") {
        const auto est = integrate_ball_mc([](const BallPoint& z) { return Complex(z.squaredNorm()); }, 3.0, 1, 40000, 7);
        const double c = c_lambda(1, 3.0);
        const Complex exact = c * integrate_ball_exact(MixedPoly::abs2(1), 3.0, 1);
        CHECK(std::abs(exact - 1.0 / 3.0) <= 1e-14);
        CHECK(std::abs(c * est.value - exact) <= 4.0 * c * est.std_error);
    }
    SUBCASE("polynomial integrands within 4 standard errors") {
        // Flaky budget: at 4 sigma each check fails with probability ~6e-5; seeds are fixed.
        std::mt19937_64 rng(77);
        for (int i = 0; i < 12; ++i) {
            const int d = 1 + i % 3;
            const double w = d + 0.5 + 0.4 * i;
            const MixedPoly p = random_real_mixed_poly(rng, d, 4);
            const auto est = integrate_ball_mc([&p](const BallPoint& z) { return p(z); }, w, d, 40000,
                                               derive_seed(99, static_cast<std::uint64_t>(i)));
            const Complex exact = integrate_ball_exact(p, w, d);
            CHECK(std::abs(est.value - exact) <= 4.0 * est.std_error + 1e-12);
        }
    }
    SUBCASE("determinism") {
        const auto f = [](const BallPoint& z) { return Complex(std::cos(z(0).real()), z(1).imag()); };
        const auto a = integrate_ball_mc(f, 2.5, 2, 5000, 1234);
        const auto b = integrate_ball_mc(f, 2.5, 2, 5000, 1234);
        CHECK(a.value == b.value);
        CHECK(a.std_error == b.std_error);
        const auto c = integrate_ball_mc(f, 2.5, 2, 5000, 1235);
        CHECK(c.value != a.value);
    }
    SUBCASE("non-finite samples carry the point") {
        try {
            integrate_ball_mc([](const BallPoint&) { return Complex(std::nan("")); }, 3.0, 1, 100, 1);
            FAIL("expected NonFiniteSample");
        } catch (const NonFiniteSample& e) {
            CHECK(e.point().size() == 1);
            CHECK(e.point().norm() < 1.0);
        }
    }
    CHECK_THROWS_AS(integrate_ball_mc([](const BallPoint&) { return Complex(1.0); }, 3.0, 1, 0, 1),
                    std::invalid_argument);
}

TEST_CASE("radial integration") {
    QuadratureRule rule;
    const double lambda = 3.0;
    RadialProfile one;
    one.g = [](double) { return Complex(1.0); };
    CHECK(rel(integrate_radial_symbol(one, lambda, 2, rule), 1.0 / c_lambda(2, lambda)) <= 1e-12);

    for (double s : {0.5, 1.0, 2.3}) {
        const auto p = RadialProfile::power(s, Integrability::L1);
        CHECK(rel(integrate_radial_symbol(p, lambda, 2, rule), 1.0 / c_lambda(2, lambda + s)) <= 1e-12);
    }
    RadialProfile t;
    t.g = [](double x) { return Complex(x); };
    CHECK(rel(integrate_radial_symbol(t, 3.0, 1, rule), (1.0 / 3.0) / c_lambda(1, 3.0)) <= 1e-12);

    SUBCASE("polynomial profiles agree with the exact path") {
        for (int d = 1; d <= 3; ++d) {
            for (int k = 0; k <= 6; ++k) {
                RadialProfile g;
                g.g = [k](double x) { return Complex(std::pow(x, k) - 0.5 * x); };
                const MixedPoly p = MixedPoly::abs2_power(d, k) - Complex(0.5) * MixedPoly::abs2(d);
                const MixedPoly magnitude = MixedPoly::abs2_power(d, k) + Complex(0.5) * MixedPoly::abs2(d);
                for (double w : {d + 0.3, d + 2.0}) {
                    // some of these integrals vanish, so the error is scaled by the integral of |g|
                    const double scale = std::abs(integrate_ball_exact(magnitude, w, d));
                    CHECK(std::abs(integrate_radial_symbol(g, w, d, rule) - integrate_ball_exact(p, w, d)) <= 1e-10 * scale);
                }
            }
        }
    }
    SUBCASE("decay folds into the weight") {
        // (1-t)^s with s = 1.5 integrates at weight d - 1 although the plain weight diverges.
        const auto p = RadialProfile::power(1.5, Integrability::L1);
        const Complex v = integrate_radial_symbol(p, 1.0, 1, rule);
        CHECK(rel(v, kPi * std::beta(1.0, 1.5)) <= 1e-12);
        CHECK_THROWS_AS(integrate_radial_symbol(one, 1.0, 1, rule), DivergentIntegral);
    }
}

TEST_CASE("seed derivation") {
    CHECK(derive_seed(1, 2, 3) == derive_seed(1, 2, 3));
    CHECK(derive_seed(1, 2, 3) != derive_seed(1, 3, 2));
    CHECK(derive_seed(1, 2, 3) != derive_seed(2, 2, 3));
    BallSampler s(5);
    for (int i = 0; i < 1000; ++i) {
        const double b = s.beta(2.0, 1.5);
        CHECK((b > 0.0 && b < 1.0));
    }
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include <Eigen/SVD>

#include "bergman/core.hpp"
#include "bergman/quadrature.hpp"
#include "bergman/special.hpp"
#include "bergman/toeplitz.hpp"
#include "bergman/verify.hpp"

using namespace bergman;
using doctest::Approx;

namespace {

constexpr double kPi = std::numbers::pi;

double rel(Complex a, Complex b) {
    const double s = std::max(std::abs(a), std::abs(b));
    return s == 0.0 ? 0.0 : std::abs(a - b) / s;
}

double max_abs_diff(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) { return (a - b).cwiseAbs().maxCoeff(); }

double c_oracle(int d, double lambda) {
    double c = 1.0;
    for (int j = 1; j <= d; ++j) c *= (lambda - j) / kPi;
    return c;
}

// A_lambda (1-t)^s at |z| = rho, from the kernel expansion:
// c^2 (1-rho^2)^lambda / c_{lambda+s} sum_k (Gamma(lambda+k)/(k! Gamma(lambda)))^2 rho^{2k} k! Gamma(lambda+s)/Gamma(lambda+s+k)
double power_berezin_oracle(int d, double lambda, double s, double rho) {
    const double c = c_oracle(d, lambda);
    double sum = 0.0;
    for (int k = 0; k < 20000; ++k) {
        const double log_term = 2.0 * (std::lgamma(lambda + k) - std::lgamma(k + 1.0) - std::lgamma(lambda)) +
                                std::lgamma(k + 1.0) + std::lgamma(lambda + s) - std::lgamma(lambda + s + k) +
                                2.0 * k * std::log(rho);
        const double term = std::exp(log_term);
        sum += term;
        if (k > 50 && term < 1e-18 * sum) break;
    }
    if (rho == 0.0) sum = 1.0;
    return c * c * std::pow(1.0 - rho * rho, lambda) / c_oracle(d, lambda + s) * sum;
}

BallPoint point(std::initializer_list<Complex> v) {
    BallPoint z(static_cast<Eigen::Index>(v.size()));
    Eigen::Index i = 0;
    for (Complex x : v) z(i++) = x;
    return z;
}

} // namespace

TEST_CASE("multiplication matrices") {
    const SpaceParams p(2, 1.3);
    const OperatorMatrix id = multiplication_matrix({0, 0}, p, 4);
    CHECK(max_abs_diff(id.entries, Eigen::MatrixXcd::Identity(id.size(), id.size())) == 0.0);

    const OperatorMatrix mz = multiplication_matrix({1}, SpaceParams(1, 2.0), 1);
    CHECK(std::abs(mz.entries(1, 0) - std::sqrt(0.5)) <= 1e-15);
    CHECK(std::abs(mz.entries(0, 1)) == 0.0);

    SUBCASE("truncated norm is the largest shell value") {
        for (double lambda : {0.5, 1.0, 2.0}) {
            for (int M = 1; M <= 8; ++M) {
                const OperatorMatrix m = multiplication_matrix({1, 0}, SpaceParams(2, lambda), M);
                Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m.entries);
                double best = 0.0;
                for (const auto& idx : enumerate_basis(2, M - 1)) best = std::max(best, (idx[0] + 1.0) / (idx.degree() + lambda));
                CHECK(svd.singularValues()(0) * svd.singularValues()(0) == Approx(best).epsilon(1e-12));
            }
        }
    }
}

TEST_CASE("polynomial Toeplitz matrices") {
    SUBCASE("constant symbol is the identity") {
        for (double lambda : {0.3, 2.0, 4.5}) {
            const OperatorMatrix t = toeplitz_poly_matrix(MixedPoly::constant(2, 1.0), SpaceParams(2, lambda), 5);
            CHECK(max_abs_diff(t.entries, Eigen::MatrixXcd::Identity(t.size(), t.size())) <= 1e-15);
        }
    }
    SUBCASE("conj(z_j) z_j is diagonal with (1+m_j)/(lambda+|m|)") {
        const SpaceParams p(2, 1.0);
        const OperatorMatrix t = toeplitz_poly_matrix(MixedPoly::monomial({1, 0}, {1, 0}), p, 3);
        for (Eigen::Index i = 0; i < t.size(); ++i) {
            const auto& m = t.basis[static_cast<std::size_t>(i)];
            CHECK(t.entries(i, i).real() == Approx((1.0 + m[0]) / (1.0 + m.degree())));
        }
        CHECK(t.is_hermitian());
    }
    SUBCASE("adjoint law") {
        std::mt19937_64 rng(21);
        for (int i = 0; i < 10; ++i) {
            MixedPoly phi = random_real_mixed_poly(rng, 2, 3) + MixedPoly::monomial({1, 0}, {0, 2}, Complex(0.5, 1.5));
            const SpaceParams p(2, 0.4 + 0.5 * i);
            const OperatorMatrix t = toeplitz_poly_matrix(phi, p, 5);
            const OperatorMatrix ta = toeplitz_poly_matrix(phi.conjugate(), p, 5);
            CHECK(max_abs_diff(ta.entries, t.entries.adjoint()) == 0.0);
        }
    }
    SUBCASE("holomorphic factor law on the interior") {
        const SpaceParams p(2, 0.7);
        const MixedPoly phi = MixedPoly::monomial({0, 1}, {1, 1}, 2.0) + MixedPoly::monomial({0, 0}, {1, 0});
        const MultiIndex psi{1, 0};
        const int M = 6;
        const OperatorMatrix lhs = toeplitz_poly_matrix(phi * MixedPoly::monomial(psi, {0, 0}), p, M);
        const Eigen::MatrixXcd rhs =
            toeplitz_poly_matrix(phi, p, M).entries * multiplication_matrix(psi, p, M).entries;
        for (Eigen::Index r = 0; r < lhs.size(); ++r) {
            for (Eigen::Index c = 0; c < lhs.size(); ++c) {
                if (lhs.basis[static_cast<std::size_t>(c)].degree() + psi.degree() > M) continue;
                CHECK(std::abs(lhs.entries(r, c) - rhs(r, c)) <= 1e-13);
            }
        }
    }
    SUBCASE("projection formula for lambda > d") {
        std::mt19937_64 rng(8);
        for (int d = 1; d <= 2; ++d) {
            const double lambda = d + 1.3;
            const SpaceParams p(d, lambda);
            const MixedPoly phi = random_real_mixed_poly(rng, d, 3);
            const OperatorMatrix t = toeplitz_poly_matrix(phi, p, 5);
            for (Eigen::Index r = 0; r < t.size(); ++r) {
                for (Eigen::Index c = 0; c < t.size(); ++c) {
                    const auto& l = t.basis[static_cast<std::size_t>(r)];
                    const auto& m = t.basis[static_cast<std::size_t>(c)];
                    const MixedPoly integrand = MixedPoly::monomial(m, l) * phi;
                    const Complex v = p.c_lambda() * integrate_ball_exact(integrand, lambda, d) /
                                      std::sqrt(monomial_norm_sq(l, lambda) * monomial_norm_sq(m, lambda));
                    CHECK(std::abs(v - t.entries(r, c)) <= 1e-10 * std::max(1.0, std::abs(v)));
                }
            }
        }
    }
    SUBCASE("1 - |z|^2 below d is negative") {
        const OperatorMatrix t = toeplitz_poly_matrix(MixedPoly::constant(2, 1.0) - MixedPoly::abs2(2), SpaceParams(2, 1.0), 3);
        const SpectrumSummary s = summarize(t);
        CHECK(s.hermitian);
        CHECK(s.min_eigenvalue == Approx(-1.0));
        CHECK(s.max_eigenvalue == Approx(-0.25));
    }
}

TEST_CASE("Sobolev expansion coefficients") {
    // sum A_{jklm} P^j K^k L^l Q^m reproduces the factor of C on conj(z^p) z^a conj(z^b) z^q,
    // which is a_factor(P + K) b_factor(L + Q) with P = |p|, K = |b|, L = |a|, Q = |q|.
    for (double lambda : {0.3, 0.7, 1.5, 2.2}) {
        for (int d = 1; d <= 3; ++d) {
            const SpaceParams p(d, lambda);
            const SobolevExpansion e(p);
            const int n = e.order();
            for (int P = 0; P <= 4; ++P)
                for (int K = 0; K <= 3; ++K)
                    for (int L = 0; L <= 3; ++L)
                        for (int Q = 0; Q <= 4; ++Q) {
                            double sum = 0.0;
                            for (int j = 0; j <= n; ++j)
                                for (int k = 0; k <= n; ++k)
                                    for (int l = 0; l <= n; ++l)
                                        for (int m = 0; m <= n; ++m)
                                            sum += e(j, k, l, m) * std::pow(P, j) * std::pow(K, k) * std::pow(L, l) *
                                                   std::pow(Q, m);
                            double oracle = 1.0;
                            for (int j = n; j < 2 * n; ++j) oracle *= 1.0 + (P + K) / (lambda + j);
                            for (int j = 0; j < n; ++j) oracle *= 1.0 + (L + Q) / (lambda + j);
                            CHECK(sum == Approx(oracle).epsilon(1e-12));
                        }
        }
    }
}

TEST_CASE("Sobolev-form entries") {
    std::mt19937_64 rng(13);
    SUBCASE("constant symbol gives the inner product") {
        for (double lambda : {0.4, 1.2, 3.1}) {
            const SpaceParams p(2, lambda);
            const HoloPoly f = random_holo_poly(rng, 2, 4);
            const HoloPoly g = random_holo_poly(rng, 2, 4);
            CHECK(rel(toeplitz_sobolev_entry(f, g, MixedPoly::constant(2, 1.0), p), inner_product(f, g, p)) <= 1e-12);
        }
    }
    SUBCASE("conj(z^b) z^a gives <z^b f, z^a g>") {
        const SpaceParams p(2, 3.4);
        const HoloPoly f = random_holo_poly(rng, 2, 3);
        const HoloPoly g = random_holo_poly(rng, 2, 3);
        const MultiIndex a{1, 0}, b{0, 2};
        const Complex lhs = toeplitz_sobolev_entry(f, g, MixedPoly::monomial(a, b), p);
        const Complex rhs = inner_product(HoloPoly::monomial(b) * f, HoloPoly::monomial(a) * g, p);
        CHECK(rel(lhs, rhs) <= 1e-12);
    }
    SUBCASE("|z|^2 on constants at d=2, lambda=1") {
        const SpaceParams p(2, 1.0);
        const HoloPoly one = HoloPoly::constant(2, 1.0);
        CHECK(rel(toeplitz_sobolev_entry(one, one, MixedPoly::abs2(2), p), 2.0) <= 1e-14);
        CHECK(toeplitz_poly_matrix(MixedPoly::abs2(2), p, 2).entries(0, 0).real() == Approx(2.0));
    }
    SUBCASE("independent of n and equal to the polynomial matrix") {
        for (double lambda : {0.3, 0.7, 1.5, 2.5}) {
            const SpaceParams p(2, lambda);
            const MixedPoly phi = random_real_mixed_poly(rng, 2, 3);
            const OperatorMatrix sob = toeplitz_sobolev_matrix(phi, p, 4);
            const OperatorMatrix sob_next = toeplitz_sobolev_matrix(phi, p.with_order(p.n() + 1), 4);
            const OperatorMatrix poly = toeplitz_poly_matrix(phi, p, 4);
            const double scale = poly.entries.cwiseAbs().maxCoeff();
            CHECK(max_abs_diff(sob.entries, poly.entries) <= 1e-10 * scale);
            CHECK(max_abs_diff(sob.entries, sob_next.entries) <= 1e-10 * scale);
        }
    }
    SUBCASE("generic symbols through the expanded form") {
        const SpaceParams p(2, 1.3);
        const MixedPoly phi = MixedPoly::abs2(2) + MixedPoly::monomial({1, 0}, {1, 0}, 0.5);
        const GenericSymbol gen = GenericSymbol::from_polynomial(phi, p.n());
        QuadratureRule rule;
        rule.sphere = SphereRule::MonteCarlo;
        rule.mc_samples = 1 << 18;
        rule.seed = 17;
        const HoloPoly f = HoloPoly::constant(2, 1.0) + HoloPoly::monomial({1, 0});
        const HoloPoly g = HoloPoly::constant(2, 0.5) + HoloPoly::monomial({1, 0});
        const Complex exact = toeplitz_sobolev_entry(f, g, phi, p);
        const Complex mc = toeplitz_sobolev_entry(f, g, gen, p, rule);
        CHECK(rel(mc, exact) <= 2e-2);
        GenericSymbol shallow = gen;
        shallow.max_order = 0;
        CHECK_THROWS_AS(toeplitz_sobolev_entry(f, g, shallow, p, rule), PreconditionError);
    }
}

TEST_CASE("Hilbert-Schmidt matrices") {
    SUBCASE("zero at integer lambda <= d") {
        for (int d = 1; d <= 3; ++d) {
            for (int lam = 1; lam <= d; ++lam) {
                const auto m = hs_matrix(RadialProfile::power(d + 0.5, Integrability::L1), SpaceParams(d, lam), 4);
                CHECK(m.entries.isZero(0.0));
            }
        }
    }
    SUBCASE("a_00 for (1-t), d=1, lambda=2") {
        const auto m = hs_matrix(RadialProfile::power(1.0, Integrability::L2), SpaceParams(1, 2.0), 3);
        CHECK(m.entries(0, 0).real() == Approx(0.5).epsilon(1e-12));
    }
    SUBCASE("d=1 diagonal for (1-t)^2") {
        for (double lambda : {0.3, 0.8, 1.6, 2.4}) {
            const auto m = hs_matrix(RadialProfile::power(2.0, Integrability::L1), SpaceParams(1, lambda), 30);
            for (int k = 0; k <= 30; ++k) {
                const double oracle = c_oracle(1, lambda) * kPi * lambda / ((lambda + k) * (lambda + k + 1.0));
                CHECK(m.entries(k, k).real() == Approx(oracle).epsilon(1e-12));
            }
            CHECK((m.entries - Eigen::MatrixXcd(m.entries.diagonal().asDiagonal())).cwiseAbs().maxCoeff() == 0.0);
        }
    }
    SUBCASE("negative between d-1 and d") {
        for (int d = 1; d <= 3; ++d) {
            const double lambda = d - 0.4;
            const auto m = hs_matrix(RadialProfile::power(d + 0.5, Integrability::L1), SpaceParams(d, lambda), 4);
            for (Eigen::Index i = 0; i < m.size(); ++i) CHECK(m.entries(i, i).real() <= 0.0);
        }
    }
    SUBCASE("radial and exact paths agree above d") {
        const SpaceParams p(2, 3.5);
        const MixedPoly one_minus = MixedPoly::constant(2, 1.0) - MixedPoly::abs2(2);
        const auto radial = hs_matrix(RadialProfile::power(2.0, Integrability::L1), p, 5);
        const auto exact = hs_matrix(one_minus * one_minus, p, 5);
        CHECK(max_abs_diff(radial.entries, exact.entries) <= 1e-12);
        // and both equal the Toeplitz matrix of the same polynomial
        CHECK(max_abs_diff(exact.entries, toeplitz_poly_matrix(one_minus * one_minus, p, 5).entries) <= 1e-12);
    }
    SUBCASE("generic symbols by Monte Carlo") {
        const SpaceParams p(2, 1.6);
        const auto radial = hs_matrix(RadialProfile::power(2.0, Integrability::L2), p, 2);
        const GenericSymbol gen = GenericSymbol::from_function(
            [](const BallPoint& z) { return Complex(std::pow(1.0 - z.squaredNorm(), 2.0)); }, Integrability::L2);
        QuadratureRule rule;
        rule.mc_samples = 1 << 17;
        const auto mc = hs_matrix(gen, p, 2, rule);
        CHECK(max_abs_diff(mc.entries, radial.entries) <= 0.02 * radial.entries.cwiseAbs().maxCoeff());
        const auto again = hs_matrix(gen, p, 2, rule);
        CHECK(max_abs_diff(mc.entries, again.entries) == 0.0);
    }
    SUBCASE("preconditions") {
        CHECK_THROWS_AS(hs_matrix(RadialProfile::power(1.5, Integrability::L2), SpaceParams(2, 0.9), 3), PreconditionError);
        CHECK_THROWS_AS(hs_matrix(MixedPoly::abs2(2), SpaceParams(2, 1.5), 3), PreconditionError);
        CHECK_NOTHROW(hs_matrix(RadialProfile::power(3.0, Integrability::L1), SpaceParams(2, 0.3), 3));
    }
}

TEST_CASE("Berezin kernel") {
    std::mt19937_64 rng(31);
    for (int i = 0; i < 200; ++i) {
        const int d = 1 + i % 3;
        const SpaceParams p(d, 0.35 + 0.05 * i);
        const double c2 = p.c_lambda() * p.c_lambda();
        const BallPoint z = random_ball_point(rng, d, 0.99);
        const BallPoint w = random_ball_point(rng, d, 0.99);
        CHECK(berezin_kernel(z, z, p) == Approx(c2).epsilon(1e-12));
        CHECK(berezin_kernel(BallPoint::Zero(d), w, p) == Approx(c2 * std::pow(1.0 - w.squaredNorm(), p.lambda())));
        CHECK(berezin_kernel(z, w, p) == Approx(berezin_kernel(w, z, p)).epsilon(1e-14));
        CHECK(berezin_kernel(z, w, p) <= c2 * (1.0 + 1e-12));
        const BallPoint u = random_ball_point(rng, d, 0.9);
        CHECK(berezin_kernel(mobius(u, z), mobius(u, w), p) == Approx(berezin_kernel(z, w, p)).epsilon(1e-10));
    }
}

TEST_CASE("Berezin transform") {
    SUBCASE("constant symbol above d") {
        for (int d = 1; d <= 3; ++d) {
            const SpaceParams p(d, d + 0.7);
            for (double r : {0.0, 0.5, 0.95}) {
                BallPoint z = BallPoint::Zero(d);
                z(d - 1) = r;
                CHECK(berezin_transform(MixedPoly::constant(d, 1.0), z, p).real() == Approx(p.c_lambda()).epsilon(1e-10));
            }
        }
    }
    SUBCASE("power profiles against the series") {
        for (int d = 1; d <= 3; ++d) {
            for (double lambda : {0.6, d - 0.5, d + 0.7}) {
                if (!(lambda > 0.0)) continue;
                const double s = d + 1.0;
                const SpaceParams p(d, lambda);
                const auto phi = RadialProfile::power(s, Integrability::L1);
                for (double rho : {0.0, 0.3, 0.7, 0.9, 0.99}) {
                    BallPoint z = BallPoint::Zero(d);
                    z(0) = rho;
                    const double oracle = power_berezin_oracle(d, lambda, s, rho);
                    const Complex v = berezin_transform(phi, z, p);
                    CHECK(std::abs(v - oracle) <= 1e-8 * std::abs(oracle) + 1e-14);
                }
            }
        }
    }
    SUBCASE("radial symbols give radial output") {
        const SpaceParams p(2, 1.4);
        RadialProfile g;
        g.g = [](double t) { return Complex(std::exp(-2.0 * t) * std::pow(1.0 - t, 2.0)); };
        g.reduced = [](double t) { return Complex(std::exp(-2.0 * t)); };
        g.decay = 2.0;
        g.cls = Integrability::L2;
        const Complex a = berezin_transform(g, point({0.6, 0.0}), p);
        const Complex b = berezin_transform(g, point({Complex(0.0, 0.6), 0.0}), p);
        const Complex c = berezin_transform(g, point({0.6 / std::sqrt(2.0), Complex(0.0, -0.6 / std::sqrt(2.0))}), p);
        CHECK(std::abs(a - b) <= 1e-12 * std::abs(a));
        CHECK(std::abs(a - c) <= 1e-10 * std::abs(a));
        CHECK(std::abs(a.imag()) == 0.0);
    }
    SUBCASE("zero when c_lambda vanishes") {
        const SpaceParams p(2, 2.0);
        CHECK(berezin_transform(RadialProfile::power(3.0, Integrability::L1), point({0.2, 0.1}), p) == Complex(0.0));
    }
    SUBCASE("polynomial symbols by Monte Carlo") {
        const SpaceParams p(1, 2.5);
        RadialProfile t;
        t.g = [](double x) { return Complex(x); };
        const BallPoint z = point({0.4});
        const Complex radial = berezin_transform(t, z, p);
        QuadratureRule rule;
        rule.mc_samples = 1 << 18;
        const Complex mc = berezin_transform(MixedPoly::abs2(1), z, p, rule);
        CHECK(rel(mc, radial) <= 1e-2);
    }
}

TEST_CASE("Hilbert-Schmidt norms") {
    SUBCASE("entries") {
        const SpaceParams p(1, 1.5);
        OperatorMatrix zero(p, 5);
        CHECK(hs_norm_via_entries(zero) == 0.0);
        OperatorMatrix id(p, 7);
        id.entries.setIdentity();
        CHECK(hs_norm_via_entries(id) == Approx(std::sqrt(8.0)));
    }
    SUBCASE("entries increase with M and stay below the Berezin form") {
        for (int d = 1; d <= 2; ++d) {
            for (double lambda : {d / 2.0 + 0.3, d + 0.6}) {
                const SpaceParams p(d, lambda);
                const auto phi = RadialProfile::power(d + 1.0, Integrability::L2);
                const double full = hs_norm_via_berezin(phi, p);
                const auto m = hs_matrix(phi, p, d == 1 ? 60 : 30);
                double prev = 0.0;
                for (int k = 0; k <= m.degree; k += 5) {
                    const double h = hs_norm_via_entries(m.truncated(k));
                    CHECK(h >= prev);
                    CHECK(h <= full * (1.0 + 1e-6));
                    prev = h;
                }
                CHECK(prev == Approx(full).epsilon(d == 1 ? 1e-3 : 1e-2));
            }
        }
    }
    SUBCASE("vanishing c_lambda") {
        CHECK(hs_norm_via_berezin(RadialProfile::power(2.0, Integrability::L1), SpaceParams(1, 1.0)) == 0.0);
    }
    SUBCASE("L1 norm and bound") {
        for (double s : {1.5, 2.0, 3.5}) {
            CHECK(l1_tau_norm(RadialProfile::power(s, Integrability::L1), 1) == Approx(kPi / (s - 1.0)).epsilon(1e-10));
        }
        CHECK(l1_tau_norm(RadialProfile::power(3.5, Integrability::L1), 2) ==
              Approx(kPi * kPi * std::beta(2.0, 1.5)).epsilon(1e-10));
        for (int d = 1; d <= 2; ++d) {
            for (double lambda : {0.3, 0.8, 1.6, 2.7}) {
                const SpaceParams p(d, lambda);
                const auto phi = RadialProfile::power(d + 1.0, Integrability::L1);
                CHECK(hs_norm_via_berezin(phi, p) <= std::abs(p.c_lambda()) * l1_tau_norm(phi, d));
            }
        }
    }
}

TEST_CASE("spectrum summary") {
    const SpaceParams p(2, 0.5);
    const auto t = toeplitz_poly_matrix(MixedPoly::monomial({1, 0}, {1, 0}), p, 6);
    const SpectrumSummary s = summarize(t);
    CHECK(s.degree == 6);
    CHECK(s.hermitian);
    CHECK(s.max_eigenvalue == Approx(2.0));
    CHECK(s.operator_norm == Approx(2.0));
    CHECK(s.converged);
    CHECK(s.hs_norm == Approx(hs_norm_via_entries(t)));

    const auto growth = toeplitz_poly_matrix(MixedPoly::abs2_power(2, 3), SpaceParams(2, 1.0), 6);
    const SpectrumSummary g = summarize(growth);
    CHECK(g.operator_norm >= 4.0 - 1e-12);

    const auto mz = multiplication_matrix({1, 0}, p, 4);
    const SpectrumSummary nh = summarize(mz);
    CHECK_FALSE(nh.hermitian);
    CHECK(nh.operator_norm == Approx(std::sqrt(2.0)));
    CHECK(nh.converged);
}

TEST_CASE("operator matrix truncation") {
    const SpaceParams p(2, 1.7);
    const auto t = toeplitz_poly_matrix(MixedPoly::abs2(2) + MixedPoly::monomial({2, 0}, {0, 1}), p, 6);
    const auto small = toeplitz_poly_matrix(MixedPoly::abs2(2) + MixedPoly::monomial({2, 0}, {0, 1}), p, 3);
    const auto cut = t.truncated(3);
    CHECK(cut.basis == small.basis);
    CHECK(max_abs_diff(cut.entries, small.entries) == 0.0);
}

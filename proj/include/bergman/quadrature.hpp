#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "bergman/polynomial.hpp"
#include "bergman/space.hpp"

namespace bergman {

// Raised when an integral over the ball does not converge for the requested
// weight. Divergent weights are reported, never returned as infinity.
class DivergentIntegral : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// Raised by Monte Carlo integration when the integrand is not finite at a sample.
class NonFiniteSample : public std::runtime_error {
public:
    NonFiniteSample(const std::string& what, BallPoint point)
        : std::runtime_error(what), point_(std::move(point)) {}
    const BallPoint& point() const { return point_; }

private:
    BallPoint point_;
};

enum class Integrability { L1, L2, Bounded };

std::string to_string(Integrability cls);

// Symbol phi(z) = g(|z|^2). `decay` is an exponent s with g(t) = (1-t)^s h(t) and
// h bounded near t = 1; quadrature folds (1-t)^s into the Jacobi weight and
// evaluates h. When `reduced` is empty, h is computed as g(t) / (1-t)^s.
struct RadialProfile {
    std::function<Complex(double)> g;
    Integrability cls = Integrability::Bounded;
    double decay = 0.0;
    std::function<Complex(double)> reduced;

    Complex operator()(double t) const { return g(t); }
    Complex reduced_at(double t) const;

    // (1 - t)^s, with h = 1.
    static RadialProfile power(double s, Integrability cls);
};

// Gauss-Jacobi nodes t in (0,1) and positive weights for the weight (1-t)^alpha t^beta.
struct RadialRule {
    std::vector<double> nodes;
    std::vector<double> weights;
    double alpha = 0.0;
    double beta = 0.0;
};

RadialRule gauss_jacobi_rule(int n, double alpha, double beta);

enum class SphereRule { ExactMonomial, MonteCarlo };

struct QuadratureRule {
    int radial_nodes = 64;
    SphereRule sphere = SphereRule::ExactMonomial;
    long mc_samples = 1 << 16;
    std::uint64_t seed = 0x5eedb0a7ULL;
    // Trapezoid nodes for angular averages; 0 picks a count from the geometry.
    int angular_nodes = 0;

    // Polynomial degree in t integrated exactly, when the sphere rule is exact.
    std::optional<int> exact_degree() const;
};

// pi^d / (d-1)!, so that dz = ball_volume_factor(d) t^{d-1} dt dsigma with t = |z|^2.
double ball_volume_factor(int d);

// Integral of z^a conj(z)^b over the unit sphere, normalized surface measure.
double sphere_monomial_integral(const MultiIndex& a, const MultiIndex& b, int d);

// int_0^1 t^{k+d-1} (1-t)^alpha dt = B(k + d, alpha + 1).
double radial_moment(int k, double alpha, int d);

// int_B p(z) (1 - |z|^2)^{weight_exponent - d - 1} dz, term by term. Requires
// weight_exponent > d.
Complex integrate_ball_exact(const MixedPoly& p, double weight_exponent, int d);

struct McEstimate {
    Complex value;
    double std_error = 0.0;
    long samples = 0;
};

using BallFunction = std::function<Complex(const BallPoint&)>;

// Importance-sampled estimate of int_B f(z) (1 - |z|^2)^{weight_exponent - d - 1} dz.
// Points are drawn with |z|^2 ~ Beta(d, p - d) (p the proposal exponent, default
// weight_exponent when it exceeds d, else d + 1) and a uniform direction, used in
// antithetic pairs (z, -z). The stream is split into fixed blocks with derived
// seeds, so the result depends only on `seed`.
McEstimate integrate_ball_mc(const BallFunction& f, double weight_exponent, int d, long samples,
                             std::uint64_t seed,
                             std::optional<double> proposal_exponent = std::nullopt);

// int_B g(|z|^2) (1 - |z|^2)^{weight_exponent - d - 1} dz
//   = ball_volume_factor(d) int_0^1 g(t) t^{d-1} (1-t)^{weight_exponent-d-1} dt.
Complex integrate_radial_symbol(const RadialProfile& g, double weight_exponent, int d,
                                const QuadratureRule& rule);

// Mixes a base seed with stream coordinates through std::seed_seq.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t a, std::uint64_t b = 0);

// Uniform point of the unit sphere S^{2d-1} and a Beta(a, b) variate by inverse CDF.
class BallSampler {
public:
    explicit BallSampler(std::uint64_t seed);
    double uniform();  // in (0, 1)
    double normal();
    BallPoint sphere_point(int d);
    double beta(double a, double b);

private:
    std::mt19937_64 engine_;
    std::uniform_real_distribution<double> uniform_{0.0, 1.0};
    std::normal_distribution<double> normal_{0.0, 1.0};
};

} // namespace bergman

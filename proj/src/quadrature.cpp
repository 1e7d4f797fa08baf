#include "bergman/quadrature.hpp"

#include <array>
#include <cmath>
#include <numbers>

#include <Eigen/Eigenvalues>
#include <boost/math/special_functions/beta.hpp>

#include "bergman/detail/parallel.hpp"
#include "bergman/special.hpp"

namespace bergman {

std::string to_string(Integrability cls) {
    switch (cls) {
        case Integrability::L1: return "L1";
        case Integrability::L2: return "L2";
        case Integrability::Bounded: return "bounded";
    }
    return "unknown";
}

Complex RadialProfile::reduced_at(double t) const {
    if (reduced) return reduced(t);
    if (decay == 0.0) return g(t);
    return g(t) / std::pow(1.0 - t, decay);
}

RadialProfile RadialProfile::power(double s, Integrability cls) {
    RadialProfile p;
    p.g = [s](double t) { return Complex(std::pow(1.0 - t, s)); };
    p.cls = cls;
    p.decay = s;
    p.reduced = [](double) { return Complex(1.0); };
    return p;
}

namespace {

double beta_function(double a, double b) {
    const long double la = a;
    const long double lb = b;
    return static_cast<double>(std::exp(std::lgamma(la) + std::lgamma(lb) - std::lgamma(la + lb)));
}

} // namespace

RadialRule gauss_jacobi_rule(int n, double alpha, double beta) {
    if (n < 1) throw std::invalid_argument("gauss_jacobi_rule: need at least one node");
    if (!(alpha > -1.0) || !(beta > -1.0)) {
        throw DivergentIntegral("gauss_jacobi_rule: weight (1-t)^" + std::to_string(alpha) + " t^" +
                                std::to_string(beta) + " is not integrable");
    }
    // Golub-Welsch on the Jacobi matrix of the weight (1-x)^alpha (1+x)^beta on [-1, 1].
    Eigen::VectorXd diag(n);
    Eigen::VectorXd sub(std::max(n - 1, 1));
    const double ab = alpha + beta;
    diag(0) = (beta - alpha) / (ab + 2.0);
    for (int k = 1; k < n; ++k) {
        const double s = 2.0 * k + ab;
        diag(k) = (beta * beta - alpha * alpha) / (s * (s + 2.0));
    }
    for (int k = 1; k < n; ++k) {
        const double s = 2.0 * k + ab;
        double b2;
        if (k == 1) {
            b2 = 4.0 * (1.0 + alpha) * (1.0 + beta) / ((2.0 + ab) * (2.0 + ab) * (3.0 + ab));
        } else {
            b2 = 4.0 * k * (k + alpha) * (k + beta) * (k + ab) / (s * s * (s + 1.0) * (s - 1.0));
        }
        sub(k - 1) = std::sqrt(b2);
    }

    RadialRule rule;
    rule.alpha = alpha;
    rule.beta = beta;
    rule.nodes.resize(static_cast<std::size_t>(n));
    rule.weights.resize(static_cast<std::size_t>(n));
    const double mass = beta_function(alpha + 1.0, beta + 1.0);
    if (n == 1) {
        rule.nodes[0] = 0.5 * (1.0 + diag(0));
        rule.weights[0] = mass;
        return rule;
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
    solver.computeFromTridiagonal(diag, sub.head(n - 1), Eigen::ComputeEigenvectors);
    if (solver.info() != Eigen::Success) {
        throw std::runtime_error("gauss_jacobi_rule: eigenvalue iteration failed");
    }
    for (int i = 0; i < n; ++i) {
        const double v0 = solver.eigenvectors()(0, i);
        rule.nodes[static_cast<std::size_t>(i)] = 0.5 * (1.0 + solver.eigenvalues()(i));
        rule.weights[static_cast<std::size_t>(i)] = mass * v0 * v0;
    }
    return rule;
}

std::optional<int> QuadratureRule::exact_degree() const {
    if (sphere != SphereRule::ExactMonomial) return std::nullopt;
    return 2 * radial_nodes - 1;
}

double ball_volume_factor(int d) {
    double r = std::pow(std::numbers::pi, d);
    for (int j = 2; j <= d - 1; ++j) r /= j;
    return r;
}

double sphere_monomial_integral(const MultiIndex& a, const MultiIndex& b, int d) {
    if (a.dim() != d || b.dim() != d) throw std::invalid_argument("sphere_monomial_integral: dimension");
    if (!(a == b)) return 0.0;
    // (d-1)! a! / (d-1+|a|)!
    double r = a.factorial();
    for (int j = d; j <= d - 1 + a.degree(); ++j) r /= j;
    return r;
}

double radial_moment(int k, double alpha, int d) {
    if (k < 0) throw std::invalid_argument("radial_moment: k must be non-negative");
    if (!(alpha > -1.0)) {
        throw DivergentIntegral("radial moment diverges: (1-t)^" + std::to_string(alpha) +
                                " is not integrable at t = 1");
    }
    // B(p, q) = (1/q) prod_{j=1}^{p-1} j / (q + j), p = k + d integral.
    const int p = k + d;
    const double q = alpha + 1.0;
    double r = 1.0 / q;
    for (int j = 1; j <= p - 1; ++j) r *= j / (q + j);
    return r;
}

Complex integrate_ball_exact(const MixedPoly& p, double weight_exponent, int d) {
    if (p.dim() != d) throw std::invalid_argument("integrate_ball_exact: dimension mismatch");
    if (!(weight_exponent > d)) {
        throw DivergentIntegral("integrate_ball_exact: weight exponent " +
                                std::to_string(weight_exponent) + " must exceed d = " +
                                std::to_string(d));
    }
    const double alpha = weight_exponent - d - 1.0;
    const double volume = ball_volume_factor(d);
    Complex sum{};
    for (const auto& [key, c] : p.terms()) {
        if (!(key.hol == key.antihol)) continue;
        sum += c * (volume * sphere_monomial_integral(key.hol, key.antihol, d) *
                    radial_moment(key.hol.degree(), alpha, d));
    }
    return sum;
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t a, std::uint64_t b) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(a >> 32),
                      static_cast<std::uint32_t>(b), static_cast<std::uint32_t>(b >> 32)};
    std::array<std::uint32_t, 2> out{};
    seq.generate(out.begin(), out.end());
    return (static_cast<std::uint64_t>(out[0]) << 32) | out[1];
}

BallSampler::BallSampler(std::uint64_t seed) : engine_(seed) {}

double BallSampler::uniform() {
    double u;
    do {
        u = uniform_(engine_);
    } while (u <= 0.0);
    return u;
}

double BallSampler::normal() { return normal_(engine_); }

BallPoint BallSampler::sphere_point(int d) {
    BallPoint z(d);
    double r2 = 0.0;
    do {
        for (int j = 0; j < d; ++j) z(j) = Complex(normal(), normal());
        r2 = z.squaredNorm();
    } while (r2 == 0.0);
    return z / std::sqrt(r2);
}

double BallSampler::beta(double a, double b) {
    return boost::math::ibeta_inv(a, b, uniform());
}

McEstimate integrate_ball_mc(const BallFunction& f, double weight_exponent, int d, long samples,
                             std::uint64_t seed, std::optional<double> proposal_exponent) {
    if (samples < 1) throw std::invalid_argument("integrate_ball_mc: samples must be >= 1");
    const double proposal = proposal_exponent.value_or(weight_exponent > d ? weight_exponent : d + 1.0);
    if (!(proposal > d)) {
        throw DivergentIntegral("integrate_ball_mc: proposal exponent must exceed d");
    }
    // Normalizer of the proposal density (1-|z|^2)^{p-d-1} on the ball.
    const double normalizer = ball_volume_factor(d) * radial_moment(0, proposal - d - 1.0, d);
    const double excess = weight_exponent - proposal;

    constexpr long kBlock = 1024;
    const long blocks = (samples + kBlock - 1) / kBlock;
    struct Partial {
        Complex sum;
        double sum_sq = 0.0;
    };
    std::vector<Partial> partial(static_cast<std::size_t>(blocks));
    detail::parallel_for(static_cast<std::size_t>(blocks), [&](std::size_t b) {
        BallSampler sampler(derive_seed(seed, b));
        const long begin = static_cast<long>(b) * kBlock;
        const long end = std::min(samples, begin + kBlock);
        Partial acc;
        for (long i = begin; i < end; ++i) {
            const double t = sampler.beta(d, proposal - d);
            const BallPoint z = std::sqrt(t) * sampler.sphere_point(d);
            const double w = excess == 0.0 ? 1.0 : std::pow(1.0 - t, excess);
            const Complex fp = f(z);
            const Complex fm = f(-z);
            const Complex x = 0.5 * (fp + fm) * w;
            if (!std::isfinite(x.real()) || !std::isfinite(x.imag())) {
                throw NonFiniteSample("integrate_ball_mc: non-finite integrand", z);
            }
            acc.sum += x;
            acc.sum_sq += std::norm(x);
        }
        partial[b] = acc;
    });

    Complex sum{};
    double sum_sq = 0.0;
    for (const auto& p : partial) {
        sum += p.sum;
        sum_sq += p.sum_sq;
    }
    const double n = static_cast<double>(samples);
    const Complex mean = sum / n;
    const double var = samples > 1 ? std::max(0.0, (sum_sq - n * std::norm(mean)) / (n - 1.0)) : 0.0;
    return {normalizer * mean, normalizer * std::sqrt(var / n), samples};
}

Complex integrate_radial_symbol(const RadialProfile& g, double weight_exponent, int d,
                                const QuadratureRule& rule) {
    const double alpha = weight_exponent - d - 1.0 + g.decay;
    if (!(alpha > -1.0)) {
        throw DivergentIntegral("integrate_radial_symbol: integrand (1-t)^" + std::to_string(alpha) +
                                " is not integrable for weight exponent " +
                                std::to_string(weight_exponent));
    }
    const RadialRule r = gauss_jacobi_rule(rule.radial_nodes, alpha, d - 1.0);
    Complex sum{};
    for (std::size_t i = 0; i < r.nodes.size(); ++i) sum += r.weights[i] * g.reduced_at(r.nodes[i]);
    return ball_volume_factor(d) * sum;
}

} // namespace bergman

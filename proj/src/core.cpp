#include "bergman/core.hpp"

namespace bergman {

double monomial_norm_sq(const MultiIndex& m, double lambda) {
    return m.factorial() * gamma_ratio(lambda, m.degree());
}

double monomial_inner_product(const MultiIndex& l, const MultiIndex& m, const SpaceParams& params) {
    if (l.dim() != m.dim()) throw std::invalid_argument("multi-index dimension mismatch");
    if (!(l == m)) return 0.0;
    return monomial_norm_sq(m, params.lambda());
}

Complex inner_product(const HoloPoly& f, const HoloPoly& g, const SpaceParams& params) {
    if (f.dim() != g.dim()) throw std::invalid_argument("inner_product: dimension mismatch");
    Complex r{};
    for (const auto& [m, c] : f.terms()) {
        const Complex cg = g.coeff(m);
        if (cg != Complex{}) r += std::conj(c) * cg * monomial_norm_sq(m, params.lambda());
    }
    return r;
}

double norm_sq(const HoloPoly& f, const SpaceParams& params) {
    double r = 0.0;
    for (const auto& [m, c] : f.terms()) r += std::norm(c) * monomial_norm_sq(m, params.lambda());
    return r;
}

namespace {

template <typename Scale>
HoloPoly diagonal(const HoloPoly& f, Scale scale) {
    HoloPoly r(f.dim());
    for (const auto& [m, c] : f.terms()) r.add(m, c * scale(m.degree()));
    return r;
}

} // namespace

HoloPoly number_operator(const HoloPoly& f) {
    return diagonal(f, [](int k) { return static_cast<double>(k); });
}

HoloPoly shift_operator(const HoloPoly& f, double a) {
    return diagonal(f, [a](int k) { return 1.0 + k / a; });
}

double a_factor(int k, double lambda, int n) {
    double r = 1.0;
    for (int j = n; j <= 2 * n - 1; ++j) r *= 1.0 + k / (lambda + j);
    return r;
}

double b_factor(int k, double lambda, int n) {
    double r = 1.0;
    for (int j = 0; j <= n - 1; ++j) r *= 1.0 + k / (lambda + j);
    return r;
}

HoloPoly apply_A(const HoloPoly& f, const SpaceParams& params) {
    return diagonal(f, [&](int k) { return a_factor(k, params.lambda(), params.n()); });
}

HoloPoly apply_B(const HoloPoly& f, const SpaceParams& params) {
    return diagonal(f, [&](int k) { return b_factor(k, params.lambda(), params.n()); });
}

MixedPoly apply_C(const MixedPoly& p, const SpaceParams& params) {
    MixedPoly r(p.dim());
    for (const auto& [key, c] : p.terms()) {
        const double f = a_factor(key.antihol.degree(), params.lambda(), params.n()) *
                         b_factor(key.hol.degree(), params.lambda(), params.n());
        r.add(key.hol, key.antihol, c * f);
    }
    return r;
}

MixedPoly number_operator(const MixedPoly& p) {
    MixedPoly r(p.dim());
    for (const auto& [key, c] : p.terms()) r.add(key.hol, key.antihol, c * double(key.hol.degree()));
    return r;
}

MixedPoly conj_number_operator(const MixedPoly& p) {
    MixedPoly r(p.dim());
    for (const auto& [key, c] : p.terms()) {
        r.add(key.hol, key.antihol, c * double(key.antihol.degree()));
    }
    return r;
}

Complex reproducing_kernel(const BallPoint& z, const BallPoint& w, double lambda) {
    if (z.size() != w.size()) throw std::invalid_argument("reproducing_kernel: dimension mismatch");
    require_in_ball(z, "reproducing_kernel");
    require_in_ball(w, "reproducing_kernel");
    const Complex base = 1.0 - hermitian_dot(z, w);
    return std::pow(base, -lambda);
}

Complex kernel_partial_sum(const BallPoint& z, const BallPoint& w, double lambda, int max_degree) {
    const int d = static_cast<int>(z.size());
    Complex sum{};
    for (const auto& l : enumerate_basis(d, max_degree)) {
        Complex term = 1.0 / monomial_norm_sq(l, lambda);
        for (int j = 0; j < d; ++j) {
            const Complex x = std::conj(z(j)) * w(j);
            for (int e = 0; e < l[j]; ++e) term *= x;
        }
        sum += term;
    }
    return sum;
}

PointwiseBound pointwise_bound_check(const HoloPoly& f, const BallPoint& z, const SpaceParams& params) {
    require_in_ball(z, "pointwise_bound_check");
    const double value = std::norm(f(z));
    const double bound = norm_sq(f, params) * std::pow(1.0 - z.squaredNorm(), -params.lambda());
    return {value, bound};
}

} // namespace bergman

#pragma once

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace bergman {

// Products at or below this length are evaluated directly; longer ones go
// through log-gamma differences in extended precision.
inline constexpr int kGammaRatioProductLimit = 64;

// Gamma(lambda) / Gamma(lambda + k) = prod_{j<k} 1/(lambda + j).
template <typename Real>
Real gamma_ratio_product(Real lambda, int k) {
    Real r = 1;
    for (int j = 0; j < k; ++j) {
        r /= (lambda + j);
    }
    return r;
}

template <typename Real>
Real gamma_ratio_lgamma(Real lambda, int k) {
    const long double l = static_cast<long double>(lambda);
    return static_cast<Real>(std::exp(std::lgamma(l) - std::lgamma(l + k)));
}

template <typename Real>
Real gamma_ratio(Real lambda, int k) {
    if (!(lambda > 0)) throw std::domain_error("gamma_ratio: lambda must be positive");
    if (k < 0) throw std::domain_error("gamma_ratio: k must be non-negative");
    if (k <= kGammaRatioProductLimit) return gamma_ratio_product(lambda, k);
    return gamma_ratio_lgamma(lambda, k);
}

// True when lambda is (within 1e-12) an integer in (0, d].
inline bool is_vanishing_lambda(int d, double lambda) {
    const double r = std::round(lambda);
    return std::abs(lambda - r) <= 1e-12 && r >= 1 && r <= d;
}

// c_lambda = Gamma(lambda) / (pi^d Gamma(lambda - d)) = prod_{j=1}^d (lambda - j) / pi^d,
// continued to all lambda > 0. Exactly zero for integer lambda <= d.
inline double c_lambda(int d, double lambda) {
    if (d < 1) throw std::invalid_argument("c_lambda: d must be >= 1");
    if (!(lambda > 0)) throw std::domain_error("c_lambda: lambda must be positive");
    if (is_vanishing_lambda(d, lambda)) return 0.0;
    double r = 1.0;
    for (int j = 1; j <= d; ++j) {
        r *= (lambda - j) / std::numbers::pi;
    }
    return r;
}

} // namespace bergman

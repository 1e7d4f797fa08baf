#pragma once

#include <cmath>
#include <stdexcept>
#include <string>

#include <Eigen/Core>

#include "bergman/polynomial.hpp"
#include "bergman/space.hpp"
#include "bergman/special.hpp"

namespace bergman {

// ||z^m||^2_lambda = m! Gamma(lambda) / Gamma(lambda + |m|).
double monomial_norm_sq(const MultiIndex& m, double lambda);

// <z^l, z^m>_lambda; the monomials are orthogonal for every lambda > 0.
double monomial_inner_product(const MultiIndex& l, const MultiIndex& m, const SpaceParams& params);

// Sesquilinear, conjugate-linear in f.
Complex inner_product(const HoloPoly& f, const HoloPoly& g, const SpaceParams& params);
double norm_sq(const HoloPoly& f, const SpaceParams& params);

// N = sum_j z_j d/dz_j, so N z^m = |m| z^m.
HoloPoly number_operator(const HoloPoly& f);
// I + N / a
HoloPoly shift_operator(const HoloPoly& f, double a);

// Eigenvalue of A = prod_{j=n}^{2n-1} (I + N/(lambda+j)) on degree-k monomials.
double a_factor(int k, double lambda, int n);
// Eigenvalue of B = prod_{j=0}^{n-1} (I + N/(lambda+j)) on degree-k monomials.
double b_factor(int k, double lambda, int n);

HoloPoly apply_A(const HoloPoly& f, const SpaceParams& params);
HoloPoly apply_B(const HoloPoly& f, const SpaceParams& params);

// C = prod_{j=n}^{2n-1} (I + Nbar/(lambda+j)) prod_{j=0}^{n-1} (I + N/(lambda+j)).
// On z^a conj(z)^b, N scales by |a| and Nbar by |b|.
MixedPoly apply_C(const MixedPoly& p, const SpaceParams& params);

// Number operators acting on mixed polynomials.
MixedPoly number_operator(const MixedPoly& p);
MixedPoly conj_number_operator(const MixedPoly& p);

// sum_j z_j conj(w_j)
template <typename DerivedZ, typename DerivedW>
Complex hermitian_dot(const Eigen::MatrixBase<DerivedZ>& z, const Eigen::MatrixBase<DerivedW>& w) {
    // Eigen's dot() conjugates its left argument.
    return w.dot(z);
}

template <typename Derived>
double norm_sq(const Eigen::MatrixBase<Derived>& z) {
    return z.squaredNorm();
}

inline void require_in_ball(const BallPoint& z, const char* what) {
    if (!(z.squaredNorm() < 1.0)) {
        throw std::domain_error(std::string(what) + ": point is not inside the unit ball");
    }
}

// K_lambda(z, w) = (1 - z.conj(w))^{-lambda}, principal branch. |z.conj(w)| < 1
// keeps the base off the cut (-inf, 0].
Complex reproducing_kernel(const BallPoint& z, const BallPoint& w, double lambda);

// Partial sum over |l| <= max_degree of Gamma(lambda+|l|)/(l! Gamma(lambda)) conj(z)^l w^l,
// which converges to (1 - conj(z).w)^{-lambda}.
Complex kernel_partial_sum(const BallPoint& z, const BallPoint& w, double lambda, int max_degree);

struct PointwiseBound {
    double value;  // |f(z)|^2
    double bound;  // ||f||^2 (1 - |z|^2)^{-lambda}
};

PointwiseBound pointwise_bound_check(const HoloPoly& f, const BallPoint& z, const SpaceParams& params);

// Involutive automorphism phi_w(z) = (w - P_w z - s_w Q_w z) / (1 - <z, w>),
// s_w = sqrt(1 - |w|^2). phi_w(0) = w, phi_w(phi_w(z)) = z. For w = 0 this is -z.
template <typename DerivedW, typename DerivedZ>
Eigen::Matrix<typename DerivedZ::Scalar, Eigen::Dynamic, 1>
mobius(const Eigen::MatrixBase<DerivedW>& w, const Eigen::MatrixBase<DerivedZ>& z) {
    using Vec = Eigen::Matrix<typename DerivedZ::Scalar, Eigen::Dynamic, 1>;
    const double w2 = w.squaredNorm();
    const auto zw = hermitian_dot(z, w);
    const double s = std::sqrt(1.0 - w2);
    Vec proj = Vec::Zero(z.size());
    if (w2 > 0.0) proj = (zw / w2) * w;
    const Vec q = z - proj;
    return (w - proj - s * q) / (1.0 - zw);
}

} // namespace bergman

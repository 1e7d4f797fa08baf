#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include <json.hpp>

#include "bergman/core.hpp"
#include "bergman/polynomial.hpp"
#include "bergman/toeplitz.hpp"

namespace bergman {

struct VerificationReport {
    std::string identity_id;
    nlohmann::json params = nlohmann::json::object();
    std::uint64_t seed = 0;
    Complex lhs;
    Complex rhs;
    double abs_err = 0.0;
    double rel_err = 0.0;
    double tolerance = 0.0;
    bool pass = false;
    // Set when the check could not decide (e.g. finite-difference error estimate
    // above tolerance); such reports count as passing and say why in notes.
    bool inconclusive = false;
    std::string notes;
};

nlohmann::json to_json(const VerificationReport& r);

// Fills abs_err and rel_err from lhs and rhs.
void set_errors(VerificationReport& r);

inline constexpr std::uint64_t kDefaultVerifySeed = 20240917;

// (1-|z|^2)^alpha = (I - N/(alpha+1)) (1-|z|^2)^{alpha+1}.
VerificationReport check_weight_recursion(double alpha, const BallPoint& z);

// c_lambda int psi dmu = c_{lambda+1} int (I + N/lambda) psi (1-|z|^2) dmu, and the Nbar variant.
VerificationReport check_parts_lemma(const MixedPoly& psi, double lambda, int d);

// <f,g>_lambda = <f, (I+N/lambda) g>_{lambda+1} = <(I+N/lambda) f, g>_{lambda+1}.
VerificationReport check_shift1(const HoloPoly& f, const HoloPoly& g, double lambda);

// lambda > d: <f,g>_lambda = c_{lambda+2n} int conj(Af) Bg (1-|z|^2)^{lambda+2n} dtau.
// lambda <= d: the right side is compared between orders n and n+1.
VerificationReport check_shift2n(const HoloPoly& f, const HoloPoly& g, double lambda, int n);

// Two applications of the one-step shift agree with the order-one two-step shift.
VerificationReport check_shift_chain(const HoloPoly& f, const HoloPoly& g, double lambda);

// ||fg||^2_{l1+l2} <= (c_{l1+l2}/c_{l1}) ||f||^2_{l1} ||g||^2_{l2}.
VerificationReport check_product_bound(const HoloPoly& f, const HoloPoly& g, double l1, double l2);

struct NormGrowth {
    std::vector<double> matrix_values;  // eigenvalue of T_{|z|^{2k}} on 1, from the matrix
    std::vector<double> closed_values;  // prod_{j<k} (d+j)/(lambda+j)
    VerificationReport report;
};

// 0 < lambda < d. Passes when both computations agree, the sequence is strictly
// increasing and its last value exceeds `bound` while sup |phi_k| = 1.
NormGrowth counterexample_norm_growth(double lambda, int d, int k_max, double bound = 1.1);

// T_{1-|z|^2} is diagonal with entries (lambda-d)/(lambda+|m|) and
// T_{(1-|z|^2)/(lambda-d)} = (lambda I + N)^{-1} on the truncation.
VerificationReport counterexample_negativity(double lambda, int d, int max_degree);

// sigma_max(M_{z_j})^2 on the truncation equals max_{|m|<=M-1} (m_j+1)/(|m|+lambda).
VerificationReport check_mult_norm(int j, double lambda, int d, int max_degree);

// Delta_z F_lambda(z,w) by central differences with Richardson extrapolation
// against lambda(lambda-d)(F_lambda - F_{lambda+1}).
VerificationReport check_laplace_identity(const BallPoint& z, const BallPoint& w, double lambda,
                                          double h = 1e-3);

// Same finite-difference Laplacian against lambda(lambda-d) F_lambda - (lambda-d)^2 F_{lambda+1}.
VerificationReport check_laplace_corrected(const BallPoint& z, const BallPoint& w, double lambda,
                                           double h = 1e-3);

// F_lambda(phi_u(z), phi_u(w)) = F_lambda(z, w).
VerificationReport check_invariance(const BallPoint& u, const BallPoint& z, const BallPoint& w,
                                    double lambda);

// Partial sums of the kernel series at degree M against (1 - z.conj(w))^{-lambda}.
VerificationReport check_kernel_series(const BallPoint& z, const BallPoint& w, double lambda,
                                       int max_degree);

// c_lambda int conj(z^m) z^m dmu = m! Gamma(lambda)/Gamma(lambda+|m|) for |m| <= max_degree, lambda > d.
VerificationReport check_monomial_quadrature(int d, double lambda, int max_degree);

// Sobolev-form entries reproduce toeplitz_poly_matrix, for orders n and n+1.
VerificationReport check_sobolev_poly(const MixedPoly& phi, double lambda, int max_degree);

// hs_norm_via_entries at the given truncation against hs_norm_via_berezin for (1-t)^s.
VerificationReport check_hs_dual(int d, double lambda, double s, int max_degree);

// ||T_phi||_HS <= |c_lambda| ||phi||_{L1(tau)} for phi = (1-|z|^2)^s, s > d.
VerificationReport check_l1_bound(int d, double lambda, double s);

// A_lambda 1 (z) = c_lambda at the given radii, lambda > d.
VerificationReport check_berezin_one(int d, double lambda, const std::vector<double>& radii);

// |F_lambda(z,w)| <= c_lambda^2 on random pairs.
VerificationReport check_berezin_bound(int d, double lambda, int pairs, std::uint64_t seed);

// c_lambda = 0 makes hs_matrix of an L1 radial symbol exactly zero.
VerificationReport check_hs_zero(int d, double lambda, int max_degree);

// Seeded random instances shared by the suite and tests.
BallPoint random_ball_point(std::mt19937_64& rng, int d, double max_radius);
HoloPoly random_holo_poly(std::mt19937_64& rng, int d, int max_degree);
// Real-valued mixed polynomial (Hermitian coefficients) of total degree <= max_degree.
MixedPoly random_real_mixed_poly(std::mt19937_64& rng, int d, int max_degree);

struct SuiteConfig {
    std::vector<int> dims{1, 2, 3};
    // Unset: per-d default grid {0.4, d/2+0.25, d-0.5, d, d+0.3, d+1.7}. Empty: no checks run.
    std::optional<std::vector<double>> lambdas;
    std::uint64_t seed = kDefaultVerifySeed;
    std::optional<std::string> only;
    int k_max = 10;
    double growth_bound = 1.1;
    int instances = 3;  // random instances per (identity, d, lambda)
};

std::vector<double> default_lambda_grid(int d);

// Identity ids known to run_suite, sorted.
std::vector<std::string> suite_identities();

// Runs every check over the configured grid. Reports are sorted by identity_id
// (stable with respect to grid order).
std::vector<VerificationReport> run_suite(const SuiteConfig& config);

} // namespace bergman

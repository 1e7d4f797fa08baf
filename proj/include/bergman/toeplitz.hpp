#pragma once

#include <functional>
#include <stdexcept>
#include <variant>
#include <vector>

#include <Eigen/Core>

#include "bergman/core.hpp"
#include "bergman/multi_index.hpp"
#include "bergman/polynomial.hpp"
#include "bergman/quadrature.hpp"
#include "bergman/space.hpp"

namespace bergman {

// Operation called outside its admissible (lambda, symbol class) range.
class PreconditionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// A symbol given by evaluables. derivative(k, l, z) returns (Nbar^k N^l phi)(z)
// for 0 <= k, l <= max_order; derivative(0, 0, z) is phi(z).
struct GenericSymbol {
    std::function<Complex(int, int, const BallPoint&)> derivative;
    Integrability cls = Integrability::Bounded;
    int max_order = 0;

    Complex operator()(const BallPoint& z) const { return derivative(0, 0, z); }

    // Wraps a plain function with no derivative information.
    static GenericSymbol from_function(std::function<Complex(const BallPoint&)> f, Integrability cls);
    // Exact evaluables for a mixed polynomial: Nbar^k N^l z^a conj(z)^b = |b|^k |a|^l z^a conj(z)^b.
    static GenericSymbol from_polynomial(const MixedPoly& p, int max_order);
};

// Mixed polynomials are bounded symbols; radial profiles and generic symbols
// carry their declared class.
using SymbolSpec = std::variant<MixedPoly, RadialProfile, GenericSymbol>;

Integrability symbol_class(const SymbolSpec& phi);

// Dense matrix of an operator in the orthonormal basis
// e_m = z^m sqrt(Gamma(lambda+|m|) / (m! Gamma(lambda))), |m| <= degree,
// entry (l, m) = <e_l, T e_m>.
struct OperatorMatrix {
    SpaceParams params;
    int degree = 0;
    std::vector<MultiIndex> basis;
    Eigen::MatrixXcd entries;

    OperatorMatrix(SpaceParams p, int max_degree);

    Eigen::Index size() const { return entries.rows(); }
    // Leading block on degrees <= k; equals the operator truncated at k.
    OperatorMatrix truncated(int k) const;
    bool is_hermitian(double tol = 1e-12) const;
};

// 1 / ||z^m||_lambda
double basis_normalization(const MultiIndex& m, double lambda);

// M_{z^a} in the normalized basis; monomials pushed past the truncation degree are dropped.
OperatorMatrix multiplication_matrix(const MultiIndex& a, const SpaceParams& params, int max_degree);

// sum c_{a,b} (M_{z^b})^* M_{z^a}: raw entry <z^l, T z^m> = delta_{l+b, m+a} ||z^{m+a}||^2.
OperatorMatrix toeplitz_poly_matrix(const MixedPoly& phi, const SpaceParams& params, int max_degree);

// Coefficients A_{jklm} with
//   C[conj(f) phi g] = sum A_{jklm} conj(N^j f) (Nbar^k N^l phi) (N^m g),
// generated by expanding the product defining C with the Leibniz rule.
class SobolevExpansion {
public:
    explicit SobolevExpansion(const SpaceParams& params);
    int order() const { return n_; }
    double operator()(int j, int k, int l, int m) const;

private:
    int n_;
    std::vector<double> coeff_;
};

// <f, T_phi g> = c_{lambda+2n} int C[conj(f) phi g] (1-|z|^2)^{lambda+2n} dtau.
// Exact for mixed polynomials; generic symbols use the expanded form with Monte
// Carlo integration and require derivatives up to order n.
Complex toeplitz_sobolev_entry(const HoloPoly& f, const HoloPoly& g, const SymbolSpec& phi,
                               const SpaceParams& params, const QuadratureRule& rule = {});

OperatorMatrix toeplitz_sobolev_matrix(const MixedPoly& phi, const SpaceParams& params, int max_degree);

// a_{lm} = c_lambda int conj(e_l) phi e_m (1-|z|^2)^lambda dtau. Identically zero when c_lambda = 0.
OperatorMatrix hs_matrix(const SymbolSpec& phi, const SpaceParams& params, int max_degree,
                         const QuadratureRule& rule = {});

// F_lambda(z, w) = c_lambda^2 [(1-|z|^2)(1-|w|^2) / |1 - <z, w>|^2]^lambda.
template <typename DerivedZ, typename DerivedW>
double berezin_kernel(const Eigen::MatrixBase<DerivedZ>& z, const Eigen::MatrixBase<DerivedW>& w,
                      const SpaceParams& params) {
    const double c = params.c_lambda();
    if (c == 0.0) return 0.0;
    const double ratio = (1.0 - z.squaredNorm()) * (1.0 - w.squaredNorm()) /
                         std::norm(1.0 - hermitian_dot(z, w));
    return c * c * std::pow(ratio, params.lambda());
}

// A_lambda phi(z) = int F_lambda(z, w) phi(w) dtau(w) = c_lambda * (Berezin transform of phi).
Complex berezin_transform(const SymbolSpec& phi, const BallPoint& z, const SpaceParams& params,
                          const QuadratureRule& rule = {});

// Frobenius norm of the truncated matrix.
double hs_norm_via_entries(const OperatorMatrix& matrix);

// sqrt(<phi, A_lambda phi>_{L^2(tau)}) by nested quadrature.
double hs_norm_via_berezin(const SymbolSpec& phi, const SpaceParams& params,
                           const QuadratureRule& rule = {});

// ||phi||_{L^1(tau)}
double l1_tau_norm(const SymbolSpec& phi, int d, const QuadratureRule& rule = {});

struct SpectrumSummary {
    int degree = 0;
    bool hermitian = false;
    double min_eigenvalue = 0.0;  // Hermitian case only
    double max_eigenvalue = 0.0;
    double operator_norm = 0.0;
    double hs_norm = 0.0;
    double previous_operator_norm = 0.0;  // at degree - 1
    bool converged = false;
};

// Spectrum and norms at the truncation degree, with a convergence flag comparing
// the operator norm against the truncation one degree lower.
SpectrumSummary summarize(const OperatorMatrix& matrix, double tolerance = 1e-6);

} // namespace bergman

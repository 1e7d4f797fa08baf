#pragma once

#include <complex>
#include <optional>

#include <Eigen/Core>

namespace bergman {

using Complex = std::complex<double>;

// A point of the unit ball in C^d.
using BallPoint = Eigen::VectorXcd;

// Parameters of the space H(B^d, lambda): dimension, weight and the Sobolev
// order n used by the derivative form of the inner product (lambda + 2n > d).
class SpaceParams {
public:
    // n defaults to the smallest admissible order; an explicit n must be admissible.
    SpaceParams(int d, double lambda, std::optional<int> n = std::nullopt);

    int d() const { return d_; }
    double lambda() const { return lambda_; }
    int n() const { return n_; }
    double c_lambda() const { return c_lambda_; }

    // Same space with a different (admissible) Sobolev order.
    SpaceParams with_order(int n) const { return SpaceParams(d_, lambda_, n); }

    static int minimal_order(int d, double lambda);

private:
    int d_;
    double lambda_;
    int n_;
    double c_lambda_;
};

} // namespace bergman

#include "bergman/space.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "bergman/special.hpp"

namespace bergman {

int SpaceParams::minimal_order(int d, double lambda) {
    int n = 0;
    while (!(lambda + 2 * n > d)) ++n;
    return n;
}

SpaceParams::SpaceParams(int d, double lambda, std::optional<int> n) : d_(d), lambda_(lambda) {
    if (d < 1) throw std::invalid_argument("dimension d must be >= 1");
    if (!(lambda > 0) || !std::isfinite(lambda)) {
        throw std::invalid_argument("lambda must be positive");
    }
    const int nmin = minimal_order(d, lambda);
    n_ = n.value_or(nmin);
    if (n_ < nmin) {
        throw std::invalid_argument("Sobolev order n=" + std::to_string(n_) +
                                    " violates lambda + 2n > d");
    }
    c_lambda_ = bergman::c_lambda(d, lambda);
}

} // namespace bergman

#include "bergman/toeplitz.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include "bergman/detail/parallel.hpp"
#include "bergman/special.hpp"

namespace bergman {

namespace {

Complex monomial_value(const MultiIndex& m, const BallPoint& z) {
    Complex r = 1.0;
    for (int j = 0; j < m.dim(); ++j) {
        for (int e = 0; e < m[j]; ++e) r *= z(j);
    }
    return r;
}

void require_class(Integrability cls, double lambda, int d, const char* what) {
    const std::string op(what);
    switch (cls) {
        case Integrability::L2:
            if (!(lambda > 0.5 * d)) {
                throw PreconditionError(op + ": L2(tau) symbols need lambda > d/2");
            }
            break;
        case Integrability::L1:
            if (!(lambda > 0.0)) throw PreconditionError(op + ": lambda must be positive");
            break;
        case Integrability::Bounded:
            if (!(lambda > d)) {
                throw PreconditionError(op + ": bounded symbols that are not in L1(tau) or L2(tau) need lambda > d");
            }
            break;
    }
}

// Raw-basis matrix R(l, m) = <z^l, T z^m> to entries <e_l, T e_m>.
void normalize(OperatorMatrix& op) {
    const auto n = static_cast<Eigen::Index>(op.basis.size());
    Eigen::VectorXd nu(n);
    for (Eigen::Index i = 0; i < n; ++i) {
        nu(i) = basis_normalization(op.basis[static_cast<std::size_t>(i)], op.params.lambda());
    }
    // nu_r * nu_c is formed first so that (r, c) and (c, r) get the same factor.
    for (Eigen::Index c = 0; c < n; ++c) {
        for (Eigen::Index r = 0; r < n; ++r) op.entries(r, c) *= nu(r) * nu(c);
    }
}

std::vector<double> poly_from_roots(const std::vector<double>& scale) {
    // prod (1 + y / s_i) as coefficients in y.
    std::vector<double> c{1.0};
    for (double s : scale) {
        std::vector<double> next(c.size() + 1, 0.0);
        for (std::size_t i = 0; i < c.size(); ++i) {
            next[i] += c[i];
            next[i + 1] += c[i] / s;
        }
        c = std::move(next);
    }
    return c;
}

} // namespace

GenericSymbol GenericSymbol::from_function(std::function<Complex(const BallPoint&)> f, Integrability cls) {
    GenericSymbol s;
    s.derivative = [f = std::move(f)](int k, int l, const BallPoint& z) -> Complex {
        if (k != 0 || l != 0) throw PreconditionError("symbol has no derivative evaluables");
        return f(z);
    };
    s.cls = cls;
    s.max_order = 0;
    return s;
}

GenericSymbol GenericSymbol::from_polynomial(const MixedPoly& p, int max_order) {
    GenericSymbol s;
    s.derivative = [p](int k, int l, const BallPoint& z) {
        Complex r{};
        for (const auto& [key, c] : p.terms()) {
            const double scale = std::pow(key.antihol.degree(), k) * std::pow(key.hol.degree(), l);
            if (scale == 0.0) continue;
            r += c * scale * monomial_value(key.hol, z) * std::conj(monomial_value(key.antihol, z));
        }
        return r;
    };
    s.cls = Integrability::Bounded;
    s.max_order = max_order;
    return s;
}

Integrability symbol_class(const SymbolSpec& phi) {
    if (const auto* r = std::get_if<RadialProfile>(&phi)) return r->cls;
    if (const auto* g = std::get_if<GenericSymbol>(&phi)) return g->cls;
    return Integrability::Bounded;
}

OperatorMatrix::OperatorMatrix(SpaceParams p, int max_degree)
    : params(std::move(p)), degree(max_degree), basis(enumerate_basis(params.d(), max_degree)) {
    const auto n = static_cast<Eigen::Index>(basis.size());
    entries = Eigen::MatrixXcd::Zero(n, n);
}

OperatorMatrix OperatorMatrix::truncated(int k) const {
    if (k < 0 || k > degree) throw std::invalid_argument("OperatorMatrix::truncated: degree out of range");
    OperatorMatrix r(params, k);
    const auto n = r.size();
    r.entries = entries.topLeftCorner(n, n);
    return r;
}

bool OperatorMatrix::is_hermitian(double tol) const {
    const double scale = std::max(1.0, entries.cwiseAbs().maxCoeff());
    return (entries - entries.adjoint()).cwiseAbs().maxCoeff() <= tol * scale;
}

double basis_normalization(const MultiIndex& m, double lambda) {
    return 1.0 / std::sqrt(monomial_norm_sq(m, lambda));
}

OperatorMatrix multiplication_matrix(const MultiIndex& a, const SpaceParams& params, int max_degree) {
    if (a.dim() != params.d()) throw std::invalid_argument("multiplication_matrix: dimension mismatch");
    OperatorMatrix op(params, max_degree);
    const MonomialBasis index(params.d(), max_degree);
    for (std::size_t col = 0; col < op.basis.size(); ++col) {
        const MultiIndex& m = op.basis[col];
        const auto row = index.find(m + a);
        if (!row) continue;
        op.entries(static_cast<Eigen::Index>(*row), static_cast<Eigen::Index>(col)) =
            std::sqrt(monomial_norm_sq(m + a, params.lambda()) / monomial_norm_sq(m, params.lambda()));
    }
    return op;
}

OperatorMatrix toeplitz_poly_matrix(const MixedPoly& phi, const SpaceParams& params, int max_degree) {
    if (phi.dim() != params.d()) throw std::invalid_argument("toeplitz_poly_matrix: dimension mismatch");
    OperatorMatrix op(params, max_degree);
    const MonomialBasis index(params.d(), max_degree);
    const int d = params.d();
    for (std::size_t col = 0; col < op.basis.size(); ++col) {
        const MultiIndex& m = op.basis[col];
        for (const auto& [key, c] : phi.terms()) {
            const MultiIndex k = m + key.hol;
            MultiIndex l(d);
            bool valid = true;
            for (int j = 0; j < d; ++j) {
                l[j] = k[j] - key.antihol[j];
                if (l[j] < 0) valid = false;
            }
            if (!valid) continue;
            const auto row = index.find(l);
            if (!row) continue;
            op.entries(static_cast<Eigen::Index>(*row), static_cast<Eigen::Index>(col)) +=
                c * monomial_norm_sq(k, params.lambda());
        }
    }
    normalize(op);
    return op;
}

SobolevExpansion::SobolevExpansion(const SpaceParams& params) : n_(params.n()) {
    const double lambda = params.lambda();
    std::vector<double> pa;
    std::vector<double> qb;
    for (int j = n_; j <= 2 * n_ - 1; ++j) pa.push_back(lambda + j);
    for (int j = 0; j <= n_ - 1; ++j) qb.push_back(lambda + j);
    const std::vector<double> p = poly_from_roots(pa);  // in Nbar
    const std::vector<double> q = poly_from_roots(qb);  // in N
    const int w = n_ + 1;
    coeff_.assign(static_cast<std::size_t>(w * w * w * w), 0.0);
    for (int kt = 0; kt <= n_; ++kt) {
        for (int lt = 0; lt <= n_; ++lt) {
            const double pq = p[static_cast<std::size_t>(kt)] * q[static_cast<std::size_t>(lt)];
            for (int b = 0; b <= kt; ++b) {
                for (int a = 0; a <= lt; ++a) {
                    const int j = b;
                    const int k = kt - b;
                    const int l = a;
                    const int m = lt - a;
                    coeff_[static_cast<std::size_t>(((j * w + k) * w + l) * w + m)] +=
                        pq * binomial(kt, b) * binomial(lt, a);
                }
            }
        }
    }
}

double SobolevExpansion::operator()(int j, int k, int l, int m) const {
    if (std::min({j, k, l, m}) < 0 || std::max({j, k, l, m}) > n_) return 0.0;
    const int w = n_ + 1;
    return coeff_[static_cast<std::size_t>(((j * w + k) * w + l) * w + m)];
}

Complex toeplitz_sobolev_entry(const HoloPoly& f, const HoloPoly& g, const SymbolSpec& phi,
                               const SpaceParams& params, const QuadratureRule& rule) {
    const int d = params.d();
    const double level = params.lambda() + 2.0 * params.n();
    if (!(level > d)) throw DivergentIntegral("toeplitz_sobolev_entry: need lambda + 2n > d");
    const double c = c_lambda(d, level);

    if (const auto* p = std::get_if<MixedPoly>(&phi)) {
        const MixedPoly integrand =
            MixedPoly::from_antiholomorphic(f) * (*p) * MixedPoly::from_holomorphic(g);
        return c * integrate_ball_exact(apply_C(integrand, params), level, d);
    }
    if (std::holds_alternative<RadialProfile>(phi)) {
        throw PreconditionError("toeplitz_sobolev_entry: radial profiles carry no derivative evaluables");
    }
    const auto& sym = std::get<GenericSymbol>(phi);
    const int n = params.n();
    if (sym.max_order < n || !sym.derivative) {
        throw PreconditionError("toeplitz_sobolev_entry: symbol needs derivative evaluables up to order " +
                                std::to_string(n));
    }
    const SobolevExpansion expansion(params);
    std::vector<HoloPoly> nf{f};
    std::vector<HoloPoly> ng{g};
    for (int j = 1; j <= n; ++j) {
        nf.push_back(number_operator(nf.back()));
        ng.push_back(number_operator(ng.back()));
    }
    const auto integrand = [&](const BallPoint& z) {
        std::vector<Complex> fz(static_cast<std::size_t>(n + 1));
        std::vector<Complex> gz(static_cast<std::size_t>(n + 1));
        for (int j = 0; j <= n; ++j) {
            fz[static_cast<std::size_t>(j)] = std::conj(nf[static_cast<std::size_t>(j)](z));
            gz[static_cast<std::size_t>(j)] = ng[static_cast<std::size_t>(j)](z);
        }
        Complex sum{};
        for (int k = 0; k <= n; ++k) {
            for (int l = 0; l <= n; ++l) {
                Complex dphi{};
                bool evaluated = false;
                for (int j = 0; j <= n; ++j) {
                    for (int m = 0; m <= n; ++m) {
                        const double a = expansion(j, k, l, m);
                        if (a == 0.0) continue;
                        if (!evaluated) {
                            dphi = sym.derivative(k, l, z);
                            evaluated = true;
                        }
                        sum += a * fz[static_cast<std::size_t>(j)] * dphi * gz[static_cast<std::size_t>(m)];
                    }
                }
            }
        }
        return sum;
    };
    return c * integrate_ball_mc(integrand, level, d, rule.mc_samples, rule.seed).value;
}

OperatorMatrix toeplitz_sobolev_matrix(const MixedPoly& phi, const SpaceParams& params, int max_degree) {
    OperatorMatrix op(params, max_degree);
    const auto n = op.basis.size();
    const SymbolSpec spec = phi;
    detail::parallel_for(n * n, [&](std::size_t idx) {
        const std::size_t row = idx / n;
        const std::size_t col = idx % n;
        op.entries(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(col)) =
            toeplitz_sobolev_entry(HoloPoly::monomial(op.basis[row]), HoloPoly::monomial(op.basis[col]),
                                   spec, params);
    });
    normalize(op);
    return op;
}

OperatorMatrix hs_matrix(const SymbolSpec& phi, const SpaceParams& params, int max_degree,
                         const QuadratureRule& rule) {
    const int d = params.d();
    const double lambda = params.lambda();
    require_class(symbol_class(phi), lambda, d, "hs_matrix");
    OperatorMatrix op(params, max_degree);
    const double c = params.c_lambda();
    if (c == 0.0) return op;
    const auto n = op.basis.size();

    if (const auto* p = std::get_if<MixedPoly>(&phi)) {
        if (p->dim() != d) throw std::invalid_argument("hs_matrix: dimension mismatch");
        for (std::size_t row = 0; row < n; ++row) {
            for (std::size_t col = 0; col < n; ++col) {
                const MixedPoly integrand = MixedPoly::monomial(MultiIndex(d), op.basis[row]) * (*p) *
                                            MixedPoly::monomial(op.basis[col], MultiIndex(d));
                op.entries(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(col)) =
                    c * integrate_ball_exact(integrand, lambda, d);
            }
        }
        normalize(op);
        return op;
    }

    if (const auto* g = std::get_if<RadialProfile>(&phi)) {
        const double alpha = lambda - d - 1.0 + g->decay;
        if (!(alpha > -1.0)) {
            throw DivergentIntegral("hs_matrix: radial integrand (1-t)^" + std::to_string(alpha) +
                                    " is not integrable");
        }
        const RadialRule r = gauss_jacobi_rule(rule.radial_nodes, alpha, d - 1.0);
        std::vector<Complex> h(r.nodes.size());
        for (std::size_t i = 0; i < r.nodes.size(); ++i) h[i] = g->reduced_at(r.nodes[i]);
        std::vector<Complex> moment(static_cast<std::size_t>(max_degree + 1));
        for (int k = 0; k <= max_degree; ++k) {
            Complex s{};
            for (std::size_t i = 0; i < r.nodes.size(); ++i) {
                s += r.weights[i] * std::pow(r.nodes[i], k) * h[i];
            }
            moment[static_cast<std::size_t>(k)] = s;
        }
        const double volume = ball_volume_factor(d);
        for (std::size_t i = 0; i < n; ++i) {
            const MultiIndex& m = op.basis[i];
            const auto k = static_cast<Eigen::Index>(i);
            op.entries(k, k) = c * volume * sphere_monomial_integral(m, m, d) /
                               monomial_norm_sq(m, lambda) * moment[static_cast<std::size_t>(m.degree())];
        }
        return op;
    }

    const auto& sym = std::get<GenericSymbol>(phi);
    detail::parallel_for(n * n, [&](std::size_t idx) {
        const std::size_t row = idx / n;
        const std::size_t col = idx % n;
        const MultiIndex& l = op.basis[row];
        const MultiIndex& m = op.basis[col];
        const auto integrand = [&](const BallPoint& z) {
            return std::conj(monomial_value(l, z)) * sym(z) * monomial_value(m, z);
        };
        const McEstimate est =
            integrate_ball_mc(integrand, lambda, d, rule.mc_samples, derive_seed(rule.seed, row, col));
        op.entries(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(col)) = c * est.value;
    });
    normalize(op);
    return op;
}

namespace {

int angular_node_count(double a, bool conformal, const QuadratureRule& rule) {
    if (rule.angular_nodes > 0) return rule.angular_nodes;
    if (a <= 0.0) return 1;
    if (conformal) return 128;
    // Trapezoid error on the circle decays like a^N.
    const double n = std::ceil(-36.0 / std::log(a));
    return static_cast<int>(std::clamp(n, 32.0, 4096.0));
}

// Mean over theta of G(q) where q = |1 - a e^{i theta}|^2 and G depends on theta
// only through q. With `conformal`, theta is reparametrized by the circle
// automorphism e^{i theta} = (w + a)/(1 + a w), which flattens the peak at theta = 0.
template <typename G>
Complex circle_mean(double a, const QuadratureRule& rule, bool conformal, G&& integrand) {
    if (a <= 0.0) return integrand(1.0);
    const int n = angular_node_count(a, conformal, rule);
    Complex sum{};
    for (int k = 0; k <= n; ++k) {
        const double x = std::numbers::pi * k / n;
        const double endpoint = (k == 0 || k == n) ? 0.5 : 1.0;
        if (conformal) {
            const double den = 1.0 + a * a + 2.0 * a * std::cos(x);  // |1 + a e^{i psi}|^2
            const double q = (1.0 - a * a) * (1.0 - a * a) / den;
            sum += endpoint * ((1.0 - a * a) / den) * integrand(q);
        } else {
            const double q = 1.0 - 2.0 * a * std::cos(x) + a * a;
            sum += endpoint * integrand(q);
        }
    }
    return sum / static_cast<double>(n);
}

// A_lambda phi at |z| = rho for phi(w) = g(|w|^2):
// c^2 V_d int_0^1 t^{d-1} (1-t)^{lambda-d-1} E[g(1 - (1-rho^2)(1-t)/q)] dt,
// where q = |1 - sqrt(t s) rho e^{i theta}|^2 and s = |zeta_1|^2 for a uniform
// direction zeta; s has density (d-1)(1-s)^{d-2}.
// Near the boundary the integrand in t and s peaks on a scale sqrt(1 - rho^2);
// `resolve_boundary` raises the node counts to match.
Complex berezin_radial(const RadialProfile& g, double rho, const SpaceParams& params,
                       const QuadratureRule& rule, bool resolve_boundary) {
    const int d = params.d();
    const double lambda = params.lambda();
    const double c = params.c_lambda();
    if (c == 0.0) return 0.0;
    const double sdec = g.decay;
    const double alpha = lambda - d - 1.0 + sdec;
    if (!(alpha > -1.0)) {
        throw DivergentIntegral("berezin_transform: radial integrand (1-t)^" + std::to_string(alpha) +
                                " is not integrable");
    }
    int nodes = rule.radial_nodes;
    if (resolve_boundary && rho > 0.0) {
        const double scale = std::sqrt(1.0 - rho * rho);
        nodes = std::max(nodes, static_cast<int>(std::min(2048.0, std::ceil(24.0 / scale))));
    }
    const RadialRule outer = gauss_jacobi_rule(nodes, alpha, d - 1.0);
    RadialRule slice;
    if (d == 1) {
        slice.nodes = {1.0};
        slice.weights = {1.0};
    } else {
        slice = gauss_jacobi_rule(std::max(8, nodes / 2), d - 2.0, 0.0);
        for (auto& w : slice.weights) w *= (d - 1.0);
    }
    const double r2 = rho * rho;
    const bool conformal = sdec >= 1.0;
    Complex total{};
    for (std::size_t i = 0; i < outer.nodes.size(); ++i) {
        const double t = outer.nodes[i];
        Complex inner{};
        for (std::size_t j = 0; j < slice.nodes.size(); ++j) {
            const double a = std::sqrt(t * slice.nodes[j]) * rho;
            inner += slice.weights[j] * circle_mean(a, rule, conformal, [&](double q) {
                // g(1 - X) with X = (1-rho^2)(1-t)/q, split as X^s h(1 - X); the
                // (1-t)^s part is carried by the Jacobi weight.
                const double x = (1.0 - r2) * (1.0 - t) / q;
                const double ratio = (1.0 - r2) / q;
                const Complex h = g.reduced_at(std::clamp(1.0 - x, 0.0, 1.0));
                return (sdec == 0.0 ? 1.0 : std::pow(ratio, sdec)) * h;
            });
        }
        total += outer.weights[i] * inner;
    }
    return c * c * ball_volume_factor(d) * total;
}

} // namespace

Complex berezin_transform(const SymbolSpec& phi, const BallPoint& z, const SpaceParams& params,
                          const QuadratureRule& rule) {
    const int d = params.d();
    if (z.size() != d) throw std::invalid_argument("berezin_transform: dimension mismatch");
    require_in_ball(z, "berezin_transform");
    require_class(symbol_class(phi), params.lambda(), d, "berezin_transform");
    const double c = params.c_lambda();
    if (c == 0.0) return 0.0;
    if (const auto* g = std::get_if<RadialProfile>(&phi)) {
        return berezin_radial(*g, z.norm(), params, rule, true);
    }
    BallFunction symbol;
    if (const auto* p = std::get_if<MixedPoly>(&phi)) {
        symbol = [p](const BallPoint& w) { return (*p)(w); };
    } else {
        const auto& sym = std::get<GenericSymbol>(phi);
        symbol = [&sym](const BallPoint& w) { return sym(w); };
    }
    // F_lambda(z, w) = f_lambda(phi_z(w)) and tau is invariant, so
    // A phi(z) = c^2 int (1-|u|^2)^lambda phi(phi_z(u)) dtau(u).
    const auto integrand = [&](const BallPoint& u) { return symbol(mobius(z, u)); };
    return c * c * integrate_ball_mc(integrand, params.lambda(), d, rule.mc_samples, rule.seed).value;
}

double hs_norm_via_entries(const OperatorMatrix& matrix) { return matrix.entries.norm(); }

double hs_norm_via_berezin(const SymbolSpec& phi, const SpaceParams& params, const QuadratureRule& rule) {
    const int d = params.d();
    const double lambda = params.lambda();
    const Integrability cls = symbol_class(phi);
    if (cls == Integrability::Bounded) {
        throw PreconditionError("hs_norm_via_berezin: symbol must be declared L1(tau) or L2(tau)");
    }
    require_class(cls, lambda, d, "hs_norm_via_berezin");
    if (params.c_lambda() == 0.0) return 0.0;

    if (const auto* g = std::get_if<RadialProfile>(&phi)) {
        // <phi, A phi>_tau = V_d int t^{d-1} (1-t)^{-d-1} conj(g) A(sqrt t) dt; A(sqrt t)
        // vanishes like (1-t)^{min(lambda, s)}, which is moved into the weight.
        const double shift = std::min(lambda, g->decay);
        const double alpha = g->decay - d - 1.0 + shift;
        if (!(alpha > -1.0)) {
            throw DivergentIntegral("hs_norm_via_berezin: <phi, A phi> does not converge for this profile");
        }
        const RadialRule r = gauss_jacobi_rule(rule.radial_nodes, alpha, d - 1.0);
        std::vector<Complex> terms(r.nodes.size());
        detail::parallel_for(r.nodes.size(), [&](std::size_t i) {
            const double t = r.nodes[i];
            const Complex a = berezin_radial(*g, std::sqrt(t), params, rule, false);
            terms[i] = r.weights[i] * std::conj(g->reduced_at(t)) * a / std::pow(1.0 - t, shift);
        });
        Complex sum{};
        for (const auto& x : terms) sum += x;
        return std::sqrt(std::max(0.0, (ball_volume_factor(d) * sum).real()));
    }

    // Nested Monte Carlo: outer over tau with weight exponent 0, inner Berezin transform.
    const auto& sym = std::get<GenericSymbol>(phi);
    const long inner = std::max(256L, static_cast<long>(std::sqrt(static_cast<double>(rule.mc_samples)) * 16));
    const long outer = std::max(256L, rule.mc_samples / 16);
    std::uint64_t counter = 0;
    QuadratureRule inner_rule = rule;
    inner_rule.mc_samples = inner;
    const auto integrand = [&](const BallPoint& z) {
        inner_rule.seed = derive_seed(rule.seed, ++counter, 1);
        return std::conj(sym(z)) * berezin_transform(phi, z, params, inner_rule);
    };
    // Sequential evaluation keeps the inner seeds reproducible.
    Complex sum{};
    BallSampler sampler(derive_seed(rule.seed, 0, 2));
    const double proposal = d + 1.0;
    const double normalizer = ball_volume_factor(d) * radial_moment(0, proposal - d - 1.0, d);
    for (long i = 0; i < outer; ++i) {
        const double t = sampler.beta(d, proposal - d);
        const BallPoint z = std::sqrt(t) * sampler.sphere_point(d);
        sum += integrand(z) * std::pow(1.0 - t, -proposal);
    }
    return std::sqrt(std::max(0.0, (normalizer * sum / static_cast<double>(outer)).real()));
}

double l1_tau_norm(const SymbolSpec& phi, int d, const QuadratureRule& rule) {
    if (const auto* g = std::get_if<RadialProfile>(&phi)) {
        const double alpha = g->decay - d - 1.0;
        if (!(alpha > -1.0)) throw DivergentIntegral("l1_tau_norm: profile is not in L1(tau)");
        const RadialRule r = gauss_jacobi_rule(rule.radial_nodes, alpha, d - 1.0);
        double sum = 0.0;
        for (std::size_t i = 0; i < r.nodes.size(); ++i) sum += r.weights[i] * std::abs(g->reduced_at(r.nodes[i]));
        return ball_volume_factor(d) * sum;
    }
    if (const auto* sym = std::get_if<GenericSymbol>(&phi)) {
        const auto integrand = [sym](const BallPoint& z) { return Complex(std::abs((*sym)(z))); };
        return integrate_ball_mc(integrand, 0.0, d, rule.mc_samples, rule.seed).value.real();
    }
    throw DivergentIntegral("l1_tau_norm: nonzero polynomials are not in L1(tau)");
}

SpectrumSummary summarize(const OperatorMatrix& matrix, double tolerance) {
    SpectrumSummary s;
    s.degree = matrix.degree;
    s.hermitian = matrix.is_hermitian();
    s.hs_norm = hs_norm_via_entries(matrix);
    const auto op_norm = [](const Eigen::MatrixXcd& m) {
        if (m.size() == 0) return 0.0;
        Eigen::BDCSVD<Eigen::MatrixXcd> svd(m);
        return svd.singularValues()(0);
    };
    s.operator_norm = op_norm(matrix.entries);
    if (s.hermitian && matrix.size() > 0) {
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> eig(matrix.entries, Eigen::EigenvaluesOnly);
        s.min_eigenvalue = eig.eigenvalues().minCoeff();
        s.max_eigenvalue = eig.eigenvalues().maxCoeff();
    }
    if (matrix.degree >= 1) {
        s.previous_operator_norm = op_norm(matrix.truncated(matrix.degree - 1).entries);
        s.converged = std::abs(s.operator_norm - s.previous_operator_norm) <=
                      tolerance * std::max(1.0, s.operator_norm);
    }
    return s;
}

} // namespace bergman

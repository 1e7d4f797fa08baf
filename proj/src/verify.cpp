#include "bergman/verify.hpp"

#include <algorithm>
#include <cstdio>
#include <cmath>
#include <functional>
#include <limits>

#include <Eigen/SVD>

#include "bergman/detail/parallel.hpp"
#include "bergman/quadrature.hpp"
#include "bergman/special.hpp"
#include "bergman/symbol_parser.hpp"

namespace bergman {

namespace {

nlohmann::json point_json(const BallPoint& z) {
    nlohmann::json a = nlohmann::json::array();
    for (Eigen::Index j = 0; j < z.size(); ++j) a.push_back({z(j).real(), z(j).imag()});
    return a;
}

std::string poly_string(const HoloPoly& f) { return print_symbol(MixedPoly::from_holomorphic(f)); }

std::string format_margin(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6g", x);
    return buf;
}

double sign(double x) { return x > 0 ? 1.0 : (x < 0 ? -1.0 : 0.0); }

VerificationReport make_report(std::string id, Complex lhs, Complex rhs, double tolerance) {
    VerificationReport r;
    r.identity_id = std::move(id);
    r.lhs = lhs;
    r.rhs = rhs;
    r.tolerance = tolerance;
    set_errors(r);
    return r;
}

// Equality report passing when either error is within tolerance.
VerificationReport equality(std::string id, Complex lhs, Complex rhs, double tolerance) {
    VerificationReport r = make_report(std::move(id), lhs, rhs, tolerance);
    r.pass = r.abs_err <= tolerance || r.rel_err <= tolerance;
    r.notes = "pass iff abs_err <= tol or rel_err <= tol";
    return r;
}

// Report for lhs <= rhs; errors measure the violation.
VerificationReport inequality(std::string id, double lhs, double rhs, double tolerance) {
    VerificationReport r;
    r.identity_id = std::move(id);
    r.lhs = lhs;
    r.rhs = rhs;
    r.tolerance = tolerance;
    r.abs_err = std::max(0.0, lhs - rhs);
    r.rel_err = rhs != 0.0 ? r.abs_err / std::abs(rhs) : r.abs_err;
    r.pass = lhs <= rhs + tolerance * std::abs(rhs);
    r.notes = "inequality lhs <= rhs (1 + tol); margin rhs - lhs = " + format_margin(rhs - lhs);
    return r;
}

} // namespace

nlohmann::json to_json(const VerificationReport& r) {
    return {{"identity_id", r.identity_id},
            {"params", r.params},
            {"seed", r.seed},
            {"lhs", {r.lhs.real(), r.lhs.imag()}},
            {"rhs", {r.rhs.real(), r.rhs.imag()}},
            {"abs_err", r.abs_err},
            {"rel_err", r.rel_err},
            {"tolerance", r.tolerance},
            {"pass", r.pass},
            {"inconclusive", r.inconclusive},
            {"notes", r.notes}};
}

void set_errors(VerificationReport& r) {
    r.abs_err = std::abs(r.lhs - r.rhs);
    const double scale = std::max(std::abs(r.lhs), std::abs(r.rhs));
    r.rel_err = scale > 0.0 ? r.abs_err / scale : 0.0;
}

VerificationReport check_weight_recursion(double alpha, const BallPoint& z) {
    if (!(alpha > -1.0)) throw std::invalid_argument("check_weight_recursion: alpha must exceed -1");
    require_in_ball(z, "check_weight_recursion");
    const double r = z.squaredNorm();
    const double lhs = std::pow(1.0 - r, alpha);
    // N (1-|z|^2)^{alpha+1} = -(alpha+1) |z|^2 (1-|z|^2)^alpha
    const double n_term = -(alpha + 1.0) * r * std::pow(1.0 - r, alpha);
    const double rhs = std::pow(1.0 - r, alpha + 1.0) - n_term / (alpha + 1.0);
    auto rep = equality("weight-recursion", lhs, rhs, 1e-12);
    rep.params = {{"alpha", alpha}, {"z", point_json(z)}};
    return rep;
}

VerificationReport check_parts_lemma(const MixedPoly& psi, double lambda, int d) {
    if (!(lambda > d)) throw std::invalid_argument("check_parts_lemma: need lambda > d");
    const Complex lhs = c_lambda(d, lambda) * integrate_ball_exact(psi, lambda, d);
    const double c1 = c_lambda(d, lambda + 1.0);
    const Complex rhs = c1 * integrate_ball_exact(psi + Complex(1.0 / lambda) * number_operator(psi), lambda + 1.0, d);
    const Complex rhs_bar =
        c1 * integrate_ball_exact(psi + Complex(1.0 / lambda) * conj_number_operator(psi), lambda + 1.0, d);
    auto rep = equality("parts", lhs, rhs, 1e-10);
    auto bar = equality("parts", lhs, rhs_bar, 1e-10);
    rep.abs_err = std::max(rep.abs_err, bar.abs_err);
    rep.rel_err = std::max(rep.rel_err, bar.rel_err);
    rep.pass = rep.pass && bar.pass;
    rep.params = {{"d", d}, {"lambda", lambda}, {"psi", print_symbol(psi)}};
    rep.notes += "; errors are the max over the N and Nbar forms";
    return rep;
}

VerificationReport check_shift1(const HoloPoly& f, const HoloPoly& g, double lambda) {
    const int d = f.dim();
    if (!(lambda > d)) throw std::invalid_argument("check_shift1: need lambda > d");
    const SpaceParams p0(d, lambda);
    const SpaceParams p1(d, lambda + 1.0);
    const Complex lhs = inner_product(f, g, p0);
    const Complex rhs = inner_product(f, shift_operator(g, lambda), p1);
    const Complex rhs2 = inner_product(shift_operator(f, lambda), g, p1);
    auto rep = equality("shift1", lhs, rhs, 1e-12);
    auto other = equality("shift1", lhs, rhs2, 1e-12);
    rep.abs_err = std::max(rep.abs_err, other.abs_err);
    rep.rel_err = std::max(rep.rel_err, other.rel_err);
    rep.pass = rep.pass && other.pass;
    rep.params = {{"d", d}, {"lambda", lambda}, {"f", poly_string(f)}, {"g", poly_string(g)}};
    rep.notes += "; errors are the max over shifting g and shifting f";
    return rep;
}

namespace {

Complex sobolev_inner(const HoloPoly& f, const HoloPoly& g, const SpaceParams& params) {
    const double level = params.lambda() + 2.0 * params.n();
    const MixedPoly integrand =
        MixedPoly::from_antiholomorphic(apply_A(f, params)) * MixedPoly::from_holomorphic(apply_B(g, params));
    return c_lambda(params.d(), level) * integrate_ball_exact(integrand, level, params.d());
}

} // namespace

VerificationReport check_shift2n(const HoloPoly& f, const HoloPoly& g, double lambda, int n) {
    const int d = f.dim();
    const SpaceParams params(d, lambda, n);
    VerificationReport rep;
    if (lambda > d) {
        rep = equality("shift2n", inner_product(f, g, params), sobolev_inner(f, g, params), 1e-12);
        rep.notes += "; closed-form <f,g> at lambda against c_{lambda+2n} int conj(Af) Bg at lambda+2n";
    } else {
        rep = equality("shift2n", sobolev_inner(f, g, params), sobolev_inner(f, g, params.with_order(n + 1)),
                       1e-12);
        rep.notes += "; lambda <= d: order n against order n+1";
    }
    rep.params = {{"d", d}, {"lambda", lambda}, {"n", n}, {"f", poly_string(f)}, {"g", poly_string(g)}};
    return rep;
}

VerificationReport check_shift_chain(const HoloPoly& f, const HoloPoly& g, double lambda) {
    const int d = f.dim();
    const SpaceParams p2(d, lambda + 2.0);
    const Complex chain =
        inner_product(shift_operator(f, lambda), shift_operator(g, lambda + 1.0), p2);
    const Complex two_step =
        inner_product(shift_operator(f, lambda + 1.0), shift_operator(g, lambda), p2);
    auto rep = equality("shift-chain", chain, two_step, 1e-12);
    rep.params = {{"d", d}, {"lambda", lambda}, {"f", poly_string(f)}, {"g", poly_string(g)}};
    return rep;
}

VerificationReport check_product_bound(const HoloPoly& f, const HoloPoly& g, double l1, double l2) {
    const int d = f.dim();
    if (!(l1 > d) || !(l2 > 0.0)) throw std::invalid_argument("check_product_bound: need l1 > d, l2 > 0");
    const double lhs = norm_sq(f * g, SpaceParams(d, l1 + l2));
    const double rhs = c_lambda(d, l1 + l2) / c_lambda(d, l1) * norm_sq(f, SpaceParams(d, l1)) *
                       norm_sq(g, SpaceParams(d, l2));
    auto rep = inequality("product-bound", lhs, rhs, 1e-12);
    rep.params = {{"d", d}, {"l1", l1}, {"l2", l2}, {"f", poly_string(f)}, {"g", poly_string(g)}};
    return rep;
}

NormGrowth counterexample_norm_growth(double lambda, int d, int k_max, double bound) {
    if (!(lambda > 0.0 && lambda < d)) throw std::invalid_argument("counterexample_norm_growth: need 0 < lambda < d");
    if (k_max < 1) throw std::invalid_argument("counterexample_norm_growth: k_max must be >= 1");
    const SpaceParams params(d, lambda);
    NormGrowth out;
    double max_rel = 0.0;
    double off_diag = 0.0;
    double closed = 1.0;
    for (int k = 1; k <= k_max; ++k) {
        const OperatorMatrix t = toeplitz_poly_matrix(MixedPoly::abs2_power(d, k), params, 1);
        // T_{phi_k} 1 must be a multiple of 1: column 0 vanishes off the diagonal.
        off_diag = std::max(off_diag, t.entries.col(0).tail(t.size() - 1).cwiseAbs().maxCoeff());
        const double value = t.entries(0, 0).real();
        closed *= (d + k - 1.0) / (lambda + k - 1.0);
        out.matrix_values.push_back(value);
        out.closed_values.push_back(closed);
        max_rel = std::max(max_rel, std::abs(value - closed) / std::abs(closed));
    }
    bool increasing = true;
    for (std::size_t i = 1; i < out.matrix_values.size(); ++i) {
        increasing = increasing && out.matrix_values[i] > out.matrix_values[i - 1];
    }
    const double last = out.matrix_values.back();
    auto& rep = out.report;
    rep = make_report("norm-growth", last, out.closed_values.back(), 1e-10);
    rep.rel_err = std::max(rep.rel_err, max_rel);
    rep.pass = rep.rel_err <= 1e-10 && off_diag == 0.0 && increasing && last > bound;
    rep.params = {{"d", d},
                  {"lambda", lambda},
                  {"k_max", k_max},
                  {"bound", bound},
                  {"sup_phi", 1.0},
                  {"sequence", out.matrix_values}};
    rep.notes = "matrix (multinomial expansion) against closed product, max rel err over k; strictly increasing: " +
                std::string(increasing ? "yes" : "no") + "; last value exceeds bound " + format_margin(bound) +
                " while sup|(|z|^2)^k| = 1";
    return out;
}

VerificationReport counterexample_negativity(double lambda, int d, int max_degree) {
    if (!(lambda > 0.0) || lambda == d) throw std::invalid_argument("counterexample_negativity: need lambda > 0, lambda != d");
    const SpaceParams params(d, lambda);
    const MixedPoly phi = MixedPoly::constant(d, 1.0) - MixedPoly::abs2(d);
    const OperatorMatrix t = toeplitz_poly_matrix(phi, params, max_degree);
    const OperatorMatrix inv = toeplitz_poly_matrix(Complex(1.0 / (lambda - d)) * phi, params, max_degree);
    double err = 0.0;
    bool signs = true;
    for (Eigen::Index i = 0; i < t.size(); ++i) {
        const int k = t.basis[static_cast<std::size_t>(i)].degree();
        for (Eigen::Index j = 0; j < t.size(); ++j) {
            const double expect = i == j ? (lambda - d) / (lambda + k) : 0.0;
            const double expect_inv = i == j ? 1.0 / (lambda + k) : 0.0;
            err = std::max({err, std::abs(t.entries(i, j) - expect), std::abs(inv.entries(i, j) - expect_inv)});
        }
        signs = signs && sign(t.entries(i, i).real()) == sign(lambda - d);
    }
    VerificationReport rep = make_report("negativity", t.entries(0, 0), (lambda - d) / lambda, 1e-12);
    rep.abs_err = err;
    rep.pass = err <= 1e-12 && signs;
    rep.params = {{"d", d}, {"lambda", lambda}, {"M", max_degree}};
    rep.notes = std::string("diagonal entries (lambda-d)/(lambda+|m|) and (lambda I + N)^{-1}; abs_err is the max entrywise error; ") +
                (lambda < d ? "all diagonal entries negative: " : "all diagonal entries positive: ") + (signs ? "yes" : "no");
    return rep;
}

VerificationReport check_mult_norm(int j, double lambda, int d, int max_degree) {
    if (j < 1 || j > d) throw std::invalid_argument("check_mult_norm: j must be in 1..d");
    if (max_degree < 1) throw std::invalid_argument("check_mult_norm: M must be >= 1");
    const SpaceParams params(d, lambda);
    const OperatorMatrix m = multiplication_matrix(MultiIndex::unit(d, j - 1), params, max_degree);
    Eigen::BDCSVD<Eigen::MatrixXcd> svd(m.entries);
    const double sigma = svd.singularValues()(0);
    double shell = 0.0;
    for (const auto& idx : enumerate_basis(d, max_degree - 1)) {
        shell = std::max(shell, (idx[j - 1] + 1.0) / (idx.degree() + lambda));
    }
    const double limit = std::max(1.0, 1.0 / lambda);
    const double top = max_degree / (max_degree - 1.0 + lambda);
    auto rep = equality("mult-norm", sigma * sigma, shell, 1e-12);
    rep.params = {{"d", d},         {"lambda", lambda},     {"j", j},        {"M", max_degree},
                  {"limit", limit}, {"gap", limit - shell}, {"top_shell", top}};
    rep.notes += "; lhs is sigma_max^2 of the truncated M_{z_j} (the supremum formula is the squared norm); "
                 "top_shell is the value at m = (M-1) e_j";
    return rep;
}

namespace {

struct FdLaplacian {
    double value;
    double error_estimate;
};

double kernel_value(const BallPoint& z, const BallPoint& w, const SpaceParams& params) {
    return berezin_kernel(z, w, params);
}

double fd_laplacian_at(const BallPoint& z, const BallPoint& w, const SpaceParams& params, double h) {
    const int d = static_cast<int>(z.size());
    const auto f = [&](int p, double dp, int q, double dq) {
        BallPoint x = z;
        const auto shift = [&](int c, double t) {
            if (c % 2 == 0) {
                x(c / 2) += Complex(t, 0.0);
            } else {
                x(c / 2) += Complex(0.0, t);
            }
        };
        shift(p, dp);
        shift(q, dq);
        return kernel_value(x, w, params);
    };
    const double f0 = kernel_value(z, w, params);
    // Real second derivatives in coordinates (x_1, y_1, ..., x_d, y_d).
    Eigen::MatrixXd hess(2 * d, 2 * d);
    for (int p = 0; p < 2 * d; ++p) {
        hess(p, p) = (f(p, h, p, 0.0) - 2.0 * f0 + f(p, -h, p, 0.0)) / (h * h);
        for (int q = p + 1; q < 2 * d; ++q) {
            hess(p, q) = (f(p, h, q, h) - f(p, h, q, -h) - f(p, -h, q, h) + f(p, -h, q, -h)) / (4.0 * h * h);
            hess(q, p) = hess(p, q);
        }
    }
    const double r = z.squaredNorm();
    Complex sum{};
    for (int j = 0; j < d; ++j) {
        for (int k = 0; k < d; ++k) {
            // d^2/(dzbar_j dz_k) = (F_xx + F_yy + i (F_{y_j x_k} - F_{x_j y_k})) / 4
            const Complex mixed = 0.25 * Complex(hess(2 * j, 2 * k) + hess(2 * j + 1, 2 * k + 1),
                                                 hess(2 * j + 1, 2 * k) - hess(2 * j, 2 * k + 1));
            const Complex coeff = (j == k ? 1.0 : 0.0) - std::conj(z(j)) * z(k);
            sum += coeff * mixed;
        }
    }
    return (1.0 - r) * sum.real();
}

FdLaplacian fd_laplacian(const BallPoint& z, const BallPoint& w, const SpaceParams& params, double h) {
    const double coarse = fd_laplacian_at(z, w, params, h);
    const double fine = fd_laplacian_at(z, w, params, 0.5 * h);
    const double extrapolated = (4.0 * fine - coarse) / 3.0;
    return {extrapolated, std::abs(extrapolated - fine)};
}

VerificationReport laplace_report(std::string id, const BallPoint& z, const BallPoint& w, double lambda, double h,
                                  bool corrected) {
    const int d = static_cast<int>(z.size());
    if (w.size() != d) throw std::invalid_argument("check_laplace_identity: dimension mismatch");
    if (!(z.norm() <= 0.8)) throw std::invalid_argument("check_laplace_identity: need |z| <= 0.8");
    if (!(h > 0.0 && h < 1e-2)) throw std::invalid_argument("check_laplace_identity: need 0 < h < 1e-2");
    require_in_ball(w, "check_laplace_identity");
    const SpaceParams p0(d, lambda);
    const SpaceParams p1(d, lambda + 1.0);
    const double f0 = berezin_kernel(z, w, p0);
    const double f1 = berezin_kernel(z, w, p1);
    const double a = lambda * (lambda - d);
    const double rhs = corrected ? a * f0 - (lambda - d) * (lambda - d) * f1 : a * (f0 - f1);
    const FdLaplacian lap = fd_laplacian(z, w, p0, h);
    const double tol = 1e-3;
    VerificationReport rep = make_report(std::move(id), lap.value, rhs, tol);
    rep.rel_err = rhs != 0.0 ? rep.abs_err / std::abs(rhs) : (rep.abs_err == 0.0 ? 0.0 : std::numeric_limits<double>::infinity());
    // Scale of the terms on the right; guards points where they cancel.
    const double scale = std::abs(a) * f0 + (corrected ? (lambda - d) * (lambda - d) : std::abs(a)) * f1;
    rep.pass = rep.rel_err <= tol || rep.abs_err <= tol * scale;
    rep.notes = std::string(corrected ? "rhs = lambda(lambda-d) F_lambda - (lambda-d)^2 F_{lambda+1}"
                                      : "rhs = lambda(lambda-d)(F_lambda - F_{lambda+1})") +
                "; central differences at h and h/2 with Richardson extrapolation; pass iff rel_err <= tol or "
                "abs_err <= tol * term scale " + format_margin(scale) + "; fd error estimate " +
                format_margin(lap.error_estimate);
    if (!rep.pass && lap.error_estimate > tol * std::max(std::abs(rhs), scale)) {
        rep.inconclusive = true;
        rep.pass = true;
        rep.notes += "; inconclusive: finite-difference error estimate exceeds tolerance";
    }
    rep.params = {{"d", d}, {"lambda", lambda}, {"h", h}, {"z", point_json(z)}, {"w", point_json(w)}};
    return rep;
}

} // namespace

VerificationReport check_laplace_identity(const BallPoint& z, const BallPoint& w, double lambda, double h) {
    return laplace_report("laplace", z, w, lambda, h, false);
}

VerificationReport check_laplace_corrected(const BallPoint& z, const BallPoint& w, double lambda, double h) {
    return laplace_report("laplace-corrected", z, w, lambda, h, true);
}

VerificationReport check_invariance(const BallPoint& u, const BallPoint& z, const BallPoint& w, double lambda) {
    require_in_ball(u, "check_invariance");
    require_in_ball(z, "check_invariance");
    require_in_ball(w, "check_invariance");
    const int d = static_cast<int>(z.size());
    const SpaceParams params(d, lambda);
    const double lhs = berezin_kernel(mobius(u, z), mobius(u, w), params);
    const double rhs = berezin_kernel(z, w, params);
    VerificationReport rep = make_report("invariance", lhs, rhs, 1e-10);
    rep.pass = rep.rel_err <= 1e-10 || rep.abs_err <= 1e-10 * params.c_lambda() * params.c_lambda();
    rep.notes = "pass iff rel_err <= tol or abs_err <= tol * c_lambda^2";
    rep.params = {{"d", d}, {"lambda", lambda}, {"u", point_json(u)}, {"z", point_json(z)}, {"w", point_json(w)}};
    return rep;
}

VerificationReport check_kernel_series(const BallPoint& z, const BallPoint& w, double lambda, int max_degree) {
    const int d = static_cast<int>(z.size());
    const Complex series = kernel_partial_sum(z, w, lambda, max_degree);
    // sum conj(z)^l w^l sums to (1 - w.conj(z))^{-lambda} = K(w, z).
    const Complex closed = reproducing_kernel(w, z, lambda);
    VerificationReport rep = make_report("kernel-series", series, closed, 1e-8);
    rep.pass = rep.rel_err <= 1e-8;
    rep.notes = "partial sum through the given degree against the principal-branch kernel; pass iff rel_err <= tol";
    rep.params = {{"d", d}, {"lambda", lambda}, {"M", max_degree}, {"z", point_json(z)}, {"w", point_json(w)}};
    return rep;
}

VerificationReport check_monomial_quadrature(int d, double lambda, int max_degree) {
    if (!(lambda > d)) throw std::invalid_argument("check_monomial_quadrature: need lambda > d");
    const double c = c_lambda(d, lambda);
    double worst = -1.0;
    VerificationReport rep;
    for (const auto& m : enumerate_basis(d, max_degree)) {
        const Complex quad = c * integrate_ball_exact(MixedPoly::monomial(m, m), lambda, d);
        const double closed = monomial_norm_sq(m, lambda);
        auto r = make_report("monomial-quadrature", quad, closed, 1e-10);
        if (r.rel_err > worst) {
            worst = r.rel_err;
            rep = r;
            rep.params = {{"worst_m", m.entries()}};
        }
    }
    rep.pass = rep.rel_err <= 1e-10;
    rep.params["d"] = d;
    rep.params["lambda"] = lambda;
    rep.params["M"] = max_degree;
    rep.notes = "c_lambda int conj(z^m) z^m dmu against m! Gamma(lambda)/Gamma(lambda+|m|); worst |m| <= M shown";
    return rep;
}

VerificationReport check_sobolev_poly(const MixedPoly& phi, double lambda, int max_degree) {
    const int d = phi.dim();
    const SpaceParams base(d, lambda);
    const OperatorMatrix poly = toeplitz_poly_matrix(phi, base, max_degree);
    double rel = 0.0;
    double zero_abs = 0.0;
    for (int n : {base.n(), base.n() + 1}) {
        const OperatorMatrix sob = toeplitz_sobolev_matrix(phi, base.with_order(n), max_degree);
        for (Eigen::Index i = 0; i < poly.size(); ++i) {
            for (Eigen::Index j = 0; j < poly.size(); ++j) {
                const double diff = std::abs(sob.entries(i, j) - poly.entries(i, j));
                const double ref = std::abs(poly.entries(i, j));
                if (ref > 0.0) {
                    rel = std::max(rel, diff / ref);
                } else {
                    zero_abs = std::max(zero_abs, diff);
                }
            }
        }
    }
    VerificationReport rep = make_report("sobolev-poly", poly.entries(0, 0), poly.entries(0, 0), 1e-10);
    rep.rel_err = rel;
    rep.abs_err = zero_abs;
    rep.pass = rel <= 1e-10 && zero_abs <= 1e-12;
    rep.params = {{"d", d}, {"lambda", lambda}, {"M", max_degree}, {"n", base.n()}, {"phi", print_symbol(phi)}};
    rep.notes = "Sobolev-form entries at orders n and n+1 against the polynomial construction; rel_err over nonzero "
                "entries, abs_err over structural zeros (tol 1e-12)";
    return rep;
}

VerificationReport check_hs_dual(int d, double lambda, double s, int max_degree) {
    const SpaceParams params(d, lambda);
    const RadialProfile g = RadialProfile::power(s, Integrability::L2);
    const double entries = hs_norm_via_entries(hs_matrix(g, params, max_degree));
    const double berezin = hs_norm_via_berezin(g, params);
    VerificationReport rep = make_report("hs-dual", entries, berezin, 1e-2);
    rep.rel_err = berezin != 0.0 ? rep.abs_err / berezin : rep.abs_err;
    rep.pass = rep.rel_err <= 1e-2 || (entries == 0.0 && berezin == 0.0);
    rep.params = {{"d", d}, {"lambda", lambda}, {"s", s}, {"M", max_degree}};
    rep.notes = "phi = (1-|z|^2)^s; Frobenius norm at truncation M against sqrt(<phi, A_lambda phi>); entries " +
                std::string(entries <= berezin * (1.0 + 1e-6) ? "dominated" : "not dominated") +
                " by the Berezin value";
    return rep;
}

VerificationReport check_l1_bound(int d, double lambda, double s) {
    if (!(s > d)) throw std::invalid_argument("check_l1_bound: need s > d for an L1(tau) profile");
    const SpaceParams params(d, lambda);
    const RadialProfile g = RadialProfile::power(s, Integrability::L1);
    const double hs = hs_norm_via_berezin(g, params);
    const double bound = std::abs(params.c_lambda()) * l1_tau_norm(g, d);
    auto rep = inequality("l1-bound", hs, bound, 1e-9);
    rep.params = {{"d", d}, {"lambda", lambda}, {"s", s}, {"margin", bound - hs}};
    rep.notes = "||T_phi||_HS from the Berezin form against |c_lambda| ||phi||_{L1(tau)}; " + rep.notes;
    return rep;
}

VerificationReport check_berezin_one(int d, double lambda, const std::vector<double>& radii) {
    if (!(lambda > d)) throw std::invalid_argument("check_berezin_one: need lambda > d");
    const SpaceParams params(d, lambda);
    RadialProfile one;
    one.g = [](double) { return Complex(1.0); };
    VerificationReport rep;
    double worst = -1.0;
    for (double r : radii) {
        BallPoint z = BallPoint::Zero(d);
        z(0) = r;
        auto cur = make_report("berezin-one", berezin_transform(one, z, params), params.c_lambda(), 1e-6);
        if (cur.rel_err > worst) {
            worst = cur.rel_err;
            rep = cur;
            rep.params = {{"worst_radius", r}};
        }
    }
    rep.pass = rep.rel_err <= 1e-6;
    rep.params["d"] = d;
    rep.params["lambda"] = lambda;
    rep.params["radii"] = radii;
    rep.notes = "A_lambda 1 against c_lambda, worst radius shown";
    return rep;
}

VerificationReport check_berezin_bound(int d, double lambda, int pairs, std::uint64_t seed) {
    const SpaceParams params(d, lambda);
    std::mt19937_64 rng(seed);
    double worst = 0.0;
    for (int i = 0; i < pairs; ++i) {
        const BallPoint z = random_ball_point(rng, d, 0.999);
        const BallPoint w = random_ball_point(rng, d, 0.999);
        worst = std::max(worst, std::abs(berezin_kernel(z, w, params)));
    }
    const double c2 = params.c_lambda() * params.c_lambda();
    auto rep = inequality("berezin-bound", worst, c2, 1e-12);
    rep.seed = seed;
    rep.params = {{"d", d}, {"lambda", lambda}, {"pairs", pairs}};
    rep.notes = "max |F_lambda| over random pairs against c_lambda^2; " + rep.notes;
    return rep;
}

VerificationReport check_hs_zero(int d, double lambda, int max_degree) {
    const SpaceParams params(d, lambda);
    const OperatorMatrix m = hs_matrix(RadialProfile::power(d + 1.0, Integrability::L1), params, max_degree);
    const double largest = m.entries.cwiseAbs().maxCoeff();
    VerificationReport rep = make_report("hs-zero", largest, 0.0, 0.0);
    rep.pass = largest == 0.0 && params.c_lambda() == 0.0;
    rep.params = {{"d", d}, {"lambda", lambda}, {"M", max_degree}};
    rep.notes = "c_lambda = 0 at integer lambda <= d: hs_matrix of (1-|z|^2)^{d+1} must vanish exactly";
    return rep;
}

BallPoint random_ball_point(std::mt19937_64& rng, int d, double max_radius) {
    std::normal_distribution<double> normal;
    std::uniform_real_distribution<double> uniform;
    BallPoint z(d);
    double n2 = 0.0;
    do {
        for (int j = 0; j < d; ++j) z(j) = Complex(normal(rng), normal(rng));
        n2 = z.squaredNorm();
    } while (n2 == 0.0);
    const double radius = max_radius * std::pow(uniform(rng), 1.0 / (2.0 * d));
    return z * (radius / std::sqrt(n2));
}

HoloPoly random_holo_poly(std::mt19937_64& rng, int d, int max_degree) {
    std::normal_distribution<double> normal;
    HoloPoly f(d);
    for (const auto& m : enumerate_basis(d, max_degree)) f.add(m, Complex(normal(rng), normal(rng)));
    return f;
}

MixedPoly random_real_mixed_poly(std::mt19937_64& rng, int d, int max_degree) {
    std::normal_distribution<double> normal;
    MixedPoly p(d);
    const auto basis = enumerate_basis(d, max_degree);
    for (std::size_t i = 0; i < basis.size(); ++i) {
        for (std::size_t j = i; j < basis.size(); ++j) {
            if (basis[i].degree() + basis[j].degree() > max_degree) continue;
            if (i == j) {
                p.add(basis[i], basis[i], normal(rng));
            } else {
                const Complex c(normal(rng), normal(rng));
                p.add(basis[i], basis[j], c);
                p.add(basis[j], basis[i], std::conj(c));
            }
        }
    }
    return p;
}

std::vector<double> default_lambda_grid(int d) {
    return {0.4, 0.5 * d + 0.25, d - 0.5, static_cast<double>(d), d + 0.3, d + 1.7};
}

namespace {

using Task = std::function<std::vector<VerificationReport>()>;

const std::vector<std::string>& identity_list() {
    static const std::vector<std::string> ids = {
        "berezin-bound", "berezin-one", "hs-dual",        "hs-zero",     "invariance",         "kernel-series",
        "l1-bound",      "laplace",     "laplace-corrected", "monomial-quadrature", "mult-norm", "negativity",
        "norm-growth",   "parts",       "product-bound",  "shift-chain", "shift1",             "shift2n",
        "sobolev-poly",  "weight-recursion"};
    return ids;
}

std::size_t identity_index(const std::string& id) {
    const auto& ids = identity_list();
    return static_cast<std::size_t>(std::find(ids.begin(), ids.end(), id) - ids.begin());
}

bool near_integer(double x) { return std::abs(x - std::round(x)) <= 1e-12; }

} // namespace

std::vector<std::string> suite_identities() { return identity_list(); }

std::vector<VerificationReport> run_suite(const SuiteConfig& config) {
    if (config.only && identity_index(*config.only) == identity_list().size()) {
        throw std::invalid_argument("run_suite: unknown identity '" + *config.only + "'");
    }
    std::vector<Task> tasks;
    const int instances = std::max(1, config.instances);

    for (int d : config.dims) {
        if (d < 1) throw std::invalid_argument("run_suite: dimensions must be >= 1");
        const std::vector<double> grid = config.lambdas ? *config.lambdas : default_lambda_grid(d);
        for (std::size_t li = 0; li < grid.size(); ++li) {
            const double lambda = grid[li];
            if (!(lambda > 0.0)) throw std::invalid_argument("run_suite: lambda must be positive");
            const auto add = [&](const std::string& id, bool applicable,
                                 std::function<std::vector<VerificationReport>(std::uint64_t)> body) {
                if (!applicable) return;
                if (config.only && *config.only != id) return;
                const std::uint64_t seed =
                    derive_seed(config.seed, identity_index(id), static_cast<std::uint64_t>(d) * 1000 + li);
                tasks.push_back([body = std::move(body), seed] {
                    auto reports = body(seed);
                    for (auto& r : reports) r.seed = seed;
                    return reports;
                });
            };
            const auto repeat = [instances](std::uint64_t seed, auto&& make) {
                std::mt19937_64 rng(seed);
                std::vector<VerificationReport> out;
                for (int i = 0; i < instances; ++i) {
                    out.push_back(make(rng));
                    out.back().params["instance"] = i;
                }
                return out;
            };
            const bool above = lambda > d;

            add("weight-recursion", true, [=](std::uint64_t seed) {
                return repeat(seed, [&](std::mt19937_64& rng) {
                    return check_weight_recursion(lambda, random_ball_point(rng, d, 0.95));
                });
            });
            add("parts", above, [=](std::uint64_t seed) {
                return repeat(seed, [&](std::mt19937_64& rng) {
                    return check_parts_lemma(random_real_mixed_poly(rng, d, 4), lambda, d);
                });
            });
            add("shift1", above, [=](std::uint64_t seed) {
                return repeat(seed, [&](std::mt19937_64& rng) {
                    const HoloPoly f = random_holo_poly(rng, d, 5);
                    return check_shift1(f, random_holo_poly(rng, d, 5), lambda);
                });
            });
            add("shift2n", true, [=](std::uint64_t seed) {
                std::vector<VerificationReport> out;
                const int n0 = std::max(1, SpaceParams::minimal_order(d, lambda));
                for (int n : {n0, n0 + 1}) {
                    auto part = repeat(derive_seed(seed, static_cast<std::uint64_t>(n)), [&](std::mt19937_64& rng) {
                        const HoloPoly f = random_holo_poly(rng, d, 5);
                        return check_shift2n(f, random_holo_poly(rng, d, 5), lambda, n);
                    });
                    out.insert(out.end(), part.begin(), part.end());
                }
                return out;
            });
            add("shift-chain", true, [=](std::uint64_t seed) {
                return repeat(seed, [&](std::mt19937_64& rng) {
                    const HoloPoly f = random_holo_poly(rng, d, 5);
                    return check_shift_chain(f, random_holo_poly(rng, d, 5), lambda);
                });
            });
            add("product-bound", above, [=](std::uint64_t seed) {
                return repeat(seed, [&](std::mt19937_64& rng) {
                    const HoloPoly f = random_holo_poly(rng, d, 4);
                    return check_product_bound(f, random_holo_poly(rng, d, 4), lambda, 0.8);
                });
            });
            add("norm-growth", lambda < d, [=, &config](std::uint64_t) {
                return std::vector{counterexample_norm_growth(lambda, d, config.k_max, config.growth_bound).report};
            });
            add("negativity", lambda != d, [=](std::uint64_t) {
                return std::vector{counterexample_negativity(lambda, d, 8)};
            });
            add("mult-norm", true, [=](std::uint64_t) {
                std::vector<VerificationReport> out;
                for (int j = 1; j <= d; ++j) out.push_back(check_mult_norm(j, lambda, d, 12));
                return out;
            });
            for (const bool corrected : {false, true}) {
                add(corrected ? "laplace-corrected" : "laplace", true, [=](std::uint64_t seed) {
                    return repeat(seed, [&](std::mt19937_64& rng) {
                        const BallPoint z = random_ball_point(rng, d, 0.8);
                        const BallPoint w = random_ball_point(rng, d, 0.8);
                        return corrected ? check_laplace_corrected(z, w, lambda) : check_laplace_identity(z, w, lambda);
                    });
                });
            }
            add("invariance", true, [=](std::uint64_t seed) {
                return repeat(seed, [&](std::mt19937_64& rng) {
                    const BallPoint u = random_ball_point(rng, d, 0.9);
                    const BallPoint z = random_ball_point(rng, d, 0.9);
                    return check_invariance(u, z, random_ball_point(rng, d, 0.9), lambda);
                });
            });
            add("kernel-series", true, [=](std::uint64_t) {
                BallPoint z = BallPoint::Zero(d);
                z(0) = 0.3;
                return std::vector{check_kernel_series(z, z, lambda, 60)};
            });
            add("monomial-quadrature", above, [=](std::uint64_t) {
                return std::vector{check_monomial_quadrature(d, lambda, 8)};
            });
            add("sobolev-poly", true, [=](std::uint64_t) {
                const MixedPoly z1 = MixedPoly::coordinate(d, 0);
                const MixedPoly zb1 = MixedPoly::conj_coordinate(d, 0);
                const std::vector<MixedPoly> symbols = {MixedPoly::constant(d, 1.0), zb1 * z1, MixedPoly::abs2(d),
                                                        zb1 * zb1 * z1 * z1};
                std::vector<VerificationReport> out;
                for (const auto& phi : symbols) out.push_back(check_sobolev_poly(phi, lambda, d <= 2 ? 4 : 3));
                return out;
            });
            const int hs_degree = d == 1 ? 40 : (d == 2 ? 24 : 12);
            add("hs-dual", lambda > 0.5 * d, [=](std::uint64_t) {
                return std::vector{check_hs_dual(d, lambda, d + 1.0, hs_degree)};
            });
            add("l1-bound", true, [=](std::uint64_t) { return std::vector{check_l1_bound(d, lambda, d + 1.0)}; });
            add("berezin-one", above, [=](std::uint64_t) {
                std::vector<double> radii;
                for (int i = 0; i < 10; ++i) radii.push_back(0.1 * i);
                return std::vector{check_berezin_one(d, lambda, radii)};
            });
            add("berezin-bound", true, [=](std::uint64_t seed) {
                return std::vector{check_berezin_bound(d, lambda, 1000, seed)};
            });
            add("hs-zero", near_integer(lambda) && lambda <= d, [=](std::uint64_t) {
                return std::vector{check_hs_zero(d, lambda, 10)};
            });
        }
    }

    std::vector<std::vector<VerificationReport>> results(tasks.size());
    detail::parallel_for(tasks.size(), [&](std::size_t i) { results[i] = tasks[i](); });
    std::vector<VerificationReport> out;
    for (auto& r : results) {
        for (auto& rep : r) out.push_back(std::move(rep));
    }
    std::stable_sort(out.begin(), out.end(),
                     [](const VerificationReport& a, const VerificationReport& b) { return a.identity_id < b.identity_id; });
    return out;
}

} // namespace bergman

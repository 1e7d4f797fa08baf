#include "bergman/cli.hpp"

#include <fstream>
#include <memory>
#include <sstream>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "bergman/core.hpp"
#include "bergman/serialize.hpp"
#include "bergman/symbol_parser.hpp"
#include "bergman/toeplitz.hpp"
#include "bergman/verify.hpp"

namespace bergman {

namespace {

struct Options {
    int d = 1;
    double lambda = 0.0;
    int n = -1;
    int degree = 6;
    std::uint64_t seed = kDefaultVerifySeed;
    std::string format;
    std::string out_path;
    int radial_nodes = 64;
    long samples = 1 << 16;

    std::string f;
    std::string g;
    std::string symbol;
    std::string radial;
    std::string cls;
    std::string method = "poly";
    int points = 10;
    double rmax = 0.9;
    std::string only;
    int kmax = 10;
    int instances = 3;
};

struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

SpaceParams space(const Options& o) {
    if (o.n >= 0) return SpaceParams(o.d, o.lambda, o.n);
    return SpaceParams(o.d, o.lambda);
}

QuadratureRule quadrature(const Options& o) {
    QuadratureRule r;
    r.radial_nodes = o.radial_nodes;
    r.mc_samples = o.samples;
    r.seed = o.seed;
    return r;
}

std::string format_or(const Options& o, const std::string& fallback) {
    const std::string f = o.format.empty() ? fallback : o.format;
    if (f != "json" && f != "csv") throw UsageError("--format must be json or csv");
    return f;
}

// Writes to --out when given, otherwise to the data stream.
void emit(const Options& o, std::ostream& out, const std::string& text) {
    if (o.out_path.empty()) {
        out << text;
        return;
    }
    std::ofstream file(o.out_path, std::ios::binary);
    if (!file) throw UsageError("cannot open output file " + o.out_path);
    file << text;
}

Integrability parse_class(const std::string& s) {
    if (s == "l1" || s == "L1") return Integrability::L1;
    if (s == "l2" || s == "L2") return Integrability::L2;
    if (s == "bounded") return Integrability::Bounded;
    throw UsageError("--class must be l1, l2 or bounded");
}

std::vector<double> split_numbers(const std::string& s, std::size_t min_count, std::size_t max_count,
                                  const std::string& spec) {
    std::vector<double> v;
    std::stringstream in(s);
    std::string item;
    while (std::getline(in, item, ':')) {
        std::size_t used = 0;
        double x = 0.0;
        try {
            x = std::stod(item, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used == 0 || used != item.size()) throw UsageError("malformed radial profile '" + spec + "'");
        v.push_back(x);
    }
    if (v.size() < min_count || v.size() > max_count) throw UsageError("malformed radial profile '" + spec + "'");
    return v;
}

Integrability default_class(double s, int d) {
    if (s > d) return Integrability::L1;
    if (s > 0.5 * d) return Integrability::L2;
    return Integrability::Bounded;
}

// The symbol of toeplitz/norm/berezin: a radial profile or a polynomial. With an
// hs method a polynomial is wrapped as a generic symbol of the declared class.
SymbolSpec read_symbol(const Options& o, std::optional<Integrability> declared) {
    if (!o.radial.empty() && !o.symbol.empty()) throw UsageError("give either --symbol or --radial");
    if (!o.radial.empty()) {
        RadialProfile p = parse_radial_profile(o.radial, o.d);
        if (!o.cls.empty()) p.cls = parse_class(o.cls);
        if (declared) p.cls = *declared;
        return p;
    }
    if (o.symbol.empty()) throw UsageError("a symbol is required (--symbol or --radial)");
    MixedPoly p = parse_symbol(o.symbol, o.d);
    if (declared) {
        GenericSymbol g = GenericSymbol::from_polynomial(p, 0);
        g.cls = *declared;
        return g;
    }
    return p;
}

std::optional<Integrability> method_class(const std::string& method) {
    if (method == "hs-l1") return Integrability::L1;
    if (method == "hs-l2") return Integrability::L2;
    if (method == "hs") return std::nullopt;
    throw UsageError("unknown method '" + method + "'");
}

void warn_if_vanishing(const SpaceParams& p, std::ostream& err) {
    if (p.c_lambda() == 0.0) {
        err << "warning: c_lambda = 0 at integer lambda = " << p.lambda() << " <= d = " << p.d()
            << "; the operator is identically zero\n";
    }
}

nlohmann::json summary_json(const SpectrumSummary& s) {
    nlohmann::json j = {{"M", s.degree},
                        {"hermitian", s.hermitian},
                        {"operator_norm", s.operator_norm},
                        {"hs_norm", s.hs_norm},
                        {"previous_operator_norm", s.previous_operator_norm},
                        {"converged", s.converged}};
    if (s.hermitian) {
        j["min_eigenvalue"] = s.min_eigenvalue;
        j["max_eigenvalue"] = s.max_eigenvalue;
    }
    return j;
}

OperatorMatrix build_matrix(const Options& o, const SpaceParams& params, std::ostream& err) {
    if (o.degree < 0) throw UsageError("--degree must be >= 0");
    if (o.method == "poly" || o.method == "sobolev") {
        if (!o.radial.empty()) throw UsageError("method " + o.method + " needs a polynomial --symbol");
        const MixedPoly p = parse_symbol(o.symbol, o.d);
        return o.method == "poly" ? toeplitz_poly_matrix(p, params, o.degree)
                                  : toeplitz_sobolev_matrix(p, params, o.degree);
    }
    const SymbolSpec phi = read_symbol(o, method_class(o.method));
    OperatorMatrix m = hs_matrix(phi, params, o.degree, quadrature(o));
    warn_if_vanishing(params, err);
    return m;
}

int cmd_inner(const Options& o, std::ostream& out) {
    const SpaceParams params = space(o);
    const HoloPoly f = parse_polynomial(o.f, o.d);
    const HoloPoly g = parse_polynomial(o.g, o.d);
    const Complex v = inner_product(f, g, params);
    if (format_or(o, "json") == "json") {
        emit(o, out, nlohmann::json{{"d", o.d}, {"lambda", o.lambda}, {"value", {v.real(), v.imag()}}}.dump() + "\n");
    } else {
        emit(o, out, "re,im\n" + format_double(v.real()) + "," + format_double(v.imag()) + "\n");
    }
    return 0;
}

int cmd_toeplitz(const Options& o, std::ostream& out, std::ostream& err) {
    const SpaceParams params = space(o);
    const OperatorMatrix m = build_matrix(o, params, err);
    const std::string data = format_or(o, "json") == "json" ? to_json(m).dump() + "\n" : to_csv(m);
    if (o.out_path.empty()) {
        out << data;
    } else {
        emit(o, out, data);
    }
    out << summary_json(summarize(m)).dump() << "\n";
    return 0;
}

int cmd_norm(const Options& o, std::ostream& out, std::ostream& err) {
    const SpaceParams params = space(o);
    const OperatorMatrix m = build_matrix(o, params, err);
    nlohmann::json j = summary_json(summarize(m));
    j["d"] = o.d;
    j["lambda"] = o.lambda;
    j["method"] = o.method;
    if (o.method != "poly" && o.method != "sobolev" && !o.radial.empty()) {
        const SymbolSpec phi = read_symbol(o, method_class(o.method));
        if (symbol_class(phi) != Integrability::Bounded) {
            j["hs_norm_berezin"] = hs_norm_via_berezin(phi, params, quadrature(o));
        }
    }
    emit(o, out, j.dump() + "\n");
    return 0;
}

int cmd_berezin(const Options& o, std::ostream& out, std::ostream& err) {
    const SpaceParams params = space(o);
    const SymbolSpec phi = read_symbol(o, std::nullopt);
    if (o.points < 1) throw UsageError("--points must be >= 1");
    if (!(o.rmax >= 0.0 && o.rmax < 1.0)) throw UsageError("--rmax must lie in [0, 1)");
    const QuadratureRule rule = quadrature(o);
    const bool json = format_or(o, "csv") == "json";
    std::ostringstream text;
    nlohmann::json rows = nlohmann::json::array();
    if (!json) text << "r,re,im\n";
    for (int i = 0; i < o.points; ++i) {
        const double r = o.points == 1 ? 0.0 : o.rmax * i / (o.points - 1);
        BallPoint z = BallPoint::Zero(o.d);
        z(0) = r;
        const Complex a = berezin_transform(phi, z, params, rule);
        if (json) {
            rows.push_back({{"r", r}, {"value", {a.real(), a.imag()}}});
        } else {
            text << format_double(r) << ',' << format_double(a.real()) << ',' << format_double(a.imag()) << '\n';
        }
    }
    warn_if_vanishing(params, err);
    emit(o, out, json ? rows.dump() + "\n" : text.str());
    return 0;
}

int cmd_verify(const Options& o, const CLI::App& app, std::ostream& out) {
    SuiteConfig config;
    config.seed = o.seed;
    config.k_max = o.kmax;
    // A single identity defaults to one instance per grid point.
    config.instances = (!o.only.empty() && app.get_subcommand("verify")->count("--instances") == 0) ? 1 : o.instances;
    if (app.count("--d") > 0) config.dims = {o.d};
    if (app.count("--lambda") > 0) config.lambdas = std::vector<double>{o.lambda};
    if (!o.only.empty()) config.only = o.only;
    const auto reports = run_suite(config);
    std::ostringstream text;
    bool ok = true;
    for (const auto& r : reports) {
        text << to_json(r).dump() << '\n';
        ok = ok && r.pass;
    }
    emit(o, out, text.str());
    return ok ? 0 : 1;
}

} // namespace

RadialProfile parse_radial_profile(const std::string& spec, int d) {
    const auto colon = spec.find(':');
    const std::string name = spec.substr(0, colon);
    const std::string rest = colon == std::string::npos ? "" : spec.substr(colon + 1);
    RadialProfile p;
    if (name == "one") {
        if (!rest.empty()) throw UsageError("profile 'one' takes no parameters");
        p.g = [](double) { return Complex(1.0); };
        p.cls = Integrability::Bounded;
        return p;
    }
    if (name == "power") {
        const auto v = split_numbers(rest, 1, 1, spec);
        if (!(v[0] >= 0.0)) throw UsageError("power exponent must be >= 0");
        return RadialProfile::power(v[0], default_class(v[0], d));
    }
    if (name == "gaussian") {
        const auto v = split_numbers(rest, 1, 2, spec);
        const double a = v[0];
        const double s = v.size() > 1 ? v[1] : 0.0;
        if (!(s >= 0.0)) throw UsageError("gaussian decay exponent must be >= 0");
        p.g = [a, s](double t) { return Complex(std::exp(-a * t) * std::pow(1.0 - t, s)); };
        p.reduced = [a](double t) { return Complex(std::exp(-a * t)); };
        p.decay = s;
        p.cls = default_class(s, d);
        return p;
    }
    throw UsageError("unknown radial profile '" + spec + "'");
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    Options o;
    CLI::App app{"Generalized Bergman spaces, Toeplitz operators and Berezin transforms"};
    app.require_subcommand(1);
    app.add_option("-d,--d", o.d, "Dimension d");
    app.add_option("-l,--lambda", o.lambda, "Weight lambda > 0");
    app.add_option("--n", o.n, "Sobolev order (default: smallest with lambda + 2n > d)");
    app.add_option("-M,--degree", o.degree, "Truncation degree M");
    app.add_option("--seed", o.seed, "Seed for random instances and Monte Carlo");
    app.add_option("--format", o.format, "json or csv");
    app.add_option("--out", o.out_path, "Output file (default: standard output)");
    app.add_option("--nodes", o.radial_nodes, "Radial quadrature nodes");
    app.add_option("--samples", o.samples, "Monte Carlo samples");

    auto* inner = app.add_subcommand("inner", "Inner product <f, g>_lambda of polynomials");
    inner->add_option("--f", o.f, "Polynomial f")->required();
    inner->add_option("--g", o.g, "Polynomial g")->required();

    const auto symbol_options = [&o](CLI::App* cmd) {
        cmd->add_option("--symbol", o.symbol, "Polynomial symbol in z, conj(z), abs2(z)");
        cmd->add_option("--radial", o.radial, "Radial profile: one | power:s | gaussian:a[:s]");
        cmd->add_option("--class", o.cls, "Declared class of a radial profile: l1 | l2 | bounded");
    };
    auto* toeplitz = app.add_subcommand("toeplitz", "Matrix of a Toeplitz operator and its spectrum");
    symbol_options(toeplitz);
    toeplitz->add_option("--method", o.method, "poly | sobolev | hs | hs-l1 | hs-l2");
    auto* norm = app.add_subcommand("norm", "Operator and Hilbert-Schmidt norms with a convergence flag");
    symbol_options(norm);
    norm->add_option("--method", o.method, "poly | sobolev | hs | hs-l1 | hs-l2");
    auto* berezin = app.add_subcommand("berezin", "A_lambda phi on a radial grid");
    symbol_options(berezin);
    berezin->add_option("--points", o.points, "Grid points in [0, rmax]");
    berezin->add_option("--rmax", o.rmax, "Largest radius");
    auto* verify = app.add_subcommand("verify", "Run the verification suite (JSON lines)");
    verify->add_option("--only", o.only, "Single identity id");
    verify->add_option("--kmax", o.kmax, "Largest k for norm-growth");
    verify->add_option("--instances", o.instances, "Random instances per identity and grid point");
    for (auto* cmd : {inner, toeplitz, norm, berezin, verify}) cmd->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }
    try {
        if (!verify->parsed() && app.count("--lambda") == 0) throw UsageError("--lambda is required");
        if (verify->parsed() && app.count("--lambda") > 0 && !(o.lambda > 0.0)) {
            throw UsageError("lambda must be positive");
        }
        if (inner->parsed()) return cmd_inner(o, out);
        if (toeplitz->parsed()) return cmd_toeplitz(o, out, err);
        if (norm->parsed()) return cmd_norm(o, out, err);
        if (berezin->parsed()) return cmd_berezin(o, out, err);
        return cmd_verify(o, app, out);
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
}

} // namespace bergman

#include "bergman/serialize.hpp"

#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace bergman {

nlohmann::json to_json(const OperatorMatrix& op) {
    nlohmann::json basis = nlohmann::json::array();
    for (const auto& m : op.basis) basis.push_back(m.entries());
    nlohmann::json entries = nlohmann::json::array();
    for (Eigen::Index r = 0; r < op.entries.rows(); ++r) {
        for (Eigen::Index c = 0; c < op.entries.cols(); ++c) {
            entries.push_back({op.entries(r, c).real(), op.entries(r, c).imag()});
        }
    }
    return {{"d", op.params.d()},        {"lambda", op.params.lambda()}, {"n", op.params.n()},
            {"M", op.degree},            {"basis", std::move(basis)},    {"entries", std::move(entries)}};
}

OperatorMatrix matrix_from_json(const nlohmann::json& j) {
    const SpaceParams params(j.at("d").get<int>(), j.at("lambda").get<double>(), j.at("n").get<int>());
    OperatorMatrix op(params, j.at("M").get<int>());
    const auto& basis = j.at("basis");
    if (basis.size() != op.basis.size()) throw std::invalid_argument("matrix_from_json: basis size mismatch");
    for (std::size_t i = 0; i < basis.size(); ++i) {
        if (MultiIndex(basis[i].get<std::vector<int>>()) != op.basis[i]) {
            throw std::invalid_argument("matrix_from_json: basis is not in graded lexicographic order");
        }
    }
    const auto& entries = j.at("entries");
    const auto n = op.size();
    if (entries.size() != static_cast<std::size_t>(n * n)) {
        throw std::invalid_argument("matrix_from_json: entry count mismatch");
    }
    for (Eigen::Index r = 0; r < n; ++r) {
        for (Eigen::Index c = 0; c < n; ++c) {
            const auto& e = entries[static_cast<std::size_t>(r * n + c)];
            op.entries(r, c) = Complex(e.at(0).get<double>(), e.at(1).get<double>());
        }
    }
    return op;
}

std::string format_double(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

std::string to_csv(const OperatorMatrix& op) {
    std::ostringstream out;
    out << "row,col,re,im\n";
    for (Eigen::Index r = 0; r < op.entries.rows(); ++r) {
        for (Eigen::Index c = 0; c < op.entries.cols(); ++c) {
            out << r << ',' << c << ',' << format_double(op.entries(r, c).real()) << ','
                << format_double(op.entries(r, c).imag()) << '\n';
        }
    }
    return out.str();
}

Eigen::MatrixXcd entries_from_csv(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line) || line != "row,col,re,im") {
        throw std::invalid_argument("entries_from_csv: missing header");
    }
    struct Entry {
        long row, col;
        double re, im;
    };
    std::vector<Entry> entries;
    long rows = 0;
    long cols = 0;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        Entry e{};
        if (std::sscanf(line.c_str(), "%ld,%ld,%lf,%lf", &e.row, &e.col, &e.re, &e.im) != 4 || e.row < 0 ||
            e.col < 0) {
            throw std::invalid_argument("entries_from_csv: malformed line: " + line);
        }
        rows = std::max(rows, e.row + 1);
        cols = std::max(cols, e.col + 1);
        entries.push_back(e);
    }
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(rows, cols);
    for (const auto& e : entries) m(e.row, e.col) = Complex(e.re, e.im);
    return m;
}

} // namespace bergman

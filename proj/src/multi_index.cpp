#include "bergman/multi_index.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace bergman {

MultiIndex MultiIndex::unit(int dim, int j) {
    if (j < 0 || j >= dim) {
        throw std::out_of_range("MultiIndex::unit: coordinate out of range");
    }
    MultiIndex m(dim);
    m[j] = 1;
    return m;
}

int MultiIndex::degree() const {
    return std::accumulate(entries_.begin(), entries_.end(), 0);
}

double MultiIndex::factorial() const {
    double result = 1.0;
    for (int e : entries_) {
        for (int k = 2; k <= e; ++k) {
            result *= k;
        }
    }
    return result;
}

MultiIndex MultiIndex::extended(int dim) const {
    if (dim < this->dim()) {
        throw std::invalid_argument("MultiIndex::extended: cannot shrink");
    }
    std::vector<int> e = entries_;
    e.resize(static_cast<std::size_t>(dim), 0);
    return MultiIndex(std::move(e));
}

MultiIndex& MultiIndex::operator+=(const MultiIndex& other) {
    if (other.dim() != dim()) {
        throw std::invalid_argument("MultiIndex: dimension mismatch");
    }
    for (std::size_t j = 0; j < entries_.size(); ++j) {
        entries_[j] += other.entries_[j];
    }
    return *this;
}

std::string MultiIndex::to_string() const {
    std::string s = "(";
    for (std::size_t j = 0; j < entries_.size(); ++j) {
        if (j > 0) s += ",";
        s += std::to_string(entries_[j]);
    }
    return s + ")";
}

bool GradedLexLess::operator()(const MultiIndex& a, const MultiIndex& b) const {
    const int da = a.degree();
    const int db = b.degree();
    if (da != db) return da < db;
    const int n = std::min(a.dim(), b.dim());
    for (int j = 0; j < n; ++j) {
        if (a[j] != b[j]) return a[j] > b[j];
    }
    return a.dim() < b.dim();
}

namespace {

void fill_shell(int dim, int remaining, int pos, std::vector<int>& cur,
                std::vector<MultiIndex>& out) {
    if (pos == dim - 1) {
        cur[static_cast<std::size_t>(pos)] = remaining;
        out.emplace_back(cur);
        return;
    }
    for (int e = remaining; e >= 0; --e) {
        cur[static_cast<std::size_t>(pos)] = e;
        fill_shell(dim, remaining - e, pos + 1, cur, out);
    }
}

} // namespace

std::vector<MultiIndex> enumerate_shell(int dim, int degree) {
    if (dim < 1) throw std::invalid_argument("enumerate_shell: dim must be >= 1");
    if (degree < 0) return {};
    std::vector<MultiIndex> out;
    std::vector<int> cur(static_cast<std::size_t>(dim), 0);
    fill_shell(dim, degree, 0, cur, out);
    return out;
}

std::vector<MultiIndex> enumerate_basis(int dim, int max_degree) {
    if (dim < 1) throw std::invalid_argument("enumerate_basis: dim must be >= 1");
    if (max_degree < 0) throw std::invalid_argument("enumerate_basis: degree must be >= 0");
    std::vector<MultiIndex> out;
    out.reserve(static_cast<std::size_t>(binomial(max_degree + dim, dim)));
    for (int k = 0; k <= max_degree; ++k) {
        auto shell = enumerate_shell(dim, k);
        out.insert(out.end(), shell.begin(), shell.end());
    }
    return out;
}

double binomial(int n, int k) {
    if (k < 0 || k > n) return 0.0;
    k = std::min(k, n - k);
    double r = 1.0;
    for (int i = 1; i <= k; ++i) {
        r = r * (n - k + i) / i;
    }
    return std::round(r);
}

MonomialBasis::MonomialBasis(int dim, int max_degree)
    : dim_(dim), max_degree_(max_degree), elements_(enumerate_basis(dim, max_degree)) {
    for (std::size_t i = 0; i < elements_.size(); ++i) {
        index_.emplace(elements_[i], i);
    }
}

std::optional<std::size_t> MonomialBasis::find(const MultiIndex& m) const {
    auto it = index_.find(m);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

std::size_t MonomialBasis::prefix_size(int k) const {
    if (k < 0) return 0;
    if (k >= max_degree_) return elements_.size();
    return static_cast<std::size_t>(binomial(k + dim_, dim_));
}

} // namespace bergman

#include "bergman/polynomial.hpp"

#include <algorithm>
#include <stdexcept>

namespace bergman {

namespace {

void require_same_dim(int a, int b) {
    if (a != b) throw std::invalid_argument("polynomial dimension mismatch");
}

Complex monomial_value(const MultiIndex& m, const BallPoint& z) {
    Complex r = 1.0;
    for (int j = 0; j < m.dim(); ++j) {
        for (int e = 0; e < m[j]; ++e) r *= z(j);
    }
    return r;
}

Complex conj_monomial_value(const MultiIndex& m, const BallPoint& z) {
    return std::conj(monomial_value(m, z));
}

} // namespace

// HoloPoly

HoloPoly HoloPoly::constant(int dim, Complex c) {
    HoloPoly p(dim);
    p.add(MultiIndex(dim), c);
    return p;
}

HoloPoly HoloPoly::monomial(const MultiIndex& m, Complex c) {
    HoloPoly p(m.dim());
    p.add(m, c);
    return p;
}

int HoloPoly::degree() const {
    int deg = -1;
    for (const auto& [m, c] : terms_) deg = std::max(deg, m.degree());
    return deg;
}

Complex HoloPoly::coeff(const MultiIndex& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Complex{} : it->second;
}

void HoloPoly::add(const MultiIndex& m, Complex c) {
    require_same_dim(m.dim(), dim_);
    if (c == Complex{}) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == Complex{}) terms_.erase(it);
    }
}

Complex HoloPoly::operator()(const BallPoint& z) const {
    require_same_dim(static_cast<int>(z.size()), dim_);
    Complex r{};
    for (const auto& [m, c] : terms_) r += c * monomial_value(m, z);
    return r;
}

HoloPoly& HoloPoly::operator+=(const HoloPoly& other) {
    require_same_dim(dim_, other.dim_);
    for (const auto& [m, c] : other.terms_) add(m, c);
    return *this;
}

HoloPoly& HoloPoly::operator*=(Complex s) {
    if (s == Complex{}) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, c] : terms_) c *= s;
    return *this;
}

HoloPoly operator*(const HoloPoly& a, const HoloPoly& b) {
    require_same_dim(a.dim_, b.dim_);
    HoloPoly r(a.dim_);
    for (const auto& [ma, ca] : a.terms_) {
        for (const auto& [mb, cb] : b.terms_) r.add(ma + mb, ca * cb);
    }
    return r;
}

// MixedPoly

bool MixedKeyLess::operator()(const MixedKey& x, const MixedKey& y) const {
    const int dx = x.hol.degree() + x.antihol.degree();
    const int dy = y.hol.degree() + y.antihol.degree();
    if (dx != dy) return dx < dy;
    GradedLexLess less;
    if (less(x.hol, y.hol)) return true;
    if (less(y.hol, x.hol)) return false;
    return less(x.antihol, y.antihol);
}

MixedPoly MixedPoly::constant(int dim, Complex c) {
    MixedPoly p(dim);
    p.add(MultiIndex(dim), MultiIndex(dim), c);
    return p;
}

MixedPoly MixedPoly::monomial(const MultiIndex& a, const MultiIndex& b, Complex c) {
    require_same_dim(a.dim(), b.dim());
    MixedPoly p(a.dim());
    p.add(a, b, c);
    return p;
}

MixedPoly MixedPoly::coordinate(int dim, int j) {
    return monomial(MultiIndex::unit(dim, j), MultiIndex(dim));
}

MixedPoly MixedPoly::conj_coordinate(int dim, int j) {
    return monomial(MultiIndex(dim), MultiIndex::unit(dim, j));
}

MixedPoly MixedPoly::abs2(int dim) {
    MixedPoly p(dim);
    for (int j = 0; j < dim; ++j) {
        const auto e = MultiIndex::unit(dim, j);
        p.add(e, e, 1.0);
    }
    return p;
}

MixedPoly MixedPoly::abs2_power(int dim, int k) {
    if (k < 0) throw std::invalid_argument("abs2_power: k must be non-negative");
    MixedPoly p(dim);
    double kfact = 1.0;
    for (int j = 2; j <= k; ++j) kfact *= j;
    for (const auto& i : enumerate_shell(dim, k)) {
        p.add(i, i, kfact / i.factorial());
    }
    return p;
}

MixedPoly MixedPoly::from_holomorphic(const HoloPoly& f) {
    MixedPoly p(f.dim());
    const MultiIndex zero(f.dim());
    for (const auto& [m, c] : f.terms()) p.add(m, zero, c);
    return p;
}

MixedPoly MixedPoly::from_antiholomorphic(const HoloPoly& f) {
    MixedPoly p(f.dim());
    const MultiIndex zero(f.dim());
    for (const auto& [m, c] : f.terms()) p.add(zero, m, std::conj(c));
    return p;
}

int MixedPoly::degree() const {
    int deg = -1;
    for (const auto& [k, c] : terms_) deg = std::max(deg, k.hol.degree() + k.antihol.degree());
    return deg;
}

Complex MixedPoly::coeff(const MultiIndex& a, const MultiIndex& b) const {
    auto it = terms_.find(MixedKey{a, b});
    return it == terms_.end() ? Complex{} : it->second;
}

void MixedPoly::add(const MultiIndex& a, const MultiIndex& b, Complex c) {
    require_same_dim(a.dim(), dim_);
    require_same_dim(b.dim(), dim_);
    if (c == Complex{}) return;
    auto [it, inserted] = terms_.try_emplace(MixedKey{a, b}, c);
    if (!inserted) {
        it->second += c;
        if (it->second == Complex{}) terms_.erase(it);
    }
}

Complex MixedPoly::operator()(const BallPoint& z) const {
    require_same_dim(static_cast<int>(z.size()), dim_);
    Complex r{};
    for (const auto& [k, c] : terms_) {
        r += c * monomial_value(k.hol, z) * conj_monomial_value(k.antihol, z);
    }
    return r;
}

MixedPoly MixedPoly::conjugate() const {
    MixedPoly r(dim_);
    for (const auto& [k, c] : terms_) r.add(k.antihol, k.hol, std::conj(c));
    return r;
}

bool MixedPoly::is_real_valued(double tol) const {
    for (const auto& [k, c] : terms_) {
        if (std::abs(c - std::conj(coeff(k.antihol, k.hol))) > tol) return false;
    }
    return true;
}

bool MixedPoly::is_holomorphic() const {
    return std::all_of(terms_.begin(), terms_.end(),
                       [](const auto& t) { return t.first.antihol.degree() == 0; });
}

HoloPoly MixedPoly::to_holomorphic() const {
    HoloPoly f(dim_);
    for (const auto& [k, c] : terms_) {
        if (k.antihol.degree() != 0) {
            throw std::invalid_argument("polynomial has antiholomorphic terms");
        }
        f.add(k.hol, c);
    }
    return f;
}

MixedPoly MixedPoly::pow(int k) const {
    if (k < 0) throw std::invalid_argument("MixedPoly::pow: negative exponent");
    MixedPoly r = constant(dim_, 1.0);
    MixedPoly base = *this;
    while (k > 0) {
        if (k & 1) r = r * base;
        k >>= 1;
        if (k > 0) base = base * base;
    }
    return r;
}

MixedPoly& MixedPoly::operator+=(const MixedPoly& other) {
    require_same_dim(dim_, other.dim_);
    for (const auto& [k, c] : other.terms_) add(k.hol, k.antihol, c);
    return *this;
}

MixedPoly& MixedPoly::operator-=(const MixedPoly& other) {
    require_same_dim(dim_, other.dim_);
    for (const auto& [k, c] : other.terms_) add(k.hol, k.antihol, -c);
    return *this;
}

MixedPoly& MixedPoly::operator*=(Complex s) {
    if (s == Complex{}) {
        terms_.clear();
        return *this;
    }
    for (auto& [k, c] : terms_) c *= s;
    return *this;
}

MixedPoly operator*(const MixedPoly& a, const MixedPoly& b) {
    require_same_dim(a.dim_, b.dim_);
    MixedPoly r(a.dim_);
    for (const auto& [ka, ca] : a.terms_) {
        for (const auto& [kb, cb] : b.terms_) {
            r.add(ka.hol + kb.hol, ka.antihol + kb.antihol, ca * cb);
        }
    }
    return r;
}

} // namespace bergman

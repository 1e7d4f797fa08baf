#pragma once

#include <map>
#include <utility>

#include "bergman/multi_index.hpp"
#include "bergman/space.hpp"

namespace bergman {

// Finite holomorphic expansion sum_m c_m z^m. The zero polynomial has no terms.
class HoloPoly {
public:
    using Terms = std::map<MultiIndex, Complex, GradedLexLess>;

    explicit HoloPoly(int dim) : dim_(dim) {}
    static HoloPoly constant(int dim, Complex c);
    static HoloPoly monomial(const MultiIndex& m, Complex c = 1.0);

    int dim() const { return dim_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    // -1 for the zero polynomial.
    int degree() const;

    Complex coeff(const MultiIndex& m) const;
    // Adds c to the coefficient of z^m; exact zeros are dropped.
    void add(const MultiIndex& m, Complex c);

    Complex operator()(const BallPoint& z) const;

    HoloPoly& operator+=(const HoloPoly& other);
    HoloPoly& operator*=(Complex s);
    friend HoloPoly operator+(HoloPoly a, const HoloPoly& b) { return a += b; }
    friend HoloPoly operator*(Complex s, HoloPoly a) { return a *= s; }
    friend HoloPoly operator*(const HoloPoly& a, const HoloPoly& b);
    friend bool operator==(const HoloPoly& a, const HoloPoly& b) = default;

private:
    int dim_;
    Terms terms_;
};

// Key (a, b) of the mixed monomial z^a conj(z)^b.
struct MixedKey {
    MultiIndex hol;
    MultiIndex antihol;
    friend bool operator==(const MixedKey&, const MixedKey&) = default;
};

struct MixedKeyLess {
    bool operator()(const MixedKey& x, const MixedKey& y) const;
};

// Finite expansion sum c_{a,b} z^a conj(z)^b.
class MixedPoly {
public:
    using Terms = std::map<MixedKey, Complex, MixedKeyLess>;

    explicit MixedPoly(int dim) : dim_(dim) {}
    static MixedPoly constant(int dim, Complex c);
    static MixedPoly monomial(const MultiIndex& a, const MultiIndex& b, Complex c = 1.0);
    // z_j (j is zero-based).
    static MixedPoly coordinate(int dim, int j);
    // conj(z_j).
    static MixedPoly conj_coordinate(int dim, int j);
    // |z|^2 = sum_j z_j conj(z_j).
    static MixedPoly abs2(int dim);
    // (|z|^2)^k expanded by the multinomial theorem: sum_{|i|=k} k!/i! z^i conj(z)^i.
    static MixedPoly abs2_power(int dim, int k);
    static MixedPoly from_holomorphic(const HoloPoly& f);
    // conj(f) for holomorphic f.
    static MixedPoly from_antiholomorphic(const HoloPoly& f);

    int dim() const { return dim_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    // Total degree max(|a| + |b|); -1 for zero.
    int degree() const;

    Complex coeff(const MultiIndex& a, const MultiIndex& b) const;
    void add(const MultiIndex& a, const MultiIndex& b, Complex c);

    Complex operator()(const BallPoint& z) const;

    // Complex conjugate: (a, b, c) -> (b, a, conj c).
    MixedPoly conjugate() const;
    // Real-valued on the ball iff coefficients are Hermitian under (a,b) <-> (b,a).
    bool is_real_valued(double tol = 0.0) const;
    bool is_holomorphic() const;
    // Holomorphic part; throws if any term has antiholomorphic exponent.
    HoloPoly to_holomorphic() const;

    MixedPoly pow(int k) const;

    MixedPoly& operator+=(const MixedPoly& other);
    MixedPoly& operator-=(const MixedPoly& other);
    MixedPoly& operator*=(Complex s);
    friend MixedPoly operator+(MixedPoly a, const MixedPoly& b) { return a += b; }
    friend MixedPoly operator-(MixedPoly a, const MixedPoly& b) { return a -= b; }
    friend MixedPoly operator*(Complex s, MixedPoly a) { return a *= s; }
    friend MixedPoly operator*(const MixedPoly& a, const MixedPoly& b);
    friend bool operator==(const MixedPoly& a, const MixedPoly& b) = default;

private:
    int dim_;
    Terms terms_;
};

} // namespace bergman

#pragma once

#include <cstddef>
#include <initializer_list>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace bergman {

// Exponent tuple m = (m_1, ..., m_d) of a monomial z^m.
class MultiIndex {
public:
    MultiIndex() = default;
    explicit MultiIndex(int dim) : entries_(static_cast<std::size_t>(dim), 0) {}
    MultiIndex(std::initializer_list<int> entries) : entries_(entries) {}
    explicit MultiIndex(std::vector<int> entries) : entries_(std::move(entries)) {}

    static MultiIndex unit(int dim, int j);

    int dim() const { return static_cast<int>(entries_.size()); }
    int operator[](int j) const { return entries_[static_cast<std::size_t>(j)]; }
    int& operator[](int j) { return entries_[static_cast<std::size_t>(j)]; }
    const std::vector<int>& entries() const { return entries_; }

    // |m|
    int degree() const;
    // m! as a double, by the product recurrence.
    double factorial() const;

    // Same exponents padded with zeros to dimension `dim`.
    MultiIndex extended(int dim) const;

    MultiIndex& operator+=(const MultiIndex& other);
    friend MultiIndex operator+(MultiIndex a, const MultiIndex& b) { return a += b; }
    friend bool operator==(const MultiIndex& a, const MultiIndex& b) = default;

    std::string to_string() const;

private:
    std::vector<int> entries_;
};

// Graded lexicographic order: total degree first, then larger leading exponent
// first, so that (1,0) precedes (0,1).
struct GradedLexLess {
    bool operator()(const MultiIndex& a, const MultiIndex& b) const;
};

// Multi-indices with |m| <= max_degree, graded lexicographic.
// Length is binomial(max_degree + d, d).
std::vector<MultiIndex> enumerate_basis(int dim, int max_degree);

// Multi-indices with |m| == degree, in the same order.
std::vector<MultiIndex> enumerate_shell(int dim, int degree);

double binomial(int n, int k);

// Enumerated basis plus a reverse index. Degree truncation is a prefix.
class MonomialBasis {
public:
    MonomialBasis(int dim, int max_degree);

    int dim() const { return dim_; }
    int max_degree() const { return max_degree_; }
    std::size_t size() const { return elements_.size(); }
    const MultiIndex& operator[](std::size_t i) const { return elements_[i]; }
    const std::vector<MultiIndex>& elements() const { return elements_; }

    std::optional<std::size_t> find(const MultiIndex& m) const;

    // Number of basis elements of degree <= k.
    std::size_t prefix_size(int k) const;

private:
    int dim_;
    int max_degree_;
    std::vector<MultiIndex> elements_;
    std::map<MultiIndex, std::size_t, GradedLexLess> index_;
};

} // namespace bergman

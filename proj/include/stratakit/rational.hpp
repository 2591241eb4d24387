#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace stratakit {

using Rational = mpq_class;
using Integer = mpz_class;
using QVector = std::vector<Rational>;

/// Parses an integer or a "p/q" string into a canonical rational.
/// Throws Error(ParseError) on malformed input or a zero denominator.
Rational parse_rational(std::string_view text);

std::string to_string(const Rational& q);

Rational dot(std::span<const Rational> a, std::span<const Rational> b);
Rational norm_squared(std::span<const Rational> v);
bool is_zero(std::span<const Rational> v);

QVector operator+(const QVector& a, const QVector& b);
QVector operator-(const QVector& a, const QVector& b);
QVector operator*(const Rational& s, const QVector& v);

std::vector<double> to_double(std::span<const Rational> v);

/// Exact conversion; every finite double is a dyadic rational.
QVector from_double(std::span<const double> v);

/// Dense row-major rational matrix.
class QMatrix {
public:
    QMatrix() = default;
    QMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    static QMatrix identity(std::size_t n);
    static QMatrix block_diagonal(const QMatrix& a, const QMatrix& b);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    QMatrix transpose() const;
    QMatrix operator*(const QMatrix& other) const;
    QVector operator*(std::span<const Rational> v) const;
    QMatrix operator-(const QMatrix& other) const;

    bool operator==(const QMatrix& other) const;
    bool is_orthogonal() const;

    std::vector<double> apply(std::span<const double> v) const;

    /// Stable textual key, used for hashing group elements.
    std::string key() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> data_;
};

/// A linear subspace of Q^n held by a pairwise-orthogonal (not normalised) basis.
class Subspace {
public:
    Subspace() = default;
    explicit Subspace(std::size_t ambient) : ambient_(ambient) {}

    static Subspace whole(std::size_t n);
    static Subspace span(std::size_t n, const std::vector<QVector>& vectors);
    /// {x : A x = 0}
    static Subspace kernel(const QMatrix& a);

    std::size_t ambient() const noexcept { return ambient_; }
    std::size_t dim() const noexcept { return basis_.size(); }
    bool empty() const noexcept { return basis_.empty(); }
    const std::vector<QVector>& basis() const noexcept { return basis_; }

    Subspace orthogonal_complement() const;
    Subspace intersect(const Subspace& other) const;
    /// Orthogonal complement of *this inside `ambient_space` (assumes *this is contained in it).
    Subspace complement_within(const Subspace& ambient_space) const;

    bool contains(std::span<const Rational> v) const;
    bool contains(const Subspace& other) const;
    QVector project(std::span<const Rational> v) const;

    /// Sum of coeffs[i] * basis[i].
    QVector combine(std::span<const Rational> coeffs) const;

    bool operator==(const Subspace& other) const;

private:
    std::size_t ambient_ = 0;
    std::vector<QVector> basis_;
};

/// Rank of a family of vectors by exact elimination.
std::size_t rank(const std::vector<QVector>& vectors);

} // namespace stratakit

#include "stratakit/rational.hpp"

#include "stratakit/errors.hpp"

#include <cctype>
#include <cmath>
#include <sstream>

namespace stratakit {

namespace {

bool is_integer_text(std::string_view s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

std::string strip_plus(std::string_view s) {
    if (!s.empty() && s[0] == '+') s.remove_prefix(1);
    return std::string(s);
}

// Gaussian elimination to reduced row echelon form; returns pivot columns.
std::vector<std::size_t> row_reduce(std::vector<QVector>& rows, std::size_t cols) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
        std::size_t p = r;
        while (p < rows.size() && sgn(rows[p][c]) == 0) ++p;
        if (p == rows.size()) continue;
        std::swap(rows[r], rows[p]);
        const Rational inv = 1 / rows[r][c];
        for (auto& x : rows[r]) x *= inv;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == r || sgn(rows[i][c]) == 0) continue;
            const Rational f = rows[i][c];
            for (std::size_t j = c; j < cols; ++j) rows[i][j] -= f * rows[r][j];
        }
        pivots.push_back(c);
        ++r;
    }
    rows.resize(r);
    return pivots;
}

std::vector<QVector> gram_schmidt(const std::vector<QVector>& vectors) {
    std::vector<QVector> out;
    std::vector<Rational> norms;
    for (const auto& v : vectors) {
        QVector w = v;
        for (std::size_t i = 0; i < out.size(); ++i) {
            const Rational c = dot(w, out[i]) / norms[i];
            if (sgn(c) == 0) continue;
            for (std::size_t j = 0; j < w.size(); ++j) w[j] -= c * out[i][j];
        }
        if (is_zero(w)) continue;
        // Clear denominators to keep entries small.
        Integer l = 1;
        for (const auto& x : w) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
        Integer g = 0;
        for (auto& x : w) {
            x *= l;
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_num_mpz_t());
        }
        if (g > 1)
            for (auto& x : w) x /= g;
        norms.push_back(norm_squared(w));
        out.push_back(std::move(w));
    }
    return out;
}

} // namespace

Rational parse_rational(std::string_view text) {
    auto slash = text.find('/');
    try {
        if (slash == std::string_view::npos) {
            if (!is_integer_text(text)) fail(ErrorKind::ParseError, "not a rational: '" + std::string(text) + "'");
            return Rational(Integer(strip_plus(text)));
        }
        auto num = text.substr(0, slash);
        auto den = text.substr(slash + 1);
        if (!is_integer_text(num) || !is_integer_text(den))
            fail(ErrorKind::ParseError, "not a rational: '" + std::string(text) + "'");
        Integer d(strip_plus(den));
        if (d == 0) fail(ErrorKind::ParseError, "zero denominator in '" + std::string(text) + "'");
        Rational q(Integer(strip_plus(num)), d);
        q.canonicalize();
        return q;
    } catch (const std::invalid_argument&) {
        fail(ErrorKind::ParseError, "not a rational: '" + std::string(text) + "'");
    }
}

std::string to_string(const Rational& q) { return q.get_str(); }

Rational dot(std::span<const Rational> a, std::span<const Rational> b) {
    Rational s = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (sgn(a[i]) != 0 && sgn(b[i]) != 0) s += a[i] * b[i];
    return s;
}

Rational norm_squared(std::span<const Rational> v) { return dot(v, v); }

bool is_zero(std::span<const Rational> v) {
    for (const auto& x : v)
        if (sgn(x) != 0) return false;
    return true;
}

QVector operator+(const QVector& a, const QVector& b) {
    QVector r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

QVector operator-(const QVector& a, const QVector& b) {
    QVector r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

QVector operator*(const Rational& s, const QVector& v) {
    QVector r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) r[i] = s * v[i];
    return r;
}

std::vector<double> to_double(std::span<const Rational> v) {
    std::vector<double> out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i].get_d();
    return out;
}

QVector from_double(std::span<const double> v) {
    QVector out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (!std::isfinite(v[i])) fail(ErrorKind::DimensionMismatch, "non-finite coordinate");
        out[i] = Rational(v[i]);
    }
    return out;
}

// ---------------------------------------------------------------- QMatrix

QMatrix QMatrix::identity(std::size_t n) {
    QMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

QMatrix QMatrix::block_diagonal(const QMatrix& a, const QMatrix& b) {
    QMatrix m(a.rows() + b.rows(), a.cols() + b.cols());
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t c = 0; c < a.cols(); ++c) m(r, c) = a(r, c);
    for (std::size_t r = 0; r < b.rows(); ++r)
        for (std::size_t c = 0; c < b.cols(); ++c) m(a.rows() + r, a.cols() + c) = b(r, c);
    return m;
}

QMatrix QMatrix::transpose() const {
    QMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
}

QMatrix QMatrix::operator*(const QMatrix& other) const {
    QMatrix p(rows_, other.cols_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Rational& a = (*this)(r, k);
            if (sgn(a) == 0) continue;
            for (std::size_t c = 0; c < other.cols_; ++c) {
                const Rational& b = other(k, c);
                if (sgn(b) != 0) p(r, c) += a * b;
            }
        }
    return p;
}

QVector QMatrix::operator*(std::span<const Rational> v) const {
    if (v.size() != cols_) fail(ErrorKind::DimensionMismatch, "matrix-vector size mismatch");
    QVector out(rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) {
            const Rational& a = (*this)(r, c);
            if (sgn(a) != 0 && sgn(v[c]) != 0) out[r] += a * v[c];
        }
    return out;
}

QMatrix QMatrix::operator-(const QMatrix& other) const {
    QMatrix d(rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i) d.data_[i] = data_[i] - other.data_[i];
    return d;
}

bool QMatrix::operator==(const QMatrix& other) const {
    return rows_ == other.rows_ && cols_ == other.cols_ && data_ == other.data_;
}

bool QMatrix::is_orthogonal() const {
    return rows_ == cols_ && transpose() * (*this) == identity(rows_);
}

std::vector<double> QMatrix::apply(std::span<const double> v) const {
    if (v.size() != cols_) fail(ErrorKind::DimensionMismatch, "matrix-vector size mismatch");
    std::vector<double> out(rows_, 0.0);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) {
            const Rational& a = (*this)(r, c);
            if (sgn(a) != 0) out[r] += a.get_d() * v[c];
        }
    return out;
}

std::string QMatrix::key() const {
    std::string s;
    for (const auto& x : data_) {
        s += x.get_str();
        s += ',';
    }
    return s;
}

// ---------------------------------------------------------------- Subspace

Subspace Subspace::whole(std::size_t n) {
    Subspace s(n);
    for (std::size_t i = 0; i < n; ++i) {
        QVector e(n);
        e[i] = 1;
        s.basis_.push_back(std::move(e));
    }
    return s;
}

Subspace Subspace::span(std::size_t n, const std::vector<QVector>& vectors) {
    Subspace s(n);
    for (const auto& v : vectors)
        if (v.size() != n) fail(ErrorKind::DimensionMismatch, "span: vector length differs from ambient dimension");
    s.basis_ = gram_schmidt(vectors);
    return s;
}

Subspace Subspace::kernel(const QMatrix& a) {
    const std::size_t n = a.cols();
    std::vector<QVector> rows;
    for (std::size_t r = 0; r < a.rows(); ++r) {
        QVector row(n);
        for (std::size_t c = 0; c < n; ++c) row[c] = a(r, c);
        rows.push_back(std::move(row));
    }
    auto pivots = row_reduce(rows, n);
    std::vector<bool> is_pivot(n, false);
    for (auto p : pivots) is_pivot[p] = true;
    std::vector<QVector> kernel_vectors;
    for (std::size_t free = 0; free < n; ++free) {
        if (is_pivot[free]) continue;
        QVector v(n);
        v[free] = 1;
        for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -rows[i][free];
        kernel_vectors.push_back(std::move(v));
    }
    return span(n, kernel_vectors);
}

Subspace Subspace::orthogonal_complement() const {
    QMatrix a(basis_.size(), ambient_);
    for (std::size_t r = 0; r < basis_.size(); ++r)
        for (std::size_t c = 0; c < ambient_; ++c) a(r, c) = basis_[r][c];
    if (basis_.empty()) return whole(ambient_);
    return kernel(a);
}

Subspace Subspace::intersect(const Subspace& other) const {
    auto a = orthogonal_complement();
    auto b = other.orthogonal_complement();
    std::vector<QVector> rows = a.basis_;
    rows.insert(rows.end(), b.basis_.begin(), b.basis_.end());
    if (rows.empty()) return whole(ambient_);
    QMatrix m(rows.size(), ambient_);
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (std::size_t c = 0; c < ambient_; ++c) m(r, c) = rows[r][c];
    return kernel(m);
}

Subspace Subspace::complement_within(const Subspace& ambient_space) const {
    return orthogonal_complement().intersect(ambient_space);
}

bool Subspace::contains(std::span<const Rational> v) const {
    QVector residual(v.begin(), v.end());
    for (const auto& b : basis_) {
        const Rational c = dot(residual, b) / norm_squared(b);
        if (sgn(c) == 0) continue;
        for (std::size_t j = 0; j < residual.size(); ++j) residual[j] -= c * b[j];
    }
    return is_zero(residual);
}

bool Subspace::contains(const Subspace& other) const {
    for (const auto& v : other.basis_)
        if (!contains(v)) return false;
    return true;
}

QVector Subspace::project(std::span<const Rational> v) const {
    QVector out(ambient_);
    for (const auto& b : basis_) {
        const Rational c = dot(v, b) / norm_squared(b);
        if (sgn(c) == 0) continue;
        for (std::size_t j = 0; j < ambient_; ++j) out[j] += c * b[j];
    }
    return out;
}

QVector Subspace::combine(std::span<const Rational> coeffs) const {
    QVector out(ambient_);
    for (std::size_t i = 0; i < basis_.size(); ++i) {
        if (sgn(coeffs[i]) == 0) continue;
        for (std::size_t j = 0; j < ambient_; ++j) out[j] += coeffs[i] * basis_[i][j];
    }
    return out;
}

bool Subspace::operator==(const Subspace& other) const {
    return ambient_ == other.ambient_ && dim() == other.dim() && contains(other);
}

std::size_t rank(const std::vector<QVector>& vectors) {
    if (vectors.empty()) return 0;
    auto rows = vectors;
    return row_reduce(rows, rows.front().size()).size();
}

} // namespace stratakit

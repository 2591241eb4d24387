#include "stratakit/integer_lattice.hpp"

#include <algorithm>

namespace stratakit {

namespace {

// Floor division for mpz (q = floor(a / b), b > 0).
Integer floor_div(const Integer& a, const Integer& b) {
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

void axpy_row(IntVector& target, const Integer& factor, const IntVector& source) {
    if (factor == 0) return;
    for (std::size_t j = 0; j < target.size(); ++j) target[j] -= factor * source[j];
}

bool row_is_zero(const IntVector& row) {
    return std::all_of(row.begin(), row.end(), [](const Integer& x) { return x == 0; });
}

// Echelon form by integer row operations. `companion`, if non-null, receives
// the same operations (used for tracking relations).
std::size_t integer_echelon(std::vector<IntVector>& rows, std::size_t width, std::vector<IntVector>* companion) {
    std::size_t r = 0;
    for (std::size_t c = 0; c < width && r < rows.size(); ++c) {
        // Euclid on column c among rows r..end.
        while (true) {
            std::size_t best = rows.size();
            for (std::size_t i = r; i < rows.size(); ++i) {
                if (rows[i][c] == 0) continue;
                if (best == rows.size() || abs(rows[i][c]) < abs(rows[best][c])) best = i;
            }
            if (best == rows.size()) break;
            std::swap(rows[r], rows[best]);
            if (companion) std::swap((*companion)[r], (*companion)[best]);
            bool done = true;
            for (std::size_t i = r + 1; i < rows.size(); ++i) {
                if (rows[i][c] == 0) continue;
                Integer q;
                mpz_tdiv_q(q.get_mpz_t(), rows[i][c].get_mpz_t(), rows[r][c].get_mpz_t());
                axpy_row(rows[i], q, rows[r]);
                if (companion) axpy_row((*companion)[i], q, (*companion)[r]);
                if (rows[i][c] != 0) done = false;
            }
            if (done) break;
        }
        if (rows[r][c] == 0) continue;
        if (rows[r][c] < 0) {
            for (auto& x : rows[r]) x = -x;
            if (companion)
                for (auto& x : (*companion)[r]) x = -x;
        }
        // Reduce entries above the pivot into [0, pivot).
        for (std::size_t i = 0; i < r; ++i) {
            Integer q = floor_div(rows[i][c], rows[r][c]);
            axpy_row(rows[i], q, rows[r]);
            if (companion) axpy_row((*companion)[i], q, (*companion)[r]);
        }
        ++r;
    }
    return r;
}

} // namespace

std::vector<IntVector> hermite_normal_form(std::vector<IntVector> rows, std::size_t width) {
    for (auto& row : rows) row.resize(width);
    const std::size_t r = integer_echelon(rows, width, nullptr);
    rows.resize(r);
    std::erase_if(rows, row_is_zero);
    return rows;
}

std::vector<Integer> smith_invariants(std::vector<IntVector> rows, std::size_t width) {
    auto m = hermite_normal_form(std::move(rows), width);
    // Alternate row and column reductions until diagonal.
    const std::size_t nr = m.size();
    for (std::size_t t = 0; t < nr; ++t) {
        while (true) {
            // Move the smallest nonzero entry of the trailing block to (t, t).
            std::size_t bi = nr, bj = width;
            for (std::size_t i = t; i < nr; ++i)
                for (std::size_t j = t; j < width; ++j)
                    if (m[i][j] != 0 && (bi == nr || abs(m[i][j]) < abs(m[bi][bj]))) {
                        bi = i;
                        bj = j;
                    }
            if (bi == nr) break;
            std::swap(m[t], m[bi]);
            for (auto& row : m) std::swap(row[t], row[bj]);
            bool clean = true;
            for (std::size_t i = t + 1; i < nr; ++i) {
                Integer q;
                mpz_tdiv_q(q.get_mpz_t(), m[i][t].get_mpz_t(), m[t][t].get_mpz_t());
                axpy_row(m[i], q, m[t]);
                if (m[i][t] != 0) clean = false;
            }
            for (std::size_t j = t + 1; j < width; ++j) {
                Integer q;
                mpz_tdiv_q(q.get_mpz_t(), m[t][j].get_mpz_t(), m[t][t].get_mpz_t());
                if (q != 0)
                    for (auto& row : m) row[j] -= q * row[t];
                if (m[t][j] != 0) clean = false;
            }
            if (!clean) continue;
            // Divisibility: pivot must divide the whole trailing block.
            bool divides = true;
            for (std::size_t i = t + 1; i < nr && divides; ++i)
                for (std::size_t j = t + 1; j < width; ++j)
                    if (!mpz_divisible_p(m[i][j].get_mpz_t(), m[t][t].get_mpz_t())) {
                        for (std::size_t jj = 0; jj < width; ++jj) m[t][jj] += m[i][jj];
                        divides = false;
                        break;
                    }
            if (divides) break;
        }
    }
    std::vector<Integer> diag;
    for (std::size_t t = 0; t < nr; ++t)
        if (m[t][t] != 0) diag.push_back(abs(m[t][t]));
    std::sort(diag.begin(), diag.end());
    return diag;
}

bool lattice_contains(const std::vector<IntVector>& hnf, const IntVector& v) {
    IntVector residual = v;
    for (const auto& row : hnf) {
        auto pivot = std::find_if(row.begin(), row.end(), [](const Integer& x) { return x != 0; });
        const auto c = static_cast<std::size_t>(pivot - row.begin());
        // Entries left of the pivot must already be zero.
        for (std::size_t j = 0; j < c; ++j)
            if (residual[j] != 0) return false;
        if (!mpz_divisible_p(residual[c].get_mpz_t(), row[c].get_mpz_t())) return false;
        Integer q;
        mpz_divexact(q.get_mpz_t(), residual[c].get_mpz_t(), row[c].get_mpz_t());
        axpy_row(residual, q, row);
    }
    return row_is_zero(residual);
}

std::vector<IntVector> integer_relations(const std::vector<IntVector>& rows, std::size_t width) {
    auto work = rows;
    for (auto& row : work) row.resize(width);
    std::vector<IntVector> tracker(rows.size(), IntVector(rows.size()));
    for (std::size_t i = 0; i < rows.size(); ++i) tracker[i][i] = 1;
    const std::size_t r = integer_echelon(work, width, &tracker);
    std::vector<IntVector> relations;
    for (std::size_t i = r; i < work.size(); ++i) relations.push_back(tracker[i]);
    return relations;
}

bool lexicographic_less(const std::vector<IntVector>& a, const std::vector<IntVector>& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(), [](const IntVector& x, const IntVector& y) {
        return std::lexicographical_compare(x.begin(), x.end(), y.begin(), y.end(),
                                            [](const Integer& p, const Integer& q) { return p < q; });
    });
}

} // namespace stratakit

#include "mfk/linalg.hpp"

#include "mfk/errors.hpp"

#include <cstdint>

namespace mfk {

int generic_rank(const Matrix& m) {
    size_t rows = m.size();
    if (rows == 0) return 0;
    size_t cols = m[0].size();

    // clear denominators row by row; scaling by nonzero functions keeps rank
    std::vector<std::vector<Poly>> a(rows, std::vector<Poly>(cols));
    for (size_t i = 0; i < rows; ++i) {
        if (m[i].size() != cols) throw Error("generic_rank: ragged matrix");
        Poly scale = Poly::constant(1);
        for (size_t j = 0; j < cols; ++j)
            if (!m[i][j].den().is_one()) scale = scale * m[i][j].den();
        for (size_t j = 0; j < cols; ++j) {
            Poly d = m[i][j].den().is_one() ? scale : Poly::divexact(scale, m[i][j].den());
            a[i][j] = m[i][j].num() * d;
        }
    }

    // Bareiss fraction-free elimination with full pivoting
    Poly prev = Poly::constant(1);
    int rank = 0;
    size_t pr = 0;
    std::vector<bool> used_col(cols, false);
    while (pr < rows) {
        // sparsest available pivot, to limit fill-in
        size_t pi = rows, pj = cols;
        size_t best = SIZE_MAX;
        for (size_t i = pr; i < rows; ++i)
            for (size_t j = 0; j < cols; ++j)
                if (!used_col[j] && !a[i][j].is_zero() && a[i][j].term_count() < best) {
                    best = a[i][j].term_count();
                    pi = i;
                    pj = j;
                }
        if (pi == rows) break;
        std::swap(a[pr], a[pi]);
        used_col[pj] = true;
        for (size_t i = pr + 1; i < rows; ++i) {
            for (size_t j = 0; j < cols; ++j) {
                if (j == pj) continue;
                a[i][j] = Poly::divexact(a[i][j] * a[pr][pj] - a[i][pj] * a[pr][j], prev);
            }
            a[i][pj] = Poly{};
        }
        prev = a[pr][pj];
        ++rank;
        ++pr;
    }
    return rank;
}

Matrix identity_matrix(int n) {
    Matrix r(static_cast<size_t>(n), std::vector<RatExpr>(static_cast<size_t>(n)));
    for (int i = 0; i < n; ++i) r[size_t(i)][size_t(i)] = RatExpr::constant(1);
    return r;
}

Matrix matrix_mul(const Matrix& a, const Matrix& b) {
    size_t n = a.size(), k = b.size(), p = b.empty() ? 0 : b[0].size();
    Matrix r(n, std::vector<RatExpr>(p));
    for (size_t i = 0; i < n; ++i) {
        if (a[i].size() != k) throw Error("matrix_mul: shape mismatch");
        for (size_t j = 0; j < p; ++j) {
            RatExpr s;
            for (size_t t = 0; t < k; ++t) s += a[i][t] * b[t][j];
            r[i][j] = s;
        }
    }
    return r;
}

Matrix matrix_inverse(const Matrix& m) {
    size_t n = m.size();
    for (auto& row : m)
        if (row.size() != n) throw Error("matrix_inverse: not square");
    Matrix a = m;
    Matrix inv = identity_matrix(static_cast<int>(n));
    for (size_t col = 0; col < n; ++col) {
        size_t piv = n;
        for (size_t i = col; i < n; ++i)
            if (!a[i][col].is_zero()) {
                piv = i;
                break;
            }
        if (piv == n) throw SingularMatrix("matrix_inverse: column " + std::to_string(col + 1) + " has no pivot");
        std::swap(a[piv], a[col]);
        std::swap(inv[piv], inv[col]);
        RatExpr p = a[col][col];
        for (size_t j = 0; j < n; ++j) {
            a[col][j] = a[col][j] / p;
            inv[col][j] = inv[col][j] / p;
        }
        for (size_t i = 0; i < n; ++i) {
            if (i == col || a[i][col].is_zero()) continue;
            RatExpr f = a[i][col];
            for (size_t j = 0; j < n; ++j) {
                a[i][j] -= f * a[col][j];
                inv[i][j] -= f * inv[col][j];
            }
        }
    }
    return inv;
}

} // namespace mfk

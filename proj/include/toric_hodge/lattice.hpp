// Integer linear algebra: Smith normal form, ranks, kernels and the
// saturated-lattice reduction of a family of support sets.
#pragma once

#include "toric_hodge/core.hpp"

#include <algorithm>
#include <utility>

namespace toric {

/// Finite set of lattice points; kept sorted and duplicate-free.
using SupportSet = std::vector<IntVector>;

inline SupportSet canonical(SupportSet s) {
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    return s;
}

inline IntMatrix identity_matrix(std::size_t n) {
    IntMatrix m(n, IntVector(n, Int(0)));
    for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

inline IntMatrix multiply(const IntMatrix& a, const IntMatrix& b) {
    if (a.empty()) return {};
    std::size_t inner = b.size();
    std::size_t cols = inner ? b[0].size() : 0;
    IntMatrix out(a.size(), IntVector(cols, Int(0)));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t k = 0; k < inner; ++k) {
            if (a[i][k] == 0) continue;
            for (std::size_t j = 0; j < cols; ++j) out[i][j] += a[i][k] * b[k][j];
        }
    return out;
}

inline IntVector apply(const IntMatrix& a, const IntVector& v) {
    IntVector out(a.size(), Int(0));
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = dot(a[i], v);
    return out;
}

inline IntMatrix transpose(const IntMatrix& a, std::size_t cols_if_empty = 0) {
    std::size_t rows = a.size();
    std::size_t cols = rows ? a[0].size() : cols_if_empty;
    IntMatrix t(cols, IntVector(rows));
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) t[j][i] = a[i][j];
    return t;
}

struct SmithDecomposition {
    IntMatrix left;    // rows x rows, unimodular
    IntVector diag;    // min(rows, cols) entries, nonnegative, d_i | d_{i+1}
    IntMatrix right;   // cols x cols, unimodular

    std::size_t rank() const {
        std::size_t r = 0;
        for (const auto& d : diag)
            if (d != 0) ++r;
        return r;
    }
};

/// left * mat * right == diagonal(diag). `cols` is only consulted when `mat`
/// has no rows.
inline SmithDecomposition smith_normal_form(const IntMatrix& mat, std::size_t cols = 0) {
    const std::size_t m = mat.size();
    const std::size_t n = m ? mat[0].size() : cols;
    IntMatrix d = mat;
    IntMatrix left = identity_matrix(m);
    IntMatrix right = identity_matrix(n);

    auto swap_rows = [&](std::size_t a, std::size_t b) {
        if (a == b) return;
        std::swap(d[a], d[b]);
        std::swap(left[a], left[b]);
    };
    auto swap_cols = [&](std::size_t a, std::size_t b) {
        if (a == b) return;
        for (auto& row : d) std::swap(row[a], row[b]);
        for (auto& row : right) std::swap(row[a], row[b]);
    };
    // row_i -= q * row_t
    auto row_op = [&](std::size_t i, std::size_t t, const Int& q) {
        for (std::size_t j = 0; j < n; ++j) d[i][j] -= q * d[t][j];
        for (std::size_t j = 0; j < m; ++j) left[i][j] -= q * left[t][j];
    };
    // col_j -= q * col_t
    auto col_op = [&](std::size_t j, std::size_t t, const Int& q) {
        for (std::size_t i = 0; i < m; ++i) d[i][j] -= q * d[i][t];
        for (std::size_t i = 0; i < n; ++i) right[i][j] -= q * right[i][t];
    };

    const std::size_t steps = std::min(m, n);
    for (std::size_t t = 0; t < steps; ++t) {
        for (;;) {
            // smallest nonzero entry of the trailing block, first in row-major order
            std::size_t pi = m, pj = n;
            Int best = 0;
            for (std::size_t i = t; i < m; ++i)
                for (std::size_t j = t; j < n; ++j)
                    if (d[i][j] != 0 && (best == 0 || abs(d[i][j]) < best)) {
                        best = abs(d[i][j]);
                        pi = i;
                        pj = j;
                    }
            if (pi == m) break;  // trailing block is zero
            swap_rows(t, pi);
            swap_cols(t, pj);

            bool clean = true;
            for (std::size_t i = t + 1; i < m; ++i) {
                if (d[i][t] == 0) continue;
                Int q = d[i][t] / d[t][t];
                row_op(i, t, q);
                if (d[i][t] != 0) clean = false;
            }
            for (std::size_t j = t + 1; j < n; ++j) {
                if (d[t][j] == 0) continue;
                Int q = d[t][j] / d[t][t];
                col_op(j, t, q);
                if (d[t][j] != 0) clean = false;
            }
            if (!clean) continue;

            bool divisible = true;
            for (std::size_t i = t + 1; i < m && divisible; ++i)
                for (std::size_t j = t + 1; j < n; ++j)
                    if (d[i][j] % d[t][t] != 0) {
                        // fold row i into row t and retry
                        row_op(t, i, Int(-1));
                        divisible = false;
                        break;
                    }
            if (divisible) break;
        }
        if (d[t][t] < 0) {
            for (auto& x : d[t]) x = -x;
            for (auto& x : left[t]) x = -x;
        }
    }

    SmithDecomposition out;
    out.diag.resize(steps);
    for (std::size_t t = 0; t < steps; ++t) out.diag[t] = d[t][t];
    out.left = std::move(left);
    out.right = std::move(right);
    return out;
}

/// Rank over Q.
inline std::size_t rank(const IntMatrix& mat) {
    if (mat.empty()) return 0;
    std::vector<RationalVector> a;
    a.reserve(mat.size());
    for (const auto& row : mat) a.emplace_back(row.begin(), row.end());
    const std::size_t rows = a.size(), cols = a[0].size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && a[p][c] == 0) ++p;
        if (p == rows) continue;
        std::swap(a[p], a[r]);
        for (std::size_t i = r + 1; i < rows; ++i) {
            if (a[i][c] == 0) continue;
            Rational f = a[i][c] / a[r][c];
            for (std::size_t j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
        }
        ++r;
    }
    return r;
}

/// Z-basis of {x in Z^cols : mat * x = 0}.
inline std::vector<IntVector> kernel_basis(const IntMatrix& mat, std::size_t cols) {
    SmithDecomposition snf = smith_normal_form(mat, cols);
    std::size_t r = snf.rank();
    std::vector<IntVector> basis;
    for (std::size_t j = r; j < cols; ++j) {
        IntVector v(cols);
        for (std::size_t i = 0; i < cols; ++i) v[i] = snf.right[i][j];
        basis.push_back(std::move(v));
    }
    return basis;
}

/// Inverse of a square integer matrix with determinant +-1.
inline IntMatrix unimodular_inverse(const IntMatrix& mat) {
    const std::size_t n = mat.size();
    std::vector<RationalVector> a(n, RationalVector(2 * n, Rational(0)));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) a[i][j] = Rational(mat[i][j]);
        a[i][n + i] = 1;
    }
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && a[p][c] == 0) ++p;
        if (p == n) throw PreconditionError("unimodular_inverse: singular matrix");
        std::swap(a[p], a[c]);
        Rational inv = 1 / a[c][c];
        for (auto& x : a[c]) x *= inv;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == c || a[i][c] == 0) continue;
            Rational f = a[i][c];
            for (std::size_t j = 0; j < 2 * n; ++j) a[i][j] -= f * a[c][j];
        }
    }
    IntMatrix out(n, IntVector(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const Rational& x = a[i][n + j];
            if (boost::multiprecision::denominator(x) != 1)
                throw PreconditionError("unimodular_inverse: matrix is not unimodular");
            out[i][j] = boost::multiprecision::numerator(x);
        }
    return out;
}

struct LatticeReduction {
    std::size_t rank = 0;
    std::vector<SupportSet> supports;  // points in Z^rank
};

/// Translates every support to start at its lexicographically smallest
/// point and rewrites all of them in a basis of the saturation of the
/// lattice spanned by the translated points. The identity basis is kept when
/// that saturation is the whole lattice, and every reduced support is again
/// translated to start at the origin, so reducing twice changes nothing.
inline LatticeReduction affine_lattice_reduction(const std::vector<SupportSet>& supports) {
    std::vector<SupportSet> translated;
    translated.reserve(supports.size());
    IntMatrix columns;  // each nonzero translated point, as a row
    std::size_t ambient = 0;
    for (const auto& raw : supports) {
        if (raw.empty()) throw PreconditionError("affine_lattice_reduction: empty support");
        SupportSet s = canonical(raw);
        ambient = s.front().size();
        const IntVector base = s.front();
        for (auto& q : s) {
            q = sub(q, base);
            if (!is_zero(q)) columns.push_back(q);
        }
        translated.push_back(std::move(s));
    }
    LatticeReduction out;
    if (columns.empty()) {
        for (std::size_t i = 0; i < translated.size(); ++i)
            out.supports.push_back(SupportSet{IntVector{}});
        return out;
    }
    SmithDecomposition snf = smith_normal_form(transpose(columns));
    out.rank = snf.rank();
    const IntMatrix basis_change =
        out.rank == ambient ? identity_matrix(ambient) : snf.left;
    for (const auto& s : translated) {
        SupportSet reduced;
        for (const auto& q : s) {
            IntVector c = apply(basis_change, q);
            c.resize(out.rank);
            reduced.push_back(std::move(c));
        }
        reduced = canonical(std::move(reduced));
        const IntVector base = reduced.front();
        for (auto& q : reduced) q = sub(q, base);
        out.supports.push_back(std::move(reduced));
    }
    return out;
}

}  // namespace toric

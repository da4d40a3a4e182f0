// Exact double description method: extreme rays of a pointed polyhedral
// cone {y : A y >= 0}.
#pragma once

#include "toric_hodge/lattice.hpp"

#include <boost/dynamic_bitset.hpp>

namespace toric {

namespace detail {

inline IntVector primitive_or_zero(IntVector v) {
    Int g = content(v);
    if (g > 1)
        for (auto& x : v) x /= g;
    return v;
}

/// Columns of the inverse of a square nonsingular rational matrix, each
/// scaled to a primitive integer vector.
inline std::vector<IntVector> inverse_columns(const IntMatrix& b) {
    const std::size_t n = b.size();
    std::vector<RationalVector> a(n, RationalVector(2 * n, Rational(0)));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) a[i][j] = Rational(b[i][j]);
        a[i][n + i] = 1;
    }
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (a[p][c] == 0) ++p;
        std::swap(a[p], a[c]);
        Rational inv = 1 / a[c][c];
        for (auto& x : a[c]) x *= inv;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == c || a[i][c] == 0) continue;
            Rational f = a[i][c];
            for (std::size_t j = 0; j < 2 * n; ++j) a[i][j] -= f * a[c][j];
        }
    }
    std::vector<IntVector> cols;
    for (std::size_t j = 0; j < n; ++j) {
        Int l = 1;
        for (std::size_t i = 0; i < n; ++i)
            l = boost::multiprecision::lcm(l, Int(boost::multiprecision::denominator(a[i][n + j])));
        IntVector v(n);
        for (std::size_t i = 0; i < n; ++i) {
            Rational x = a[i][n + j] * Rational(l);
            v[i] = boost::multiprecision::numerator(x);
        }
        cols.push_back(primitive_or_zero(std::move(v)));
    }
    return cols;
}

}  // namespace detail

/// Extreme rays (primitive integer vectors, sorted) of {y : A y >= 0}.
/// A must have full column rank `dim`, which makes the cone pointed; rows are
/// processed in the given order, so the output is deterministic.
inline std::vector<IntVector> extreme_rays(const IntMatrix& a, std::size_t dim) {
    using Bits = boost::dynamic_bitset<>;
    const std::size_t rows = a.size();
    if (dim == 0) return {};

    // greedy choice of dim independent rows
    std::vector<std::size_t> basis_rows;
    {
        IntMatrix chosen;
        for (std::size_t i = 0; i < rows && basis_rows.size() < dim; ++i) {
            chosen.push_back(a[i]);
            if (rank(chosen) == chosen.size())
                basis_rows.push_back(i);
            else
                chosen.pop_back();
        }
    }
    if (basis_rows.size() < dim)
        throw PreconditionError("extreme_rays: constraint matrix lacks full column rank");

    struct Ray {
        IntVector v;
        Bits zeros;
    };
    std::vector<Ray> rays;
    {
        IntMatrix b;
        for (auto i : basis_rows) b.push_back(a[i]);
        auto cols = detail::inverse_columns(b);
        for (std::size_t j = 0; j < dim; ++j) {
            Ray r{cols[j], Bits(rows)};
            for (std::size_t k = 0; k < dim; ++k)
                if (k != j) r.zeros.set(basis_rows[k]);
            rays.push_back(std::move(r));
        }
    }
    Bits processed(rows);
    for (auto i : basis_rows) processed.set(i);

    for (std::size_t row = 0; row < rows; ++row) {
        if (processed.test(row)) continue;
        processed.set(row);
        std::vector<Int> value(rays.size());
        std::vector<std::size_t> pos, neg;
        for (std::size_t k = 0; k < rays.size(); ++k) {
            value[k] = dot(a[row], rays[k].v);
            if (value[k] > 0)
                pos.push_back(k);
            else if (value[k] < 0)
                neg.push_back(k);
            else
                rays[k].zeros.set(row);
        }
        if (neg.empty()) continue;

        std::vector<Ray> next;
        for (std::size_t k = 0; k < rays.size(); ++k)
            if (value[k] >= 0) next.push_back(rays[k]);

        for (auto ip : pos)
            for (auto in : neg) {
                Bits common = rays[ip].zeros & rays[in].zeros;
                if (common.count() + 2 < dim) continue;
                bool adjacent = true;
                for (std::size_t t = 0; t < rays.size() && adjacent; ++t) {
                    if (t == ip || t == in) continue;
                    if (common.is_subset_of(rays[t].zeros)) adjacent = false;
                }
                if (!adjacent) continue;
                IntVector w(dim);
                for (std::size_t c = 0; c < dim; ++c)
                    w[c] = value[ip] * rays[in].v[c] - value[in] * rays[ip].v[c];
                Ray nr{detail::primitive_or_zero(std::move(w)), common};
                nr.zeros.set(row);
                next.push_back(std::move(nr));
            }
        rays = std::move(next);
    }

    std::vector<IntVector> out;
    out.reserve(rays.size());
    for (auto& r : rays) out.push_back(std::move(r.v));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

}  // namespace toric

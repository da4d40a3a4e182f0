// Fixture corpus and brute-force oracles shared by the unit tests and the
// acceptance runner. Nothing here calls into the counting code paths it is
// used to check.
#pragma once

#include "toric_hodge/toric_hodge.hpp"

#include <functional>
#include <random>

namespace toric::testing {

// ---------------------------------------------------------------------------
// fans

inline Fan make_fan(std::size_t dim, std::vector<std::vector<long>> rays, std::vector<Cone> cones) {
    Fan f;
    f.dim = dim;
    for (auto& r : rays) f.rays.push_back(to_int_vector(r));
    f.maximal_cones = std::move(cones);
    return f;
}

/// P^m: rays e_1..e_m and -(e_1+...+e_m); cones omit one ray each.
inline Fan projective_fan(std::size_t m) {
    std::vector<std::vector<long>> rays;
    for (std::size_t i = 0; i < m; ++i) {
        std::vector<long> e(m, 0);
        e[i] = 1;
        rays.push_back(e);
    }
    rays.push_back(std::vector<long>(m, -1));
    std::vector<Cone> cones;
    for (std::size_t skip = 0; skip <= m; ++skip) {
        Cone c;
        for (std::size_t j = 0; j <= m; ++j)
            if (j != skip) c.push_back(j);
        cones.push_back(c);
    }
    return make_fan(m, rays, cones);
}

inline Fan hirzebruch_fan(long a) {
    return make_fan(2, {{1, 0}, {0, 1}, {-1, a}, {0, -1}}, {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
}

inline Fan hexagon_fan() {
    return make_fan(2, {{1, 0}, {1, 1}, {0, 1}, {-1, 0}, {-1, -1}, {0, -1}},
                    {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {0, 5}});
}

/// P(1,1,2)
inline Fan p112_fan() { return make_fan(2, {{1, 0}, {0, 1}, {-1, -2}}, {{0, 1}, {1, 2}, {0, 2}}); }

/// P(1,4,2,3) with p_0 = (-4,-2,-3)
inline Fan p1423_fan() {
    return make_fan(3, {{-4, -2, -3}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}},
                    {{1, 2, 3}, {0, 2, 3}, {0, 1, 3}, {0, 1, 2}});
}

// ---------------------------------------------------------------------------
// supports

inline SupportSet support(std::vector<std::vector<long>> pts) {
    SupportSet s;
    for (auto& p : pts) s.push_back(to_int_vector(p));
    return s;
}

/// {0, d e_1, ..., d e_m}
inline SupportSet simplex_support(std::size_t m, long d) {
    SupportSet s{IntVector(m, Int(0))};
    for (std::size_t i = 0; i < m; ++i) {
        IntVector e(m, Int(0));
        e[i] = d;
        s.push_back(e);
    }
    return s;
}

/// Product of the vertex sets of simplices of the given sizes and degrees,
/// e.g. bidegree (a, b) on P^{m1} x P^{m2}.
inline SupportSet product_support(const std::vector<std::pair<std::size_t, long>>& factors) {
    SupportSet out{IntVector{}};
    for (const auto& [m, d] : factors) {
        SupportSet next;
        for (const auto& a : out)
            for (const auto& b : simplex_support(m, d)) {
                IntVector c = a;
                c.insert(c.end(), b.begin(), b.end());
                next.push_back(c);
            }
        out = std::move(next);
    }
    return out;
}

struct Fixture {
    std::string name;
    Fan fan;
    std::vector<SupportSet> supports;
    std::size_t m() const { return fan.dim; }
    std::size_t k() const { return supports.size(); }
};

/// Complete simplicial fans with supports, k in {0,1,2}, m in {1,2,3}.
inline std::vector<Fixture> corpus() {
    const Fan p1 = projective_fan(1), p2 = projective_fan(2), p3 = projective_fan(3);
    const Fan p1p1 = product_fan(p1, p1), p2p1 = product_fan(p2, p1), p1p1p1 = product_fan(p1p1, p1);
    std::vector<Fixture> out = {
        {"P1", p1, {}},
        {"P1_deg2", p1, {simplex_support(1, 2)}},
        {"P1_deg3", p1, {simplex_support(1, 3)}},
        {"P2", p2, {}},
        {"P2_line", p2, {simplex_support(2, 1)}},
        {"P2_conic", p2, {simplex_support(2, 2)}},
        {"P2_cubic", p2, {simplex_support(2, 3)}},
        {"P2_quartic", p2, {simplex_support(2, 4)}},
        {"P2_line_conic", p2, {simplex_support(2, 1), simplex_support(2, 2)}},
        {"P2_cubic_cubic", p2, {simplex_support(2, 3), simplex_support(2, 3)}},
        {"P1xP1", p1p1, {}},
        {"P1xP1_22", p1p1, {product_support({{1, 2}, {1, 2}})}},
        {"P1xP1_11_11", p1p1, {product_support({{1, 1}, {1, 1}}), product_support({{1, 1}, {1, 1}})}},
        {"F1", hirzebruch_fan(1), {}},
        {"F1_anticanonical", hirzebruch_fan(1), {support({{0, 0}, {1, 0}, {3, 2}, {0, 2}})}},
        {"F2", hirzebruch_fan(2), {}},
        {"P112", p112_fan(), {}},
        {"P112_quartic", p112_fan(), {support({{0, 0}, {4, 0}, {0, 2}})}},
        {"hexagon", hexagon_fan(), {}},
        {"hexagon_anticanonical", hexagon_fan(), {support({{0, 0}, {1, 0}, {2, 1}, {2, 2}, {1, 2}, {0, 1}})}},
        {"P3", p3, {}},
        {"P3_quadric", p3, {simplex_support(3, 2)}},
        {"P3_cubic", p3, {simplex_support(3, 3)}},
        {"P3_quadric_quadric", p3, {simplex_support(3, 2), simplex_support(3, 2)}},
        {"P3_plane_quadric", p3, {simplex_support(3, 1), simplex_support(3, 2)}},
        {"P2xP1", p2p1, {}},
        {"P2xP1_11", p2p1, {support({{1, 0, 0}, {0, 1, 1}})}},
        {"P2xP1_32", p2p1, {product_support({{2, 3}, {1, 2}})}},
        {"P1xP1xP1", p1p1p1, {}},
        {"P1xP1xP1_222", p1p1p1, {product_support({{1, 2}, {1, 2}, {1, 2}})}},
        {"P1423", p1423_fan(), {}},
        {"P1423_deg12", p1423_fan(), {support({{0, 0, 0}, {3, 0, 0}, {0, 6, 0}, {0, 0, 4}})}},
    };
    return out;
}

// ---------------------------------------------------------------------------
// Hilbert function oracle

/// chi_I from its defining sum over nonempty families F of maximal cones:
/// c_S = sum over F with intersection S of (-1)^{|F|+1}, chi_I = sum_{S in I} c_S.
inline std::map<std::uint32_t, Int> family_intersection_counts(const Fan& fan) {
    std::vector<std::uint32_t> cones;
    for (const auto& c : fan.maximal_cones) {
        std::uint32_t m = 0;
        for (auto j : c) m |= 1u << j;
        cones.push_back(m);
    }
    std::map<std::uint32_t, Int> c;
    const std::size_t l = cones.size();
    for (std::uint64_t fam = 1; fam < (std::uint64_t(1) << l); ++fam) {
        std::uint32_t s = ~0u;
        for (std::size_t i = 0; i < l; ++i)
            if (fam >> i & 1) s &= cones[i];
        c[s] += (std::popcount(fam) % 2 == 1) ? 1 : -1;
    }
    return c;
}

inline Int chi_oracle(const std::map<std::uint32_t, Int>& c, std::uint32_t set) {
    Int total = 0;
    for (const auto& [s, v] : c)
        if ((s & ~set) == 0) total += v;
    return total;
}

/// Solves the square system A x = b over Q; nullopt when singular.
inline std::optional<RationalVector> solve_square(std::vector<RationalVector> a, RationalVector b) {
    const std::size_t n = a.size();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && a[piv][col] == 0) ++piv;
        if (piv == n) return std::nullopt;
        std::swap(a[piv], a[col]);
        std::swap(b[piv], b[col]);
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || a[r][col] == 0) continue;
            Rational f = a[r][col] / a[col][col];
            for (std::size_t c = col; c < n; ++c) a[r][c] -= f * a[col][c];
            b[r] -= f * b[col];
        }
    }
    RationalVector x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = b[i] / a[i][i];
    return x;
}

/// H(s) = sum over q of chi_{I_{s,q}}, I_{s,q} = {j : <p_j, q> >= -s_j}.
/// Every bounded cell of the arrangement <p_j, q> in {-s_j, -s_j - 1} lies in
/// the bounding box of its vertices; the box is widened by one and its outer
/// shell must contribute nothing, otherwise the oracle throws.
inline Int brute_force_h(const Fan& fan, const IntVector& s) {
    const std::size_t m = fan.dim, r = fan.rays.size();
    const auto c = family_intersection_counts(fan);
    std::vector<std::pair<IntVector, Int>> planes;
    for (std::size_t j = 0; j < r; ++j) {
        planes.emplace_back(fan.rays[j], -s[j]);
        planes.emplace_back(fan.rays[j], -s[j] - 1);
    }
    std::vector<Int> lo(m, Int(0)), hi(m, Int(0));
    std::vector<std::size_t> pick(m);
    std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t depth, std::size_t start) {
        if (depth == m) {
            std::vector<RationalVector> a;
            RationalVector b;
            for (auto i : pick) {
                RationalVector row;
                for (const auto& x : planes[i].first) row.push_back(Rational(x));
                a.push_back(row);
                b.push_back(Rational(planes[i].second));
            }
            if (auto x = solve_square(a, b))
                for (std::size_t i = 0; i < m; ++i) {
                    lo[i] = std::min(lo[i], toric::floor((*x)[i]));
                    hi[i] = std::max(hi[i], toric::ceil((*x)[i]));
                }
            return;
        }
        for (std::size_t i = start; i < planes.size(); ++i) {
            pick[depth] = i;
            rec(depth + 1, i + 1);
        }
    };
    rec(0, 0);
    for (std::size_t i = 0; i < m; ++i) {
        lo[i] -= 1;
        hi[i] += 1;
    }

    std::vector<std::int64_t> ray_small;
    for (const auto& p : fan.rays)
        for (const auto& x : p) ray_small.push_back(static_cast<std::int64_t>(x));
    std::vector<std::int64_t> s_small;
    for (const auto& x : s) s_small.push_back(static_cast<std::int64_t>(x));

    std::map<std::uint32_t, Int> chi_cache;
    Int total = 0;
    std::vector<std::int64_t> q(m);
    for (std::size_t i = 0; i < m; ++i) q[i] = static_cast<std::int64_t>(lo[i]);
    while (true) {
        std::uint32_t set = 0;
        for (std::size_t j = 0; j < r; ++j) {
            std::int64_t v = 0;
            for (std::size_t i = 0; i < m; ++i) v += ray_small[j * m + i] * q[i];
            if (v >= -s_small[j]) set |= 1u << j;
        }
        auto it = chi_cache.find(set);
        if (it == chi_cache.end()) it = chi_cache.emplace(set, chi_oracle(c, set)).first;
        bool shell = false;
        for (std::size_t i = 0; i < m; ++i)
            if (q[i] == static_cast<std::int64_t>(lo[i]) || q[i] == static_cast<std::int64_t>(hi[i])) shell = true;
        if (shell && it->second != 0) throw std::runtime_error("brute_force_h: box too small");
        total += it->second;
        std::size_t i = 0;
        while (i < m && q[i] == static_cast<std::int64_t>(hi[i])) {
            q[i] = static_cast<std::int64_t>(lo[i]);
            ++i;
        }
        if (i == m) break;
        ++q[i];
    }
    return total;
}

// ---------------------------------------------------------------------------
// chi_y of complete intersections in projective space

/// Truncated series in z and y, indexed [z][y].
struct Bivariate {
    std::size_t zmax, ymax;
    std::vector<std::vector<Int>> c;
    Bivariate(std::size_t z, std::size_t y) : zmax(z), ymax(y), c(z + 1, std::vector<Int>(y + 1, Int(0))) {}
    Bivariate operator*(const Bivariate& o) const {
        Bivariate out(zmax, ymax);
        for (std::size_t a = 0; a <= zmax; ++a)
            for (std::size_t b = 0; b <= ymax; ++b) {
                if (c[a][b] == 0) continue;
                for (std::size_t u = 0; a + u <= zmax; ++u)
                    for (std::size_t v = 0; b + v <= ymax; ++v) out.c[a + u][b + v] += c[a][b] * o.c[u][v];
            }
        return out;
    }
    Bivariate operator+(const Bivariate& o) const {
        Bivariate out = *this;
        for (std::size_t a = 0; a <= zmax; ++a)
            for (std::size_t b = 0; b <= ymax; ++b) out.c[a][b] += o.c[a][b];
        return out;
    }
    Bivariate operator-(const Bivariate& o) const {
        Bivariate out = *this;
        for (std::size_t a = 0; a <= zmax; ++a)
            for (std::size_t b = 0; b <= ymax; ++b) out.c[a][b] -= o.c[a][b];
        return out;
    }
    Bivariate pow(std::size_t e) const {
        Bivariate out(zmax, ymax);
        out.c[0][0] = 1;
        for (std::size_t i = 0; i < e; ++i) out = out * *this;
        return out;
    }
    /// Requires constant term 1.
    Bivariate inverse() const {
        if (c[0][0] != 1) throw std::logic_error("Bivariate::inverse: constant term must be 1");
        Bivariate g(zmax, ymax);
        for (std::size_t a = 0; a <= zmax; ++a)
            for (std::size_t b = 0; b <= ymax; ++b) {
                if (a == 0 && b == 0) {
                    g.c[0][0] = 1;
                    continue;
                }
                Int acc = 0;
                for (std::size_t i = 0; i <= a; ++i)
                    for (std::size_t j = 0; j <= b; ++j)
                        if (i || j) acc += c[i][j] * g.c[a - i][b - j];
                g.c[a][b] = -acc;
            }
        return g;
    }
};

/// chi(V, Omega^p), p = 0..n, for a complete intersection V of the given
/// degrees in P^N (n = N - #degrees), from Hirzebruch's generating function
///   sum_N chi_y z^N = 1/((1+zy)(1-z)) prod_i ((1+zy)^d_i - (1-z)^d_i)/((1+zy)^d_i + y(1-z)^d_i).
inline std::vector<Int> hirzebruch_chi(std::size_t N, const std::vector<long>& degrees) {
    const long n = static_cast<long>(N) - static_cast<long>(degrees.size());
    if (n < 0) return {};
    const std::size_t ymax = static_cast<std::size_t>(n);
    Bivariate one(N, ymax), zy(N, ymax), z(N, ymax), y(N, ymax);
    one.c[0][0] = 1;
    if (N >= 1) {
        z.c[1][0] = 1;
        if (ymax >= 1) zy.c[1][1] = 1;
    }
    if (ymax >= 1) y.c[0][1] = 1;
    Bivariate f = ((one + zy) * (one - z)).inverse();
    for (long d : degrees) {
        auto a = (one + zy).pow(static_cast<std::size_t>(d));
        auto b = (one - z).pow(static_cast<std::size_t>(d));
        f = f * (a - b) * (a + y * b).inverse();
    }
    std::vector<Int> out;
    for (std::size_t p = 0; p <= ymax; ++p) out.push_back(f.c[N][p]);
    return out;
}

/// Hodge diamond of a complete intersection from chi(Omega^p): 1 on the
/// diagonal off the middle row, the middle row from e^p.
inline EPQTable diamond_from_chi(const std::vector<Int>& chi) {
    const long n = static_cast<long>(chi.size()) - 1;
    EPQTable h(chi.size(), EPQTable::Tag::hodge);
    for (long p = 0; p <= n; ++p) {
        if (2 * p != n) h.at(p, p) = 1;
        Int e = Int(sign_pow(p)) * chi[p];
        h.at(p, n - p) = Int(sign_pow(n)) * (e - (2 * p != n ? 1 : 0));
    }
    return h;
}

// ---------------------------------------------------------------------------
// random lattice transformations

/// A random unimodular matrix: a product of elementary row operations and
/// sign flips with small multipliers.
inline IntMatrix random_unimodular(std::size_t m, std::mt19937& rng) {
    IntMatrix u = identity_matrix(m);
    if (m < 2) {
        if (m == 1 && rng() % 2) u[0][0] = -1;
        return u;
    }
    std::uniform_int_distribution<std::size_t> idx(0, m - 1);
    std::uniform_int_distribution<int> mult(-2, 2);
    for (int step = 0; step < 3 * static_cast<int>(m); ++step) {
        std::size_t a = idx(rng), b = idx(rng);
        if (a == b) continue;
        int f = mult(rng);
        for (std::size_t c = 0; c < m; ++c) u[a][c] += f * u[b][c];
        if (rng() % 4 == 0)
            for (std::size_t c = 0; c < m; ++c) u[a][c] = -u[a][c];
    }
    return u;
}

inline SupportSet transform(const SupportSet& s, const IntMatrix& u, const IntVector& shift) {
    SupportSet out;
    for (const auto& q : s) out.push_back(add(toric::apply(u, q), shift));
    return out;
}

}  // namespace toric::testing

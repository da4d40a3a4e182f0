// Rational polyhedra, lattice polytopes and exact lattice-point enumeration.
#pragma once

#include "toric_hodge/double_description.hpp"

#include <functional>
#include <limits>
#include <optional>

namespace toric {

/// <normal, x> >= bound
struct Constraint {
    IntVector normal;
    Rational bound;

    bool operator==(const Constraint&) const = default;
};

struct RationalPolyhedron {
    std::size_t dim = 0;
    std::vector<Constraint> constraints;
};

struct Polytope {
    std::size_t ambient_dim = 0;
    std::size_t dim = 0;                         // affine dimension
    std::vector<RationalVector> vertices;        // sorted
    std::vector<Constraint> facets;              // inner normals, primitive
    std::vector<Constraint> equations;           // <normal, x> == bound on the affine hull
    std::vector<std::vector<std::size_t>> facet_vertices;

    bool contains(const RationalVector& x) const;
    /// Vertices as integer vectors; throws unless the polytope is a lattice polytope.
    std::vector<IntVector> lattice_vertices() const;
};

namespace detail {

inline Rational rdot(const IntVector& a, const RationalVector& x) {
    Rational s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += Rational(a[i]) * x[i];
    return s;
}

inline RationalVector to_rational(const IntVector& v) {
    return RationalVector(v.begin(), v.end());
}

/// Columns of a maximal set of linearly independent columns of `rows`.
inline std::vector<std::size_t> pivot_columns(const IntMatrix& rows, std::size_t cols) {
    std::vector<RationalVector> a;
    for (const auto& r : rows) a.emplace_back(r.begin(), r.end());
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < a.size(); ++c) {
        std::size_t p = r;
        while (p < a.size() && a[p][c] == 0) ++p;
        if (p == a.size()) continue;
        std::swap(a[p], a[r]);
        for (std::size_t i = r + 1; i < a.size(); ++i) {
            if (a[i][c] == 0) continue;
            Rational f = a[i][c] / a[r][c];
            for (std::size_t j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

}  // namespace detail

inline bool Polytope::contains(const RationalVector& x) const {
    for (const auto& e : equations)
        if (detail::rdot(e.normal, x) != e.bound) return false;
    for (const auto& f : facets)
        if (detail::rdot(f.normal, x) < f.bound) return false;
    return true;
}

inline std::vector<IntVector> Polytope::lattice_vertices() const {
    std::vector<IntVector> out;
    for (const auto& v : vertices) {
        IntVector iv(v.size());
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (boost::multiprecision::denominator(v[i]) != 1)
                throw PreconditionError("lattice_vertices: vertex is not a lattice point");
            iv[i] = boost::multiprecision::numerator(v[i]);
        }
        out.push_back(std::move(iv));
    }
    return out;
}

/// Convex hull of a nonempty finite point set.
inline Polytope convex_hull(const std::vector<IntVector>& points) {
    if (points.empty()) throw PreconditionError("convex_hull: empty point list");
    const SupportSet pts = canonical(points);
    const std::size_t m = pts.front().size();
    for (const auto& q : pts)
        if (q.size() != m) throw PreconditionError("convex_hull: mixed dimensions");

    Polytope out;
    out.ambient_dim = m;
    const IntVector& base = pts.front();
    IntMatrix diffs;
    for (std::size_t i = 1; i < pts.size(); ++i) diffs.push_back(sub(pts[i], base));
    for (const auto& a : kernel_basis(diffs, m))
        out.equations.push_back({a, Rational(dot(a, base))});

    const auto piv = detail::pivot_columns(diffs, m);
    out.dim = piv.size();
    if (out.dim == 0) {
        out.vertices.push_back(detail::to_rational(base));
        return out;
    }

    // facets of the projected polytope are the extreme rays (b, a) of
    // {(b, a) : b + <a, y_i> >= 0 for every point y_i}
    const std::size_t d = out.dim;
    IntMatrix rows;
    for (const auto& q : pts) {
        IntVector row(d + 1);
        row[0] = 1;
        for (std::size_t c = 0; c < d; ++c) row[c + 1] = q[piv[c]];
        rows.push_back(std::move(row));
    }
    for (const auto& ray : extreme_rays(rows, d + 1)) {
        IntVector a(m, Int(0));
        for (std::size_t c = 0; c < d; ++c) a[piv[c]] = ray[c + 1];
        if (is_zero(a)) continue;
        Int g = content(a);
        out.facets.push_back({primitive(a), Rational(Int(-ray[0])) / Rational(g)});
    }
    std::sort(out.facets.begin(), out.facets.end(),
              [](const Constraint& x, const Constraint& y) { return x.normal < y.normal; });

    // a point is a vertex iff its tight facets have rank d
    std::vector<std::vector<std::size_t>> tight(pts.size());
    for (std::size_t i = 0; i < pts.size(); ++i)
        for (std::size_t f = 0; f < out.facets.size(); ++f)
            if (Rational(dot(out.facets[f].normal, pts[i])) == out.facets[f].bound)
                tight[i].push_back(f);
    std::vector<std::size_t> vertex_points;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        IntMatrix normals;
        for (auto f : tight[i]) normals.push_back(out.facets[f].normal);
        if (tight[i].size() >= d && rank(normals) == d) vertex_points.push_back(i);
    }
    out.facet_vertices.assign(out.facets.size(), {});
    for (std::size_t v = 0; v < vertex_points.size(); ++v) {
        out.vertices.push_back(detail::to_rational(pts[vertex_points[v]]));
        for (auto f : tight[vertex_points[v]]) out.facet_vertices[f].push_back(v);
    }
    return out;
}

/// Convex hull of M_1 + ... + M_k.
inline Polytope minkowski_support(const std::vector<SupportSet>& supports) {
    if (supports.empty()) throw PreconditionError("minkowski_support: no supports");
    std::vector<IntVector> acc;
    for (const auto& s : supports) {
        if (s.empty()) throw PreconditionError("minkowski_support: empty support");
        auto verts = convex_hull(s).lattice_vertices();
        if (acc.empty()) {
            acc = std::move(verts);
            continue;
        }
        if (verts.front().size() != acc.front().size())
            throw PreconditionError("minkowski_support: mixed dimensions");
        std::vector<IntVector> sums;
        for (const auto& a : acc)
            for (const auto& b : verts) sums.push_back(add(a, b));
        acc = convex_hull(sums).lattice_vertices();
    }
    return convex_hull(acc);
}

struct LatticePointResult {
    bool bounded = true;
    std::vector<IntVector> points;
};

namespace detail {

struct IntegerSystem {
    std::size_t dim = 0;
    IntMatrix a;    // rows: <a_i, x> >= b_i
    IntVector b;
    bool infeasible_constant = false;  // some 0 >= b_i with b_i > 0
};

inline IntegerSystem integer_system(const RationalPolyhedron& region) {
    IntegerSystem sys;
    sys.dim = region.dim;
    for (const auto& c : region.constraints) {
        if (c.normal.size() != region.dim)
            throw PreconditionError("lattice_points: constraint of wrong dimension");
        Int bound = ceil(c.bound);
        if (is_zero(c.normal)) {
            if (bound > 0) sys.infeasible_constant = true;
            continue;
        }
        sys.a.push_back(c.normal);
        sys.b.push_back(bound);
    }
    return sys;
}

/// Vertices of {x : A x >= b} and whether it is bounded, via the cone
/// {(t, x) : A x - t b >= 0, t >= 0}.
inline std::pair<bool, std::vector<RationalVector>> vertices_of(const IntegerSystem& sys) {
    const std::size_t m = sys.dim;
    IntMatrix rows;
    for (std::size_t i = 0; i < sys.a.size(); ++i) {
        IntVector row(m + 1);
        row[0] = -sys.b[i];
        for (std::size_t j = 0; j < m; ++j) row[j + 1] = sys.a[i][j];
        rows.push_back(std::move(row));
    }
    IntVector t(m + 1, Int(0));
    t[0] = 1;
    rows.push_back(std::move(t));
    std::vector<RationalVector> verts;
    for (const auto& ray : extreme_rays(rows, m + 1)) {
        if (ray[0] == 0) return {false, {}};
        RationalVector v(m);
        for (std::size_t j = 0; j < m; ++j) v[j] = Rational(ray[j + 1]) / Rational(ray[0]);
        verts.push_back(std::move(v));
    }
    return {true, verts};
}

/// Scans the box [lo, hi] coordinate by coordinate, solving the last
/// coordinate's range exactly. `emit(prefix, first, last)` receives every
/// nonempty run x_{m-1} in [first, last].
template <class T, class Emit>
void scan_box(const std::vector<std::vector<T>>& a, const std::vector<T>& b,
              const std::vector<T>& lo, const std::vector<T>& hi, Emit&& emit) {
    const std::size_t m = lo.size();
    const std::size_t rows = a.size();
    std::vector<T> x(m);
    // partial[level][i] = sum_{j < level} a[i][j] x[j]
    std::vector<std::vector<T>> partial(m, std::vector<T>(rows, T(0)));

    auto floor_div_t = [](const T& p, const T& q) {
        T r = p / q;
        if ((p % q != 0) && ((p < 0) != (q < 0))) r -= 1;
        return r;
    };

    std::function<void(std::size_t)> rec = [&](std::size_t level) {
        if (level + 1 == m) {
            T first = lo[level], last = hi[level];
            for (std::size_t i = 0; i < rows; ++i) {
                const T& c = a[i][level];
                T residual = b[i] - partial[level][i];
                if (c > 0) {
                    T f = -floor_div_t(T(-residual), c);  // ceil
                    if (f > first) first = f;
                } else if (c < 0) {
                    T l = floor_div_t(residual, c);
                    if (l < last) last = l;
                } else if (residual > 0) {
                    return;
                }
                if (first > last) return;
            }
            emit(x, first, last);
            return;
        }
        for (T v = lo[level]; v <= hi[level]; v += 1) {
            x[level] = v;
            for (std::size_t i = 0; i < rows; ++i)
                partial[level + 1][i] = partial[level][i] + a[i][level] * v;
            rec(level + 1);
        }
    };
    rec(0);
}

struct Box {
    bool empty = false;
    IntVector lo, hi;
};

inline Box bounding_box(std::size_t m, const std::vector<RationalVector>& verts) {
    Box box;
    if (verts.empty()) {
        box.empty = true;
        return box;
    }
    box.lo.assign(m, Int(0));
    box.hi.assign(m, Int(0));
    for (std::size_t j = 0; j < m; ++j) {
        Rational mn = verts[0][j], mx = verts[0][j];
        for (const auto& v : verts) {
            if (v[j] < mn) mn = v[j];
            if (v[j] > mx) mx = v[j];
        }
        box.lo[j] = ceil(mn);
        box.hi[j] = floor(mx);
        if (box.lo[j] > box.hi[j]) box.empty = true;
    }
    return box;
}

/// True when every intermediate of the scan fits comfortably in int64.
inline bool fits_int64(const IntegerSystem& sys, const Box& box) {
    const Int limit = Int(1) << 60;
    Int coord = 0;
    for (std::size_t j = 0; j < sys.dim; ++j) {
        coord = std::max(coord, abs(box.lo[j]) + 1);
        coord = std::max(coord, abs(box.hi[j]) + 1);
    }
    for (std::size_t i = 0; i < sys.a.size(); ++i) {
        Int s = abs(sys.b[i]);
        for (const auto& c : sys.a[i]) s += abs(c) * coord;
        if (s >= limit) return false;
    }
    return coord < limit;
}

template <class T, class Emit>
void scan_system(const IntegerSystem& sys, const Box& box, Emit&& emit) {
    std::vector<std::vector<T>> a;
    std::vector<T> b, lo, hi;
    for (std::size_t i = 0; i < sys.a.size(); ++i) {
        std::vector<T> row;
        for (const auto& c : sys.a[i]) row.push_back(static_cast<T>(c));
        a.push_back(std::move(row));
        b.push_back(static_cast<T>(sys.b[i]));
    }
    for (std::size_t j = 0; j < sys.dim; ++j) {
        lo.push_back(static_cast<T>(box.lo[j]));
        hi.push_back(static_cast<T>(box.hi[j]));
    }
    scan_box<T>(a, b, lo, hi, emit);
}

}  // namespace detail

/// All integer points of a rational polyhedron, or bounded = false when its
/// recession cone is nontrivial.
inline LatticePointResult lattice_points(const RationalPolyhedron& region) {
    LatticePointResult out;
    auto sys = detail::integer_system(region);
    if (region.dim == 0) {
        if (!sys.infeasible_constant) out.points.push_back(IntVector{});
        return out;
    }
    if (rank(sys.a) < region.dim) {
        out.bounded = false;
        return out;
    }
    if (sys.infeasible_constant) return out;
    auto [bounded, verts] = detail::vertices_of(sys);
    if (!bounded) {
        out.bounded = false;
        return out;
    }
    auto box = detail::bounding_box(region.dim, verts);
    if (box.empty) return out;
    auto collect = [&](const auto& prefix, const auto& first, const auto& last) {
        for (auto v = first; v <= last; v += 1) {
            IntVector q(prefix.size());
            for (std::size_t j = 0; j + 1 < prefix.size(); ++j) q[j] = Int(prefix[j]);
            q.back() = Int(v);
            out.points.push_back(std::move(q));
        }
    };
    if (detail::fits_int64(sys, box))
        detail::scan_system<std::int64_t>(sys, box, collect);
    else
        detail::scan_system<Int>(sys, box, collect);
    return out;
}

/// Number of integer points, or nullopt for an unbounded region.
inline std::optional<Int> count_lattice_points(const RationalPolyhedron& region) {
    auto sys = detail::integer_system(region);
    if (region.dim == 0) return Int(sys.infeasible_constant ? 0 : 1);
    if (rank(sys.a) < region.dim) return std::nullopt;
    if (sys.infeasible_constant) return Int(0);
    auto [bounded, verts] = detail::vertices_of(sys);
    if (!bounded) return std::nullopt;
    auto box = detail::bounding_box(region.dim, verts);
    if (box.empty) return Int(0);
    if (detail::fits_int64(sys, box)) {
        std::int64_t total = 0;
        detail::scan_system<std::int64_t>(
            sys, box, [&](const auto&, std::int64_t f, std::int64_t l) { total += l - f + 1; });
        return Int(total);
    }
    Int total = 0;
    detail::scan_system<Int>(sys, box,
                             [&](const auto&, const Int& f, const Int& l) { total += l - f + 1; });
    return total;
}

}  // namespace toric

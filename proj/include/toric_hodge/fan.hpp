// Fans: validation, completeness/simpliciality/regularity, simplicial
// refinement, restricted supports, degree vectors and orbit projection.
#pragma once

#include "toric_hodge/polyhedra.hpp"

#include <map>
#include <set>

namespace toric {

/// Sorted set of indices into a fan's ray list.
using Cone = std::vector<std::size_t>;

struct Fan {
    std::size_t dim = 0;
    std::vector<IntVector> rays;
    std::vector<Cone> maximal_cones;

    std::size_t num_rays() const { return rays.size(); }
};

/// Rows d_i, one entry per ray: d_ij = -min <p_j, q> over M_i.
using DegreeMatrix = std::vector<IntVector>;

/// Complete intersection in an algebraic torus of dimension m.
struct TorusCIProblem {
    std::size_t m = 0;
    std::vector<SupportSet> supports;
};

struct FanReport {
    bool ok = true;
    std::string message;
};

namespace detail {

/// H-representation of the cone spanned by `rays` in R^ambient.
struct ConeGeometry {
    std::size_t dim = 0;
    bool pointed = true;
    std::vector<IntVector> facet_normals;          // <a, x> >= 0
    std::vector<IntVector> equations;              // <a, x> == 0
    std::vector<std::vector<std::size_t>> facet_rays;  // local ray indices per facet
};

inline ConeGeometry cone_geometry(const std::vector<IntVector>& rays, std::size_t ambient) {
    ConeGeometry g;
    g.equations = kernel_basis(rays, ambient);
    if (rays.empty()) return g;
    const auto piv = pivot_columns(rays, ambient);
    g.dim = piv.size();
    IntMatrix projected;
    for (const auto& r : rays) {
        IntVector v(g.dim);
        for (std::size_t c = 0; c < g.dim; ++c) v[c] = r[piv[c]];
        projected.push_back(std::move(v));
    }
    auto duals = extreme_rays(projected, g.dim);
    if (rank(duals) < g.dim) g.pointed = false;
    for (const auto& a : duals) {
        IntVector normal(ambient, Int(0));
        for (std::size_t c = 0; c < g.dim; ++c) normal[piv[c]] = a[c];
        std::vector<std::size_t> tight;
        for (std::size_t i = 0; i < rays.size(); ++i)
            if (dot(normal, rays[i]) == 0) tight.push_back(i);
        g.facet_normals.push_back(std::move(normal));
        g.facet_rays.push_back(std::move(tight));
    }
    return g;
}

inline std::vector<IntVector> rays_of(const Fan& fan, const Cone& c) {
    std::vector<IntVector> out;
    for (auto j : c) out.push_back(fan.rays[j]);
    return out;
}

inline Cone sorted_cone(Cone c) {
    std::sort(c.begin(), c.end());
    c.erase(std::unique(c.begin(), c.end()), c.end());
    return c;
}

inline Cone globalize(const Cone& cone, const std::vector<std::size_t>& local) {
    Cone out;
    for (auto i : local) out.push_back(cone[i]);
    return out;
}

/// Facets of a maximal cone as sorted global ray-index sets.
inline std::vector<Cone> cone_facets(const Fan& fan, const Cone& cone) {
    auto g = cone_geometry(rays_of(fan, cone), fan.dim);
    std::vector<Cone> out;
    for (const auto& fr : g.facet_rays) out.push_back(globalize(cone, fr));
    return out;
}

/// All faces (as global ray-index sets) of one cone of the fan, the cone
/// itself included.
inline std::set<Cone> cone_faces(const Fan& fan, const Cone& cone) {
    std::set<Cone> faces;
    const auto rays = rays_of(fan, cone);
    if (rank(rays) == cone.size()) {
        // simplicial: every subset is a face
        const std::size_t n = cone.size();
        for (std::size_t mask = 0; mask < (std::size_t(1) << n); ++mask) {
            Cone f;
            for (std::size_t i = 0; i < n; ++i)
                if (mask >> i & 1) f.push_back(cone[i]);
            faces.insert(std::move(f));
        }
        return faces;
    }
    auto facets = cone_facets(fan, cone);
    std::vector<Cone> queue{cone};
    faces.insert(cone);
    while (!queue.empty()) {
        Cone f = std::move(queue.back());
        queue.pop_back();
        for (const auto& g : facets) {
            Cone h;
            std::set_intersection(f.begin(), f.end(), g.begin(), g.end(), std::back_inserter(h));
            if (faces.insert(h).second) queue.push_back(std::move(h));
        }
    }
    return faces;
}

}  // namespace detail

inline FanReport validate(const Fan& fan) {
    auto fail = [](std::string msg) { return FanReport{false, std::move(msg)}; };
    const std::size_t r = fan.rays.size();
    for (std::size_t j = 0; j < r; ++j) {
        const auto& p = fan.rays[j];
        if (p.size() != fan.dim) return fail("ray " + std::to_string(j) + " has wrong length");
        if (is_zero(p)) return fail("ray " + std::to_string(j) + " is zero");
        if (content(p) != 1) return fail("ray " + std::to_string(j) + " is not primitive");
        for (std::size_t i = 0; i < j; ++i)
            if (fan.rays[i] == p)
                return fail("rays " + std::to_string(i) + " and " + std::to_string(j) + " coincide");
    }
    if (fan.maximal_cones.empty()) return fail("fan has no cones");
    std::vector<bool> used(r, false);
    std::vector<detail::ConeGeometry> geo;
    std::vector<Cone> cones;
    for (std::size_t c = 0; c < fan.maximal_cones.size(); ++c) {
        Cone cone = detail::sorted_cone(fan.maximal_cones[c]);
        if (cone.size() != fan.maximal_cones[c].size())
            return fail("cone " + std::to_string(c) + " repeats a ray index");
        for (auto j : cone) {
            if (j >= r) return fail("cone " + std::to_string(c) + " has an invalid ray index");
            used[j] = true;
        }
        auto g = detail::cone_geometry(detail::rays_of(fan, cone), fan.dim);
        if (!g.pointed) return fail("cone " + std::to_string(c) + " is not strongly convex");
        // every generator must span an extreme ray
        for (std::size_t i = 0; i < cone.size(); ++i) {
            IntMatrix tight;
            for (std::size_t f = 0; f < g.facet_rays.size(); ++f)
                if (std::binary_search(g.facet_rays[f].begin(), g.facet_rays[f].end(), i))
                    tight.push_back(g.facet_normals[f]);
            if (g.dim > 0 && rank(tight) + 1 != g.dim)
                return fail("ray " + std::to_string(cone[i]) + " is not extreme in cone " +
                            std::to_string(c));
        }
        geo.push_back(std::move(g));
        cones.push_back(std::move(cone));
    }
    for (std::size_t j = 0; j < r; ++j)
        if (!used[j]) return fail("ray " + std::to_string(j) + " lies in no cone");

    // smallest face of cone c containing the ray set s
    auto face_closure = [&](std::size_t c, const Cone& s) {
        const auto& g = geo[c];
        std::vector<std::size_t> facets;
        for (std::size_t f = 0; f < g.facet_rays.size(); ++f) {
            auto fr = detail::globalize(cones[c], g.facet_rays[f]);
            if (std::includes(fr.begin(), fr.end(), s.begin(), s.end())) facets.push_back(f);
        }
        Cone out;
        for (std::size_t i = 0; i < cones[c].size(); ++i) {
            bool in_all = true;
            for (auto f : facets)
                if (!std::binary_search(g.facet_rays[f].begin(), g.facet_rays[f].end(), i))
                    in_all = false;
            if (in_all) out.push_back(cones[c][i]);
        }
        return out;
    };

    for (std::size_t a = 0; a < cones.size(); ++a)
        for (std::size_t b = a + 1; b < cones.size(); ++b) {
            const std::string pair = std::to_string(a) + " and " + std::to_string(b);
            if (cones[a] == cones[b]) return fail("cones " + pair + " coincide");
            Cone common;
            std::set_intersection(cones[a].begin(), cones[a].end(), cones[b].begin(),
                                  cones[b].end(), std::back_inserter(common));
            if (common == cones[a] || common == cones[b])
                return fail("cones " + pair + ": one is contained in the other");
            if (face_closure(a, common) != common || face_closure(b, common) != common)
                return fail("cones " + pair + " meet in a set that is not a common face");
            IntMatrix rows;
            for (std::size_t c : {a, b}) {
                for (const auto& n : geo[c].facet_normals) rows.push_back(n);
                for (const auto& e : geo[c].equations) {
                    rows.push_back(e);
                    rows.push_back(negate(e));
                }
            }
            for (const auto& ray : extreme_rays(rows, fan.dim)) {
                bool known = false;
                for (auto j : common)
                    if (fan.rays[j] == ray) known = true;
                if (!known) return fail("cones " + pair + " overlap beyond a common face");
            }
        }
    return {};
}

inline bool is_simplicial(const Fan& fan) {
    for (const auto& c : fan.maximal_cones)
        if (rank(detail::rays_of(fan, c)) != c.size()) return false;
    return true;
}

inline bool is_regular(const Fan& fan) {
    if (!is_simplicial(fan)) return false;
    for (const auto& c : fan.maximal_cones) {
        if (c.empty()) continue;
        auto snf = smith_normal_form(detail::rays_of(fan, c));
        for (const auto& d : snf.diag)
            if (d != 1) return false;
    }
    return true;
}

inline bool is_complete(const Fan& fan) {
    if (fan.dim == 0)
        return fan.maximal_cones.size() == 1 && fan.maximal_cones[0].empty();
    const std::size_t l = fan.maximal_cones.size();
    std::map<Cone, std::vector<std::size_t>> owners;
    for (std::size_t c = 0; c < l; ++c) {
        const Cone cone = detail::sorted_cone(fan.maximal_cones[c]);
        if (rank(detail::rays_of(fan, cone)) != fan.dim) return false;
        for (auto& f : detail::cone_facets(fan, cone)) owners[f].push_back(c);
    }
    std::vector<std::vector<std::size_t>> adj(l);
    for (const auto& [facet, who] : owners) {
        if (who.size() != 2) return false;
        adj[who[0]].push_back(who[1]);
        adj[who[1]].push_back(who[0]);
    }
    std::vector<bool> seen(l, false);
    std::vector<std::size_t> stack{0};
    seen[0] = true;
    std::size_t reached = 1;
    while (!stack.empty()) {
        auto c = stack.back();
        stack.pop_back();
        for (auto d : adj[c])
            if (!seen[d]) {
                seen[d] = true;
                ++reached;
                stack.push_back(d);
            }
    }
    return reached == l;
}

/// Every cone of the fan (faces of maximal cones, zero cone included),
/// ordered by number of rays and then lexicographically.
inline std::vector<Cone> all_cones(const Fan& fan) {
    std::set<Cone> faces;
    for (const auto& c : fan.maximal_cones) {
        auto f = detail::cone_faces(fan, detail::sorted_cone(c));
        faces.insert(f.begin(), f.end());
    }
    std::vector<Cone> out(faces.begin(), faces.end());
    std::stable_sort(out.begin(), out.end(),
                     [](const Cone& a, const Cone& b) { return a.size() < b.size(); });
    return out;
}

inline std::size_t cone_dimension(const Fan& fan, const Cone& c) {
    return rank(detail::rays_of(fan, c));
}

/// Product fan in R^{a.dim + b.dim}; rays of `a` come first.
inline Fan product_fan(const Fan& a, const Fan& b) {
    Fan out;
    out.dim = a.dim + b.dim;
    for (const auto& p : a.rays) {
        IntVector v = p;
        v.resize(out.dim, Int(0));
        out.rays.push_back(std::move(v));
    }
    for (const auto& p : b.rays) {
        IntVector v(a.dim, Int(0));
        v.insert(v.end(), p.begin(), p.end());
        out.rays.push_back(std::move(v));
    }
    for (const auto& c : a.maximal_cones)
        for (const auto& d : b.maximal_cones) {
            Cone e = c;
            for (auto j : d) e.push_back(j + a.rays.size());
            out.maximal_cones.push_back(detail::sorted_cone(std::move(e)));
        }
    return out;
}

/// Inner normal fan of a full-dimensional polytope: one maximal cone per
/// vertex, spanned by the normals of the facets through that vertex.
inline Fan normal_fan(const Polytope& poly, std::size_t ambient_dim) {
    if (poly.ambient_dim != ambient_dim || poly.dim != ambient_dim)
        throw PreconditionError("normal_fan: polytope is not full-dimensional");
    Fan fan;
    fan.dim = ambient_dim;
    for (const auto& f : poly.facets) fan.rays.push_back(f.normal);
    fan.maximal_cones.assign(poly.vertices.size(), {});
    for (std::size_t f = 0; f < poly.facets.size(); ++f)
        for (auto v : poly.facet_vertices[f]) fan.maximal_cones[v].push_back(f);
    return fan;
}

/// Stellar subdivision until every cone is simplicial. Each round subdivides
/// the non-simplicial cone of smallest dimension (lexicographically first
/// among those) at the primitive sum of its rays.
inline Fan stellar_subdivide_to_simplicial(Fan fan) {
    for (auto& c : fan.maximal_cones) c = detail::sorted_cone(c);
    for (;;) {
        std::optional<Cone> target;
        std::size_t target_dim = 0;
        for (const auto& c : all_cones(fan)) {
            std::size_t d = cone_dimension(fan, c);
            if (d == c.size()) continue;
            if (!target || d < target_dim || (d == target_dim && c < *target)) {
                target = c;
                target_dim = d;
            }
        }
        if (!target) return fan;

        IntVector sum(fan.dim, Int(0));
        for (auto j : *target) sum = add(sum, fan.rays[j]);
        const std::size_t fresh = fan.rays.size();
        fan.rays.push_back(primitive(sum));

        std::vector<Cone> next;
        for (const auto& tau : fan.maximal_cones) {
            if (!std::includes(tau.begin(), tau.end(), target->begin(), target->end())) {
                next.push_back(tau);
                continue;
            }
            for (auto f : detail::cone_facets(fan, tau)) {
                if (std::includes(f.begin(), f.end(), target->begin(), target->end())) continue;
                f.push_back(fresh);
                next.push_back(detail::sorted_cone(std::move(f)));
            }
        }
        fan.maximal_cones = std::move(next);
    }
}

inline DegreeMatrix degrees_of(const Fan& fan, const std::vector<SupportSet>& supports) {
    DegreeMatrix d;
    for (const auto& m : supports) {
        if (m.empty()) throw PreconditionError("degrees_of: empty support");
        IntVector row(fan.rays.size());
        for (std::size_t j = 0; j < fan.rays.size(); ++j) {
            Int mn = dot(fan.rays[j], m.front());
            for (const auto& q : m) mn = std::min(mn, dot(fan.rays[j], q));
            row[j] = -mn;
        }
        d.push_back(std::move(row));
    }
    return d;
}

/// M_i^sigma: points of M_i on which every ray of sigma attains -d_ij.
inline std::vector<SupportSet> restrict_supports(const Fan& fan, const Cone& sigma,
                                                 const std::vector<SupportSet>& supports,
                                                 const DegreeMatrix& degrees) {
    std::vector<SupportSet> out;
    for (std::size_t i = 0; i < supports.size(); ++i) {
        SupportSet s;
        for (const auto& q : supports[i]) {
            bool keep = true;
            for (auto j : sigma)
                if (dot(fan.rays[j], q) != -degrees[i][j]) {
                    keep = false;
                    break;
                }
            if (keep) s.push_back(q);
        }
        out.push_back(canonical(std::move(s)));
    }
    return out;
}

struct AdaptedReport {
    std::vector<Cone> cones;     // every cone of the fan
    std::vector<bool> adapted;   // parallel to cones
    std::vector<Cone> subfan;    // the adapted cones
    bool all_adapted = true;
};

inline AdaptedReport adapted_subfan(const Fan& fan, const std::vector<SupportSet>& supports) {
    AdaptedReport rep;
    const auto degrees = degrees_of(fan, supports);
    rep.cones = all_cones(fan);
    for (const auto& c : rep.cones) {
        bool ok = true;
        for (const auto& s : restrict_supports(fan, c, supports, degrees))
            if (s.empty()) ok = false;
        rep.adapted.push_back(ok);
        if (ok)
            rep.subfan.push_back(c);
        else
            rep.all_adapted = false;
    }
    return rep;
}

/// The generic complete intersection on the orbit of sigma, written in a
/// basis of the orbit's character lattice (the lattice points orthogonal to
/// sigma). Equations whose restricted support is empty are dropped.
inline TorusCIProblem orbit_problem(const Fan& fan, const Cone& sigma,
                                    const std::vector<SupportSet>& supports,
                                    const DegreeMatrix& degrees) {
    const auto rays = detail::rays_of(fan, sigma);
    auto snf = smith_normal_form(rays, fan.dim);
    const std::size_t d = snf.rank();
    const IntMatrix inv = unimodular_inverse(snf.right);
    TorusCIProblem out;
    out.m = fan.dim - d;
    for (const auto& s : restrict_supports(fan, sigma, supports, degrees)) {
        if (s.empty()) continue;
        SupportSet projected;
        for (const auto& q : s) {
            IntVector y(out.m);
            for (std::size_t i = 0; i < out.m; ++i) y[i] = dot(inv[d + i], q);
            projected.push_back(std::move(y));
        }
        out.supports.push_back(canonical(std::move(projected)));
    }
    return out;
}

}  // namespace toric

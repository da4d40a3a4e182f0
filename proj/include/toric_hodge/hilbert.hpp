// Inclusion-exclusion Hilbert function H(s) of a complete fan and the
// Euler characteristic of the structure sheaf of a complete intersection.
#pragma once

#include "toric_hodge/fan.hpp"

#include <bit>
#include <memory>
#include <mutex>

namespace toric {

/// Subset of ray indices as a bit mask (bit j <-> ray j).
using RayMask = std::uint32_t;

inline constexpr std::size_t kMaxHilbertRays = 24;

inline RayMask mask_of(const std::vector<std::size_t>& indices) {
    RayMask m = 0;
    for (auto j : indices) m |= RayMask(1) << j;
    return m;
}

struct HilbertContext {
    Fan fan;
    std::map<RayMask, Int> intersection_table;            // c_S, nonzero entries only
    std::vector<std::pair<RayMask, Int>> nonzero_chi_sets;  // (I, chi_I), sorted by I

    struct Memo {
        std::mutex mutex;
        std::map<std::pair<RayMask, IntVector>, Int> counts;
        std::map<IntVector, Int> values;
    };
    std::shared_ptr<Memo> memo = std::make_shared<Memo>();

    std::size_t r() const { return fan.rays.size(); }
    std::size_t m() const { return fan.dim; }

    Int chi(RayMask set) const {
        Int total = 0;
        for (const auto& [s, c] : intersection_table)
            if ((s & ~set) == 0) total += c;
        return total;
    }
};

/// Precomputes c_S and the index sets with chi_I != 0 for a complete fan.
/// c_S is the alternating count of nonempty families of maximal cones whose
/// ray sets meet exactly in S; it equals -mu(S, top) in the lattice of such
/// intersections (crosscut theorem), which is how it is evaluated here.
inline HilbertContext build_context(const Fan& fan) {
    if (fan.rays.size() > kMaxHilbertRays)
        throw PreconditionError("build_context: more than 24 rays");
    if (!is_complete(fan)) throw PreconditionError("build_context: fan is not complete");

    HilbertContext ctx;
    ctx.fan = fan;
    std::vector<RayMask> coatoms;
    for (const auto& c : fan.maximal_cones) coatoms.push_back(mask_of(c));

    std::set<RayMask> lattice(coatoms.begin(), coatoms.end());
    std::vector<RayMask> frontier(lattice.begin(), lattice.end());
    while (!frontier.empty()) {
        std::vector<RayMask> next;
        for (auto a : frontier)
            for (auto b : coatoms)
                if (lattice.insert(a & b).second) next.push_back(a & b);
        frontier = std::move(next);
    }
    // mu(S, top) from the top down; larger sets first
    std::vector<RayMask> order(lattice.begin(), lattice.end());
    std::stable_sort(order.begin(), order.end(), [](RayMask a, RayMask b) {
        return std::popcount(a) > std::popcount(b);
    });
    std::map<RayMask, Int> mu;
    for (auto s : order) {
        Int total = 1;  // mu(top, top)
        for (const auto& [t, v] : mu)
            if (t != s && (s & ~t) == 0) total += v;
        mu[s] = -total;
    }
    for (const auto& [s, v] : mu)
        if (v != 0) ctx.intersection_table[s] = -v;

    // chi_I = sum_{S subset of I} c_S for all I, by a subset-sum transform
    const std::size_t r = fan.rays.size();
    std::vector<std::int64_t> chi(std::size_t(1) << r, 0);
    for (const auto& [s, c] : ctx.intersection_table) chi[s] += static_cast<std::int64_t>(c);
    for (std::size_t b = 0; b < r; ++b)
        for (std::size_t i = 0; i < chi.size(); ++i)
            if (i >> b & 1) chi[i] += chi[i ^ (std::size_t(1) << b)];
    for (std::size_t i = 0; i < chi.size(); ++i)
        if (chi[i] != 0) ctx.nonzero_chi_sets.emplace_back(RayMask(i), Int(chi[i]));
    return ctx;
}

/// The region {q : <p_j,q> >= -s_j for j in I, <p_j,q> <= -s_j - 1 otherwise}.
inline RationalPolyhedron hilbert_region(const HilbertContext& ctx, RayMask set, const IntVector& s) {
    RationalPolyhedron region;
    region.dim = ctx.m();
    for (std::size_t j = 0; j < ctx.r(); ++j) {
        if (set >> j & 1)
            region.constraints.push_back({ctx.fan.rays[j], Rational(Int(-s[j]))});
        else
            region.constraints.push_back({negate(ctx.fan.rays[j]), Rational(Int(s[j] + 1))});
    }
    return region;
}

/// n_{I,s}: number of lattice points of hilbert_region. Unbounded regions
/// are an internal inconsistency when chi_I != 0 and a caller error otherwise.
inline Int n_I_s(const HilbertContext& ctx, RayMask set, const IntVector& s) {
    if (s.size() != ctx.r()) throw PreconditionError("n_I_s: s has wrong length");
    auto key = std::make_pair(set, s);
    {
        std::lock_guard lock(ctx.memo->mutex);
        auto it = ctx.memo->counts.find(key);
        if (it != ctx.memo->counts.end()) return it->second;
    }
    auto count = count_lattice_points(hilbert_region(ctx, set, s));
    if (!count) {
        if (ctx.chi(set) != 0)
            throw ConsistencyError("n_I_s: unbounded region for an index set with chi_I != 0");
        throw PreconditionError("n_I_s: region is unbounded");
    }
    std::lock_guard lock(ctx.memo->mutex);
    ctx.memo->counts.emplace(std::move(key), *count);
    return *count;
}

/// H(s) = sum over I with chi_I != 0 of chi_I n_{I,s}.
inline Int h_of_s(const HilbertContext& ctx, const IntVector& s) {
    if (s.size() != ctx.r()) throw PreconditionError("h_of_s: s has wrong length");
    {
        std::lock_guard lock(ctx.memo->mutex);
        auto it = ctx.memo->values.find(s);
        if (it != ctx.memo->values.end()) return it->second;
    }
    Int total = 0;
    for (const auto& [set, chi] : ctx.nonzero_chi_sets) total += chi * n_I_s(ctx, set, s);
    std::lock_guard lock(ctx.memo->mutex);
    ctx.memo->values.emplace(s, total);
    return total;
}

inline void check_degrees(const HilbertContext& ctx, const DegreeMatrix& degrees) {
    for (const auto& d : degrees)
        if (d.size() != ctx.r()) throw PreconditionError("degree vector has wrong length");
}

/// chi(Y, O_Y) = sum over subsets T of the equations of (-1)^|T| H(-sum_{i in T} d_i).
inline Int chi_structure_sheaf(const HilbertContext& ctx, const DegreeMatrix& degrees) {
    check_degrees(ctx, degrees);
    const std::size_t k = degrees.size();
    Int total = 0;
    for (std::size_t mask = 0; mask < (std::size_t(1) << k); ++mask) {
        IntVector s(ctx.r(), Int(0));
        for (std::size_t i = 0; i < k; ++i)
            if (mask >> i & 1) s = sub(s, degrees[i]);
        Int h = h_of_s(ctx, s);
        total += (std::popcount(mask) % 2) ? Int(-h) : h;
    }
    return total;
}

}  // namespace toric

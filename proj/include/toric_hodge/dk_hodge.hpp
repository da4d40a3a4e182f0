// Compactly supported Euler-Hodge tables of generic complete intersections
// in tori, and Hodge diamonds of compact quasi-smooth toric complete
// intersections by decomposition into torus orbits.
#pragma once

#include "toric_hodge/epq_table.hpp"
#include "toric_hodge/forms_euler.hpp"

namespace toric {

/// e^{pq} (ordinary) or e_c^{pq} (compact) of the torus (C*)^m.
inline EPQTable epq_torus(std::size_t m, EPQTable::Tag mode) {
    EPQTable t(m + 1, mode);
    for (std::size_t p = 0; p <= m; ++p) {
        Int b = binomial(static_cast<long>(m), static_cast<long>(p));
        long e = mode == EPQTable::Tag::compact ? static_cast<long>(m - p) : static_cast<long>(p);
        t.at(p, p) = Int(sign_pow(e)) * b;
    }
    return t;
}

/// Memoized recursion for e_c^{pq} of generic complete intersections in tori.
class HodgeEngine {
public:
    EPQTable epq_c_ci(const TorusCIProblem& problem) {
        for (const auto& s : problem.supports) {
            if (s.empty()) throw PreconditionError("epq_c_ci: empty support");
            for (const auto& q : s)
                if (q.size() != problem.m)
                    throw PreconditionError("epq_c_ci: support point of wrong dimension");
        }
        auto key = canonical_key(problem);
        {
            std::lock_guard lock(mutex_);
            auto it = memo_.find(key);
            if (it != memo_.end()) return it->second;
        }
        EPQTable result = compute(TorusCIProblem{problem.m, key.second});
        std::lock_guard lock(mutex_);
        memo_.emplace(std::move(key), result);
        return result;
    }

    void clear_memo() {
        std::lock_guard lock(mutex_);
        memo_.clear();
    }
    std::size_t memo_size() {
        std::lock_guard lock(mutex_);
        return memo_.size();
    }

private:
    using Key = std::pair<std::size_t, std::vector<SupportSet>>;

    static Key canonical_key(const TorusCIProblem& problem) {
        std::vector<SupportSet> s;
        for (const auto& m : problem.supports) s.push_back(canonical(m));
        std::sort(s.begin(), s.end());
        return {problem.m, std::move(s)};
    }

    static EPQTable empty_table(long n) {
        return EPQTable(n < 0 ? 0 : static_cast<std::size_t>(n + 1), EPQTable::Tag::compact);
    }

    /// e^{ab}(W) = e_c^{n-a, n-b}(W) for a smooth W of dimension n.
    static EPQTable to_ordinary(const EPQTable& compact) {
        EPQTable out(compact.size(), EPQTable::Tag::ordinary);
        const std::size_t n = compact.size() - 1;
        for (std::size_t a = 0; a < compact.size(); ++a)
            for (std::size_t b = 0; b < compact.size(); ++b) out.at(a, b) = compact.at(n - a, n - b);
        return out;
    }

    EPQTable compute(const TorusCIProblem& problem) {
        const std::size_t m = problem.m;
        const auto& supports = problem.supports;
        const std::size_t k = supports.size();
        const long n = static_cast<long>(m) - static_cast<long>(k);

        // generic fibres are empty
        if (k > m) return empty_table(n);
        for (const auto& s : supports)
            if (s.size() == 1) return empty_table(n);
        if (k == 0) return epq_torus(m, EPQTable::Tag::compact);

        // split off a torus factor
        auto red = affine_lattice_reduction(supports);
        if (red.rank < m) {
            auto inner = epq_c_ci(TorusCIProblem{red.rank, red.supports});
            if (inner.size() == 0) return empty_table(n);
            auto out = convolve(inner, epq_torus(m - red.rank, EPQTable::Tag::compact));
            out.tag = EPQTable::Tag::compact;
            return out;
        }
        const std::size_t nn = static_cast<std::size_t>(n);

        // below the middle: Lefschetz for every subfamily plus inclusion-exclusion
        EPQTable ordinary(nn + 1, EPQTable::Tag::ordinary);
        {
            const auto torus = epq_torus(m, EPQTable::Tag::ordinary);
            std::vector<EPQTable> sub_ordinary;
            std::vector<std::size_t> sub_size;
            for (std::size_t mask = 1; mask + 1 < (std::size_t(1) << k); ++mask) {
                TorusCIProblem sub{m, {}};
                for (std::size_t i = 0; i < k; ++i)
                    if (mask >> i & 1) sub.supports.push_back(supports[i]);
                auto c = epq_c_ci(sub);
                sub_ordinary.push_back(c.size() ? to_ordinary(c) : c);
                sub_size.push_back(std::popcount(mask));
            }
            for (std::size_t p = 0; p <= nn; ++p)
                for (std::size_t q = 0; p + q < nn; ++q) {
                    Int acc = torus.at(p, q);
                    for (std::size_t t = 0; t < sub_ordinary.size(); ++t) {
                        const auto& tab = sub_ordinary[t];
                        if (p >= tab.size() || q >= tab.size()) continue;
                        acc -= Int(sign_pow(static_cast<long>(sub_size[t]) - 1)) * tab.at(p, q);
                    }
                    ordinary.at(p, q) = Int(sign_pow(static_cast<long>(k) - 1)) * acc;
                }
        }
        // above the middle by duality
        EPQTable compact_above(nn + 1, EPQTable::Tag::compact);
        for (std::size_t p = 0; p <= nn; ++p)
            for (std::size_t q = 0; q <= nn; ++q)
                if (p + q > nn) compact_above.at(p, q) = ordinary.at(nn - p, nn - q);

        // compactify in the toric variety of a simplicial refinement of the normal fan
        const Fan fan = stellar_subdivide_to_simplicial(normal_fan(minkowski_support(supports), m));
        const auto degrees = degrees_of(fan, supports);
        EPQTable boundary(nn + 1, EPQTable::Tag::compact);
        for (const auto& sigma : all_cones(fan)) {
            if (sigma.empty()) continue;
            auto piece = epq_c_ci(orbit_problem(fan, sigma, supports, degrees));
            if (piece.size() > nn + 1)
                throw ConsistencyError("epq_c_ci: boundary piece larger than the variety");
            for (std::size_t p = 0; p < piece.size(); ++p)
                for (std::size_t q = 0; q < piece.size(); ++q) boundary.at(p, q) += piece.at(p, q);
        }

        EPQTable closure(nn + 1, EPQTable::Tag::ordinary);
        for (std::size_t p = 0; p <= nn; ++p)
            for (std::size_t q = 0; q <= nn; ++q)
                if (p + q > nn) closure.at(p, q) = compact_above.at(p, q) + boundary.at(p, q);
        for (std::size_t p = 0; p <= nn; ++p)
            for (std::size_t q = 0; q <= nn; ++q)
                if (p + q < nn) closure.at(p, q) = closure.at(nn - p, nn - q);
        const auto ctx = build_context(fan);
        for (std::size_t p = 0; p <= nn; ++p) {
            Int e = Int(sign_pow(static_cast<long>(p))) * chi_alt(ctx, degrees, p);
            for (std::size_t q = 0; q <= nn; ++q)
                if (p + q != nn) e -= closure.at(p, q);
            closure.at(p, nn - p) = e;
        }
        check_hodge_symmetry(closure, nn);

        EPQTable out(nn + 1, EPQTable::Tag::compact);
        for (std::size_t p = 0; p <= nn; ++p)
            for (std::size_t q = 0; q <= nn; ++q) {
                out.at(p, q) = closure.at(p, q) - boundary.at(p, q);
                if (p + q > nn && out.at(p, q) != compact_above.at(p, q))
                    throw ConsistencyError("epq_c_ci: duality and boundary recursion disagree at (" +
                                           std::to_string(p) + "," + std::to_string(q) + ")");
            }
        return out;
    }

    /// The closure is a compact V-manifold: (-1)^{p+q} e^{pq} must be a
    /// nonnegative, symmetric Hodge diamond.
    static void check_hodge_symmetry(const EPQTable& e, std::size_t n) {
        for (std::size_t p = 0; p <= n; ++p)
            for (std::size_t q = 0; q <= n; ++q) {
                Int h = Int(sign_pow(static_cast<long>(p + q))) * e.at(p, q);
                if (h < 0 || e.at(p, q) != e.at(q, p))
                    throw ConsistencyError("epq_c_ci: compactification has an invalid Hodge diamond at (" +
                                           std::to_string(p) + "," + std::to_string(q) + ")");
            }
    }

    std::mutex mutex_;
    std::map<Key, EPQTable> memo_;
};

inline HodgeEngine& default_engine() {
    static HodgeEngine engine;
    return engine;
}

inline EPQTable epq_c_ci(const TorusCIProblem& problem) {
    return default_engine().epq_c_ci(problem);
}

/// Hodge numbers of the compact quasi-smooth complete intersection Y in the
/// toric variety of `fan`: e^{pq}(Y) is the sum of e_c^{pq} over the orbit
/// pieces Y cap O_sigma, and h^{pq} = (-1)^{p+q} e^{pq}. Equations whose
/// restriction to an orbit is identically zero are dropped there; a piece
/// of dimension above m - k is rejected.
inline EPQTable hodge_compact(const Fan& fan, const std::vector<SupportSet>& supports,
                              HodgeEngine& engine = default_engine()) {
    if (!is_complete(fan)) throw PreconditionError("hodge_compact: fan is not complete");
    if (!is_simplicial(fan)) throw PreconditionError("hodge_compact: fan is not simplicial");
    for (const auto& s : supports) {
        if (s.empty()) throw PreconditionError("hodge_compact: empty support");
        for (const auto& q : s)
            if (q.size() != fan.dim) throw PreconditionError("hodge_compact: support of wrong dimension");
    }
    const long n = static_cast<long>(fan.dim) - static_cast<long>(supports.size());
    if (n < 0) return EPQTable(0, EPQTable::Tag::hodge);
    const std::size_t nn = static_cast<std::size_t>(n);
    const auto degrees = degrees_of(fan, supports);
    EPQTable e(nn + 1, EPQTable::Tag::hodge);
    for (const auto& sigma : all_cones(fan)) {
        const auto problem = orbit_problem(fan, sigma, supports, degrees);
        auto piece = engine.epq_c_ci(problem);
        if (piece.is_zero()) continue;
        if (piece.size() > nn + 1)
            throw PreconditionError("hodge_compact: the zero set contains an orbit piece of dimension " +
                                    std::to_string(piece.n()) + " > " + std::to_string(n));
        for (std::size_t p = 0; p < piece.size(); ++p)
            for (std::size_t q = 0; q < piece.size(); ++q) e.at(p, q) += piece.at(p, q);
    }
    for (std::size_t p = 0; p <= nn; ++p)
        for (std::size_t q = 0; q <= nn; ++q) e.at(p, q) *= sign_pow(static_cast<long>(p + q));
    for (std::size_t p = 0; p <= nn; ++p)
        for (std::size_t q = 0; q <= nn; ++q) {
            const std::string cell = "(" + std::to_string(p) + "," + std::to_string(q) + ")";
            if (e.at(p, q) < 0) throw ConsistencyError("hodge_compact: negative Hodge number at " + cell);
            if (e.at(p, q) != e.at(q, p) || e.at(p, q) != e.at(nn - p, nn - q))
                throw ConsistencyError("hodge_compact: Hodge symmetry fails at " + cell);
        }
    return e;
}

}  // namespace toric

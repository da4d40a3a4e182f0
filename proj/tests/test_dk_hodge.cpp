#include "support.hpp"

#include <gtest/gtest.h>

using namespace toric;
using namespace toric::testing;

namespace {

EPQTable table(EPQTable::Tag tag, std::vector<std::vector<long>> rows) {
    EPQTable t(rows.size(), tag);
    for (std::size_t p = 0; p < rows.size(); ++p)
        for (std::size_t q = 0; q < rows.size(); ++q) t.at(p, q) = rows[p][q];
    return t;
}

EPQTable compact(std::vector<std::vector<long>> rows) { return table(EPQTable::Tag::compact, std::move(rows)); }
EPQTable hodge(std::vector<std::vector<long>> rows) { return table(EPQTable::Tag::hodge, std::move(rows)); }

/// sum_{p,q} e^{pq}: the compactly supported Euler characteristic.
Int euler(const EPQTable& t) {
    Int s = 0;
    for (const auto& r : t.cells)
        for (const auto& x : r) s += x;
    return s;
}

}  // namespace

TEST(Torus, SmallCases) {
    EXPECT_EQ(epq_torus(0, EPQTable::Tag::ordinary).cells, (IntMatrix{to_int_vector({1})}));
    EXPECT_EQ(epq_torus(0, EPQTable::Tag::compact).cells, (IntMatrix{to_int_vector({1})}));
    EXPECT_EQ(epq_torus(1, EPQTable::Tag::ordinary), table(EPQTable::Tag::ordinary, {{1, 0}, {0, -1}}));
    EXPECT_EQ(epq_torus(2, EPQTable::Tag::compact), compact({{1, 0, 0}, {0, -2, 0}, {0, 0, 1}}));
}

TEST(Torus, KuennethProduct) {
    for (std::size_t a = 0; a <= 3; ++a)
        for (std::size_t b = 0; b <= 3; ++b)
            EXPECT_EQ(convolve(epq_torus(a, EPQTable::Tag::compact), epq_torus(b, EPQTable::Tag::compact)),
                      epq_torus(a + b, EPQTable::Tag::compact));
}

TEST(TorusCI, ThricePuncturedLine) {
    EXPECT_EQ(epq_c_ci({2, {support({{0, 0}, {1, 0}, {0, 1}})}}), compact({{-2, 0}, {0, 1}}));
}

TEST(TorusCI, PointAndSubtorus) {
    EXPECT_EQ(epq_c_ci({1, {support({{0}, {1}})}}), compact({{1}}));
    EXPECT_EQ(epq_c_ci({2, {support({{0, 0}, {1, 0}})}}), compact({{-1, 0}, {0, 1}}));
    // 1 + t^2 = 0: two points
    EXPECT_EQ(epq_c_ci({1, {support({{0}, {2}})}}), compact({{2}}));
}

TEST(TorusCI, EmptyCases) {
    // a monomial never vanishes on the torus
    auto monomial = epq_c_ci({2, {support({{1, 1}})}});
    EXPECT_EQ(monomial.size(), 2u);
    EXPECT_TRUE(monomial.is_zero());
    auto overdetermined = epq_c_ci({1, {support({{0}, {1}}), support({{0}, {1}})}});
    EXPECT_EQ(overdetermined.size(), 0u);
    EXPECT_EQ(epq_c_ci({2, {}}), epq_torus(2, EPQTable::Tag::compact));
}

TEST(TorusCI, PlaneCurvesInTheTorus) {
    // a smooth plane curve of degree d meets the three coordinate lines in
    // 3d points: e_c^{11} = 1, e_c^{10} = e_c^{01} = -g, e_c^{00} = 1 - 3d - ... ;
    // the Euler characteristic is 2 - 2g - 3d
    for (long d = 1; d <= 5; ++d) {
        auto t = epq_c_ci({2, {simplex_support(2, d)}});
        long g = (d - 1) * (d - 2) / 2;
        EXPECT_EQ(t.at(1, 1), 1);
        EXPECT_EQ(t.at(1, 0), -g);
        EXPECT_EQ(t.at(0, 1), -g);
        EXPECT_EQ(euler(t), 2 - 2 * g - 3 * d);
    }
}

TEST(TorusCI, EulerCharacteristicIsMixedVolume) {
    // chi_c of a generic hypersurface in (C*)^m is
    // (-1)^{m-1} m! vol(Delta); for two curves in (C*)^2 it is the mixed volume
    EXPECT_EQ(euler(epq_c_ci({2, {simplex_support(2, 3)}})), -9);
    EXPECT_EQ(euler(epq_c_ci({3, {simplex_support(3, 2)}})), 8);
    EXPECT_EQ(euler(epq_c_ci({2, {simplex_support(2, 2), simplex_support(2, 3)}})), 6);
    EXPECT_EQ(euler(epq_c_ci({2, {product_support({{1, 1}, {1, 1}})}})), -2);
}

TEST(TorusCI, InvariantUnderLatticeAutomorphisms) {
    std::mt19937 rng(59);
    std::uniform_int_distribution<int> shift(-3, 3);
    std::vector<TorusCIProblem> problems = {
        {2, {simplex_support(2, 1)}},
        {2, {simplex_support(2, 3)}},
        {2, {product_support({{1, 2}, {1, 1}})}},
        {3, {simplex_support(3, 2)}},
        {3, {simplex_support(3, 1), simplex_support(3, 2)}},
    };
    for (const auto& pr : problems) {
        const auto expected = epq_c_ci(pr);
        for (int trial = 0; trial < 10; ++trial) {
            auto u = random_unimodular(pr.m, rng);
            TorusCIProblem moved{pr.m, {}};
            for (const auto& s : pr.supports) {
                IntVector t;
                for (std::size_t i = 0; i < pr.m; ++i) t.push_back(shift(rng));
                moved.supports.push_back(transform(s, u, t));
            }
            EXPECT_EQ(epq_c_ci(moved), expected);
        }
    }
}

TEST(TorusCI, MemoIsKeyedOnCanonicalSupports) {
    HodgeEngine engine;
    auto a = engine.epq_c_ci({2, {support({{0, 0}, {1, 0}, {0, 1}})}});
    auto size = engine.memo_size();
    auto b = engine.epq_c_ci({2, {support({{0, 1}, {0, 0}, {1, 0}})}});
    EXPECT_EQ(a, b);
    EXPECT_EQ(engine.memo_size(), size);
    engine.clear_memo();
    EXPECT_EQ(engine.memo_size(), 0u);
}

TEST(TorusCI, RejectsBadSupports) {
    EXPECT_THROW(epq_c_ci({2, {SupportSet{}}}), PreconditionError);
    EXPECT_THROW(epq_c_ci({2, {support({{0}, {1}})}}), PreconditionError);
}

TEST(HodgeCompact, EllipticCurve) {
    EXPECT_EQ(hodge_compact(projective_fan(2), {simplex_support(2, 3)}), hodge({{1, 1}, {1, 1}}));
}

TEST(HodgeCompact, BidegreeOneOneInPlaneTimesLine) {
    auto h = hodge_compact(product_fan(projective_fan(2), projective_fan(1)), {support({{1, 0, 0}, {0, 1, 1}})});
    EXPECT_EQ(h, hodge({{1, 0, 0}, {0, 2, 0}, {0, 0, 1}}));
}

TEST(HodgeCompact, QuadricWithLineEquationInP3TimesP1) {
    auto fan = product_fan(projective_fan(3), projective_fan(1));
    auto h = hodge_compact(fan, {support({{2, 0, 0, 0}, {0, 2, 0, 0}, {0, 0, 2, 0}, {0, 0, 0, 0}}),
                                 support({{1, 0, 0, 0}, {0, 1, 0, 1}})});
    EXPECT_EQ(h, hodge({{1, 0, 0}, {0, 4, 0}, {0, 0, 1}}));
}

TEST(HodgeCompact, ProjectiveCompleteIntersectionsMatchHirzebruch) {
    for (std::size_t N = 2; N <= 4; ++N)
        for (const auto& degs : std::vector<std::vector<long>>{{1}, {2}, {3}, {static_cast<long>(N) + 1}, {2, 2}, {2, 3}}) {
            if (degs.size() >= N) continue;
            std::vector<SupportSet> supports;
            for (long d : degs) supports.push_back(simplex_support(N, d));
            EXPECT_EQ(hodge_compact(projective_fan(N), supports).cells, diamond_from_chi(hirzebruch_chi(N, degs)).cells)
                << "N=" << N;
        }
}

TEST(HodgeCompact, NoEquationsGivesDiagonalHVector) {
    for (const auto& fx : corpus()) {
        if (fx.k() != 0) continue;
        auto h = hodge_compact(fx.fan, {});
        auto ctx = build_context(fx.fan);
        for (std::size_t p = 0; p < h.size(); ++p)
            for (std::size_t q = 0; q < h.size(); ++q) {
                if (p == q)
                    EXPECT_EQ(h.at(p, p), Int(sign_pow(static_cast<long>(p))) * chi_alt(ctx, {}, p)) << fx.name;
                else
                    EXPECT_EQ(h.at(p, q), 0) << fx.name;
            }
    }
}

TEST(HodgeCompact, AgreesWithFormsOnCorpus) {
    // e^p = sum_q (-1)^{p+q} h^{pq} = (-1)^p chi(Omega^p)
    for (const auto& fx : corpus()) {
        if (fx.k() > fx.m()) continue;
        auto h = hodge_compact(fx.fan, fx.supports);
        auto ctx = build_context(fx.fan);
        auto d = degrees_of(fx.fan, fx.supports);
        for (std::size_t p = 0; p < h.size(); ++p) {
            Int e = 0;
            for (std::size_t q = 0; q < h.size(); ++q) e += Int(sign_pow(static_cast<long>(p + q))) * h.at(p, q);
            EXPECT_EQ(e, Int(sign_pow(static_cast<long>(p))) * chi_alt(ctx, d, p)) << fx.name << " p=" << p;
        }
    }
}

TEST(HodgeCompact, WeightedSurfaceMatchesResiduePath) {
    auto h = hodge_compact(p1423_fan(), {support({{0, 0, 0}, {3, 0, 0}, {0, 6, 0}, {0, 0, 4}})});
    EXPECT_EQ(h, wps_hodge({1, 4, 2, 3}, {12}));
}

TEST(HodgeCompact, Preconditions) {
    EXPECT_THROW(hodge_compact(make_fan(2, {{1, 0}, {0, 1}}, {{0, 1}}), {}), PreconditionError);
    auto octahedral = normal_fan(convex_hull(support({{1, 0, 0}, {-1, 0, 0}, {0, 1, 0}, {0, -1, 0}, {0, 0, 1}, {0, 0, -1}})), 3);
    EXPECT_THROW(hodge_compact(octahedral, {}), PreconditionError);
}

TEST(HodgeCompact, MonomialEquationIsEmpty) {
    auto h = hodge_compact(projective_fan(2), {support({{1, 0}})});
    EXPECT_EQ(h.size(), 2u);
    EXPECT_TRUE(h.is_zero());
}

TEST(HodgeCompact, TooManyEquationsIsEmpty) {
    EXPECT_EQ(hodge_compact(projective_fan(1), {simplex_support(1, 1), simplex_support(1, 1)}).size(), 0u);
}
